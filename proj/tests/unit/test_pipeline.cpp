#ifdef ONTOFORGE_HAVE_TLS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "ontoforge/build/pipeline.hpp"
#include "ontoforge/cli/commands.hpp"
#include "ontoforge/owl/ontology.hpp"
#include "ontoforge/registry/naming.hpp"
#include "ontoforge/serialize/reader.hpp"
#include "test_util.hpp"

using namespace ontoforge;
using testutil::TempDir;
using testutil::run_cli;

namespace {

constexpr const char* kBase = "http://t.example/onto#";

class RecordingFetcher final : public ingest::Fetcher {
 public:
  struct Call {
    std::string url;
    std::chrono::seconds timeout{0};
  };

  ingest::FetchResult fetch(const std::string& url,
                            std::chrono::seconds timeout) override {
    calls.push_back({url, timeout});
    return next;
  }

  std::vector<Call> calls;
  ingest::FetchResult next{true, 200, "", ""};
};

const char* kSmallManifest = R"({
  "ontology_iri": "http://t.example/onto",
  "base_prefix": "http://t.example/onto#",
  "sources": [
    {"locator": "genes.txt", "format": "name-list",
     "pattern": "gene", "parent": "Gene"},
    {"locator": "diseases.tsv", "format": "disease-table",
     "pattern": "disease", "parent": "Disease"},
    {"locator": "inline", "inline": ["Cristae", "Matrix"],
     "format": "name-list", "pattern": "named-subclass",
     "parent": "MitochondrialAnatomy"},
    {"locator": "papers.txt", "format": "name-list",
     "pattern": "paper", "parent": "Paper"},
    {"locator": "terms/P1.tsv", "format": "paper-terms",
     "pattern": "term", "parent": "Term"}
  ]
})";

// A five-source corpus small enough to reason about by hand: 3 genes,
// 2 diseases, 2 inline anatomy parts, 2 papers, 2 terms.
std::filesystem::path write_small_corpus(
    const TempDir& dir, const std::string& manifest = kSmallManifest) {
  testutil::write_file(dir / "genes.txt",
                       "# curated gene symbols\n"
                       "\n"
                       "MT-ND1\n"
                       "MT-CO1\n"
                       "MT-ATP6\n");
  testutil::write_file(
      dir / "diseases.tsv",
      "# name, omim id, long name\n"
      "Leigh syndrome\t256000\tSubacute necrotizing encephalomyelopathy\n"
      "MELAS\t540000\t\n");
  testutil::write_file(dir / "papers.txt", "P1\nP2\n");
  testutil::write_file(dir / "terms/P1.tsv",
                       "P1\theteroplasmy\n"
                       "P1\tmtDNA depletion\n");
  testutil::write_file(dir / "manifest.json", manifest);
  return dir / "manifest.json";
}

owl::EntityRef lref(const std::string& label) {
  return {label, kBase + registry::sanitize_label(label)};
}

}  // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("a small corpus expands to the expected ontology") {
  TempDir dir;
  const auto manifest = write_small_corpus(dir);

  const auto result = build::run_pipeline(manifest);
  REQUIRE(result.ok);
  CHECK(result.diagnostics.entries().empty());
  CHECK_FALSE(result.registry_file.has_value());
  CHECK_FALSE(result.lock.has_value());

  CHECK(result.ontology.ontology_iri() == "http://t.example/onto");
  CHECK(result.report.classes_by_group.at("Gene") == 3);
  CHECK(result.report.classes_by_group.at("Disease") == 2);
  CHECK(result.report.classes_by_group.at("MitochondrialAnatomy") == 2);
  CHECK(result.report.classes_by_group.at("HumanAnatomy") == 0);
  CHECK(result.report.classes_by_group.at("Protein") == 0);
  CHECK(result.report.classes_by_group.at("Paper") == 2);
  CHECK(result.report.classes_by_group.at("Term") == 2);
  CHECK(result.report.classes_by_group.at("support") == 7);
  CHECK(result.report.scaffold_total == 7);
  CHECK(result.report.term_total == 2);
  CHECK(result.report.declaration_axioms == 18);
  CHECK(result.report.subclass_axioms == 11);
  CHECK(result.report.annotation_axioms == 16);
  CHECK(result.report.warning_count == 0);

  // Spot-check the expansion output.
  CHECK(result.ontology.contains(
      owl::subclass_of(lref("MT-ND1"), lref("Gene"))));
  CHECK(result.ontology.contains(owl::annotate(
      lref("Leigh syndrome"), owl::AnnotationId::SeeAlso, "OMIMID:256000")));
  CHECK(result.ontology.contains(owl::annotate(
      lref("Leigh syndrome"), owl::AnnotationId::Label,
      "Long name:Subacute necrotizing encephalomyelopathy")));
  CHECK(result.ontology.contains(
      owl::subclass_of(lref("Cristae"), lref("MitochondrialAnatomy"))));
  CHECK(result.ontology.contains(owl::annotate(
      lref("heteroplasmy"), owl::AnnotationId::SeeAlso, "P1")));
  CHECK(owl::undeclared_references(result.ontology).empty());
}

TEST_CASE("a manifest with no sources still yields the seven roots") {
  TempDir dir;
  testutil::write_file(dir / "manifest.json",
                       R"({"ontology_iri": "http://t.example/onto",
  "base_prefix": "http://t.example/onto#",
  "sources": []})");
  const auto result = build::run_pipeline(dir / "manifest.json");
  REQUIRE(result.ok);
  CHECK(result.ontology.size() == 7);
  CHECK(result.report.scaffold_total == 0);
  CHECK(result.report.classes_by_group.at("support") == 7);
}

TEST_CASE("every ingestion problem is reported in one run") {
  TempDir dir;
  write_small_corpus(dir);
  std::filesystem::remove(dir / "genes.txt");
  testutil::write_file(dir / "diseases.tsv", "only one column\n");

  const auto result = build::run_pipeline(dir / "manifest.json");
  CHECK_FALSE(result.ok);
  REQUIRE(result.diagnostics.error_count() == 2);
  const auto& entries = result.diagnostics.entries();
  CHECK(entries[0].message.find("genes.txt") != std::string::npos);
  CHECK(entries[1].message == "expected 3 tab-separated columns, found 1");
  CHECK(entries[1].context == "diseases.tsv:1");
  // Nothing was expanded.
  CHECK(result.ontology.size() == 0);
}

TEST_CASE("manifest errors carry the manifest path and position") {
  TempDir dir;
  testutil::write_file(dir / "manifest.json", "{\n  \"ontology_iri\": oops\n");
  const auto result = build::run_pipeline(dir / "manifest.json");
  CHECK_FALSE(result.ok);
  REQUIRE(result.diagnostics.error_count() == 1);
  const auto& entry = result.diagnostics.entries()[0];
  CHECK(entry.message == "manifest is not valid JSON");
  CHECK(entry.context.find("manifest.json:2:") != std::string::npos);
}

TEST_CASE("a term referencing an unknown paper fails the build") {
  TempDir dir;
  write_small_corpus(dir);
  testutil::write_file(dir / "terms/P1.tsv",
                       "P1\theteroplasmy\n"
                       "P9\torphan term\n");
  const auto result = build::run_pipeline(dir / "manifest.json");
  CHECK_FALSE(result.ok);
  REQUIRE(result.diagnostics.error_count() == 1);
  CHECK(result.diagnostics.entries()[0].message ==
        "undeclared label: 'P9'");
  CHECK(result.diagnostics.entries()[0].context == "terms/P1.tsv:2");
}

TEST_CASE("label collisions across sources are reported at the second site") {
  TempDir dir;
  write_small_corpus(dir);
  // A disease named like an existing gene: same label, different frame.
  testutil::write_file(
      dir / "diseases.tsv",
      "Leigh syndrome\t256000\tSubacute necrotizing encephalomyelopathy\n"
      "MT-ND1\t540000\t\n");
  const auto result = build::run_pipeline(dir / "manifest.json");
  CHECK_FALSE(result.ok);
  REQUIRE(result.diagnostics.error_count() == 1);
  CHECK(result.diagnostics.entries()[0].message.find(
            "label collision: 'MT-ND1'") != std::string::npos);
  CHECK(result.diagnostics.entries()[0].context == "diseases.tsv:2");
}

TEST_CASE("identical duplicate records across sources are a no-op") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  const std::string needle = "{\"locator\": \"genes.txt\"";
  manifest.insert(manifest.find(needle),
                  "{\"locator\": \"genes_again.txt\", \"format\": "
                  "\"name-list\", \"pattern\": \"gene\", \"parent\": "
                  "\"Gene\"},\n    ");
  write_small_corpus(dir, manifest);
  testutil::write_file(dir / "genes_again.txt", "MT-ND1\n");

  const auto result = build::run_pipeline(dir / "manifest.json");
  REQUIRE(result.ok);
  CHECK(result.report.classes_by_group.at("Gene") == 3);
  CHECK(result.report.declaration_axioms == 18);
}

TEST_CASE("deprecations warn, redirect and mark the retired class") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  manifest.insert(manifest.rfind("}"),
                  ",\n  \"deprecations\": \"deprecations.tsv\"\n");
  write_small_corpus(dir, manifest);
  testutil::write_file(dir / "deprecations.tsv",
                       "P9\tP1\n"
                       "MT-CO1\t\n");
  testutil::write_file(dir / "terms/P1.tsv",
                       "P1\theteroplasmy\n"
                       "P1\tmtDNA depletion\n"
                       "P9\tlegacy term\n");

  const auto result = build::run_pipeline(dir / "manifest.json");
  REQUIRE(result.ok);
  CHECK(result.report.warning_count == 1);
  CHECK(result.diagnostics.warning_count() == 1);
  CHECK(result.diagnostics.entries()[0].message ==
        "reference to deprecated label 'P9'");
  CHECK(result.diagnostics.entries()[0].context == "terms/P1.tsv:3");

  // P9 exists only as a deprecated placeholder; MT-CO1 was declared by
  // its source and carries the mark on the same class.
  CHECK(result.ontology.contains(owl::declare(lref("P9"))));
  CHECK(result.ontology.contains(owl::mark_deprecated(lref("P9"))));
  CHECK(result.ontology.contains(owl::mark_deprecated(lref("MT-CO1"))));
  CHECK(result.ontology.contains(
      owl::subclass_of(lref("MT-CO1"), lref("Gene"))));

  // The reference was redirected to the replacement paper.
  CHECK(result.ontology.contains(owl::annotate(
      lref("legacy term"), owl::AnnotationId::SeeAlso, "P1")));
  CHECK(owl::undeclared_references(result.ontology).empty());
}

TEST_CASE("the release override refuses network sources without fetching") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  const std::string needle = "{\"locator\": \"genes.txt\"";
  manifest.insert(manifest.find(needle),
                  "{\"locator\": \"http://upstream.example/extra.txt\", "
                  "\"mode\": \"live\", \"format\": \"name-list\", "
                  "\"pattern\": \"gene\", \"parent\": \"Gene\"},\n    ");
  write_small_corpus(dir, manifest);

  RecordingFetcher fetcher;
  build::PipelineOptions options;
  options.fetcher = &fetcher;
  options.mode_override = ingest::FetchMode::Release;

  const auto result = build::run_pipeline(dir / "manifest.json", options);
  CHECK_FALSE(result.ok);
  REQUIRE(result.diagnostics.error_count() == 1);
  CHECK(result.diagnostics.entries()[0].message ==
        "source 'http://upstream.example/extra.txt' needs the network; "
        "release override forbids it");
  CHECK(fetcher.calls.empty());
}

TEST_CASE("the live override rejects a local corpus") {
  TempDir dir;
  write_small_corpus(dir);
  build::PipelineOptions options;
  options.mode_override = ingest::FetchMode::Live;
  const auto result = build::run_pipeline(dir / "manifest.json", options);
  CHECK_FALSE(result.ok);
  // Every one of the five local sources is called out.
  CHECK(result.diagnostics.error_count() == 5);
  CHECK(result.diagnostics.entries()[0].message.find(
            "live override does not apply") != std::string::npos);
}

TEST_CASE("live sources use the injected fetcher and configured timeout") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  const std::string needle = "{\"locator\": \"genes.txt\"";
  manifest.insert(manifest.find(needle),
                  "{\"locator\": \"http://upstream.example/extra.txt\", "
                  "\"mode\": \"live\", \"format\": \"name-list\", "
                  "\"pattern\": \"gene\", \"parent\": \"Gene\"},\n    ");
  write_small_corpus(dir, manifest);

  RecordingFetcher fetcher;
  fetcher.next = {true, 200, "MT-EXTRA\n", ""};
  build::PipelineOptions options;
  options.fetcher = &fetcher;
  options.fetch_timeout = std::chrono::seconds(11);

  const auto result = build::run_pipeline(dir / "manifest.json", options);
  REQUIRE(result.ok);
  REQUIRE(fetcher.calls.size() == 1);
  CHECK(fetcher.calls[0].url == "http://upstream.example/extra.txt");
  CHECK(fetcher.calls[0].timeout == std::chrono::seconds(11));
  CHECK(result.ontology.contains(
      owl::subclass_of(lref("MT-EXTRA"), lref("Gene"))));
  CHECK(result.report.classes_by_group.at("Gene") == 4);

  // A failed live fetch fails the build; stale bytes are never reused.
  fetcher.next = {false, 0, "", "connection refused"};
  const auto failed = build::run_pipeline(dir / "manifest.json", options);
  CHECK_FALSE(failed.ok);
  CHECK(failed.diagnostics.entries()[0].message.find("live fetch failed") !=
        std::string::npos);
}

TEST_CASE("a local http server feeds a live source end to end") {
  httplib::Server server;
  server.Get("/genes.txt", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("MT-ND1\nMT-ND2\n", "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) {
    MESSAGE("skipping: cannot bind a loopback port in this environment");
    return;
  }
  std::thread serving([&server] { server.listen_after_bind(); });
  for (int i = 0; i < 200 && !server.is_running(); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }

  TempDir dir;
  const std::string manifest =
      std::string(R"({
  "ontology_iri": "http://t.example/onto",
  "base_prefix": "http://t.example/onto#",
  "sources": [
    {"locator": "http://127.0.0.1:)") +
      std::to_string(port) +
      R"(/genes.txt", "mode": "live", "format": "name-list",
     "pattern": "gene", "parent": "Gene"}
  ]
})";
  testutil::write_file(dir / "manifest.json", manifest);

  const auto result = build::run_pipeline(dir / "manifest.json");
  server.stop();
  serving.join();

  REQUIRE(result.ok);
  CHECK(result.report.classes_by_group.at("Gene") == 2);
  CHECK(result.ontology.contains(
      owl::subclass_of(lref("MT-ND2"), lref("Gene"))));
}

TEST_CASE("minted ids follow declaration order and persist") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  manifest.insert(manifest.rfind("}"),
                  ",\n  \"id_registry\": \"ids.tsv\"\n");
  write_small_corpus(dir, manifest);

  auto result = build::run_pipeline(dir / "manifest.json");
  REQUIRE(result.ok);
  REQUIRE(result.registry_file.has_value());
  CHECK(*result.registry_file == dir / "ids.tsv");
  CHECK_FALSE(result.lock.has_value());

  // Roots first, then records in manifest order.
  CHECK(result.ids.find("Disease") == 1);
  CHECK(result.ids.find("Gene") == 2);
  CHECK(result.ids.find("Term") == 7);
  CHECK(result.ids.find("MT-ND1") == 8);
  CHECK(result.ids.find("MT-ATP6") == 10);
  CHECK(result.ids.find("Leigh syndrome") == 11);
  CHECK(result.ids.find("Cristae") == 13);
  CHECK(result.ids.find("P1") == 15);
  CHECK(result.ids.find("mtDNA depletion") == 18);
  CHECK(result.ids.size() == 18);

  // Minted IRIs replace label-derived ones.
  CHECK(result.ontology.contains(owl::subclass_of(
      {"MT-ND1", std::string(kBase) + "MDO_0000008"},
      {"Gene", std::string(kBase) + "MDO_0000002"})));

  // Saving then re-running replays identical ids; a new record extends.
  result.ids.save(*result.registry_file);
  testutil::write_file(dir / "genes.txt",
                       "MT-ND1\nMT-CO1\nMT-ATP6\nMT-ND5\n");
  const auto second = build::run_pipeline(dir / "manifest.json");
  REQUIRE(second.ok);
  CHECK(second.ids.find("MT-ND1") == 8);
  CHECK(second.ids.find("MT-ND5") == 19);
  CHECK(second.ids.size() == 19);
}

TEST_CASE("the registry lock guards writing runs") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  manifest.insert(manifest.rfind("}"),
                  ",\n  \"id_registry\": \"ids.tsv\"\n");
  write_small_corpus(dir, manifest);

  build::PipelineOptions locking;
  locking.lock_registry = true;
  {
    const auto holder = build::run_pipeline(dir / "manifest.json", locking);
    REQUIRE(holder.ok);
    REQUIRE(holder.lock.has_value());
    CHECK(std::filesystem::exists(dir / "ids.tsv.lock"));

    const auto blocked = build::run_pipeline(dir / "manifest.json", locking);
    CHECK_FALSE(blocked.ok);
    CHECK(blocked.diagnostics.entries()[0].message.find(
              "locked by another build") != std::string::npos);

    // Read-only runs are not blocked by a writer.
    const auto reader = build::run_pipeline(dir / "manifest.json");
    CHECK(reader.ok);
  }
  CHECK_FALSE(std::filesystem::exists(dir / "ids.tsv.lock"));
}

TEST_CASE("cli build writes the document and prints the report") {
  TempDir dir;
  write_small_corpus(dir);
  const auto out_path = dir / "out.ofn";

  const auto run = run_cli({"build", (dir / "manifest.json").string(), "-o",
                            out_path.string()});
  CHECK(run.code == cli::kOk);
  CHECK(run.err.empty());
  CHECK(run.out.find("Scaffold classes:   7") != std::string::npos);
  CHECK(run.out.find("Term-layer classes: 2") != std::string::npos);
  CHECK(run.out.find("  genes.txt") != std::string::npos);
  CHECK(run.out.find("(inline: 2 names)") != std::string::npos);
  CHECK(run.out.find("Warnings:           0") != std::string::npos);

  const auto first = testutil::read_file(out_path);
  CHECK(first.find("Prefix(:=<http://t.example/onto#>)\n") !=
        std::string::npos);
  CHECK(first.find("SubClassOf(:MT-ND1 :Gene)\n") != std::string::npos);
  CHECK(first.back() == '\n');

  // The document parses back to the pipeline's ontology.
  const auto parsed = serialize::parse_functional(first);
  CHECK(parsed == build::run_pipeline(dir / "manifest.json").ontology);

  // Rebuilding is byte-identical.
  const auto again = run_cli({"build", (dir / "manifest.json").string(), "-o",
                              out_path.string()});
  CHECK(again.code == cli::kOk);
  CHECK(testutil::read_file(out_path) == first);
}

TEST_CASE("cli build failure reports errors and writes nothing") {
  TempDir dir;
  write_small_corpus(dir);
  std::filesystem::remove(dir / "papers.txt");
  const auto out_path = dir / "out.ofn";

  const auto run = run_cli({"build", (dir / "manifest.json").string(), "-o",
                            out_path.string()});
  CHECK(run.code == cli::kBuildFailed);
  CHECK(run.err.find("papers.txt") != std::string::npos);
  CHECK(run.err.find("build failed: 1 error(s)") != std::string::npos);
  CHECK(run.out.empty());
  CHECK_FALSE(std::filesystem::exists(out_path));
}

TEST_CASE("cli check reports totals and never writes") {
  TempDir dir;
  write_small_corpus(dir);

  const auto ok = run_cli({"check", (dir / "manifest.json").string()});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out == "0 errors, 0 warnings\n");

  testutil::write_file(dir / "terms/P1.tsv", "P1\tx\nP9\ty\n");
  const auto bad = run_cli({"check", (dir / "manifest.json").string()});
  CHECK(bad.code == cli::kBuildFailed);
  CHECK(bad.out.find("undeclared label: 'P9'") != std::string::npos);
  CHECK(bad.out.find("1 errors, 0 warnings\n") != std::string::npos);

  // check leaves no files behind.
  std::size_t entries = 0;
  for (auto it : std::filesystem::directory_iterator(dir.path())) {
    (void)it;
    ++entries;
  }
  CHECK(entries == 5);  // manifest + 3 data files + terms dir
}

TEST_CASE("cli stats prints the table without an output file") {
  TempDir dir;
  write_small_corpus(dir);
  const auto run = run_cli({"stats", (dir / "manifest.json").string()});
  CHECK(run.code == cli::kOk);
  CHECK(run.out.find("Class type") != std::string::npos);
  CHECK(run.out.find("  3  genes.txt") != std::string::npos);
  CHECK(run.out.find("(inline: 2 names)") != std::string::npos);
  CHECK(run.out.find("Scaffold classes:   7") != std::string::npos);
}

TEST_CASE("cli fail-on-warnings escalates deprecation references") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  manifest.insert(manifest.rfind("}"),
                  ",\n  \"deprecations\": \"deprecations.tsv\"\n");
  write_small_corpus(dir, manifest);
  testutil::write_file(dir / "deprecations.tsv", "P9\tP1\n");
  testutil::write_file(dir / "terms/P1.tsv", "P1\tx\nP9\ty\n");

  const auto tolerated = run_cli({"check", (dir / "manifest.json").string()});
  CHECK(tolerated.code == cli::kOk);
  CHECK(tolerated.out.find("0 errors, 1 warnings\n") != std::string::npos);

  const auto strict = run_cli({"check", (dir / "manifest.json").string(),
                               "--fail-on-warnings"});
  CHECK(strict.code == cli::kWarningsAsErrors);

  const auto out_path = dir / "out.ofn";
  const auto build_strict =
      run_cli({"build", (dir / "manifest.json").string(), "-o",
               out_path.string(), "--fail-on-warnings"});
  CHECK(build_strict.code == cli::kWarningsAsErrors);
  CHECK(build_strict.err.find("nothing written") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(out_path));

  const auto build_loose = run_cli(
      {"build", (dir / "manifest.json").string(), "-o", out_path.string()});
  CHECK(build_loose.code == cli::kOk);
  CHECK(std::filesystem::exists(out_path));
}

TEST_CASE("cli build with ids mints and saves the registry") {
  TempDir dir;
  write_small_corpus(dir);
  const auto out_path = dir / "out.ofn";
  const auto ids_path = dir / "ids.tsv";

  const auto run = run_cli({"build", (dir / "manifest.json").string(), "-o",
                            out_path.string(), "--ids", ids_path.string()});
  CHECK(run.code == cli::kOk);
  REQUIRE(std::filesystem::exists(ids_path));
  const auto registry_text = testutil::read_file(ids_path);
  CHECK(testutil::lines_of(registry_text).size() == 18);
  CHECK(registry_text.find("1\tDisease\n") == 0);
  CHECK(registry_text.find("8\tMT-ND1\n") != std::string::npos);
  CHECK(testutil::read_file(out_path).find(":MDO_0000008") !=
        std::string::npos);
  CHECK_FALSE(std::filesystem::exists(dir / "ids.tsv.lock"));

  // A concurrent writer is refused while a lock marker exists.
  testutil::write_file(dir / "ids.tsv.lock", "12345\n");
  const auto blocked =
      run_cli({"build", (dir / "manifest.json").string(), "-o",
               out_path.string(), "--ids", ids_path.string()});
  CHECK(blocked.code == cli::kBuildFailed);
  CHECK(blocked.err.find("locked by another build") != std::string::npos);
  std::filesystem::remove(dir / "ids.tsv.lock");
}

TEST_CASE("cli build aborts before output when the registry is unreadable") {
  TempDir dir;
  write_small_corpus(dir);
  const auto ids_path = dir / "ids.tsv";
  const auto first = run_cli({"build", (dir / "manifest.json").string(), "-o",
                              (dir / "a.ofn").string(), "--ids",
                              ids_path.string()});
  REQUIRE(first.code == cli::kOk);

  // Break the separator on one line; the loader refuses the whole file.
  auto text = testutil::read_file(ids_path);
  const auto pos = text.find("8\tMT-ND1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 8, "8 MT-ND1");
  testutil::write_file(ids_path, text);

  const auto second = run_cli({"build", (dir / "manifest.json").string(),
                               "-o", (dir / "b.ofn").string(), "--ids",
                               ids_path.string()});
  CHECK(second.code == cli::kBuildFailed);
  CHECK(second.err.find("expected 'id<TAB>label'") != std::string::npos);
  CHECK(second.err.find("ids.tsv:8") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(dir / "b.ofn"));
}

TEST_CASE("renaming a record in place mints a fresh id for the new label") {
  TempDir dir;
  std::string manifest = kSmallManifest;
  manifest.insert(manifest.rfind("}"),
                  ",\n  \"id_registry\": \"ids.tsv\"\n");
  write_small_corpus(dir, manifest);
  const auto out_path = dir / "out.ofn";
  REQUIRE(run_cli({"build", (dir / "manifest.json").string(), "-o",
                   out_path.string()})
              .code == cli::kOk);
  REQUIRE(testutil::lines_of(testutil::read_file(dir / "ids.tsv")).size() ==
          18);

  // A rename is a retirement plus a new mint, never a reassignment.
  testutil::write_file(dir / "genes.txt", "MT-ND1\nMT-CO1X\nMT-ATP6\n");
  REQUIRE(run_cli({"build", (dir / "manifest.json").string(), "-o",
                   out_path.string()})
              .code == cli::kOk);
  const auto text = testutil::read_file(dir / "ids.tsv");
  CHECK(testutil::lines_of(text).size() == 19);
  CHECK(text.find("9\tMT-CO1\n") != std::string::npos);
  CHECK(text.find("19\tMT-CO1X\n") != std::string::npos);
  const auto doc = testutil::read_file(out_path);
  CHECK(doc.find(":MDO_0000019") != std::string::npos);
  CHECK(doc.find("\"MT-CO1\"") == std::string::npos);
}

TEST_CASE("cli diff prints removals then additions") {
  TempDir dir;
  write_small_corpus(dir);
  const auto old_path = dir / "old.ofn";
  const auto new_path = dir / "new.ofn";

  REQUIRE(run_cli({"build", (dir / "manifest.json").string(), "-o",
                   old_path.string()})
              .code == cli::kOk);
  testutil::write_file(dir / "genes.txt",
                       "MT-ND1\nMT-CO1\nMT-ATP6\nMT-ND5\n");
  REQUIRE(run_cli({"build", (dir / "manifest.json").string(), "-o",
                   new_path.string()})
              .code == cli::kOk);

  const auto changed =
      run_cli({"diff", old_path.string(), new_path.string()});
  CHECK(changed.code == cli::kBuildFailed);
  CHECK(testutil::count_lines_starting_with(changed.out, "- ") == 0);
  CHECK(testutil::count_lines_starting_with(changed.out, "+ ") == 3);
  CHECK(changed.out.find("+ Declaration(Class(:MT-ND5))\n") !=
        std::string::npos);
  CHECK(changed.out.find("+ SubClassOf(:MT-ND5 :Gene)\n") !=
        std::string::npos);
  CHECK(changed.out.find(
            "+ AnnotationAssertion(rdfs:label :MT-ND5 \"MT-ND5\")\n") !=
        std::string::npos);

  const auto reversed =
      run_cli({"diff", new_path.string(), old_path.string()});
  CHECK(reversed.code == cli::kBuildFailed);
  CHECK(testutil::count_lines_starting_with(reversed.out, "- ") == 3);
  CHECK(testutil::count_lines_starting_with(reversed.out, "+ ") == 0);

  const auto same = run_cli({"diff", old_path.string(), old_path.string()});
  CHECK(same.code == cli::kOk);
  CHECK(same.out.empty());
}

TEST_CASE("cli diff treats unreadable or malformed inputs as usage errors") {
  TempDir dir;
  write_small_corpus(dir);
  const auto good = dir / "good.ofn";
  REQUIRE(run_cli({"build", (dir / "manifest.json").string(), "-o",
                   good.string()})
              .code == cli::kOk);

  const auto missing =
      run_cli({"diff", (dir / "absent.ofn").string(), good.string()});
  CHECK(missing.code == cli::kUsageError);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  testutil::write_file(dir / "junk.ofn", "not an ontology\n");
  const auto junk = run_cli({"diff", good.string(),
                             (dir / "junk.ofn").string()});
  CHECK(junk.code == cli::kUsageError);
  CHECK(junk.err.find("junk.ofn:1") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  const auto no_args = run_cli({});
  CHECK(no_args.code == cli::kUsageError);

  const auto unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == cli::kUsageError);

  const auto no_out = run_cli({"build", "manifest.json"});
  CHECK(no_out.code == cli::kUsageError);
  CHECK(no_out.err.find("--out") != std::string::npos);

  const auto bad_mode = run_cli({"check", "manifest.json", "--mode-override",
                                 "sometimes"});
  CHECK(bad_mode.code == cli::kUsageError);

  const auto help = run_cli({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("build") != std::string::npos);
  CHECK(help.out.find("diff") != std::string::npos);
}

TEST_CASE("cli timeout environment variable is validated") {
  TempDir dir;
  write_small_corpus(dir);

  ::setenv("ONTOFORGE_TIMEOUT_SECS", "not-a-number", 1);
  const auto bad = run_cli({"check", (dir / "manifest.json").string()});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("ONTOFORGE_TIMEOUT_SECS") != std::string::npos);

  ::setenv("ONTOFORGE_TIMEOUT_SECS", "0", 1);
  CHECK(run_cli({"check", (dir / "manifest.json").string()}).code ==
        cli::kUsageError);

  ::setenv("ONTOFORGE_TIMEOUT_SECS", "5", 1);
  CHECK(run_cli({"check", (dir / "manifest.json").string()}).code ==
        cli::kOk);
  ::unsetenv("ONTOFORGE_TIMEOUT_SECS");
}

TEST_CASE("cli mode-override release keeps a local corpus green") {
  TempDir dir;
  write_small_corpus(dir);
  const auto run = run_cli({"check", (dir / "manifest.json").string(),
                            "--mode-override", "release"});
  CHECK(run.code == cli::kOk);
}

TEST_SUITE_END();
