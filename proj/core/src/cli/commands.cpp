#include "ontoforge/cli/commands.hpp"

#include <CLI11.hpp>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "ontoforge/build/pipeline.hpp"
#include "ontoforge/serialize/diff.hpp"
#include "ontoforge/serialize/reader.hpp"
#include "ontoforge/serialize/writer.hpp"

namespace ontoforge::cli {

namespace fs = std::filesystem;

namespace {

void print_diagnostics(const Diagnostics& diags, std::ostream& stream) {
  for (const auto& entry : diags.entries()) {
    stream << entry.to_string() << '\n';
  }
}

// flags -> pipeline options; a bad flag or environment value reports and
// yields nullopt, which callers turn into a usage error.
std::optional<build::PipelineOptions> pipeline_options(
    const CommonFlags& flags, bool lock_registry, std::ostream& err) {
  build::PipelineOptions options;
  options.lock_registry = lock_registry;
  options.registry_path = flags.registry_path;
  if (flags.mode_override) {
    if (*flags.mode_override == "release") {
      options.mode_override = ingest::FetchMode::Release;
    } else if (*flags.mode_override == "live") {
      options.mode_override = ingest::FetchMode::Live;
    } else {
      err << "error: --mode-override must be 'release' or 'live'\n";
      return std::nullopt;
    }
  }
  if (const char* env = std::getenv("ONTOFORGE_TIMEOUT_SECS")) {
    char* end = nullptr;
    const long secs = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || secs <= 0) {
      err << "error: ONTOFORGE_TIMEOUT_SECS must be a positive integer, not '"
          << env << "'\n";
      return std::nullopt;
    }
    options.fetch_timeout = std::chrono::seconds(secs);
  }
  return options;
}

bool write_file_atomic(const fs::path& path, const std::string& content,
                       std::ostream& err) {
  std::error_code ec;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : ".";
  const fs::path tmp =
      dir / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      err << "error: cannot write '" << tmp.string() << "'\n";
      return false;
    }
    out << content;
    out.flush();
    if (!out) {
      err << "error: i/o failure writing '" << tmp.string() << "'\n";
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    err << "error: cannot replace '" << path.string() << "': " << ec.message()
        << '\n';
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

std::optional<owl::Ontology> parse_document(const std::string& path,
                                            std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return serialize::parse_functional(buffer.str());
  } catch (const ParseError& e) {
    err << path << ":" << e.line() << ": error: " << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

int cmd_build(const std::string& manifest_path, const std::string& out_path,
              const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  auto options = pipeline_options(flags, /*lock_registry=*/true, err);
  if (!options) return kUsageError;

  build::PipelineResult result = build::run_pipeline(manifest_path, *options);
  print_diagnostics(result.diagnostics, err);
  if (!result.ok) {
    err << "build failed: " << result.diagnostics.error_count()
        << " error(s)\n";
    return kBuildFailed;
  }
  if (flags.fail_on_warnings && result.report.warning_count > 0) {
    err << "build stopped: " << result.report.warning_count
        << " warning(s) treated as errors; nothing written\n";
    return kWarningsAsErrors;
  }

  std::string document;
  try {
    document = serialize::serialize_functional(result.ontology);
  } catch (const BuildError& e) {
    err << "error: " << e.what() << '\n';
    return kBuildFailed;
  }

  // Persist the registry before the ontology: a failed registry write
  // must leave no new output file lying around.
  if (result.registry_file) {
    try {
      result.ids.save(*result.registry_file);
    } catch (const BuildError& e) {
      err << "error: " << e.what() << '\n';
      return kBuildFailed;
    }
  }
  if (!write_file_atomic(out_path, document, err)) {
    return kBuildFailed;
  }

  out << serialize::format_report(result.report,
                                  build::default_stats_config(),
                                  &result.manifest);
  return kOk;
}

int cmd_check(const std::string& manifest_path, const CommonFlags& flags,
              std::ostream& out, std::ostream& err) {
  auto options = pipeline_options(flags, /*lock_registry=*/false, err);
  if (!options) return kUsageError;

  build::PipelineResult result = build::run_pipeline(manifest_path, *options);
  print_diagnostics(result.diagnostics, out);
  out << result.diagnostics.error_count() << " errors, "
      << result.diagnostics.warning_count() << " warnings\n";
  if (!result.ok) return kBuildFailed;
  if (flags.fail_on_warnings && result.diagnostics.warning_count() > 0) {
    return kWarningsAsErrors;
  }
  return kOk;
}

int cmd_stats(const std::string& manifest_path, const CommonFlags& flags,
              std::ostream& out, std::ostream& err) {
  auto options = pipeline_options(flags, /*lock_registry=*/false, err);
  if (!options) return kUsageError;

  build::PipelineResult result = build::run_pipeline(manifest_path, *options);
  if (!result.ok) {
    print_diagnostics(result.diagnostics, err);
    err << "stats unavailable: " << result.diagnostics.error_count()
        << " error(s)\n";
    return kBuildFailed;
  }
  out << serialize::format_report(result.report,
                                  build::default_stats_config(),
                                  &result.manifest);
  if (flags.fail_on_warnings && result.report.warning_count > 0) {
    return kWarningsAsErrors;
  }
  return kOk;
}

int cmd_diff(const std::string& old_path, const std::string& new_path,
             std::ostream& out, std::ostream& err) {
  auto old_onto = parse_document(old_path, err);
  if (!old_onto) return kUsageError;
  auto new_onto = parse_document(new_path, err);
  if (!new_onto) return kUsageError;

  const serialize::DiffResult result = serialize::diff(*old_onto, *new_onto);
  for (const auto& axiom : result.removed) {
    out << "- " << serialize::render_axiom(axiom, old_onto->prefixes())
        << '\n';
  }
  for (const auto& axiom : result.added) {
    out << "+ " << serialize::render_axiom(axiom, new_onto->prefixes())
        << '\n';
  }
  return result.empty() ? kOk : kBuildFailed;
}

int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"pattern-driven ontology scaffold builder"};
  app.require_subcommand(1);

  std::string manifest_path;
  std::string out_path;
  std::string old_path;
  std::string new_path;
  CommonFlags flags;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--fail-on-warnings", flags.fail_on_warnings,
                  "treat warnings as errors (exit 2)");
    cmd->add_option("--ids", flags.registry_path,
                    "id registry file; overrides the manifest");
    cmd->add_option("--mode-override", flags.mode_override,
                    "force source mode: release (no network) or live")
        ->check(CLI::IsMember({"release", "live"}));
  };

  CLI::App* build_cmd =
      app.add_subcommand("build", "expand the manifest and write the ontology");
  build_cmd->add_option("manifest", manifest_path, "build manifest path")
      ->required();
  build_cmd->add_option("-o,--out", out_path, "output ontology path")
      ->required();
  add_common(build_cmd);

  CLI::App* check_cmd = app.add_subcommand(
      "check", "run the pipeline and report diagnostics; writes nothing");
  check_cmd->add_option("manifest", manifest_path, "build manifest path")
      ->required();
  add_common(check_cmd);

  CLI::App* stats_cmd =
      app.add_subcommand("stats", "print class counts per top-level group");
  stats_cmd->add_option("manifest", manifest_path, "build manifest path")
      ->required();
  add_common(stats_cmd);

  CLI::App* diff_cmd =
      app.add_subcommand("diff", "compare two emitted ontology documents");
  diff_cmd->add_option("old", old_path, "baseline document")->required();
  diff_cmd->add_option("new", new_path, "changed document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (app.got_subcommand(build_cmd)) {
    return cmd_build(manifest_path, out_path, flags, out, err);
  }
  if (app.got_subcommand(check_cmd)) {
    return cmd_check(manifest_path, flags, out, err);
  }
  if (app.got_subcommand(stats_cmd)) {
    return cmd_stats(manifest_path, flags, out, err);
  }
  if (app.got_subcommand(diff_cmd)) {
    return cmd_diff(old_path, new_path, out, err);
  }
  err << "error: no command given\n";
  return kUsageError;
}

}  // namespace ontoforge::cli
