// Microbenchmarks for the hot paths a full corpus build spends its time
// in: record expansion, canonical serialization, parsing and id minting.
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ontoforge/diagnostics.hpp"
#include "ontoforge/owl/ontology.hpp"
#include "ontoforge/patterns/patterns.hpp"
#include "ontoforge/registry/environment.hpp"
#include "ontoforge/registry/id_registry.hpp"
#include "ontoforge/registry/naming.hpp"
#include "ontoforge/serialize/reader.hpp"
#include "ontoforge/serialize/writer.hpp"

namespace {

using namespace ontoforge;

constexpr const char* kIri = "http://bench.example/onto";
constexpr const char* kBase = "http://bench.example/onto#";

owl::Ontology expand_corpus(int classes) {
  Diagnostics diags;
  registry::NamingPolicy naming(kBase);
  registry::Environment env(naming, diags);
  owl::Ontology onto(kIri, kBase);
  patterns::ExpansionContext ctx{onto, env, "bench"};
  patterns::declare_top_level(ctx);
  for (int i = 0; i < classes; ++i) {
    ctx.site = "bench:" + std::to_string(i);
    patterns::gene_class("GENE-" + std::to_string(i), ctx);
  }
  return onto;
}

void BM_ExpandGenes(benchmark::State& state) {
  const int classes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    owl::Ontology onto = expand_corpus(classes);
    benchmark::DoNotOptimize(onto);
  }
  state.SetItemsProcessed(state.iterations() * classes);
}
BENCHMARK(BM_ExpandGenes)->Range(256, 4096);

void BM_Serialize(benchmark::State& state) {
  const owl::Ontology onto =
      expand_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::string doc = serialize::serialize_functional(onto);
    benchmark::DoNotOptimize(doc);
  }
  state.SetItemsProcessed(state.iterations() * onto.size());
}
BENCHMARK(BM_Serialize)->Range(256, 4096);

void BM_Parse(benchmark::State& state) {
  const std::string doc = serialize::serialize_functional(
      expand_corpus(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    owl::Ontology onto = serialize::parse_functional(doc);
    benchmark::DoNotOptimize(onto);
  }
  state.SetBytesProcessed(state.iterations() * doc.size());
}
BENCHMARK(BM_Parse)->Range(256, 4096);

void BM_MintIds(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  std::vector<std::string> labels;
  labels.reserve(count);
  for (int i = 0; i < count; ++i) {
    labels.push_back("LABEL-" + std::to_string(i));
  }
  for (auto _ : state) {
    registry::IdRegistry ids;
    for (const auto& label : labels) {
      benchmark::DoNotOptimize(ids.mint(label));
    }
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_MintIds)->Range(1024, 16384);

}  // namespace

BENCHMARK_MAIN();
