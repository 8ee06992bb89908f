#include <benchmark/benchmark.h>

#include "isl/isl.hpp"

namespace {

const char* kAxioms[] = {
    "=> ([]p -> p) -> p",
    "=> p -> []p",
    "=> []([]p -> p) -> []p",
    "=> [](p -> q) -> ([]p -> []q)",
    "=> []p -> [][]p",
};

void BM_DecideAxiom(benchmark::State& st) {
  isl::Sequent s = isl::parse_sequent(kAxioms[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(isl::decide(s));
  st.SetLabel(kAxioms[st.range(0)]);
}
BENCHMARK(BM_DecideAxiom)->DenseRange(0, 4);

void BM_DecideCorpus(benchmark::State& st) {
  isl::FuzzConfig cfg;
  cfg.count = 200;
  cfg.max_weight = static_cast<unsigned>(st.range(0));
  std::vector<isl::Sequent> corpus = isl::fuzz_corpus(cfg);
  for (auto _ : st)
    for (const isl::Sequent& s : corpus) benchmark::DoNotOptimize(isl::decide(s));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * corpus.size()));
}
BENCHMARK(BM_DecideCorpus)->Arg(8)->Arg(12)->Arg(16);

void BM_Countermodel(benchmark::State& st) {
  isl::Sequent s = isl::parse_sequent("=> ((p -> q) -> p) -> p");
  for (auto _ : st) benchmark::DoNotOptimize(isl::countermodel(s));
}
BENCHMARK(BM_Countermodel);

void BM_CutElimPipeline(benchmark::State& st) {
  isl::Sequent s = isl::parse_sequent("=> []([]([]p -> p) -> []p)");
  isl::G4Ptr g4 = isl::extract_proof(isl::search(s));
  for (auto _ : st) {
    isl::G3Ptr g3 = isl::inject_cuts(isl::g4_to_g3(*g4), 7, static_cast<unsigned>(st.range(0)));
    benchmark::DoNotOptimize(isl::eliminate_cuts(g3));
  }
}
BENCHMARK(BM_CutElimPipeline)->Arg(1)->Arg(4);

void BM_Interpolate(benchmark::State& st) {
  isl::SplitSequent s = isl::parse_split("[](p -> q), []p ; [](q -> r) => []r");
  for (auto _ : st) benchmark::DoNotOptimize(isl::interpolate(s));
}
BENCHMARK(BM_Interpolate);

void BM_EnumerateModels(benchmark::State& st) {
  std::set<std::string> atoms{"p", "q"};
  for (auto _ : st) {
    std::size_t n = 0;
    isl::for_each_model(atoms, static_cast<unsigned>(st.range(0)), [&](const isl::KripkeModel&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateModels)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
