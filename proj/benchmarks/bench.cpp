#include <benchmark/benchmark.h>

#include "veritas/fixpoint.hpp"
#include "veritas/generators.hpp"
#include "veritas/godel.hpp"
#include "veritas/text.hpp"
#include "veritas/truth_language.hpp"

using namespace veritas;

namespace {

FiniteModel trivial_model() { return FiniteModel(Signature{}, 1, {}, {}); }

std::vector<Sentence> sample_sentences(std::size_t count) {
  Rng rng(99);
  FiniteModel m = trivial_model();
  std::vector<Nat> pool;
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < count; ++i) {
    Sentence s = random_sentence(rng, m, 3, pool);
    pool.push_back(encode(s));
    out.push_back(std::move(s));
  }
  return out;
}

void BM_EncodeDecode(benchmark::State& state) {
  FiniteModel m = trivial_model();
  auto sentences = sample_sentences(64);
  for (auto _ : state) {
    for (const Sentence& s : sentences) {
      auto back = decode(encode(s), m.signature());
      benchmark::DoNotOptimize(back);
    }
  }
  state.SetItemsProcessed(state.iterations() * sentences.size());
}
BENCHMARK(BM_EncodeDecode);

void BM_ParsePrint(benchmark::State& state) {
  FiniteModel m = trivial_model();
  auto sentences = sample_sentences(64);
  std::vector<std::string> texts;
  for (const Sentence& s : sentences) texts.push_back(print_sentence(s, m.signature()));
  for (auto _ : state) {
    for (const std::string& text : texts) {
      Sentence s = parse_sentence(text, m.signature());
      benchmark::DoNotOptimize(s);
    }
  }
  state.SetItemsProcessed(state.iterations() * texts.size());
}
BENCHMARK(BM_ParsePrint);

void BM_EvalBase(benchmark::State& state) {
  Rng rng(7);
  FiniteModel m = random_model(rng);
  std::vector<BaseFormula> formulas;
  for (int i = 0; i < 32; ++i) formulas.push_back(random_base_sentence(rng, m, 3));
  for (auto _ : state) {
    for (const BaseFormula& f : formulas) {
      benchmark::DoNotOptimize(eval_base(m, f));
    }
  }
  state.SetItemsProcessed(state.iterations() * formulas.size());
}
BENCHMARK(BM_EvalBase);

void BM_LeastFixedPoint(benchmark::State& state) {
  Rng rng(55);
  FiniteModel m = random_model(rng);
  Universe u = random_universe(rng, m, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    FixpointResult fp = least_fixed_point(u, m);
    benchmark::DoNotOptimize(fp);
  }
}
BENCHMARK(BM_LeastFixedPoint)->Arg(4)->Arg(12)->Arg(24);

void BM_ClassifyGrounded(benchmark::State& state) {
  FiniteModel m = trivial_model();
  auto sentences = sample_sentences(64);
  for (auto _ : state) {
    for (const Sentence& s : sentences) {
      benchmark::DoNotOptimize(classify_grounded(s, m));
    }
  }
  state.SetItemsProcessed(state.iterations() * sentences.size());
}
BENCHMARK(BM_ClassifyGrounded);

}  // namespace

BENCHMARK_MAIN();
