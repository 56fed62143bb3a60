#include <benchmark/benchmark.h>

#include "alcove/folded.hpp"
#include "alcove/localization.hpp"

using namespace alcove;

namespace {

const CartanDatum& a2() {
  static CartanDatum d = datum_from_type("A2~");
  return d;
}

void BM_reduced_word(benchmark::State& state) {
  const CartanDatum& d = a2();
  Word long_word;
  for (int t = 0; t < state.range(0); ++t)
    long_word.push_back((t * 2 + 1) % 3);
  WeylElement w = from_word(d, long_word);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_word(w));
}
BENCHMARK(BM_reduced_word)->Arg(8)->Arg(16)->Arg(32);

void BM_localize(benchmark::State& state) {
  const CartanDatum& d = a2();
  WeylElement v = from_word(d, {1, 0});
  Word word;
  for (int t = 0; t < state.range(0); ++t) word.push_back((t * 2 + 1) % 3);
  WeylElement w = from_word(d, word);
  for (auto _ : state) benchmark::DoNotOptimize(localize(v, w, word));
}
BENCHMARK(BM_localize)->Arg(6)->Arg(10)->Arg(14);

void BM_localization_class(benchmark::State& state) {
  const CartanDatum& d = a2();
  WeylElement v = from_word(d, {1});
  for (auto _ : state)
    benchmark::DoNotOptimize(localization_class(v, state.range(0)));
}
BENCHMARK(BM_localization_class)->Arg(3)->Arg(4);

void BM_point_count(benchmark::State& state) {
  const CartanDatum& d = a2();
  Word word;
  for (int t = 0; t < state.range(0); ++t) word.push_back((t * 2 + 1) % 3);
  WeylElement v = from_word(d, {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(point_count(d, word, v));
}
BENCHMARK(BM_point_count)->Arg(4)->Arg(6)->Arg(8);

void BM_r_polynomial(benchmark::State& state) {
  const CartanDatum& d = a2();
  Word word;
  for (int t = 0; t < state.range(0); ++t) word.push_back((t * 2 + 1) % 3);
  WeylElement w = from_word(d, word);
  WeylElement v = from_word(d, {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(r_polynomial(v, w));
}
BENCHMARK(BM_r_polynomial)->Arg(6)->Arg(10);

}  // namespace
