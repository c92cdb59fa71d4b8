#include <benchmark/benchmark.h>

#include "tropcrit/critical.hpp"
#include "tropcrit/invariants.hpp"
#include "tropcrit/taut.hpp"

using namespace tropcrit;

namespace {

Matroid fano() {
  std::vector<Subset> lines = {Subset::of({0, 1, 2}), Subset::of({0, 3, 4}),
                               Subset::of({0, 5, 6}), Subset::of({1, 3, 5}),
                               Subset::of({1, 4, 6}), Subset::of({2, 3, 6}),
                               Subset::of({2, 4, 5})};
  std::vector<Subset> bases;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        Subset t = Subset::of({a, b, c});
        bool is_line = false;
        for (Subset l : lines) is_line = is_line || l == t;
        if (!is_line) bases.push_back(t);
      }
  return Matroid::from_bases(6, bases);
}

void bm_char_poly_fano(benchmark::State& state) {
  Matroid m = fano();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(bm_char_poly_fano);

void bm_bnbc_fano(benchmark::State& state) {
  Matroid m = fano();
  for (auto _ : state) benchmark::DoNotOptimize(bnbc_bases(m));
}
BENCHMARK(bm_bnbc_fano);

void bm_critical_fast_fano(benchmark::State& state) {
  AffineMatroid a(fano());
  RationalVector w = canonical_rapid_w(a.n());
  for (auto _ : state) benchmark::DoNotOptimize(critical_points_fast(a, w));
}
BENCHMARK(bm_critical_fast_fano);

void bm_critical_oracle_fano(benchmark::State& state) {
  AffineMatroid a(fano());
  RationalVector w = canonical_rapid_w(a.n());
  for (auto _ : state) benchmark::DoNotOptimize(critical_points_oracle(a, w));
}
BENCHMARK(bm_critical_oracle_fano);

void bm_divisibility_u36(benchmark::State& state) {
  AffineMatroid a(Matroid::uniform(3, 6));
  for (auto _ : state) benchmark::DoNotOptimize(divisibility_check(a));
}
BENCHMARK(bm_divisibility_u36);

}  // namespace

BENCHMARK_MAIN();
