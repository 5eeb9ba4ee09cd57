#include <benchmark/benchmark.h>

#include <random>

#include "stabkit/bounds.hpp"
#include "stabkit/catalog.hpp"
#include "stabkit/scenario.hpp"
#include "stabkit/smith.hpp"

using namespace stabkit;

namespace {

template <class R, class Gen>
Matrix<R> random_matrix(std::size_t n, Gen&& gen) {
  Matrix<R> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gen();
  return m;
}

void BM_SmithInteger(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-50, 50);
  auto m = random_matrix<Integer>(state.range(0), [&] { return Integer(d(rng)); });
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithInteger)->Arg(4)->Arg(8)->Arg(16);

void BM_SmithLaurent(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-3, 3);
  auto m = random_matrix<LaurentPolyQ>(state.range(0), [&] {
    return LaurentPolyQ(0, {Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(d(rng))});
  });
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithLaurent)->Arg(2)->Arg(3)->Arg(4);

void BM_SmithEisenstein(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  auto m = random_matrix<EisensteinInt>(state.range(0), [&] { return EisensteinInt(Integer(d(rng)), Integer(d(rng))); });
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithEisenstein)->Arg(4)->Arg(8)->Arg(12);

void BM_DiscPairReport(benchmark::State& state) {
  auto cat = Catalog::builtin();
  auto n = std::to_string(state.range(0));
  auto k = resolve_knot(cat, "sum^" + n + "(9_46)");
  DiscPair p{resolve_disc(cat, k, "left^" + n), resolve_disc(cat, k, "right^" + n)};
  for (auto _ : state) benchmark::DoNotOptimize(full_report(p));
}
BENCHMARK(BM_DiscPairReport)->Arg(1)->Arg(4)->Arg(8);

void BM_MetabelianBound(benchmark::State& state) {
  auto cat = Catalog::builtin();
  auto s = resolve_satellite(cat, "thmC(g=" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(theorem_c_lower_bound(s));
}
BENCHMARK(BM_MetabelianBound)->Arg(1)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
