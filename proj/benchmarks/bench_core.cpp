#include <benchmark/benchmark.h>

#include "dop/darboux.hpp"
#include "dop/diamond.hpp"
#include "dop/groebner.hpp"
#include "dop/ore.hpp"

namespace {

using namespace dop;

BiPoly xy_poly(unsigned deg) {
  BiPoly p;
  for (unsigned i = 0; i <= deg; ++i)
    for (unsigned j = 0; i + j <= deg; ++j) p += BiPoly::term(make_rational(static_cast<long>(i + 2 * j + 1), 1 + (i % 3)), Mono{i, j});
  return p;
}

void BM_BiPolyMul(benchmark::State& st) {
  const BiPoly a = xy_poly(static_cast<unsigned>(st.range(0)));
  const BiPoly b = a + BiPoly::x();
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BiPolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_Buchberger(benchmark::State& st) {
  const std::vector<BiPoly> gens{BiPoly::x() * BiPoly::x() * BiPoly::y() - BiPoly(Rational(1)),
                                 BiPoly::y() * BiPoly::y() * BiPoly::y() - BiPoly::x() + BiPoly(Rational(2))};
  for (auto _ : st) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_Buchberger);

void BM_ThetaPowLeft(benchmark::State& st) {
  const auto ctx = OreContext::make({BiPoly(Rational(1)), -(BiPoly::y() * BiPoly::y())}, false);
  const BiPoly a = xy_poly(3);
  for (auto _ : st) benchmark::DoNotOptimize(theta_pow_left(ctx, static_cast<unsigned>(st.range(0)), a));
}
BENCHMARK(BM_ThetaPowLeft)->Arg(2)->Arg(6)->Arg(12);

void BM_OreMul(benchmark::State& st) {
  const auto ctx = OreContext::make({BiPoly::x(), BiPoly::y()}, false);
  std::vector<BiPoly> c;
  for (int i = 0; i <= st.range(0); ++i) c.push_back(xy_poly(2) + BiPoly(make_rational(i)));
  const OrePoly f(c);
  for (auto _ : st) benchmark::DoNotOptimize(mul(ctx, f, f));
}
BENCHMARK(BM_OreMul)->Arg(2)->Arg(5);

void BM_DarbouxSearch(benchmark::State& st) {
  const Derivation d{BiPoly(Rational(1)), BiPoly::x() * BiPoly::y() * BiPoly::y()};
  for (auto _ : st) benchmark::DoNotOptimize(darboux_search(d, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_DarbouxSearch)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DecideEuler(benchmark::State& st) {
  const Derivation d{BiPoly::x(), BiPoly::y()};
  for (auto _ : st) benchmark::DoNotOptimize(decide(RingSpec::PolyBi, d));
}
BENCHMARK(BM_DecideEuler)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
