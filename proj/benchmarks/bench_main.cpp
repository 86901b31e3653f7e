#include <benchmark/benchmark.h>

#include "arsite/composition.hpp"
#include "arsite/instances.hpp"
#include "arsite/newton.hpp"
#include "arsite/random.hpp"

namespace {

using namespace arsite;

std::vector<HereditarySet> sets(std::size_t count, Coord max_coord, std::size_t generators) {
  std::mt19937_64 rng(1);
  std::vector<HereditarySet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hereditary(rng, max_coord, generators, false));
  return out;
}

void BM_HereditaryMul(benchmark::State& state) {
  const auto xs = sets(64, 1000, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(xs[i % 64], xs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_HereditaryMul)->Arg(4)->Arg(16)->Arg(64);

void BM_Gamma(benchmark::State& state) {
  const auto xs = sets(64, 1000, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gamma(xs[i++ % 64]));
}
BENCHMARK(BM_Gamma)->Arg(16)->Arg(256);

void BM_MinkowskiMul(benchmark::State& state) {
  const auto xs = sets(64, 100000, static_cast<std::size_t>(state.range(0)));
  std::vector<NewtonPolygon> ps;
  for (const auto& e : xs) ps.push_back(gamma(e));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minkowski_mul(ps[i % 64], ps[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_MinkowskiMul)->Arg(16)->Arg(256);

void BM_HullAdd(benchmark::State& state) {
  const auto xs = sets(64, 100000, static_cast<std::size_t>(state.range(0)));
  std::vector<NewtonPolygon> ps;
  for (const auto& e : xs) ps.push_back(gamma(e));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull_add(ps[i % 64], ps[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_HullAdd)->Arg(16)->Arg(256);

void BM_RewriteEquiv(benchmark::State& state) {
  const Lambda l = Lambda::rational(1, 2), lp = Lambda::rational(3, 4);
  const SimpleTensor t1 = generated_tensor(l, lp, 8, 0), t2 = generated_tensor(l, lp, 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_equiv(t1, t2, l, lp, static_cast<Natural>(state.range(0))));
}
BENCHMARK(BM_RewriteEquiv)->Arg(16)->Arg(64);

void BM_AxiomSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_standard_suites(static_cast<std::size_t>(state.range(0)), 42));
}
BENCHMARK(BM_AxiomSuite)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
