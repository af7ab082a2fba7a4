#include "weakorder/gen.hpp"

#include <benchmark/benchmark.h>

using namespace weakorder;

namespace {

constexpr std::size_t kPairs = 64;

std::vector<std::pair<LatticeElement, LatticeElement>> pairs(std::size_t dim) {
  std::vector<std::pair<LatticeElement, LatticeElement>> out;
  Rng rng(mix_seed(7, dim));
  for (std::size_t i = 0; i < kPairs; ++i) {
    auto x = random_element(rng, dim, 20);
    out.emplace_back(x, random_element(rng, dim, 20));
  }
  return out;
}

void BM_JoinExact(benchmark::State& state) {
  auto ps = pairs(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = ps[i++ % kPairs];
    benchmark::DoNotOptimize(join(x, y));
  }
}
BENCHMARK(BM_JoinExact)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_JoinFloat(benchmark::State& state) {
  std::vector<std::pair<FloatElement, FloatElement>> ps;
  for (const auto& [x, y] : pairs(static_cast<std::size_t>(state.range(0))))
    ps.emplace_back(to_float(x), to_float(y));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = ps[i++ % kPairs];
    benchmark::DoNotOptimize(FloatLattice::join(x, y));
  }
}
BENCHMARK(BM_JoinFloat)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_Member(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  auto x = random_element(rng, dim, 20);
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < 256; ++i) rays.push_back(random_ray(rng, dim, 20));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(member(rays[i++ % rays.size()], x));
}
BENCHMARK(BM_Member)->Arg(2)->Arg(6)->Arg(10);

void BM_RestrictHyperplane(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(13);
  auto x = random_element(rng, dim, 20);
  auto h = Subspace::whole(dim).hyperplane(random_ray(rng, dim, 20));
  for (auto _ : state) benchmark::DoNotOptimize(restrict(x, h));
}
BENCHMARK(BM_RestrictHyperplane)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
