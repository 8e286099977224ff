#include <benchmark/benchmark.h>

#include <random>

#include "qcalc/lattice.hpp"

using namespace qcalc;

namespace {

IntMatrix random_matrix(std::size_t n, long range, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_Snf(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 7);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->DenseRange(2, 10, 2);

void BM_Hnf(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 8);
  for (auto _ : state) benchmark::DoNotOptimize(hnf_with_transform(m));
}
BENCHMARK(BM_Hnf)->DenseRange(2, 10, 2);

void BM_SnfPlanck(benchmark::State& state) {
  IntMatrix m{{1, -1, 0, 0, 0}, {2, -1, 1, 0, 0}, {3, -2, -1, 0, 0}, {3, -2, 1, -2, 0},
              {2, -2, 1, 0, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_SnfPlanck);

void BM_Membership(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
  auto basis = make_basis(names);
  Subgroup sub(basis, random_matrix(n, 5, 9));
  IntMatrix targets = random_matrix(n, 20, 10);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sub.contains(Dimension(basis, targets.row(i))));
    i = (i + 1) % n;
  }
}
BENCHMARK(BM_Membership)->DenseRange(2, 8, 2);

}  // namespace
