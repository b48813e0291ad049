// Compares the serial density evaluation with the OpenMP batch path on the
// same buffer and query set. The two are bitwise identical by construction;
// this measures what the parallel path buys at campaign-sized buffers.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dessca/kde.hpp"

namespace {

constexpr int kDim = 4;
constexpr std::size_t kQueries = 256;

dessca::CoverageEstimator make_estimator(std::size_t buffer_size) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<dessca::Vec> states(buffer_size, dessca::Vec(kDim));
  for (auto& s : states) {
    for (double& v : s) v = dist(rng);
  }
  dessca::CoverageEstimator kde(kDim, 0.1);
  kde.observe(states);
  return kde;
}

std::vector<dessca::Vec> make_queries() {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<dessca::Vec> queries(kQueries, dessca::Vec(kDim));
  for (auto& q : queries) {
    for (double& v : q) v = dist(rng);
  }
  return queries;
}

void bm_density_serial(benchmark::State& state) {
  const auto kde = make_estimator(static_cast<std::size_t>(state.range(0)));
  const auto queries = make_queries();
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& q : queries) acc += kde.density(q);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * kQueries);
}

void bm_density_batch(benchmark::State& state) {
  const auto kde = make_estimator(static_cast<std::size_t>(state.range(0)));
  const auto queries = make_queries();
  for (auto _ : state) {
    auto values = kde.density_batch(queries);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * kQueries);
}

}  // namespace

BENCHMARK(bm_density_serial)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_density_batch)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
