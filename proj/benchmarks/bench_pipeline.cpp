#include <benchmark/benchmark.h>

#include "borsuk/census.hpp"
#include "borsuk/diameter.hpp"
#include "borsuk/embedding.hpp"
#include "borsuk/golay.hpp"
#include "borsuk/leech.hpp"

using namespace borsuk;

namespace {

const golay::GolayCode& cached_code() {
  static const auto code = golay::build_code();
  return code;
}

const leech::PointSet& cached_points() {
  static const auto points = leech::enumerate_min_vectors(cached_code());
  return points;
}

const leech::PointSet& cached_triple_subset() {
  static const auto subset = [] {
    const auto counts = census::build_census(cached_points());
    return census::subset_equal_abs(cached_points(), census::select_best_triple(counts));
  }();
  return subset;
}

void BM_GolayBuild(benchmark::State& state) {
  for (auto _ : state) {
    auto code = golay::build_code();
    benchmark::DoNotOptimize(code.codewords.data());
  }
}
BENCHMARK(BM_GolayBuild)->Unit(benchmark::kMillisecond);

void BM_LeechEnumerate(benchmark::State& state) {
  const auto& code = cached_code();
  for (auto _ : state) {
    auto points = leech::enumerate_min_vectors(code);
    benchmark::DoNotOptimize(points.points.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(leech::kMinVectorCount));
}
BENCHMARK(BM_LeechEnumerate)->Unit(benchmark::kMillisecond);

void BM_DotRowHistogram(benchmark::State& state) {
  const auto& points = cached_points();
  std::size_t i = 0;
  for (auto _ : state) {
    auto h = diameter::row_histogram(points.points[i], points);
    benchmark::DoNotOptimize(h.counts.data());
    i = (i + 7919) % points.size();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_DotRowHistogram)->Unit(benchmark::kMillisecond);

void BM_CensusBuild(benchmark::State& state) {
  const auto& points = cached_points();
  for (auto _ : state) {
    auto counts = census::build_census(points);
    benchmark::DoNotOptimize(counts.total_triple_edges);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_CensusBuild)->Unit(benchmark::kMillisecond);

void BM_AffineDimension(benchmark::State& state) {
  const auto& subset = cached_triple_subset();
  const auto constraints = embedding::constraints_equal_abs(census::CoordinateTriple{0, 1, 2});
  for (auto _ : state) {
    const int dim = embedding::affine_dimension(subset, constraints);
    benchmark::DoNotOptimize(dim);
  }
}
BENCHMARK(BM_AffineDimension)->Unit(benchmark::kMillisecond);

void BM_GreedySubset(benchmark::State& state) {
  const auto& points = cached_points();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto kept = diameter::greedy_smaller_diameter_subset(points, seed++);
    benchmark::DoNotOptimize(kept.data());
  }
}
BENCHMARK(BM_GreedySubset)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
