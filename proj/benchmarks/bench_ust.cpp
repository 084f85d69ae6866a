#include <benchmark/benchmark.h>

#include <chrono>
#include <random>
#include <vector>

#include "ust/dissimilarity.hpp"
#include "ust/ordering.hpp"
#include "ust/shapelet.hpp"

namespace {

using namespace ust;

std::vector<UncertainValue> random_series(std::mt19937_64& rng, std::size_t m) {
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    std::uniform_real_distribution<double> dev(0.0, 0.5);
    std::vector<UncertainValue> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.emplace_back(val(rng), dev(rng));
    return out;
}

UncertainDataset random_dataset(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<UncertainSeries> series;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        series.emplace_back(random_series(rng, m));
        labels.push_back(i % 2 == 0 ? "a" : "b");
    }
    return {std::move(series), std::move(labels)};
}

void BM_ued(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto a = random_series(rng, state.range(0));
    const auto b = random_series(rng, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ued(a, b));
    }
}
BENCHMARK(BM_ued)->Arg(16)->Arg(64)->Arg(256);

void BM_ued_subseq(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto series = random_series(rng, state.range(0));
    const auto query = random_series(rng, 16);
    const OrderingStrategy ord{OrderingKind::Simple};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ued_subseq(series, query, ord));
    }
}
BENCHMARK(BM_ued_subseq)->Arg(64)->Arg(256)->Arg(1024);

void BM_compare(benchmark::State& state) {
    const UncertainValue x{1.0, 0.8}, y{1.3, 0.5};
    const OrderingStrategy ord{static_cast<OrderingKind>(state.range(0)), 100};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare(x, y, ord));
    }
}
BENCHMARK(BM_compare)
    ->Arg(static_cast<int>(OrderingKind::Simple))
    ->Arg(static_cast<int>(OrderingKind::Stochastic))
    ->Arg(static_cast<int>(OrderingKind::Interval));

void BM_select(benchmark::State& state) {
    const UncertainDataset dataset = random_dataset(10, state.range(0), 3);
    SelectionConfig cfg;
    cfg.k = 10;
    cfg.contract = std::chrono::hours(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(select_shapelets(dataset, cfg));
    }
}
BENCHMARK(BM_select)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
