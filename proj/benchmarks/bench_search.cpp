#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include <fairlist/antecedents.hpp>
#include <fairlist/dataset.hpp>
#include <fairlist/search.hpp>

using namespace fairlist;

namespace {

BinaryDataset random_dataset(std::size_t samples, std::size_t features,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto coin = [&](double p) {
        return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
    };
    BinaryDataset data;
    data.num_samples = samples;
    data.labels = BitVector(samples);
    data.group = BitVector(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        if (coin(0.45)) data.labels.set(i);
        if (coin(0.5)) data.group.set(i);
    }
    for (std::size_t f = 0; f < features; ++f) {
        BitVector column(samples);
        // Mix label-correlated and noise columns so pruning has work to do.
        const double base = 0.2 + 0.05 * static_cast<double>(f % 5);
        for (std::size_t i = 0; i < samples; ++i) {
            const double p = data.labels.test(i) ? base + 0.25 : base;
            if (coin(p)) column.set(i);
        }
        data.feature_names.push_back("f" + std::to_string(f));
        data.features.push_back(std::move(column));
    }
    return data;
}

void bench_mine(benchmark::State& state) {
    const auto samples = static_cast<std::size_t>(state.range(0));
    const BinaryDataset data = random_dataset(samples, 24, 7);
    MiningConfig config;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mine_antecedents(data, config));
    }
}

void bench_search_certified(benchmark::State& state) {
    const auto samples = static_cast<std::size_t>(state.range(0));
    const BinaryDataset data = random_dataset(samples, 10, 7);
    MiningConfig mining;
    mining.max_clause_arity = 1;
    const AntecedentSet set = mine_antecedents(data, mining);

    SearchConfig cfg;
    cfg.lambda = 0.01;
    cfg.max_length = 3;
    for (auto _ : state) {
        const SearchResult res = search(data, set, cfg);
        benchmark::DoNotOptimize(res.objective);
    }
}

void bench_search_constrained(benchmark::State& state) {
    const auto samples = static_cast<std::size_t>(state.range(0));
    const BinaryDataset data = random_dataset(samples, 10, 7);
    MiningConfig mining;
    mining.max_clause_arity = 1;
    const AntecedentSet set = mine_antecedents(data, mining);

    SearchConfig cfg;
    cfg.lambda = 0.01;
    cfg.max_length = 3;
    cfg.metric = Metric::EqualizedOdds;
    cfg.epsilon = 0.9;
    for (auto _ : state) {
        const SearchResult res = search(data, set, cfg);
        benchmark::DoNotOptimize(res.objective);
    }
}

} // namespace

BENCHMARK(bench_mine)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bench_search_certified)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(bench_search_constrained)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
