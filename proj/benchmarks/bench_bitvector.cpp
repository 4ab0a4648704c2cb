#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include <fairlist/bitvector.hpp>

using fairlist::BitVector;

namespace {

BitVector random_bits(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitVector v(size);
    for (std::size_t i = 0; i < size; ++i)
        if (rng() & 1) v.set(i);
    return v;
}

void bench_count_and(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    const BitVector a = random_bits(size, 1);
    const BitVector b = random_bits(size, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(BitVector::count_and(a, b));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(size));
}

void bench_count_and3(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    const BitVector a = random_bits(size, 1);
    const BitVector b = random_bits(size, 2);
    const BitVector c = random_bits(size, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(BitVector::count_and3(a, b, c));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(size));
}

void bench_and_not_assign(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    const BitVector a = random_bits(size, 1);
    const BitVector b = random_bits(size, 2);
    for (auto _ : state) {
        BitVector scratch = a;
        scratch.and_not_assign(b);
        benchmark::DoNotOptimize(scratch);
    }
}

void bench_for_each_set(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    const BitVector a = random_bits(size, 1);
    for (auto _ : state) {
        std::size_t sum = 0;
        a.for_each_set([&](std::size_t i) { sum += i; });
        benchmark::DoNotOptimize(sum);
    }
}

} // namespace

BENCHMARK(bench_count_and)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(bench_count_and3)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(bench_and_not_assign)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(bench_for_each_set)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);

BENCHMARK_MAIN();
