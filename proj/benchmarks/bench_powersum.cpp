#include <benchmark/benchmark.h>

#include <vector>

#include "powersum/experiments.hpp"
#include "powersum/lifting.hpp"
#include "powersum/monomial.hpp"
#include "powersum/powersum.hpp"
#include "powersum/rootfinding.hpp"
#include "powersum/symmetric_functions.hpp"

using namespace powersum;

namespace {

ComplexList random_points(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexList out(static_cast<std::size_t>(n));
    for (Complex& z : out) {
        const double r = rng.next_double();
        const double phi = 6.283185307179586 * rng.next_double();
        z = {r * std::cos(phi), r * std::sin(phi)};
    }
    return out;
}

void bm_find_roots(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PolynomialCoefficients p = expand_from_roots(random_points(n, 11));
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(bm_find_roots)->Arg(8)->Arg(16);

void bm_conversion_round_trip(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto s = make_power_sums(random_points(k, 22));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            power_sums_from_elementary(elementary_from_power_sums(s, k), k));
}
BENCHMARK(bm_conversion_round_trip)->Arg(8)->Arg(12);

void bm_regular_decomposition(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(regular_decomposition(k));
}
BENCHMARK(bm_regular_decomposition)->Arg(8)->Arg(12);

void bm_solve_power_sum_system(benchmark::State& state) {
    PowerSumTarget t{random_points(8, 33)};
    for (auto _ : state) benchmark::DoNotOptimize(solve_power_sum_system(t));
}
BENCHMARK(bm_solve_power_sum_system);

void bm_decompose(benchmark::State& state) {
    MonicPolynomial f{random_points(8, 44)};
    for (auto _ : state) benchmark::DoNotOptimize(decompose(f));
}
BENCHMARK(bm_decompose);

void bm_lift(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LiftTarget t;
    t.A = random_points(n, 55);
    for (Complex& a : t.A) a /= std::abs(a);
    for (auto _ : state) benchmark::DoNotOptimize(lift(t));
}
BENCHMARK(bm_lift)->Arg(6)->Arg(8);

void bm_match_multisets(benchmark::State& state) {
    ComplexList u = random_points(32, 66);
    ComplexList v = random_points(32, 77);
    for (auto _ : state) benchmark::DoNotOptimize(match_multisets(u, v));
}
BENCHMARK(bm_match_multisets);

}  // namespace

BENCHMARK_MAIN();
