#include "hqreg/appendixpoly.hpp"
#include "hqreg/criterion.hpp"
#include "hqreg/expression.hpp"

#include <benchmark/benchmark.h>

using namespace hqreg;

namespace {

const char* const kQuadratic = "z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j";

void BM_MatrixA_Linear(benchmark::State& state) {
    const QFunction f = parse_function("conj(z1) + (z1 + conj(z2))*j");
    for (auto _ : state) benchmark::DoNotOptimize(matrix_A(f));
}
BENCHMARK(BM_MatrixA_Linear);

void BM_MatrixA_Quadratic(benchmark::State& state) {
    const QFunction f = parse_function(kQuadratic);
    for (auto _ : state) benchmark::DoNotOptimize(matrix_A(f));
}
BENCHMARK(BM_MatrixA_Quadratic);

void BM_Classify_Quadratic(benchmark::State& state) {
    const QFunction f = parse_function(kQuadratic);
    for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_Classify_Quadratic);

void BM_IntegrateMonomial(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    const DomainSpec ball = DomainSpec::unit_ball();
    for (auto _ : state) benchmark::DoNotOptimize(integrate_monomial({d, d, d, d}, ball));
}
BENCHMARK(BM_IntegrateMonomial)->Arg(1)->Arg(4)->Arg(8);

void BM_IntegrateMonomialBox(benchmark::State& state) {
    using I = std::pair<Rational, Rational>;
    const DomainSpec box = DomainSpec::box({I{0, 1}, I{-1, 2}, I{0, 3}, I{-2, 1}});
    for (auto _ : state) benchmark::DoNotOptimize(integrate_monomial({3, 2, 2, 1}, box));
}
BENCHMARK(BM_IntegrateMonomialBox);

void BM_AppendixValue(benchmark::State& state) {
    const auto c = LinearCoefficients::from_complex({1, 2}, {Rational(1, 2), -1}, {3, 0}, {0, 1}, {-2, 1}, {1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(appendix_value(c));
}
BENCHMARK(BM_AppendixValue);

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_function(kQuadratic));
}
BENCHMARK(BM_Parse);

void BM_MonteCarlo(benchmark::State& state) {
    const CPoly p = CPoly::monomial({2, 2, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_integral(p, DomainSpec::unit_ball(), 100000, 1));
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
