#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "nuforge/catalog.hpp"
#include "nuforge/kernels.hpp"

namespace {

using nuforge::kernels::Execution;

// Harmonic well on (-10, 10), h^-2 scaled.
struct Well {
    std::vector<double> diagonal;
    double off;
};

Well make_well(int count) {
    const double h = 20.0 / (count + 1);
    Well w{std::vector<double>(count), -1.0 / (h * h)};
    for (int i = 0; i < count; ++i) {
        const double x = -10.0 + (i + 1) * h;
        w.diagonal[i] = 2.0 / (h * h) + x * x;
    }
    return w;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * (i + 0.5) / count;
    return out;
}

template <Execution E>
void BM_Bisect(benchmark::State& state) {
    const Well w = make_well(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(nuforge::kernels::bisect_eigenvalues(E, w.diagonal, w.off, 8, 1e-10));
}

template <Execution E>
void BM_ResidualSweep(benchmark::State& state) {
    const auto system = nuforge::build_catalog_system("poschl_teller", nuforge::default_parameters("poschl_teller"));
    const auto nodes = linspace(0.05, 3.0, static_cast<int>(state.range(0)));
    auto fn = [&](double r) {
        const auto psi = system.wavefunction(2, r);
        return nuforge::kernels::PointValue{psi.second, std::abs(psi.value)};
    };
    for (auto _ : state) benchmark::DoNotOptimize(nuforge::kernels::residual_sweep(E, nodes, fn));
}

template <Execution E>
void BM_Tabulate(benchmark::State& state) {
    const auto system = nuforge::build_catalog_system("poschl_teller", nuforge::default_parameters("poschl_teller"));
    const auto nodes = linspace(0.05, 3.0, static_cast<int>(state.range(0)));
    auto fn = [&](int n, double r) { return system.wavefunction(n, r).value; };
    for (auto _ : state) benchmark::DoNotOptimize(nuforge::kernels::tabulate(E, nodes, 5, fn));
}

}  // namespace

BENCHMARK(BM_Bisect<Execution::Serial>)->Arg(2000)->Arg(8000);
BENCHMARK(BM_Bisect<Execution::Parallel>)->Arg(2000)->Arg(8000);
BENCHMARK(BM_ResidualSweep<Execution::Serial>)->Arg(4000);
BENCHMARK(BM_ResidualSweep<Execution::Parallel>)->Arg(4000);
BENCHMARK(BM_Tabulate<Execution::Serial>)->Arg(4000);
BENCHMARK(BM_Tabulate<Execution::Parallel>)->Arg(4000);

BENCHMARK_MAIN();
