#include <benchmark/benchmark.h>

#include <complex>

#include "berfock/berezin.hpp"
#include "berfock/operators.hpp"
#include "berfock/quadrature.hpp"
#include "berfock/spaces.hpp"
#include "berfock/special.hpp"
#include "berfock/unitaries.hpp"

using namespace berfock;
using cplx = std::complex<double>;

namespace {

void BM_log_gamma(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(special::log_gamma(x));
        x += 1.37;
        if (x > 1e6) x = 0.5;
    }
}
BENCHMARK(BM_log_gamma);

void BM_reg_inc_beta(benchmark::State& state) {
    const double b = double(state.range(0));
    double a = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(special::reg_inc_beta(0.25, a, b));
        a += 1.0;
        if (a > b) a = 1.0;
    }
}
BENCHMARK(BM_reg_inc_beta)->Arg(100)->Arg(2000);

void BM_u_matrix_element(benchmark::State& state) {
    const int j = int(state.range(0));
    const GroupElement g(0.7, cplx(0.4, 0.3));
    int k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(u_matrix_element(2.5, g, j, k));
        k = (k + 1) % 64;
    }
}
BENCHMARK(BM_u_matrix_element)->Arg(1)->Arg(8);

void BM_bare_row(benchmark::State& state) {
    const int n = int(state.range(0));
    UBergmanRow row(4.0, 2, n - 1);
    std::vector<cplx> out(size_t(n), 0.0);
    for (auto _ : state) {
        row.bare_row(cplx(0.31, -0.44), out.data());
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_bare_row)->Arg(64)->Arg(256);

void BM_disc_grid(benchmark::State& state) {
    const int n_rad = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(disc_grid(57.0, n_rad, 32));
    }
}
BENCHMARK(BM_disc_grid)->Arg(40)->Arg(160);

void BM_toeplitz_assembly(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto space = SpaceParams::bergman(3.0);
    const auto symbol = SymbolSpec::radial_profile(SymbolSpec::Domain::Disc,
                                                   [](double rho) { return 1.0 - rho * rho; }, 1.0, "1-s");
    const auto grid = disc_grid(3.0, 40, 2 * n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(toeplitz_matrix(space, symbol, n, grid));
    }
}
BENCHMARK(BM_toeplitz_assembly)->Arg(16)->Arg(64);

void BM_localization_assembly(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto space = SpaceParams::bergman(10.0);
    const auto symbol = SymbolSpec::disc_indicator(SymbolSpec::Domain::Disc, 0.5);
    const auto window = basis_vector(space, 1);
    const auto grid = disc_grid_split(10.0, 0.25, 40, 2 * n + 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(localization_matrix(space, symbol, window, window, n, 1, grid));
    }
}
BENCHMARK(BM_localization_assembly)->Arg(16)->Arg(48);

void BM_spectral_summary(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto space = SpaceParams::bergman(3.0);
    auto mat = toeplitz_matrix(space, SymbolSpec::disc_indicator(SymbolSpec::Domain::Disc, 0.5), n,
                               disc_grid_split(3.0, 0.25, 40, 2 * n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral_summary(mat));
    }
}
BENCHMARK(BM_spectral_summary)->Arg(32)->Arg(128);

void BM_berezin_eval(benchmark::State& state) {
    const double alpha = double(state.range(0));
    BerezinEvaluator ev(alpha, basis_vector(SpaceParams::bergman(alpha), 1));
    const auto f = SymbolSpec::radial_profile(SymbolSpec::Domain::Disc,
                                              [](double rho) { return 1.0 - rho * rho; }, 1.0, "1-s");
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.eval(f, 0.0, cplx(0.3, 0.1)));
    }
}
BENCHMARK(BM_berezin_eval)->Arg(10)->Arg(160);

}  // namespace

BENCHMARK_MAIN();
