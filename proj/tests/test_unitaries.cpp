#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "berfock/geometry.hpp"
#include "berfock/quadrature.hpp"
#include "berfock/spaces.hpp"
#include "berfock/special.hpp"
#include "berfock/unitaries.hpp"

using namespace berfock;
using cplx = std::complex<double>;
using special::log_gamma;

namespace {

// pointwise U^alpha_{(e^{i theta}, a)} f(zeta) for monomial-basis f = e_j
cplx u_pointwise(double alpha, const GroupElement& g, int j, cplx zeta) {
    const cplx a = g.point();
    const double theta = g.angle();
    const cplx phi = (zeta - a) / (1.0 - std::conj(a) * zeta);
    const cplx kern = std::pow(1.0 - std::norm(a), 1.0 + alpha / 2.0) *
                      std::exp(-(2.0 + alpha) * std::log(1.0 - std::conj(a) * zeta));
    const double bj = std::exp(0.5 * (log_gamma(j + alpha + 2.0) - log_gamma(j + 1.0) - log_gamma(alpha + 2.0)));
    return std::polar(1.0, (1.0 + alpha / 2.0) * theta) * bj *
           std::pow(std::polar(1.0, theta) * phi, j) * kern;
}

}  // namespace

TEST_SUITE("unitaries") {

TEST_CASE("weyl element basics") {
    // z = 0 is the identity
    for (int j : {0, 2}) {
        for (int k : {0, 1, 2, 3}) {
            const cplx e = w_matrix_element(1.5, 0.0, j, k);
            CHECK(std::abs(e - (j == k ? 1.0 : 0.0)) <= 1e-15);
        }
    }
    // j = 0 column: e^{-beta|z|^2/2} (sqrt(beta) conj z)^k / sqrt(k!)
    const double beta = 2.0;
    const cplx z(0.7, -0.4);
    double colsum = 0.0;
    for (int k = 0; k < 60; ++k) {
        const cplx expect = std::exp(-0.5 * beta * std::norm(z)) *
                            std::pow(std::sqrt(beta) * std::conj(z), k) /
                            std::sqrt(std::exp(log_gamma(k + 1.0)));
        const cplx got = w_matrix_element(beta, z, 0, k);
        CHECK(std::abs(got - expect) <= 1e-14);
        colsum += std::norm(got);
    }
    CHECK(colsum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weyl element against plane quadrature") {
    // <W_z omega_j, omega_k> = int W_z omega_j(w) conj(omega_k(w)) dmu_beta
    const double beta = 1.0;
    const cplx z(1.0, 0.0);
    QuadratureGrid grid = plane_grid(beta, 80, 64);
    for (int j : {1, 2}) {
        for (int k : {0, 1, 2}) {
            const cplx got = w_matrix_element(beta, z, j, k);
            const double bj = std::exp(0.5 * (j * std::log(beta) - log_gamma(j + 1.0)));
            const double bk = std::exp(0.5 * (k * std::log(beta) - log_gamma(k + 1.0)));
            const cplx by_quad = integrate(grid, [&](cplx w) {
                const cplx wj = bj * std::pow(w - z, j) *
                                std::exp(beta * std::conj(z) * w - 0.5 * beta * std::norm(z));
                return wj * std::conj(bk * std::pow(w, k));
            });
            CHECK(std::abs(got - by_quad) <= 1e-8);
        }
    }
}

TEST_CASE("weyl truncation rule reaches unit mass") {
    const double beta = 1.7;
    const cplx z(1.9, -2.3);
    for (int j : {0, 3}) {
        const int cutoff = suggested_weyl_truncation(beta, z, j);
        double mass = 0.0;
        for (int k = 0; k <= cutoff; ++k) mass += std::norm(w_matrix_element(beta, z, j, k));
        CHECK(mass >= 1.0 - 1e-10);
        CHECK(mass <= 1.0 + 1e-12);
    }
}

TEST_CASE("bergman element basics") {
    // identity group element
    for (int j : {0, 1, 3}) {
        for (int k : {0, 1, 2, 3}) {
            CHECK(std::abs(u_matrix_element(1.3, GroupElement(), j, k) - (j == k ? 1.0 : 0.0)) <= 1e-15);
        }
    }
    // j = 0 at t = 0 is the normalized kernel expansion
    const double alpha = 0.5;
    const cplx w(0.4, -0.1);
    GroupElement g(0.0, w);
    for (int k = 0; k < 6; ++k) {
        const cplx expect = std::pow(1.0 - std::norm(w), 1.0 + alpha / 2.0) *
                            std::exp(0.5 * (log_gamma(k + alpha + 2.0) - log_gamma(k + 1.0) -
                                            log_gamma(alpha + 2.0))) *
                            std::pow(std::conj(w), k);
        CHECK(std::abs(u_matrix_element(alpha, g, 0, k) - expect) <= 1e-14);
    }
}

TEST_CASE("bergman element against disc quadrature") {
    const double alpha = 1.0;
    GroupElement g(0.7, cplx(0.3, 0.2));
    const int j = 2, k = 3;
    QuadratureGrid grid = disc_grid(alpha, 120, 64);
    const double bk = std::exp(0.5 * (log_gamma(k + alpha + 2.0) - log_gamma(k + 1.0) - log_gamma(alpha + 2.0)));
    const cplx by_quad = integrate(grid, [&](cplx zeta) {
        return u_pointwise(alpha, g, j, zeta) * std::conj(bk * std::pow(zeta, k));
    });
    CHECK(std::abs(u_matrix_element(alpha, g, j, k) - by_quad) <= 1e-8);
}

TEST_CASE("column isometry with monotone partial sums") {
    const double alpha = 2.5;
    GroupElement g(1.2, cplx(0.55, 0.3));
    const int j = 3;
    double mass = 0.0, prev = -1.0;
    for (int k = 0; k < 400; ++k) {
        mass += std::norm(u_matrix_element(alpha, g, j, k));
        CHECK(mass >= prev);
        prev = mass;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("bare elements match the full ones") {
    const double alpha = 3.2;
    const cplx w(0.5, -0.35);
    for (int j : {0, 1, 4}) {
        for (int k : {0, 2, 5}) {
            const cplx full = u_matrix_element(alpha, GroupElement(0.0, w), j, k);
            const cplx bare = u_matrix_element_bare(alpha, w, j, k);
            CHECK(std::abs(full - bare * std::pow(1.0 - std::norm(w), 1.0 + alpha / 2.0)) <= 1e-13);
        }
    }
    const double beta = 0.8;
    const cplx z(1.1, 0.6);
    for (int j : {0, 3}) {
        for (int k : {0, 1, 4}) {
            const cplx full = w_matrix_element(beta, z, j, k);
            const cplx bare = w_matrix_element_bare(beta, z, j, k);
            CHECK(std::abs(full - bare * std::exp(-0.5 * beta * std::norm(z))) <= 1e-13);
        }
    }
}

TEST_CASE("row tables match per-element evaluation") {
    const double alpha = 7.7;
    const int j = 3, max_k = 50;
    UBergmanRow row(alpha, j, max_k);
    std::vector<cplx> out(max_k + 1);
    const cplx w(0.62, 0.18);
    row.bare_row(w, out.data());
    for (int k = 0; k <= max_k; ++k) {
        CHECK(std::abs(out[size_t(k)] - u_matrix_element_bare(alpha, w, j, k)) <= 1e-12 * (1.0 + std::abs(out[size_t(k)])));
    }
    const double beta = 1.4;
    WFockRow wrow(beta, 2, 40);
    std::vector<cplx> wout(41);
    const cplx z(0.9, -1.2);
    wrow.bare_row(z, wout.data());
    for (int k = 0; k <= 40; ++k) {
        CHECK(std::abs(wout[size_t(k)] - w_matrix_element_bare(beta, z, 2, k)) <= 1e-12 * (1.0 + std::abs(wout[size_t(k)])));
    }
}

TEST_CASE("cocycle law on the low-degree block") {
    // U_{g2} U_{g1} = U_{g1 . g2}, checked through truncated matrix products
    const int d = 3, cutoff = 400;
    for (double alpha : {0.0, 2.0}) {
        GroupElement g1(0.9, cplx(0.35, -0.2));
        GroupElement g2(2.2, cplx(-0.1, 0.45));
        GroupElement g12 = compose(g1, g2);
        Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(d + 1, d + 1);
        for (int jcol = 0; jcol <= d; ++jcol) {
            // column j of M2 M1 restricted to rows <= d, summed over the cutoff
            for (int krow = 0; krow <= d; ++krow) {
                cplx acc = 0.0;
                for (int m = 0; m <= cutoff; ++m) {
                    const cplx a = u_matrix_element(alpha, g1, jcol, m);
                    if (std::abs(a) < 1e-18) continue;
                    acc += u_matrix_element(alpha, g2, m, krow) * a;
                }
                lhs(krow, jcol) = acc;
            }
        }
        double dev = 0.0;
        for (int jcol = 0; jcol <= d; ++jcol) {
            for (int krow = 0; krow <= d; ++krow) {
                dev = std::max(dev, std::abs(lhs(krow, jcol) - u_matrix_element(alpha, g12, jcol, krow)));
            }
        }
        CHECK(dev <= 1e-6);
    }
}

TEST_CASE("apply_unitary identity and phase law") {
    const auto space = SpaceParams::bergman(4.0);
    CoefficientVector u(space, {cplx(0.2, 1.0), cplx(-1.0, 0.3), cplx(0.5, 0.5)});
    auto id = apply_unitary(u, GroupElement(), 12);
    CHECK(id.captured_mass == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = 0; n <= 12; ++n) CHECK(std::abs(id.image.coeff(n) - u.coeff(n)) <= 1e-14);

    // with (theta, a) equals e^{i(1+alpha/2) theta} times apply of the rotated
    // coefficients with (0, a)
    const double theta = 1.15;
    const cplx a(0.4, 0.25);
    auto full = apply_unitary(u, GroupElement(theta, a), 60);
    auto reduced = apply_unitary(rotate(u, theta), GroupElement(0.0, a), 60);
    const cplx phase = std::polar(1.0, (1.0 + space.weight / 2.0) * theta);
    for (int n = 0; n <= 60; ++n) {
        CHECK(std::abs(full.image.coeff(n) - phase * reduced.image.coeff(n)) <= 1e-10);
    }
}

TEST_CASE("apply_unitary captured mass at the acceptance scale") {
    std::mt19937_64 rng(2024);
    for (double alpha : {0.0, 10.0}) {
        const auto space = SpaceParams::bergman(alpha);
        std::vector<cplx> c(5);
        for (auto& x : c) x = cplx(double(rng() >> 11) * 0x1.0p-53 - 0.5, double(rng() >> 11) * 0x1.0p-53 - 0.5);
        CoefficientVector u(space, c);
        auto img = apply_unitary(u, GroupElement(0.8, cplx(0.7, 0.0)), 400);
        CHECK(img.captured_mass >= 1.0 - 1e-6);
        CHECK(img.image.norm_sq() == doctest::Approx(u.norm_sq()).epsilon(1e-10));
    }
    // Fock side
    const auto fock = SpaceParams::fock(1.3);
    CoefficientVector v(fock, {cplx(1.0, 0.0), cplx(0.0, 0.5)});
    const cplx z(1.2, -0.7);
    auto img = apply_weyl(v, z, suggested_weyl_truncation(1.3, z, v.degree()));
    CHECK(img.captured_mass >= 1.0 - 1e-10);
    CHECK(img.image.norm_sq() == doctest::Approx(v.norm_sq()).epsilon(1e-10));
}

TEST_CASE("stable log form survives extreme weights") {
    // alpha ~ 1e5: the value underflows double but its log stays exact
    const double alpha = 1e5;
    StableExponent e = u_matrix_element_log(alpha, GroupElement(0.0, cplx(0.5, 0.0)), 0, 0);
    CHECK(std::isfinite(e.log_magnitude));
    CHECK(e.log_magnitude == doctest::Approx((1.0 + alpha / 2.0) * std::log1p(-0.25)).epsilon(1e-12));
    CHECK(std::abs(u_matrix_element(alpha, GroupElement(0.0, cplx(0.5, 0.0)), 0, 0)) == 0.0);
}

}  // TEST_SUITE
