#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "berfock/spaces.hpp"

using namespace berfock;
using cplx = std::complex<double>;

namespace {
double uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }
}  // namespace

TEST_SUITE("spaces") {

TEST_CASE("monomial norms") {
    const auto b0 = SpaceParams::bergman(0.0);
    CHECK(monomial_norm_sq(b0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(monomial_norm_sq(b0, 1) == doctest::Approx(0.5).epsilon(1e-13));
    const auto f2 = SpaceParams::fock(2.0);
    CHECK(monomial_norm_sq(f2, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(monomial_norm_sq(f2, 3) == doctest::Approx(0.75).epsilon(1e-13));
    CHECK_THROWS_AS(SpaceParams::bergman(-1.0), std::domain_error);
    CHECK_THROWS_AS(SpaceParams::fock(0.0), std::domain_error);
}

TEST_CASE("inner products") {
    const auto b0 = SpaceParams::bergman(0.0);
    CoefficientVector one(b0, {1.0});
    CoefficientVector z(b0, {0.0, 1.0});
    CHECK(inner_product(one, one) == cplx(1.0, 0.0));
    CHECK(std::abs(inner_product(z, one)) == 0.0);
    CHECK(inner_product(z, z).real() == doctest::Approx(0.5).epsilon(1e-13));

    CoefficientVector u(b0, {cplx(1, 2), cplx(0, -1)});
    CoefficientVector v(b0, {cplx(0.5, 0.5), cplx(2, 1)});
    CHECK(std::abs(inner_product(u, v) - std::conj(inner_product(v, u))) <= 1e-15);

    CoefficientVector w(SpaceParams::fock(1.0), {1.0});
    CHECK_THROWS_AS(inner_product(u, w), std::invalid_argument);
}

TEST_CASE("basis vectors are unit") {
    for (auto space : {SpaceParams::bergman(0.0), SpaceParams::bergman(7.3), SpaceParams::fock(2.5)}) {
        for (int n : {0, 1, 5, 23}) {
            CHECK(basis_vector(space, n).norm_sq() == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("v_alpha_transform") {
    const auto b0 = SpaceParams::bergman(0.0);
    CoefficientVector u(b0, {cplx(0.3, 1.0), cplx(-2.0, 0.1), cplx(0.0, 0.7)});

    // target alpha = 0 is the identity
    auto same = v_alpha_transform(u, 0.0);
    for (int n = 0; n <= u.degree(); ++n) CHECK(std::abs(same.coeff(n) - u.coeff(n)) <= 1e-15);

    // constants map to constants
    auto c = v_alpha_transform(CoefficientVector(b0, {cplx(2.5, -1)}), 7.0);
    CHECK(std::abs(c.coeff(0) - cplx(2.5, -1)) <= 1e-15);

    // e_1^0 maps to e_1^alpha (unit norm, single monomial)
    auto e1a = v_alpha_transform(basis_vector(b0, 1), 2.0);
    CHECK(e1a.space().weight == 2.0);
    CHECK(e1a.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(inner_product(e1a, basis_vector(SpaceParams::bergman(2.0), 1)) - cplx(1.0)) <= 1e-12);

    // unitarity on random vectors
    std::mt19937_64 rng(5);
    for (double alpha : {0.5, 3.0, 42.0}) {
        std::vector<cplx> a(6), b(6);
        for (auto& x : a) x = cplx(uniform(rng) - 0.5, uniform(rng) - 0.5);
        for (auto& x : b) x = cplx(uniform(rng) - 0.5, uniform(rng) - 0.5);
        CoefficientVector ua(b0, a), ub(b0, b);
        const cplx before = inner_product(ua, ub);
        const cplx after = inner_product(v_alpha_transform(ua, alpha), v_alpha_transform(ub, alpha));
        CHECK(std::abs(before - after) <= 1e-12 * std::abs(before));
    }

    CHECK_THROWS_AS(v_alpha_transform(CoefficientVector(SpaceParams::bergman(1.0), {1.0}), 2.0),
                    std::invalid_argument);
}

TEST_CASE("kernel evaluation") {
    CHECK(kernel_eval(SpaceParams::bergman(3.3), cplx(0.4, 0.1), 0.0) == cplx(1.0, 0.0));
    CHECK(kernel_eval(SpaceParams::fock(2.0), cplx(1.5, -2.0), 0.0) == cplx(1.0, 0.0));
    CHECK(kernel_eval(SpaceParams::bergman(0.0), 0.5, 0.5).real() ==
          doctest::Approx(16.0 / 9.0).epsilon(1e-14));
    CHECK_THROWS_AS(kernel_eval(SpaceParams::bergman(1e5), cplx(0.99, 0.0), cplx(0.99, 0.0)),
                    std::overflow_error);
    CHECK_THROWS_AS(kernel_eval(SpaceParams::bergman(0.0), cplx(1.0, 0.0), cplx(0.5, 0.0)),
                    std::domain_error);
}

TEST_CASE("reproducing property through truncated kernels") {
    std::mt19937_64 rng(21);
    // Bergman: |w| <= 0.9, geometric tail controls the truncation degree
    for (double alpha : {0.0, 2.5}) {
        const auto space = SpaceParams::bergman(alpha);
        std::vector<cplx> a(6);
        for (auto& x : a) x = cplx(uniform(rng) - 0.5, uniform(rng) - 0.5);
        CoefficientVector u(space, a);
        const cplx w = std::polar(0.9, 1.1);
        auto kw = kernel_coefficients(space, w, 400);
        CHECK(std::abs(inner_product(u, kw) - u.evaluate(w)) <= 1e-10);
    }
    // Fock: |w| <= 3 with matching truncation
    {
        const auto space = SpaceParams::fock(1.0);
        std::vector<cplx> a(5);
        for (auto& x : a) x = cplx(uniform(rng) - 0.5, uniform(rng) - 0.5);
        CoefficientVector u(space, a);
        const cplx w = std::polar(3.0, -0.4);
        auto kw = kernel_coefficients(space, w, 120);
        CHECK(std::abs(inner_product(u, kw) - u.evaluate(w)) <= 1e-10);
    }
}

TEST_CASE("rotation and evaluation") {
    const auto b0 = SpaceParams::bergman(0.0);
    CoefficientVector u(b0, {cplx(1, 0), cplx(0, 1), cplx(2, -1)});
    const double theta = 0.77;
    auto ut = rotate(u, theta);
    const cplx z(0.3, -0.2);
    CHECK(std::abs(ut.evaluate(z) - u.evaluate(std::polar(1.0, theta) * z)) <= 1e-14);
}

TEST_CASE("json round trip") {
    CoefficientVector u(SpaceParams::fock(2.5), {cplx(1.25, -0.5), cplx(0, 3)});
    auto text = to_json_string(u);
    auto v = coefficient_vector_from_json(text);
    CHECK(v.space().kind == SpaceKind::Fock);
    CHECK(v.space().weight == 2.5);
    REQUIRE(v.degree() == u.degree());
    for (int n = 0; n <= u.degree(); ++n) CHECK(v.coeff(n) == u.coeff(n));
}

}  // TEST_SUITE
