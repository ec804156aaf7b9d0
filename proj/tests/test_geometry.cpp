#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "berfock/geometry.hpp"

using namespace berfock;
using cplx = std::complex<double>;

namespace {

double uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

GroupElement random_element(std::mt19937_64& rng, double max_radius = 0.95) {
    const double theta = 2.0 * M_PI * uniform(rng);
    const double r = max_radius * uniform(rng);
    const double phi = 2.0 * M_PI * uniform(rng);
    return GroupElement(theta, std::polar(r, phi));
}

double element_distance(const GroupElement& a, const GroupElement& b) {
    return std::abs(a.unit() - b.unit()) + std::abs(a.point() - b.point());
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("identity and inverse") {
    GroupElement id;
    GroupElement g(1.1, cplx(0.3, -0.2));
    CHECK(element_distance(compose(id, g), g) <= 1e-15);
    CHECK(element_distance(compose(g, id), g) <= 1e-15);
    CHECK(element_distance(compose(g, inverse(g)), id) <= 1e-12);
    CHECK(element_distance(compose(inverse(g), g), id) <= 1e-12);

    // (e^{i theta}, a)^{-1} = (e^{-i theta}, -e^{i theta} a)
    GroupElement h(M_PI / 3.0, cplx(0.4, 0.0));
    GroupElement hi = inverse(h);
    CHECK(hi.angle() == doctest::Approx(2.0 * M_PI - M_PI / 3.0));
    CHECK(std::abs(hi.point() - (-std::polar(1.0, M_PI / 3.0) * 0.4)) <= 1e-15);
    GroupElement rot(2.0, 0.0);
    CHECK(inverse(rot).angle() == doctest::Approx(2.0 * M_PI - 2.0));
    CHECK(std::abs(inverse(rot).point()) == 0.0);
}

TEST_CASE("mobius evaluation") {
    const cplx a(0.3, 0.45);
    GroupElement g(0.0, a);
    CHECK(std::abs(mobius_eval(g, a)) <= 1e-16);
    CHECK(std::abs(mobius_eval(g, 0.0) + a) <= 1e-16);
    GroupElement h(0.0, cplx(0.5, 0.0));
    CHECK(mobius_eval(h, 0.3).real() == doctest::Approx(-0.2 / 0.85).epsilon(1e-15));
    // |result| = 1 iff |zeta| = 1
    CHECK(std::abs(mobius_eval(g, std::polar(1.0, 0.7))) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(mobius_eval(g, std::polar(0.99, 0.7))) < 1.0);
}

TEST_CASE("composition matches pointwise composition") {
    GroupElement g(0.0, cplx(0.5, 0.0));
    GroupElement h(0.0, cplx(0.0, 0.3));
    GroupElement gh = compose(g, h);
    for (cplx zeta : {cplx(0.0, 0.0), cplx(0.2, 0.0), cplx(0.0, -0.4)}) {
        CHECK(std::abs(mobius_eval(gh, zeta) - mobius_eval(g, mobius_eval(h, zeta))) <= 1e-12);
    }
}

TEST_CASE("group axioms on seeded random triples") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        GroupElement g = random_element(rng);
        GroupElement h = random_element(rng);
        GroupElement k = random_element(rng);
        CHECK(element_distance(compose(compose(g, h), k), compose(g, compose(h, k))) <= 1e-12);
        CHECK(element_distance(compose(g, inverse(g)), GroupElement()) <= 1e-12);
        const cplx zeta = std::polar(0.8 * uniform(rng), 2.0 * M_PI * uniform(rng));
        CHECK(std::abs(mobius_eval(compose(g, h), zeta) - mobius_eval(g, mobius_eval(h, zeta))) <= 1e-12);
    }
}

TEST_CASE("rotation-translation involution identity") {
    // phi_{-z}(e^{-i theta} w)
    //   = -e^{-i theta} (1 + e^{i theta} z conj(w)) / (1 + conj(e^{i theta} z) w) phi_w(-e^{i theta} z)
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const cplx z = std::polar(0.9 * uniform(rng), 2.0 * M_PI * uniform(rng));
        const cplx w = std::polar(0.9 * uniform(rng), 2.0 * M_PI * uniform(rng));
        const double theta = 2.0 * M_PI * uniform(rng);
        const cplx rz = std::polar(1.0, theta) * z;
        const cplx lhs = mobius_eval(GroupElement(0.0, -z), std::polar(1.0, -theta) * w);
        const cplx rhs = -std::polar(1.0, -theta) * (1.0 + rz * std::conj(w)) /
                         (1.0 + std::conj(rz) * w) * mobius_eval(GroupElement(0.0, w), -rz);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("boundary points rejected") {
    CHECK_THROWS_AS(GroupElement(0.0, cplx(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(GroupElement(0.0, cplx(0.0, 1.0 - 1e-15)), std::domain_error);
    CHECK_NOTHROW(GroupElement(0.0, cplx(1.0 - 1e-13, 0.0)));
    CHECK(normalize_angle(-M_PI) == doctest::Approx(M_PI));
    CHECK(normalize_angle(4.0 * M_PI) == doctest::Approx(0.0));
}

}  // TEST_SUITE
