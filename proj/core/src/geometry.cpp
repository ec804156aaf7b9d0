#include "berfock/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace berfock {

double normalize_angle(double angle) {
    if (!std::isfinite(angle)) throw std::domain_error("normalize_angle: non-finite angle");
    double a = std::fmod(angle, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI) a = 0.0;  // fmod rounding at the seam
    return a;
}

GroupElement::GroupElement(double angle, std::complex<double> point)
    : angle_(normalize_angle(angle)), point_(point) {
    if (!(std::abs(point) < 1.0 - 1e-14)) {
        throw std::domain_error("GroupElement: |point| must be < 1 - 1e-14");
    }
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    // (e^{i theta}, a) . (e^{i eta}, b)
    //   = (e^{i(theta+eta)} (1 + e^{-i eta} a conj(b)) / (1 + e^{i eta} conj(a) b),
    //      phi_{-b}(e^{-i eta} a))
    // The unit factor is u/conj(u) with u = 1 + e^{-i eta} a conj(b), so the
    // composed angle is theta + eta + 2 arg(u);  |u| >= 1 - |a||b| > 0.
    const std::complex<double> a = g.point();
    const std::complex<double> b = h.point();
    const double theta = g.angle();
    const double eta = h.angle();

    const std::complex<double> rot_a = std::polar(1.0, -eta) * a;
    const std::complex<double> u = 1.0 + rot_a * std::conj(b);
    const double angle = theta + eta + 2.0 * std::arg(u);
    const std::complex<double> point = (rot_a + b) / (1.0 + std::conj(b) * rot_a);
    return GroupElement(angle, point);
}

GroupElement inverse(const GroupElement& g) {
    return GroupElement(-g.angle(), -g.unit() * g.point());
}

std::complex<double> mobius_eval(const GroupElement& g, std::complex<double> zeta) {
    const std::complex<double> a = g.point();
    return g.unit() * (zeta - a) / (1.0 - std::conj(a) * zeta);
}

}  // namespace berfock
