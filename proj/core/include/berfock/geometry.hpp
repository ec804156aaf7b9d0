#pragma once

#include <complex>

namespace berfock {

// Normalizes an angle into [0, 2*pi).
double normalize_angle(double angle);

// An element (e^{i theta}, a) of T x D, identified with the automorphism
// zeta |-> e^{i theta} (zeta - a) / (1 - conj(a) zeta) of the unit disc.
class GroupElement {
  public:
    GroupElement() : angle_(0.0), point_(0.0, 0.0) {}
    // Throws std::domain_error when |point| >= 1 - 1e-14: the group law's
    // denominators degenerate only at the boundary, which is never used.
    GroupElement(double angle, std::complex<double> point);

    static GroupElement identity() { return GroupElement(); }

    double angle() const { return angle_; }                       // in [0, 2*pi)
    std::complex<double> point() const { return point_; }         // |point| < 1
    std::complex<double> unit() const {                           // e^{i angle}
        return std::polar(1.0, angle_);
    }

  private:
    double angle_;
    std::complex<double> point_;
};

// Group law of T x D: the element whose map is phi_g o phi_h on D.
GroupElement compose(const GroupElement& g, const GroupElement& h);

// (e^{i theta}, a)^{-1} = (e^{-i theta}, -e^{i theta} a).
GroupElement inverse(const GroupElement& g);

// e^{i theta} (zeta - a)/(1 - conj(a) zeta) for |zeta| <= 1.
std::complex<double> mobius_eval(const GroupElement& g, std::complex<double> zeta);

}  // namespace berfock
