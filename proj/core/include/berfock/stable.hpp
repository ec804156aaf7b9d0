#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace berfock {

// Wraps phase into (-pi, pi].
inline double wrap_phase(double phase) {
    if (!std::isfinite(phase)) throw std::domain_error("wrap_phase: non-finite phase");
    double p = std::remainder(phase, 2.0 * M_PI);  // (-pi, pi], up to the -pi endpoint
    if (p <= -M_PI) p += 2.0 * M_PI;
    return p;
}

// A complex number kept as exp(log_magnitude) * e^{i phase}.  Keeps Gamma-ratio
// prefactors representable when exp() would under/overflow a double
// (weights like (1-|w|^2)^{1+alpha/2} with alpha up to ~1e5).
struct StableExponent {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    double phase = 0.0;  // in (-pi, pi]

    StableExponent() = default;
    StableExponent(double log_mag, double ph) : log_magnitude(log_mag), phase(wrap_phase(ph)) {}

    static StableExponent zero() { return StableExponent(); }

    static StableExponent from_complex(std::complex<double> v) {
        if (v == 0.0) return zero();
        return StableExponent(std::log(std::abs(v)), std::arg(v));
    }

    bool is_zero() const { return log_magnitude == -std::numeric_limits<double>::infinity(); }

    // Overflow threshold just under log(DBL_MAX); underflow rounds to zero.
    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        if (log_magnitude > 709.0) throw std::overflow_error("StableExponent: magnitude overflows double");
        double mag = std::exp(log_magnitude);
        return std::polar(mag, phase);
    }

    StableExponent& operator*=(const StableExponent& o) {
        if (is_zero() || o.is_zero()) {
            *this = zero();
            return *this;
        }
        log_magnitude += o.log_magnitude;
        phase = wrap_phase(phase + o.phase);
        return *this;
    }
    friend StableExponent operator*(StableExponent a, const StableExponent& b) { return a *= b; }
};

}  // namespace berfock
