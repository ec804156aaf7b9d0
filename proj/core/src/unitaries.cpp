#include "berfock/unitaries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "berfock/special.hpp"

namespace berfock {

using special::log_binomial;
using special::log_gamma;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Sums terms given as (log magnitude, phase) at a shifted exponent with Kahan
// compensation; alternating signs are the whole point of the shift.
StableExponent sum_log_terms(const std::vector<std::pair<double, double>>& terms) {
    double peak = kNegInf;
    for (const auto& t : terms) peak = std::max(peak, t.first);
    if (peak == kNegInf) return StableExponent::zero();
    double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
    for (const auto& t : terms) {
        const double mag = std::exp(t.first - peak);
        const double xr = mag * std::cos(t.second);
        const double xi = mag * std::sin(t.second);
        double y = xr - cr, u = sr + y;
        cr = (u - sr) - y;
        sr = u;
        y = xi - ci;
        u = si + y;
        ci = (u - si) - y;
        si = u;
    }
    const std::complex<double> s(sr, si);
    if (s == 0.0) return StableExponent::zero();
    return StableExponent(peak + std::log(std::abs(s)), std::arg(s));
}

void check_indices(int j, int k) {
    if (j < 0 || k < 0) throw std::domain_error("matrix element: indices must be >= 0");
}

double log_u_norm_ratio(double alpha, int j, int k) {
    return 0.5 * (log_gamma(double(k) + 1.0) + log_gamma(double(j) + alpha + 2.0) -
                  log_gamma(double(j) + 1.0) - log_gamma(double(k) + alpha + 2.0));
}

// log[ Gamma(m+j+2+alpha) / (m! Gamma(j+2+alpha)) ]
double log_u_gamma_ratio(double alpha, int j, int m) {
    return log_gamma(double(m + j) + 2.0 + alpha) - log_gamma(double(m) + 1.0) -
           log_gamma(double(j) + 2.0 + alpha);
}

}  // namespace

StableExponent u_matrix_element_log(double alpha, const GroupElement& g, int j, int k) {
    check_indices(j, k);
    if (!(alpha > -1.0)) throw std::domain_error("u_matrix_element: alpha > -1 required");
    const std::complex<double> w = g.point();
    const double t = g.angle();
    const double phase_t = (1.0 + 0.5 * alpha) * t + double(j) * t;

    if (w == 0.0) {
        if (j != k) return StableExponent::zero();
        return StableExponent(0.0, phase_t);
    }

    const double log_abs_w = std::log(std::abs(w));
    const double arg_neg_w = std::arg(-w);
    const double arg_wbar = -std::arg(w);

    std::vector<std::pair<double, double>> terms;
    terms.reserve(size_t(std::min(j, k)) + 1);
    for (int l = 0; l <= std::min(j, k); ++l) {
        const int m = k - l;
        const double lm = log_binomial(j, l) + log_u_gamma_ratio(alpha, j, m) +
                          double(j - l + m) * log_abs_w;
        const double ph = double(j - l) * arg_neg_w + double(m) * arg_wbar;
        terms.emplace_back(lm, ph);
    }
    StableExponent s = sum_log_terms(terms);
    if (s.is_zero()) return s;
    const double log_pref = (1.0 + 0.5 * alpha) * std::log1p(-std::norm(w)) + log_u_norm_ratio(alpha, j, k);
    return StableExponent(s.log_magnitude + log_pref, s.phase + phase_t);
}

std::complex<double> u_matrix_element(double alpha, const GroupElement& g, int j, int k) {
    return u_matrix_element_log(alpha, g, j, k).value();
}

std::complex<double> u_matrix_element_bare(double alpha, std::complex<double> w, int j, int k) {
    check_indices(j, k);
    if (w == 0.0) return j == k ? 1.0 : 0.0;
    std::complex<double> s = 0.0;
    for (int l = 0; l <= std::min(j, k); ++l) {
        const int m = k - l;
        const double c = std::exp(log_binomial(j, l) + log_u_gamma_ratio(alpha, j, m) +
                                  log_u_norm_ratio(alpha, j, k));
        s += c * std::pow(-w, j - l) * std::pow(std::conj(w), m);
    }
    return s;
}

StableExponent w_matrix_element_log(double beta, std::complex<double> z, int j, int k) {
    check_indices(j, k);
    if (!(beta > 0.0)) throw std::domain_error("w_matrix_element: beta > 0 required");
    if (z == 0.0) return j == k ? StableExponent(0.0, 0.0) : StableExponent::zero();

    const double log_beta = std::log(beta);
    const double log_abs_z = std::log(std::abs(z));
    const double arg_neg_z = std::arg(-z);
    const double arg_zbar = -std::arg(z);

    std::vector<std::pair<double, double>> terms;
    terms.reserve(size_t(std::min(j, k)) + 1);
    for (int l = 0; l <= std::min(j, k); ++l) {
        const int m = k - l;  // power of beta conj(z)
        const double lm = log_binomial(j, l) + double(m) * log_beta - log_gamma(double(m) + 1.0) +
                          double(j - l + m) * log_abs_z;
        const double ph = double(j - l) * arg_neg_z + double(m) * arg_zbar;
        terms.emplace_back(lm, ph);
    }
    StableExponent s = sum_log_terms(terms);
    if (s.is_zero()) return s;
    const double log_pref = -0.5 * beta * std::norm(z) +
                            0.5 * (log_gamma(double(k) + 1.0) - double(k) * log_beta) +
                            0.5 * (double(j) * log_beta - log_gamma(double(j) + 1.0));
    return StableExponent(s.log_magnitude + log_pref, s.phase);
}

std::complex<double> w_matrix_element(double beta, std::complex<double> z, int j, int k) {
    return w_matrix_element_log(beta, z, j, k).value();
}

std::complex<double> w_matrix_element_bare(double beta, std::complex<double> z, int j, int k) {
    check_indices(j, k);
    if (z == 0.0) return j == k ? 1.0 : 0.0;
    const double log_beta = std::log(beta);
    const double log_norm = 0.5 * (log_gamma(double(k) + 1.0) - double(k) * log_beta +
                                   double(j) * log_beta - log_gamma(double(j) + 1.0));
    std::complex<double> s = 0.0;
    for (int l = 0; l <= std::min(j, k); ++l) {
        const int m = k - l;
        const double c = std::exp(log_norm + log_binomial(j, l) + double(m) * log_beta -
                                  log_gamma(double(m) + 1.0));
        s += c * std::pow(-z, j - l) * std::pow(std::conj(z), m);
    }
    return s;
}

UBergmanRow::UBergmanRow(double alpha, int j, int max_k) : alpha_(alpha), j_(j), max_k_(max_k) {
    if (j < 0 || max_k < 0) throw std::domain_error("UBergmanRow: indices must be >= 0");
    coeff_.assign(size_t(j + 1) * size_t(max_k + 1), 0.0);
    for (int l = 0; l <= j; ++l) {
        for (int k = l; k <= max_k; ++k) {
            const double lc = log_binomial(j, l) + log_u_gamma_ratio(alpha, j, k - l) +
                              log_u_norm_ratio(alpha, j, k);
            if (lc > 700.0) {
                throw std::overflow_error(
                    "UBergmanRow: bare coefficients overflow at this weight/truncation; "
                    "use the radial fast path");
            }
            coeff_[size_t(l) * size_t(max_k + 1) + size_t(k)] = std::exp(lc);
        }
    }
}

void UBergmanRow::bare_row(std::complex<double> w, std::complex<double>* out) const {
    std::vector<std::complex<double>> neg_w_pow(size_t(j_) + 1, 0.0);
    neg_w_pow[0] = 1.0;
    for (int p = 1; p <= j_; ++p) neg_w_pow[size_t(p)] = neg_w_pow[size_t(p - 1)] * (-w);
    const std::complex<double> wbar = std::conj(w);
    // conj(w)^m built incrementally along each diagonal l
    for (int k = 0; k <= max_k_; ++k) out[k] = 0.0;
    for (int l = 0; l <= j_; ++l) {
        std::complex<double> wbar_m = 1.0;
        const double* row = coeff_.data() + size_t(l) * size_t(max_k_ + 1);
        for (int k = l; k <= max_k_; ++k) {
            out[k] += row[k] * neg_w_pow[size_t(j_ - l)] * wbar_m;
            wbar_m *= wbar;
        }
    }
}

WFockRow::WFockRow(double beta, int j, int max_k) : beta_(beta), j_(j), max_k_(max_k) {
    if (j < 0 || max_k < 0) throw std::domain_error("WFockRow: indices must be >= 0");
    if (!(beta > 0.0)) throw std::domain_error("WFockRow: beta > 0 required");
    const double log_beta = std::log(beta);
    coeff_.assign(size_t(j + 1) * size_t(max_k + 1), 0.0);
    for (int l = 0; l <= j; ++l) {
        for (int k = l; k <= max_k; ++k) {
            const int m = k - l;
            const double lc = 0.5 * (log_gamma(double(k) + 1.0) - double(k) * log_beta +
                                     double(j) * log_beta - log_gamma(double(j) + 1.0)) +
                              log_binomial(j, l) + double(m) * log_beta - log_gamma(double(m) + 1.0);
            if (lc > 700.0) {
                throw std::overflow_error("WFockRow: bare coefficients overflow at this truncation");
            }
            coeff_[size_t(l) * size_t(max_k + 1) + size_t(k)] = std::exp(lc);
        }
    }
}

void WFockRow::bare_row(std::complex<double> z, std::complex<double>* out) const {
    std::vector<std::complex<double>> neg_z_pow(size_t(j_) + 1, 0.0);
    neg_z_pow[0] = 1.0;
    for (int p = 1; p <= j_; ++p) neg_z_pow[size_t(p)] = neg_z_pow[size_t(p - 1)] * (-z);
    const std::complex<double> zbar = std::conj(z);
    for (int k = 0; k <= max_k_; ++k) out[k] = 0.0;
    for (int l = 0; l <= j_; ++l) {
        std::complex<double> zbar_m = 1.0;
        const double* row = coeff_.data() + size_t(l) * size_t(max_k_ + 1);
        for (int k = l; k <= max_k_; ++k) {
            out[k] += row[k] * neg_z_pow[size_t(j_ - l)] * zbar_m;
            zbar_m *= zbar;
        }
    }
}

namespace {

UnitaryImage assemble_image(const CoefficientVector& u, int truncation,
                            const std::function<StableExponent(int j, int k)>& element) {
    if (truncation < u.degree()) {
        throw std::domain_error("apply_unitary: truncation must be >= deg(u)");
    }
    const auto& space = u.space();
    std::vector<std::complex<double>> onb(size_t(truncation) + 1, 0.0);
    for (int k = 0; k <= truncation; ++k) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j <= u.degree(); ++j) {
            const std::complex<double> cj = u.onb_coeff(j);
            if (cj == 0.0) continue;
            StableExponent e = element(j, k);
            if (e.is_zero()) continue;
            if (e.log_magnitude < -745.0) continue;  // underflow: true value below double range
            acc += cj * e.value();
        }
        onb[size_t(k)] = acc;
    }
    double mass = 0.0;
    std::vector<std::complex<double>> taylor(size_t(truncation) + 1, 0.0);
    for (int k = 0; k <= truncation; ++k) {
        mass += std::norm(onb[size_t(k)]);
        taylor[size_t(k)] = onb[size_t(k)] * std::exp(log_basis_coeff(space, k));
    }
    const double nsq = u.norm_sq();
    const double captured = nsq > 0.0 ? mass / nsq : 1.0;
    return UnitaryImage{CoefficientVector(space, std::move(taylor)), captured, captured < 1.0 - 1e-6};
}

}  // namespace

UnitaryImage apply_unitary(const CoefficientVector& u, const GroupElement& g, int truncation) {
    if (u.space().kind != SpaceKind::Bergman) {
        throw std::invalid_argument("apply_unitary: Bergman-space vector required");
    }
    const double alpha = u.space().weight;
    return assemble_image(u, truncation,
                          [&](int j, int k) { return u_matrix_element_log(alpha, g, j, k); });
}

UnitaryImage apply_weyl(const CoefficientVector& u, std::complex<double> z, int truncation) {
    if (u.space().kind != SpaceKind::Fock) {
        throw std::invalid_argument("apply_weyl: Fock-space vector required");
    }
    const double beta = u.space().weight;
    return assemble_image(u, truncation,
                          [&](int j, int k) { return w_matrix_element_log(beta, z, j, k); });
}

int suggested_weyl_truncation(double beta, std::complex<double> z, int j) {
    const double mu = beta * std::norm(z);
    return int(std::ceil(mu + 40.0 * std::sqrt(mu + 1.0) + double(j) + 20.0));
}

}  // namespace berfock
