#pragma once

#include <complex>
#include <string>
#include <vector>

namespace berfock {

enum class SpaceKind { Bergman, Fock };

// Identifies A^2_alpha (alpha > -1) or F^2_beta (beta > 0).
struct SpaceParams {
    SpaceKind kind;
    double weight;

    SpaceParams(SpaceKind k, double w);
    static SpaceParams bergman(double alpha) { return SpaceParams(SpaceKind::Bergman, alpha); }
    static SpaceParams fock(double beta) { return SpaceParams(SpaceKind::Fock, beta); }

    bool operator==(const SpaceParams& o) const { return kind == o.kind && weight == o.weight; }
};

// log of ||z^n||^2 in the space's normalized measure:
//   Bergman: n! Gamma(alpha+2) / Gamma(n+alpha+2)
//   Fock:    n! / beta^n
double log_monomial_norm_sq(const SpaceParams& space, int n);
double monomial_norm_sq(const SpaceParams& space, int n);

// log of the coefficient b_n with e_n = b_n z^n an orthonormal basis vector.
double log_basis_coeff(const SpaceParams& space, int n);

// A finite monomial Taylor-coefficient sequence a_0..a_d in a fixed space.
class CoefficientVector {
  public:
    CoefficientVector(SpaceParams space, std::vector<std::complex<double>> coeffs);

    const SpaceParams& space() const { return space_; }
    int degree() const { return int(coeffs_.size()) - 1; }
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
    std::complex<double> coeff(int n) const {
        return (n >= 0 && n < int(coeffs_.size())) ? coeffs_[size_t(n)] : std::complex<double>(0.0);
    }
    // coefficient against the orthonormal basis vector e_n:  a_n / b_n
    std::complex<double> onb_coeff(int n) const;

    double norm_sq() const;
    std::complex<double> evaluate(std::complex<double> z) const;  // Horner

  private:
    SpaceParams space_;
    std::vector<std::complex<double>> coeffs_;
};

// e_n^alpha / omega_n^beta as a coefficient vector (single monomial, unit norm).
CoefficientVector basis_vector(const SpaceParams& space, int n);

// <u, v> = sum_n u_n conj(v_n) ||z^n||^2.  Throws on space mismatch.
std::complex<double> inner_product(const CoefficientVector& u, const CoefficientVector& v);

// The diagonal unitary V^alpha: A^2 -> A^2_alpha,
//   a_n |-> a_n / sqrt(n+1) * sqrt(Gamma(n+alpha+2) / (n! Gamma(alpha+2))).
// Requires u to live in Bergman alpha = 0; maps e_n^0 to e_n^alpha.
CoefficientVector v_alpha_transform(const CoefficientVector& u, double target_alpha);

// f(e^{i theta} z): multiplies coefficient n by e^{i n theta}.
CoefficientVector rotate(const CoefficientVector& u, double theta);

// Closed-form reproducing kernel K_w(z): (1 - z conj(w))^{-(2+alpha)} or
// e^{beta z conj(w)}.  Throws std::overflow_error past the double range.
std::complex<double> kernel_eval(const SpaceParams& space, std::complex<double> z,
                                 std::complex<double> w);

// Degree-`degree` truncation of K_w as a coefficient vector.  The Bergman tail
// is geometric in |z conj(w)|; the caller picks the degree for its tolerance.
CoefficientVector kernel_coefficients(const SpaceParams& space, std::complex<double> w, int degree);

// {"kind": "bergman"|"fock", "weight": w, "coeffs": [[re, im], ...]}
std::string to_json_string(const CoefficientVector& u);
CoefficientVector coefficient_vector_from_json(const std::string& text);

}  // namespace berfock
