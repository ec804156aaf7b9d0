#pragma once

#include <complex>
#include <vector>

#include "berfock/geometry.hpp"
#include "berfock/spaces.hpp"
#include "berfock/stable.hpp"

namespace berfock {

// <U^alpha_{(e^{it}, w)} e_j^alpha, e_k^alpha> in log/phase form:
//   e^{i(1+alpha/2)t} e^{ijt} (1-|w|^2)^{1+alpha/2}
//     * sqrt(k! Gamma(j+alpha+2) / (j! Gamma(k+alpha+2)))
//     * sum_{l+m=k, l<=j} C(j,l) Gamma(m+j+2+alpha)/(m! Gamma(j+2+alpha)) (-w)^{j-l} conj(w)^m
// Every Gamma ratio stays in the log domain; the alternating sum is
// accumulated at a shifted exponent with compensation.
StableExponent u_matrix_element_log(double alpha, const GroupElement& g, int j, int k);
std::complex<double> u_matrix_element(double alpha, const GroupElement& g, int j, int k);

// The element at t = 0 with the (1-|w|^2)^{1+alpha/2} factor divided out: a
// polynomial in (w, conj w).  Integrands built from bare elements pair exactly
// with the (1-s)^alpha weights of disc_grid, so products never under/overflow.
std::complex<double> u_matrix_element_bare(double alpha, std::complex<double> w, int j, int k);

// <W^beta_z omega_j, omega_k> = e^{-beta|z|^2/2}
//     * sqrt(k!/beta^k) sqrt(beta^j/j!)
//     * sum_{l<=min(j,k)} C(j,l) (-z)^{j-l} (beta conj z)^{k-l} / (k-l)!
StableExponent w_matrix_element_log(double beta, std::complex<double> z, int j, int k);
std::complex<double> w_matrix_element(double beta, std::complex<double> z, int j, int k);

// Without the Gaussian factor e^{-beta|z|^2/2}; pairs with plane_grid weights.
std::complex<double> w_matrix_element_bare(double beta, std::complex<double> z, int j, int k);

// Row j of the bare element table with the Gamma-ratio coefficients
// precomputed once; evaluation per node is pure complex arithmetic.
class UBergmanRow {
  public:
    UBergmanRow(double alpha, int j, int max_k);
    int j() const { return j_; }
    int max_k() const { return max_k_; }
    // out[k] = bare element for k = 0..max_k
    void bare_row(std::complex<double> w, std::complex<double>* out) const;

  private:
    double alpha_;
    int j_, max_k_;
    std::vector<double> coeff_;  // (j+1) x (max_k+1), coeff_[l*(max_k+1)+k]
};

class WFockRow {
  public:
    WFockRow(double beta, int j, int max_k);
    int j() const { return j_; }
    int max_k() const { return max_k_; }
    void bare_row(std::complex<double> z, std::complex<double>* out) const;

  private:
    double beta_;
    int j_, max_k_;
    std::vector<double> coeff_;
};

struct UnitaryImage {
    CoefficientVector image;
    double captured_mass;       // ||truncated image||^2 / ||u||^2, in [0, 1]
    bool truncation_warning;    // captured_mass < 1 - 1e-6
};

// Degree-K truncation of U^alpha_g u (Bergman) / W^beta_z u (Fock).
UnitaryImage apply_unitary(const CoefficientVector& u, const GroupElement& g, int truncation);
UnitaryImage apply_weyl(const CoefficientVector& u, std::complex<double> z, int truncation);

// Truncation index at which sum_k |<W_z omega_j, omega_k>|^2 >= 1 - 1e-10.
int suggested_weyl_truncation(double beta, std::complex<double> z, int j);

}  // namespace berfock
