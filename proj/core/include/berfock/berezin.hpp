#pragma once

#include <complex>
#include <vector>

#include "berfock/operators.hpp"
#include "berfock/quadrature.hpp"
#include "berfock/spaces.hpp"

namespace berfock {

struct BerezinOptions {
    int inner_n_rad = 80;   // radial order of the d lambda quadrature over w
    int inner_n_ang = 48;   // angular order
    int t_nodes = 32;       // t-grid, used only for theta-dependent symbols
    int eval_n_rad = 60;    // outer L^p grid over the disc
    int eval_n_ang = 8;
    int eval_n_theta = 1;   // outer theta-average nodes
    double eval_alpha_ref = 2.0;  // reference weight realizing the d lambda eval rule
};

// Windowed Berezin transform B^psi_alpha on T x D.  The double integral is
// reduced through the group law before any quadrature: for theta-independent
// symbols the t-integral collapses by index selection, leaving
//   B f(theta, z) = (alpha+1) int f(phi_{-z}(-w))
//                     sum_k |psi_k|^2 |sum_j psi_j e^{ij theta} U_{jk}(w)|^2 dlambda(w),
// which the dA_alpha grid integrates with the boundary weights paired exactly.
class BerezinEvaluator {
  public:
    // window: unit vector in A^2_alpha (|| ||psi|| - 1 || <= 1e-10 enforced)
    BerezinEvaluator(double alpha, const CoefficientVector& window, BerezinOptions opts = {});

    double alpha() const { return alpha_; }

    double eval(const SymbolSpec& f, double theta, std::complex<double> z) const;

    // || B f - f ||_{L^p(T x D, dH)} estimate; p = inf is the grid max.
    double lp_distance(const SymbolSpec& f, double p) const;

    // int B f dH over the outer grid (mass-preservation checks, f >= 0).
    double mass(const SymbolSpec& f) const;

  private:
    std::vector<double> kernel_for_theta(const SymbolSpec& f, double theta) const;
    double eval_with_kernel(const SymbolSpec& f, double theta, std::complex<double> z,
                            const std::vector<double>& kernel, const QuadratureGrid& grid) const;
    const QuadratureGrid& inner_grid_for(const SymbolSpec& f, std::complex<double> z) const;

    double alpha_;
    CoefficientVector window_;
    BerezinOptions opts_;
    std::vector<std::complex<double>> psi_onb_;
    QuadratureGrid inner_;  // dA_alpha rule over w
    // split rule used for indicator symbols at z = 0, built on first use
    mutable QuadratureGrid inner_split_;
    mutable double split_at_ = -1.0;
    // bare U_{jk}(w_i), j, k <= window degree, per inner node (regular and split)
    std::vector<std::vector<std::complex<double>>> ujk_;
    mutable std::vector<std::vector<std::complex<double>>> ujk_split_;
};

// One-shot helpers mirroring the evaluator.
double windowed_berezin_eval(double alpha, const CoefficientVector& window, const SymbolSpec& f,
                             double theta, std::complex<double> z, const BerezinOptions& opts = {});
double berezin_lp_distance(double alpha, const CoefficientVector& window, const SymbolSpec& f,
                           double p, const BerezinOptions& opts = {});

}  // namespace berfock
