#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace berfock {

enum class Measure { BergmanWeighted, Fock, MobiusInvariant, PlaneLebesgue };

// One-dimensional Gauss rule (nodes, positive weights).
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// sum w_i g(s_i) = int_0^1 g(s) (1-s)^alpha ds, exact for deg g <= 2n-1
Rule1D gauss_jacobi01(int n, double alpha);
// sum w_i g(t_i) = int_0^inf g(t) e^{-t} dt, exact for deg g <= 2n-1
Rule1D gauss_laguerre(int n);
// sum w_i g(s_i) = int_0^1 g(s) ds, exact for deg g <= 2n-1
Rule1D gauss_legendre01(int n);

// Product grid over a disc or the plane in polar form.  Radial rules absorb
// the measure's weight; angular nodes are the uniform trapezoid (exact on
// trigonometric polynomials of degree < n_ang).
struct QuadratureGrid {
    Measure measure;
    double weight_param = 0.0;  // alpha (Bergman / Mobius) or beta (Fock)
    std::vector<std::complex<double>> nodes;
    std::vector<double> weights;
    int n_rad = 0;
    int n_ang = 0;

    double total_mass() const;
};

// dA_alpha over the unit disc, radial variable s = |z|^2 with weight (1-s)^alpha.
QuadratureGrid disc_grid(double alpha, int n_rad, int n_ang);

// Same measure with the radial rule split at s = s_split; resolves radial
// jumps (disc indicators) to quadrature exactness on each side.
QuadratureGrid disc_grid_split(double alpha, double s_split, int n_rad, int n_ang);

// d mu_beta over the plane, radial variable t = beta |z|^2, Gauss-Laguerre.
QuadratureGrid plane_grid(double beta, int n_rad, int n_ang);
QuadratureGrid plane_grid_split(double beta, double t_split, int n_rad, int n_ang);

// d lambda = dA / (pi (1-|z|^2)^2), realized through the dA_{alpha_ref} rule by
// unweighting: w_i / ((alpha_ref + 1) (1 - |z_i|^2)^{2 + alpha_ref}).
QuadratureGrid mobius_grid(double alpha_ref, int n_rad, int n_ang);
QuadratureGrid mobius_grid_split(double alpha_ref, double s_split, int n_rad, int n_ang);

// Fixed-order compensated (Kahan) node sum.  Throws on non-finite integrand values.
std::complex<double> integrate(const QuadratureGrid& grid,
                               const std::function<std::complex<double>(std::complex<double>)>& f);
double integrate_real(const QuadratureGrid& grid,
                      const std::function<double(std::complex<double>)>& f);

std::string to_json_string(const QuadratureGrid& grid);

}  // namespace berfock
