#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berfock/quadrature.hpp"
#include "berfock/spaces.hpp"

namespace berfock {

// A bounded real symbol on T x D or T x C, optionally wrapped by the scaling
// f_{r,sigma}(e^{i theta}, z) = (1-|z|^2)^sigma f(e^{i theta}, r z).
// Every form carries an explicit sup-norm bound.
class SymbolSpec {
  public:
    enum class Domain { Disc, Plane };
    enum class Form { Constant, DiscIndicator, RadialProfile, General };

    static SymbolSpec constant(Domain d, double c);
    static SymbolSpec disc_indicator(Domain d, double radius);
    static SymbolSpec radial_profile(Domain d, std::function<double(double)> profile,
                                     double sup_bound, std::string name);
    static SymbolSpec general(Domain d, std::function<double(double, std::complex<double>)> f,
                              double sup_bound, std::string name);

    // Wraps with (r, sigma); on the disc domain the r z argument is handed to
    // the unscaled form.
    SymbolSpec scaled(double r, double sigma) const;

    double eval(double theta, std::complex<double> z) const;

    Domain domain() const { return domain_; }
    Form form() const { return form_; }
    bool radial() const { return form_ != Form::General; }
    bool theta_dependent() const { return form_ == Form::General; }
    double sup_bound() const { return sup_bound_; }
    double indicator_radius() const;  // pre-scaling R; throws unless DiscIndicator
    double profile(double rho) const;  // pre-scaling radial value; throws on General
    double scale_r() const { return scale_r_; }
    double scale_sigma() const { return scale_sigma_; }
    bool has_scaling() const { return scale_r_ != 1.0 || scale_sigma_ != 0.0; }
    const std::string& name() const { return name_; }

  private:
    SymbolSpec() = default;
    Domain domain_ = Domain::Disc;
    Form form_ = Form::Constant;
    double constant_ = 0.0;
    double radius_ = 0.0;
    std::function<double(double)> profile_;
    std::function<double(double, std::complex<double>)> general_;
    double sup_bound_ = 0.0;
    double scale_r_ = 1.0;
    double scale_sigma_ = 0.0;
    std::string name_ = "constant";
};

// Provenance kept with every assembled matrix.
struct OperatorProvenance {
    std::string symbol;
    std::string window_phi;
    std::string window_psi;
    int grid_n_rad = 0;
    int grid_n_ang = 0;
    int theta_nodes = 0;
    int truncation = 0;
    double window_captured_mass = 1.0;  // worst captured-mass fraction over grid nodes
};

struct OperatorMatrix {
    SpaceParams space;
    Eigen::MatrixXcd entries;
    bool hermitian = false;
    OperatorProvenance provenance;

    double hermiticity_defect() const;
};

struct SpectralSummary {
    std::vector<double> eigenvalues;  // ascending; singular values when not Hermitian
    double op_norm = 0.0;
    double trace = 0.0;
    std::map<double, int> count_above;
    std::optional<double> trace_h;  // tr(A h(A)) when h was supplied
};

// entries[m][n] = int f(z) e_n(z) conj(e_m(z)) dmeasure(z) over the grid.
// Requires a theta-independent symbol and a grid matching the space.
OperatorMatrix toeplitz_matrix(const SpaceParams& space, const SymbolSpec& symbol, int n,
                               const QuadratureGrid& grid);

// Closed-form / 1D-quadrature diagonal for radial symbols.
//   Bergman: entry k = (a+1) G(k+a+2)/(k! G(a+2)) int_0^1 (1-x)^{a+sigma} x^k F(r sqrt(x)) dx,
//            with I_x(k+1, a+sigma+1) closed form for disc indicators.
//   Fock:    entry k = (1/k!) int_0^inf t^k e^{-t} F(sqrt(t/beta)) dt,
//            with P(k+1, beta R^2) closed form for disc indicators.
// The sigma of the symbol's scaling wrapper, if any, is absorbed analytically.
std::vector<double> radial_toeplitz_diagonal(const SpaceParams& space, const SymbolSpec& symbol,
                                             int n, int n_rad = 200);

// entries[m][n] = <L e_n, e_m> with
//   <L g, h> = c int dtheta/2pi int f(e^{i theta}, z) <g, U_z phi_theta> <U_z psi_theta, h>,
// c = (alpha+1) against dlambda (Bergman), beta/pi against dA (Fock), built from
// the closed-form matrix elements.  For theta-independent symbols theta_nodes
// may be 1: the theta-average is then performed by index selection.
OperatorMatrix localization_matrix(const SpaceParams& space, const SymbolSpec& symbol,
                                   const CoefficientVector& phi, const CoefficientVector& psi,
                                   int n, int theta_nodes, const QuadratureGrid& grid);

// Full Hermitian eigendecomposition (singular values otherwise), operator
// norm, trace, tr(A h(A)), and threshold counts #{lambda_i > delta}.
SpectralSummary spectral_summary(const OperatorMatrix& a,
                                 const std::function<double(double)>* h = nullptr,
                                 const std::vector<double>& thresholds = {});

std::string to_json_string(const OperatorMatrix& a);
// CSV with columns (index, eigenvalue)
std::string to_csv_string(const SpectralSummary& s);

}  // namespace berfock
