#include "berfock/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace berfock {

namespace {

// Golub-Welsch nodes from the monic three-term recurrence
// p_{k+1} = (x - a_k) p_k - b_k p_{k-1}, with mu0 the weight's mass.
// Weights come from the Christoffel identity w_i = 1 / sum_k ptilde_k(x_i)^2
// (orthonormal polynomials): the tridiagonal eigenvectors only carry absolute
// accuracy, which destroys the tiny extreme-node weights of Laguerre rules.
Rule1D golub_welsch(const std::vector<double>& a, const std::vector<double>& b, double mu0) {
    const int n = int(a.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(a.data(), n);
    Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) {
        if (!(b[size_t(k)] > 0.0)) throw std::runtime_error("golub_welsch: recurrence not positive definite");
        sub[k - 1] = std::sqrt(b[size_t(k)]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("golub_welsch: eigensolver failed");
    Rule1D rule;
    rule.nodes.resize(size_t(n));
    rule.weights.resize(size_t(n));
    for (int i = 0; i < n; ++i) {
        const double x = es.eigenvalues()[i];
        rule.nodes[size_t(i)] = x;
        // ptilde_0 = 1/sqrt(mu0), ptilde_{k+1} = ((x - a_k) ptilde_k - sqrt(b_k) ptilde_{k-1}) / sqrt(b_{k+1})
        double pm = 0.0, pk = 1.0 / std::sqrt(mu0);
        double sum = pk * pk;
        for (int k = 0; k + 1 < n; ++k) {
            const double pn = ((x - a[size_t(k)]) * pk - (k > 0 ? std::sqrt(b[size_t(k)]) * pm : 0.0)) /
                              std::sqrt(b[size_t(k + 1)]);
            pm = pk;
            pk = pn;
            sum += pk * pk;
        }
        rule.weights[size_t(i)] = 1.0 / sum;
    }
    return rule;
}

void append_polar(QuadratureGrid& grid, const std::vector<double>& radii,
                  const std::vector<double>& radial_weights, int n_ang) {
    for (size_t i = 0; i < radii.size(); ++i) {
        for (int q = 0; q < n_ang; ++q) {
            const double theta = 2.0 * M_PI * double(q) / double(n_ang);
            grid.nodes.push_back(std::polar(radii[i], theta));
            grid.weights.push_back(radial_weights[i] / double(n_ang));
        }
    }
}

void check_orders(int n_rad, int n_ang) {
    if (n_rad < 1 || n_ang < 1) throw std::domain_error("quadrature: orders must be >= 1");
}

}  // namespace

Rule1D gauss_jacobi01(int n, double alpha) {
    if (n < 1) throw std::domain_error("gauss_jacobi01: n >= 1 required");
    if (!(alpha > -1.0)) throw std::domain_error("gauss_jacobi01: alpha > -1 required");
    // Jacobi weight (1-x)^alpha (1+x)^0 on [-1,1], shifted to [0,1]:
    // monic recurrence coefficients halved/quartered by the affine map.
    const size_t nn = size_t(n);
    std::vector<double> a(nn), b(nn, 0.0);
    a[0] = 0.5 * (1.0 - alpha / (alpha + 2.0));
    for (int k = 1; k < n; ++k) {
        const double kk = double(k);
        const double den = (2.0 * kk + alpha) * (2.0 * kk + alpha + 2.0);
        a[size_t(k)] = 0.5 * (1.0 - alpha * alpha / den);
        double bk;
        if (k == 1) {
            bk = 4.0 * (alpha + 1.0) / ((alpha + 2.0) * (alpha + 2.0) * (alpha + 3.0));
        } else {
            const double t = 2.0 * kk + alpha;
            bk = 4.0 * kk * kk * (kk + alpha) * (kk + alpha) / (t * t * (t + 1.0) * (t - 1.0));
        }
        b[size_t(k)] = bk / 4.0;
    }
    return golub_welsch(a, b, 1.0 / (alpha + 1.0));
}

Rule1D gauss_laguerre(int n) {
    if (n < 1) throw std::domain_error("gauss_laguerre: n >= 1 required");
    const size_t nn = size_t(n);
    std::vector<double> a(nn), b(nn, 0.0);
    for (int k = 0; k < n; ++k) {
        a[size_t(k)] = 2.0 * k + 1.0;
        if (k >= 1) b[size_t(k)] = double(k) * double(k);
    }
    return golub_welsch(a, b, 1.0);
}

Rule1D gauss_legendre01(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre01: n >= 1 required");
    const size_t nn = size_t(n);
    std::vector<double> a(nn, 0.5), b(nn, 0.0);
    for (int k = 1; k < n; ++k) {
        const double kk = double(k);
        b[size_t(k)] = kk * kk / (4.0 * kk * kk - 1.0) / 4.0;
    }
    return golub_welsch(a, b, 1.0);
}

double QuadratureGrid::total_mass() const {
    double s = 0.0, c = 0.0;
    for (double w : weights) {
        double y = w - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

QuadratureGrid disc_grid(double alpha, int n_rad, int n_ang) {
    check_orders(n_rad, n_ang);
    Rule1D r = gauss_jacobi01(n_rad, alpha);
    QuadratureGrid grid{Measure::BergmanWeighted, alpha, {}, {}, n_rad, n_ang};
    std::vector<double> radii(r.nodes.size()), rw(r.nodes.size());
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        radii[i] = std::sqrt(r.nodes[i]);
        rw[i] = (alpha + 1.0) * r.weights[i];  // dA_alpha has unit mass
    }
    append_polar(grid, radii, rw, n_ang);
    return grid;
}

QuadratureGrid disc_grid_split(double alpha, double s_split, int n_rad, int n_ang) {
    check_orders(n_rad, n_ang);
    if (!(s_split > 0.0 && s_split < 1.0)) throw std::domain_error("disc_grid_split: s_split in (0,1) required");
    QuadratureGrid grid{Measure::BergmanWeighted, alpha, {}, {}, 2 * n_rad, n_ang};
    std::vector<double> radii, rw;
    // [0, s_split]: Legendre with (1-s)^alpha folded into the weights
    Rule1D leg = gauss_legendre01(n_rad);
    for (size_t i = 0; i < leg.nodes.size(); ++i) {
        const double s = s_split * leg.nodes[i];
        radii.push_back(std::sqrt(s));
        rw.push_back((alpha + 1.0) * s_split * leg.weights[i] * std::pow(1.0 - s, alpha));
    }
    // [s_split, 1]: the [0,1] Jacobi rule scales by (1 - s_split)^{alpha+1}
    Rule1D jac = gauss_jacobi01(n_rad, alpha);
    const double scale = std::exp((alpha + 1.0) * std::log1p(-s_split));
    for (size_t i = 0; i < jac.nodes.size(); ++i) {
        const double s = s_split + (1.0 - s_split) * jac.nodes[i];
        radii.push_back(std::sqrt(s));
        rw.push_back((alpha + 1.0) * scale * jac.weights[i]);
    }
    append_polar(grid, radii, rw, n_ang);
    return grid;
}

QuadratureGrid plane_grid(double beta, int n_rad, int n_ang) {
    check_orders(n_rad, n_ang);
    if (!(beta > 0.0)) throw std::domain_error("plane_grid: beta > 0 required");
    Rule1D r = gauss_laguerre(n_rad);
    QuadratureGrid grid{Measure::Fock, beta, {}, {}, n_rad, n_ang};
    std::vector<double> radii(r.nodes.size());
    for (size_t i = 0; i < r.nodes.size(); ++i) radii[i] = std::sqrt(r.nodes[i] / beta);
    append_polar(grid, radii, r.weights, n_ang);
    return grid;
}

QuadratureGrid plane_grid_split(double beta, double t_split, int n_rad, int n_ang) {
    check_orders(n_rad, n_ang);
    if (!(beta > 0.0)) throw std::domain_error("plane_grid_split: beta > 0 required");
    if (!(t_split > 0.0)) throw std::domain_error("plane_grid_split: t_split > 0 required");
    QuadratureGrid grid{Measure::Fock, beta, {}, {}, 2 * n_rad, n_ang};
    std::vector<double> radii, rw;
    // [0, t_split]: Legendre with e^{-t} folded in
    Rule1D leg = gauss_legendre01(n_rad);
    for (size_t i = 0; i < leg.nodes.size(); ++i) {
        const double t = t_split * leg.nodes[i];
        radii.push_back(std::sqrt(t / beta));
        rw.push_back(t_split * leg.weights[i] * std::exp(-t));
    }
    // [t_split, inf): shifted Laguerre scaled by e^{-t_split}
    Rule1D lag = gauss_laguerre(n_rad);
    const double scale = std::exp(-t_split);
    for (size_t i = 0; i < lag.nodes.size(); ++i) {
        const double t = t_split + lag.nodes[i];
        radii.push_back(std::sqrt(t / beta));
        rw.push_back(scale * lag.weights[i]);
    }
    append_polar(grid, radii, rw, n_ang);
    return grid;
}

namespace {

QuadratureGrid unweight_to_mobius(QuadratureGrid grid, double alpha_ref) {
    grid.measure = Measure::MobiusInvariant;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const double s = std::norm(grid.nodes[i]);
        grid.weights[i] /= (alpha_ref + 1.0) * std::exp((2.0 + alpha_ref) * std::log1p(-s));
    }
    return grid;
}

}  // namespace

QuadratureGrid mobius_grid(double alpha_ref, int n_rad, int n_ang) {
    return unweight_to_mobius(disc_grid(alpha_ref, n_rad, n_ang), alpha_ref);
}

QuadratureGrid mobius_grid_split(double alpha_ref, double s_split, int n_rad, int n_ang) {
    return unweight_to_mobius(disc_grid_split(alpha_ref, s_split, n_rad, n_ang), alpha_ref);
}

std::complex<double> integrate(const QuadratureGrid& grid,
                               const std::function<std::complex<double>(std::complex<double>)>& f) {
    double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const std::complex<double> v = f(grid.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::runtime_error("integrate: non-finite integrand value at a node");
        }
        const double xr = grid.weights[i] * v.real();
        double y = xr - cr;
        double t = sr + y;
        cr = (t - sr) - y;
        sr = t;
        const double xi = grid.weights[i] * v.imag();
        y = xi - ci;
        t = si + y;
        ci = (t - si) - y;
        si = t;
    }
    return {sr, si};
}

double integrate_real(const QuadratureGrid& grid, const std::function<double(std::complex<double>)>& f) {
    double s = 0.0, c = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const double v = f(grid.nodes[i]);
        if (!std::isfinite(v)) throw std::runtime_error("integrate_real: non-finite integrand value at a node");
        const double x = grid.weights[i] * v;
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

std::string to_json_string(const QuadratureGrid& grid) {
    nlohmann::json j;
    switch (grid.measure) {
        case Measure::BergmanWeighted: j["measure"] = "bergman_weighted"; break;
        case Measure::Fock: j["measure"] = "fock"; break;
        case Measure::MobiusInvariant: j["measure"] = "mobius_invariant"; break;
        case Measure::PlaneLebesgue: j["measure"] = "plane_lebesgue"; break;
    }
    j["weight_param"] = grid.weight_param;
    j["orders"] = {grid.n_rad, grid.n_ang};
    auto nodes = nlohmann::json::array();
    for (auto z : grid.nodes) nodes.push_back({z.real(), z.imag()});
    j["nodes"] = std::move(nodes);
    j["weights"] = grid.weights;
    return j.dump();
}

}  // namespace berfock
