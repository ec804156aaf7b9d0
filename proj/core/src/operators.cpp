#include "berfock/operators.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "berfock/special.hpp"
#include "berfock/unitaries.hpp"

namespace berfock {

using special::log_gamma;
using special::reg_inc_beta;
using special::reg_inc_gamma_p;

// ---------------------------------------------------------------- SymbolSpec

SymbolSpec SymbolSpec::constant(Domain d, double c) {
    SymbolSpec s;
    s.domain_ = d;
    s.form_ = Form::Constant;
    s.constant_ = c;
    s.sup_bound_ = std::fabs(c);
    s.name_ = "constant(" + std::to_string(c) + ")";
    return s;
}

SymbolSpec SymbolSpec::disc_indicator(Domain d, double radius) {
    if (!(radius > 0.0)) throw std::domain_error("SymbolSpec: indicator radius must be > 0");
    if (d == Domain::Disc && radius >= 1.0) {
        throw std::domain_error("SymbolSpec: disc-domain indicator radius must be < 1");
    }
    SymbolSpec s;
    s.domain_ = d;
    s.form_ = Form::DiscIndicator;
    s.radius_ = radius;
    s.sup_bound_ = 1.0;
    s.name_ = "disc_indicator(" + std::to_string(radius) + ")";
    return s;
}

SymbolSpec SymbolSpec::radial_profile(Domain d, std::function<double(double)> profile,
                                      double sup_bound, std::string name) {
    if (!profile) throw std::invalid_argument("SymbolSpec: empty profile");
    if (!(sup_bound >= 0.0)) throw std::domain_error("SymbolSpec: sup bound must accompany the form");
    SymbolSpec s;
    s.domain_ = d;
    s.form_ = Form::RadialProfile;
    s.profile_ = std::move(profile);
    s.sup_bound_ = sup_bound;
    s.name_ = std::move(name);
    return s;
}

SymbolSpec SymbolSpec::general(Domain d, std::function<double(double, std::complex<double>)> f,
                               double sup_bound, std::string name) {
    if (!f) throw std::invalid_argument("SymbolSpec: empty symbol function");
    if (!(sup_bound >= 0.0)) throw std::domain_error("SymbolSpec: sup bound must accompany the form");
    SymbolSpec s;
    s.domain_ = d;
    s.form_ = Form::General;
    s.general_ = std::move(f);
    s.sup_bound_ = sup_bound;
    s.name_ = std::move(name);
    return s;
}

SymbolSpec SymbolSpec::scaled(double r, double sigma) const {
    if (!(r > 0.0) || !(sigma >= 0.0)) throw std::domain_error("SymbolSpec: scaling needs r > 0, sigma >= 0");
    SymbolSpec s = *this;
    s.domain_ = Domain::Disc;  // f_{r,sigma} lives on the disc
    s.scale_r_ = r * scale_r_;
    s.scale_sigma_ = sigma + scale_sigma_;
    s.name_ = name_ + "_scaled(r=" + std::to_string(r) + ",sigma=" + std::to_string(sigma) + ")";
    return s;
}

double SymbolSpec::profile(double rho) const {
    switch (form_) {
        case Form::Constant: return constant_;
        case Form::DiscIndicator: return rho < radius_ ? 1.0 : 0.0;
        case Form::RadialProfile: return profile_(rho);
        case Form::General: throw std::logic_error("SymbolSpec: general symbol is not radial");
    }
    return 0.0;
}

double SymbolSpec::eval(double theta, std::complex<double> z) const {
    const std::complex<double> arg = scale_r_ * z;
    double base;
    if (form_ == Form::General) {
        base = general_(theta, arg);
    } else {
        base = profile(std::abs(arg));
    }
    if (scale_sigma_ != 0.0) {
        const double s = std::norm(z);
        if (s >= 1.0) return 0.0;
        base *= std::exp(scale_sigma_ * std::log1p(-s));
    }
    return base;
}

double SymbolSpec::indicator_radius() const {
    if (form_ != Form::DiscIndicator) throw std::logic_error("SymbolSpec: not a disc indicator");
    return radius_;
}

// ------------------------------------------------------------ OperatorMatrix

double OperatorMatrix::hermiticity_defect() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

void require_grid_matches(const SpaceParams& space, const QuadratureGrid& grid, const char* who) {
    const bool ok =
        (space.kind == SpaceKind::Bergman && grid.measure == Measure::BergmanWeighted &&
         std::fabs(grid.weight_param - space.weight) <= 1e-12) ||
        (space.kind == SpaceKind::Fock && grid.measure == Measure::Fock &&
         std::fabs(grid.weight_param - space.weight) <= 1e-12);
    if (!ok) throw std::invalid_argument(std::string(who) + ": grid measure does not match the space");
}

void require_symbol_domain(const SpaceParams& space, const SymbolSpec& symbol, const char* who) {
    const auto want = space.kind == SpaceKind::Bergman ? SymbolSpec::Domain::Disc
                                                       : SymbolSpec::Domain::Plane;
    if (symbol.domain() != want) {
        throw std::invalid_argument(std::string(who) + ": symbol domain does not match the space");
    }
}

// e_n(z_i) for n = 0..N-1 at all grid nodes, by the norm-ratio recurrence.
Eigen::MatrixXcd basis_values(const SpaceParams& space, int n, const QuadratureGrid& grid) {
    const int m = int(grid.nodes.size());
    Eigen::MatrixXcd e(n, m);
    for (int i = 0; i < m; ++i) e(0, i) = 1.0;  // e_0 = omega_0 = 1
    for (int row = 1; row < n; ++row) {
        double ratio;
        if (space.kind == SpaceKind::Bergman) {
            ratio = std::sqrt((double(row) + space.weight + 1.0) / double(row));
        } else {
            ratio = std::sqrt(space.weight / double(row));
        }
        for (int i = 0; i < m; ++i) e(row, i) = e(row - 1, i) * grid.nodes[size_t(i)] * ratio;
    }
    return e;
}

}  // namespace

OperatorMatrix toeplitz_matrix(const SpaceParams& space, const SymbolSpec& symbol, int n,
                               const QuadratureGrid& grid) {
    if (n < 1) throw std::domain_error("toeplitz_matrix: N >= 1 required");
    require_grid_matches(space, grid, "toeplitz_matrix");
    require_symbol_domain(space, symbol, "toeplitz_matrix");
    if (symbol.theta_dependent()) {
        throw std::invalid_argument("toeplitz_matrix: Toeplitz symbols are theta-independent");
    }
    const int m = int(grid.nodes.size());
    Eigen::MatrixXcd e = basis_values(space, n, grid);
    Eigen::VectorXd wf(m);
    for (int i = 0; i < m; ++i) {
        wf(i) = grid.weights[size_t(i)] * symbol.eval(0.0, grid.nodes[size_t(i)]);
    }
    // A(m,n) = sum_i wf_i e_n(z_i) conj(e_m(z_i))
    Eigen::MatrixXcd b = e * wf.asDiagonal() * e.adjoint();
    OperatorMatrix out{space, b.transpose(), true,
                       OperatorProvenance{symbol.name(), "", "", grid.n_rad, grid.n_ang, 0, n, 1.0}};
    out.hermitian = out.hermiticity_defect() <= 1e-10;
    return out;
}

std::vector<double> radial_toeplitz_diagonal(const SpaceParams& space, const SymbolSpec& symbol,
                                             int n, int n_rad) {
    if (n < 1) throw std::domain_error("radial_toeplitz_diagonal: N >= 1 required");
    if (!symbol.radial()) {
        throw std::invalid_argument("radial_toeplitz_diagonal: symbol must be radial");
    }
    require_symbol_domain(space, symbol, "radial_toeplitz_diagonal");
    std::vector<double> diag(size_t(n), 0.0);

    if (space.kind == SpaceKind::Bergman) {
        const double a = space.weight;
        const double sigma = symbol.scale_sigma();
        const double r = symbol.scale_r();
        if (symbol.form() == SymbolSpec::Form::DiscIndicator) {
            // entry k = (a+1) G(k+a+2) G(a+s+1) / (G(a+2) G(k+a+s+2)) I_x(k+1, a+s+1)
            const double x0 = std::min(1.0, std::pow(symbol.indicator_radius() / r, 2.0));
            for (int k = 0; k < n; ++k) {
                const double lc = std::log(a + 1.0) + log_gamma(double(k) + a + 2.0) +
                                  log_gamma(a + sigma + 1.0) - log_gamma(a + 2.0) -
                                  log_gamma(double(k) + a + sigma + 2.0);
                diag[size_t(k)] = std::exp(lc) * reg_inc_beta(x0, double(k) + 1.0, a + sigma + 1.0);
            }
            return diag;
        }
        // 1D Gauss-Jacobi with the sigma weight absorbed into the rule
        Rule1D rule = gauss_jacobi01(n_rad, a + sigma);
        for (int k = 0; k < n; ++k) {
            const double lpre = std::log(a + 1.0) + log_gamma(double(k) + a + 2.0) -
                                log_gamma(double(k) + 1.0) - log_gamma(a + 2.0);
            double s = 0.0, c = 0.0;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                const double x = rule.nodes[i];
                const double term = std::exp(lpre + double(k) * std::log(x) + std::log(rule.weights[i])) *
                                    symbol.profile(r * std::sqrt(x));
                const double y = term - c;
                const double t = s + y;
                c = (t - s) - y;
                s = t;
            }
            diag[size_t(k)] = s;
        }
        return diag;
    }

    // Fock
    if (symbol.has_scaling()) {
        throw std::invalid_argument("radial_toeplitz_diagonal: (r, sigma) scaling is a disc-symbol wrapper");
    }
    const double beta = space.weight;
    if (symbol.form() == SymbolSpec::Form::DiscIndicator) {
        const double x = beta * symbol.indicator_radius() * symbol.indicator_radius();
        for (int k = 0; k < n; ++k) diag[size_t(k)] = reg_inc_gamma_p(double(k) + 1.0, x);
        return diag;
    }
    Rule1D rule = gauss_laguerre(std::max(n_rad, 2 * n + 20));
    for (int k = 0; k < n; ++k) {
        double s = 0.0, c = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t0 = rule.nodes[i];
            const double term = std::exp(double(k) * std::log(t0) - log_gamma(double(k) + 1.0) +
                                         std::log(rule.weights[i])) *
                                symbol.profile(std::sqrt(t0 / beta));
            const double y = term - c;
            const double t = s + y;
            c = (t - s) - y;
            s = t;
        }
        diag[size_t(k)] = s;
    }
    return diag;
}

OperatorMatrix localization_matrix(const SpaceParams& space, const SymbolSpec& symbol,
                                   const CoefficientVector& phi, const CoefficientVector& psi,
                                   int n, int theta_nodes, const QuadratureGrid& grid) {
    if (n < 1) throw std::domain_error("localization_matrix: N >= 1 required");
    if (theta_nodes < 1) throw std::domain_error("localization_matrix: theta_nodes >= 1 required");
    require_grid_matches(space, grid, "localization_matrix");
    require_symbol_domain(space, symbol, "localization_matrix");
    if (!(phi.space() == space) || !(psi.space() == space)) {
        throw std::invalid_argument("localization_matrix: window/space mismatch");
    }
    if (symbol.theta_dependent() && theta_nodes == 1) {
        throw std::invalid_argument(
            "localization_matrix: theta-dependent symbols need theta_nodes > 1");
    }
    const bool bergman = space.kind == SpaceKind::Bergman;
    const int dmax = std::max(phi.degree(), psi.degree());

    std::vector<std::complex<double>> phi_onb(size_t(dmax) + 1), psi_onb(size_t(dmax) + 1);
    for (int j = 0; j <= dmax; ++j) {
        phi_onb[size_t(j)] = phi.onb_coeff(j);
        psi_onb[size_t(j)] = psi.onb_coeff(j);
    }

    // one bare-element row per window degree, Gamma tables built once
    std::vector<UBergmanRow> urows;
    std::vector<WFockRow> wrows;
    for (int j = 0; j <= dmax; ++j) {
        if (bergman) {
            urows.emplace_back(space.weight, j, n - 1);
        } else {
            wrows.emplace_back(space.weight, j, n - 1);
        }
    }

    const double phi_norm_sq = phi.norm_sq();
    const bool theta_reduced = (theta_nodes == 1) && !symbol.theta_dependent();

    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    // element row j lives in column j (contiguous in Eigen's storage)
    Eigen::MatrixXcd rows(n, dmax + 1);
    Eigen::VectorXcd p(n), q(n);
    // symbol-weighted captured-mass fraction of the truncated window image;
    // the raw per-node worst is always ~0 wherever the grid approaches the
    // boundary, so the |f|-weighted average is what the assembly actually sees
    double mass_num = 0.0, mass_den = 0.0;

    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const std::complex<double> z = grid.nodes[i];
        const double wq = grid.weights[i];
        for (int j = 0; j <= dmax; ++j) {
            if (bergman) {
                urows[size_t(j)].bare_row(z, rows.col(j).data());
            } else {
                wrows[size_t(j)].bare_row(z, rows.col(j).data());
            }
        }
        // theta-averaged captured mass of the truncated window image:
        //   sum_j |phi_j|^2 sum_{k<N} |U_{jk}|^2 * (true/bare)^2 / ||phi||^2
        double true_factor_log = bergman ? (2.0 + space.weight) * std::log1p(-std::norm(z))
                                         : -space.weight * std::norm(z);
        double mass = 0.0;
        for (int j = 0; j <= dmax; ++j) {
            if (phi_onb[size_t(j)] == 0.0) continue;
            mass += std::norm(phi_onb[size_t(j)]) * rows.col(j).squaredNorm();
        }
        mass = std::min(mass * std::exp(true_factor_log) / phi_norm_sq, 1.0);
        double f_weight = 0.0;
        if (theta_reduced) {
            f_weight = std::fabs(symbol.eval(0.0, z));
        } else {
            for (int t = 0; t < theta_nodes; ++t) {
                f_weight = std::max(f_weight,
                                    std::fabs(symbol.eval(2.0 * M_PI * double(t) / double(theta_nodes), z)));
            }
        }
        mass_num += wq * f_weight * mass;
        mass_den += wq * f_weight;

        if (theta_reduced) {
            const double f = symbol.eval(0.0, z);
            if (!std::isfinite(f)) throw std::runtime_error("localization_matrix: non-finite symbol value");
            if (f == 0.0) continue;
            for (int j = 0; j <= dmax; ++j) {
                const std::complex<double> cj = std::conj(phi_onb[size_t(j)]) * psi_onb[size_t(j)];
                if (cj == 0.0) continue;
                a.noalias() += (wq * f * cj) * rows.col(j) * rows.col(j).adjoint();
            }
        } else {
            for (int t = 0; t < theta_nodes; ++t) {
                const double theta = 2.0 * M_PI * double(t) / double(theta_nodes);
                const double f = symbol.eval(theta, z);
                if (!std::isfinite(f)) throw std::runtime_error("localization_matrix: non-finite symbol value");
                if (f == 0.0) continue;
                p.setZero();
                q.setZero();
                for (int j = 0; j <= dmax; ++j) {
                    const std::complex<double> ph = std::polar(1.0, double(j) * theta);
                    if (phi_onb[size_t(j)] != 0.0) p += (phi_onb[size_t(j)] * ph) * rows.col(j);
                    if (psi_onb[size_t(j)] != 0.0) q += (psi_onb[size_t(j)] * ph) * rows.col(j);
                }
                // A(m,n) += w f conj(P_n) Q_m
                a.noalias() += (wq * f / double(theta_nodes)) * q * p.adjoint();
            }
        }
    }

    const double captured = mass_den > 0.0 ? mass_num / mass_den : 1.0;
    OperatorMatrix out{space, std::move(a), false,
                       OperatorProvenance{symbol.name(), to_json_string(phi), to_json_string(psi),
                                          grid.n_rad, grid.n_ang, theta_nodes, n, captured}};
    const bool same_window = phi.degree() == psi.degree() && phi.coeffs() == psi.coeffs();
    const bool zero_matrix = out.entries.isZero(0.0);  // f = 0 gives the zero matrix
    out.hermitian = (same_window || zero_matrix) && out.hermiticity_defect() <= 1e-10;
    return out;
}

SpectralSummary spectral_summary(const OperatorMatrix& a, const std::function<double(double)>* h,
                                 const std::vector<double>& thresholds) {
    SpectralSummary s;
    const int n = int(a.entries.rows());
    if (a.hermitian) {
        Eigen::MatrixXcd sym = 0.5 * (a.entries + a.entries.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
        if (es.info() != Eigen::Success) {
            throw std::runtime_error("spectral_summary: eigensolver failed on symbol " +
                                     a.provenance.symbol);
        }
        s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    } else {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(a.entries);
        if (svd.info() != Eigen::Success) {
            throw std::runtime_error("spectral_summary: SVD failed on symbol " + a.provenance.symbol);
        }
        s.eigenvalues.assign(svd.singularValues().data(), svd.singularValues().data() + n);
        std::reverse(s.eigenvalues.begin(), s.eigenvalues.end());  // ascending
    }
    s.op_norm = 0.0;
    double tr = 0.0;
    for (double lam : s.eigenvalues) {
        s.op_norm = std::max(s.op_norm, std::fabs(lam));
        tr += lam;
    }
    s.trace = a.hermitian ? tr : a.entries.trace().real();
    for (double delta : thresholds) {
        int count = 0;
        for (double lam : s.eigenvalues) {
            if (lam > delta) ++count;
        }
        s.count_above[delta] = count;
    }
    if (h != nullptr) {
        double th = 0.0;
        for (double lam : s.eigenvalues) th += lam * (*h)(lam);
        s.trace_h = th;
    }
    return s;
}

std::string to_json_string(const OperatorMatrix& a) {
    nlohmann::json j;
    j["space"]["kind"] = a.space.kind == SpaceKind::Bergman ? "bergman" : "fock";
    j["space"]["weight"] = a.space.weight;
    j["n"] = a.entries.rows();
    j["hermitian"] = a.hermitian;
    auto rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < a.entries.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < a.entries.cols(); ++c) {
            row.push_back({a.entries(r, c).real(), a.entries(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    auto& p = j["provenance"];
    p["symbol"] = a.provenance.symbol;
    if (!a.provenance.window_phi.empty()) p["window_phi"] = nlohmann::json::parse(a.provenance.window_phi);
    if (!a.provenance.window_psi.empty()) p["window_psi"] = nlohmann::json::parse(a.provenance.window_psi);
    p["grid_orders"] = {a.provenance.grid_n_rad, a.provenance.grid_n_ang};
    p["theta_nodes"] = a.provenance.theta_nodes;
    p["truncation"] = a.provenance.truncation;
    p["window_captured_mass"] = a.provenance.window_captured_mass;
    return j.dump();
}

std::string to_csv_string(const SpectralSummary& s) {
    std::string out = "index,eigenvalue\n";
    char buf[64];
    for (size_t i = 0; i < s.eigenvalues.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, s.eigenvalues[i]);
        out += buf;
    }
    return out;
}

}  // namespace berfock
