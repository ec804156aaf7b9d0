#include "berfock/berezin.hpp"

#include <cmath>
#include <stdexcept>

#include "berfock/geometry.hpp"
#include "berfock/unitaries.hpp"

namespace berfock {

namespace {

std::vector<std::vector<std::complex<double>>> tabulate_ujk(double alpha, int d,
                                                            const QuadratureGrid& grid) {
    std::vector<UBergmanRow> rows;
    rows.reserve(size_t(d) + 1);
    for (int j = 0; j <= d; ++j) rows.emplace_back(alpha, j, d);
    std::vector<std::vector<std::complex<double>>> table(grid.nodes.size());
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        table[i].resize(size_t(d + 1) * size_t(d + 1));
        for (int j = 0; j <= d; ++j) {
            rows[size_t(j)].bare_row(grid.nodes[i], table[i].data() + size_t(j) * size_t(d + 1));
        }
    }
    return table;
}

}  // namespace

BerezinEvaluator::BerezinEvaluator(double alpha, const CoefficientVector& window, BerezinOptions opts)
    : alpha_(alpha), window_(window), opts_(opts) {
    if (window.space().kind != SpaceKind::Bergman ||
        std::fabs(window.space().weight - alpha) > 1e-12) {
        throw std::invalid_argument("BerezinEvaluator: window must live in A^2_alpha");
    }
    if (std::fabs(std::sqrt(window.norm_sq()) - 1.0) > 1e-10) {
        throw std::invalid_argument("BerezinEvaluator: window must be a unit vector");
    }
    const int d = window.degree();
    psi_onb_.resize(size_t(d) + 1);
    for (int j = 0; j <= d; ++j) psi_onb_[size_t(j)] = window.onb_coeff(j);

    inner_ = disc_grid(alpha_, opts_.inner_n_rad, opts_.inner_n_ang);
    ujk_ = tabulate_ujk(alpha_, d, inner_);
}

// kernel_bare(w_i) for a fixed theta; the (1-s)^{2+alpha} of the true elements
// is carried by the dA_alpha weights.
std::vector<double> BerezinEvaluator::kernel_for_theta(const SymbolSpec&, double theta) const {
    const int d = window_.degree();
    std::vector<double> kernel(inner_.nodes.size());
    std::vector<std::complex<double>> phase(size_t(d) + 1, 0.0);
    for (int j = 0; j <= d; ++j) phase[size_t(j)] = psi_onb_[size_t(j)] * std::polar(1.0, double(j) * theta);
    for (size_t i = 0; i < inner_.nodes.size(); ++i) {
        const auto& t = ujk_[i];
        double acc = 0.0;
        for (int k = 0; k <= d; ++k) {
            if (psi_onb_[size_t(k)] == 0.0) continue;
            std::complex<double> s = 0.0;
            for (int j = 0; j <= d; ++j) s += phase[size_t(j)] * t[size_t(j) * size_t(d + 1) + size_t(k)];
            acc += std::norm(psi_onb_[size_t(k)]) * std::norm(s);
        }
        kernel[i] = acc;
    }
    return kernel;
}

double BerezinEvaluator::eval_with_kernel(const SymbolSpec& f, double theta, std::complex<double> z,
                                          const std::vector<double>& kernel,
                                          const QuadratureGrid& grid) const {
    if (!f.theta_dependent()) {
        double s = 0.0, c = 0.0;
        const std::complex<double> zb = std::conj(z);
        for (size_t i = 0; i < grid.nodes.size(); ++i) {
            const std::complex<double> w = grid.nodes[i];
            const std::complex<double> arg = (z - w) / (1.0 - zb * w);  // phi_{-z}(-w)
            const double term = grid.weights[i] * f.eval(0.0, arg) * kernel[i];
            const double y = term - c;
            const double t = s + y;
            c = (t - s) - y;
            s = t;
        }
        return s;
    }
    // theta-dependent symbol: keep the t-grid, argument = (e^{it}, w)^{-1} (e^{i theta}, z)
    const int d = window_.degree();
    const GroupElement target(theta, z);
    double s = 0.0, c = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const std::complex<double> w = grid.nodes[i];
        // c_j(w) = sum_k conj(psi_k) U_{jk}(w) (bare)
        std::vector<std::complex<double>> cj(size_t(d) + 1, 0.0);
        for (int j = 0; j <= d; ++j) {
            for (int k = 0; k <= d; ++k) {
                cj[size_t(j)] += std::conj(psi_onb_[size_t(k)]) * ujk_[i][size_t(j) * size_t(d + 1) + size_t(k)];
            }
        }
        double node_acc = 0.0;
        for (int t_idx = 0; t_idx < opts_.t_nodes; ++t_idx) {
            const double t = 2.0 * M_PI * double(t_idx) / double(opts_.t_nodes);
            std::complex<double> amp = 0.0;
            for (int j = 0; j <= d; ++j) {
                amp += psi_onb_[size_t(j)] * std::polar(1.0, double(j) * t) * cj[size_t(j)];
            }
            const GroupElement g = compose(inverse(GroupElement(t, w)), target);
            node_acc += f.eval(g.angle(), g.point()) * std::norm(amp);
        }
        const double term = grid.weights[i] * node_acc / double(opts_.t_nodes);
        const double y = term - c;
        const double u = s + y;
        c = (u - s) - y;
        s = u;
    }
    return s;
}

const QuadratureGrid& BerezinEvaluator::inner_grid_for(const SymbolSpec& f,
                                                       std::complex<double> z) const {
    // A disc indicator evaluated at z = 0 has its jump on a node circle; the
    // split rule restores quadrature exactness there.
    if (f.form() == SymbolSpec::Form::DiscIndicator && std::abs(z) < 1e-14 && !f.has_scaling()) {
        const double s0 = f.indicator_radius() * f.indicator_radius();
        if (s0 > 0.0 && s0 < 1.0) {
            if (split_at_ != s0) {
                inner_split_ = disc_grid_split(alpha_, s0, opts_.inner_n_rad, opts_.inner_n_ang);
                ujk_split_ = tabulate_ujk(alpha_, window_.degree(), inner_split_);
                split_at_ = s0;
            }
            return inner_split_;
        }
    }
    return inner_;
}

double BerezinEvaluator::eval(const SymbolSpec& f, double theta, std::complex<double> z) const {
    if (f.domain() != SymbolSpec::Domain::Disc) {
        throw std::invalid_argument("BerezinEvaluator: symbol must live on the disc");
    }
    const QuadratureGrid& grid = inner_grid_for(f, z);
    if (&grid == &inner_split_) {
        // kernel over the split grid
        const int d = window_.degree();
        std::vector<double> kernel(grid.nodes.size());
        std::vector<std::complex<double>> phase(size_t(d) + 1, 0.0);
        for (int j = 0; j <= d; ++j) phase[size_t(j)] = psi_onb_[size_t(j)] * std::polar(1.0, double(j) * theta);
        for (size_t i = 0; i < grid.nodes.size(); ++i) {
            double acc = 0.0;
            for (int k = 0; k <= d; ++k) {
                if (psi_onb_[size_t(k)] == 0.0) continue;
                std::complex<double> s = 0.0;
                for (int j = 0; j <= d; ++j) {
                    s += phase[size_t(j)] * ujk_split_[i][size_t(j) * size_t(d + 1) + size_t(k)];
                }
                acc += std::norm(psi_onb_[size_t(k)]) * std::norm(s);
            }
            kernel[i] = acc;
        }
        return eval_with_kernel(f, theta, z, kernel, grid);
    }
    return eval_with_kernel(f, theta, z, kernel_for_theta(f, theta), grid);
}

double BerezinEvaluator::lp_distance(const SymbolSpec& f, double p) const {
    const bool is_inf = std::isinf(p);
    if (!is_inf && p != 1.0 && p != 2.0) {
        throw std::domain_error("berezin_lp_distance: p must be 1, 2, or inf");
    }
    QuadratureGrid eval = mobius_grid(opts_.eval_alpha_ref, opts_.eval_n_rad, opts_.eval_n_ang);
    double acc = 0.0, comp = 0.0, worst = 0.0;
    for (int t_idx = 0; t_idx < opts_.eval_n_theta; ++t_idx) {
        const double theta = 2.0 * M_PI * double(t_idx) / double(opts_.eval_n_theta);
        const std::vector<double> kernel = kernel_for_theta(f, theta);
        for (size_t i = 0; i < eval.nodes.size(); ++i) {
            const std::complex<double> z = eval.nodes[i];
            const double b = eval_with_kernel(f, theta, z, kernel, inner_);
            const double d = std::fabs(b - f.eval(theta, z));
            if (is_inf) {
                worst = std::max(worst, d);
            } else {
                const double term = eval.weights[i] / double(opts_.eval_n_theta) *
                                    (p == 1.0 ? d : d * d);
                const double y = term - comp;
                const double t = acc + y;
                comp = (t - acc) - y;
                acc = t;
            }
        }
    }
    if (is_inf) return worst;
    return p == 1.0 ? acc : std::sqrt(acc);
}

double BerezinEvaluator::mass(const SymbolSpec& f) const {
    QuadratureGrid eval = mobius_grid(opts_.eval_alpha_ref, opts_.eval_n_rad, opts_.eval_n_ang);
    double acc = 0.0;
    for (int t_idx = 0; t_idx < opts_.eval_n_theta; ++t_idx) {
        const double theta = 2.0 * M_PI * double(t_idx) / double(opts_.eval_n_theta);
        const std::vector<double> kernel = kernel_for_theta(f, theta);
        for (size_t i = 0; i < eval.nodes.size(); ++i) {
            acc += eval.weights[i] / double(opts_.eval_n_theta) *
                   eval_with_kernel(f, theta, eval.nodes[i], kernel, inner_);
        }
    }
    return acc;
}

double windowed_berezin_eval(double alpha, const CoefficientVector& window, const SymbolSpec& f,
                             double theta, std::complex<double> z, const BerezinOptions& opts) {
    return BerezinEvaluator(alpha, window, opts).eval(f, theta, z);
}

double berezin_lp_distance(double alpha, const CoefficientVector& window, const SymbolSpec& f,
                           double p, const BerezinOptions& opts) {
    return BerezinEvaluator(alpha, window, opts).lp_distance(f, p);
}

}  // namespace berfock
