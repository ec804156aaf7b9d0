#include "berfock/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "berfock/berezin.hpp"
#include "berfock/geometry.hpp"
#include "berfock/operators.hpp"
#include "berfock/quadrature.hpp"
#include "berfock/special.hpp"
#include "berfock/unitaries.hpp"

namespace berfock {

using special::log_gamma;
using special::reg_inc_beta;
using special::reg_inc_gamma_p;

namespace {

constexpr double kErrorFloor = 1e-12;

double uniform01(std::mt19937_64& rng) {
    // fixed mapping keeps output identical across standard libraries
    return double(rng() >> 11) * 0x1.0p-53;
}

std::complex<double> random_coeff(std::mt19937_64& rng) {
    return {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
}

std::string fmt(double v) { return format_g17(v); }

// Runs independent record jobs, results landing in input order.
std::vector<SweepRecord> run_jobs(std::vector<std::function<SweepRecord()>> jobs) {
    const int workers = std::min<int>(worker_count_from_env(), int(jobs.size()));
    std::vector<SweepRecord> out(jobs.size());
    if (workers <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(size_t(workers));
    std::vector<std::exception_ptr> errors(size_t(workers), nullptr);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
                    out[i] = jobs[i]();
                }
            } catch (...) {
                errors[size_t(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace

int worker_count_from_env() {
    const char* env = std::getenv("BERFOCK_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) {
        throw std::runtime_error("BERFOCK_WORKERS must be an integer in [1, 1024]");
    }
    return int(v);
}

void SweepRecord::finalize() {
    errors.resize(computed.size());
    for (size_t i = 0; i < computed.size(); ++i) {
        errors[i] = kind == CheckKind::Inequality ? std::max(0.0, computed[i])
                                                  : std::fabs(computed[i] - target);
    }
    switch (kind) {
        case CheckKind::Point:
        case CheckKind::Inequality: {
            pass = true;
            for (double e : errors) pass = pass && e <= tolerance;
            break;
        }
        case CheckKind::Trend: {
            pass = !errors.empty() && errors.back() <= tolerance;
            for (size_t i = 1; i < errors.size(); ++i) {
                const bool ok = strict_monotone ? errors[i] < errors[i - 1] : errors[i] <= errors[i - 1];
                if (!ok) {
                    if (errors[i] < kErrorFloor && errors[i - 1] < kErrorFloor) {
                        if (note.find("quadrature floor") == std::string::npos) {
                            note += (note.empty() ? "" : "; ");
                            note += "non-monotone step below the 1e-12 quadrature floor";
                        }
                        continue;
                    }
                    pass = false;
                }
            }
            break;
        }
    }
}

bool SuiteResult::all_pass() const {
    for (const auto& r : records) {
        if (!r.pass) return false;
    }
    return true;
}

// ------------------------------------------------------------- limit_suite

SuiteResult limit_suite(double beta, double sigma, const std::vector<double>& r_list, int n_max) {
    if (!(beta > 0.0)) throw std::domain_error("limit_suite: beta > 0 required");
    if (!(sigma >= 0.0)) throw std::domain_error("limit_suite: sigma >= 0 required");
    if (r_list.empty() || !std::is_sorted(r_list.begin(), r_list.end()) ||
        std::adjacent_find(r_list.begin(), r_list.end()) != r_list.end() || !(r_list.front() > 0.0)) {
        throw std::domain_error("r_list must be nonempty increasing");
    }
    // n_max < 0 skips the monomial sub-sweep
    const double radius = 1.0;  // indicator radius for the diagonal and norm sweeps

    SuiteResult result;
    result.suite = "limits";
    std::vector<std::function<SweepRecord()>> jobs;

    const auto base_params = [&](std::vector<std::pair<std::string, std::string>> extra) {
        std::vector<std::pair<std::string, std::string>> p = {{"beta", fmt(beta)}, {"sigma", fmt(sigma)}};
        p.insert(p.end(), extra.begin(), extra.end());
        return p;
    };

    // (a) int_D f(rz) dA_{beta r^2 + sigma} -> int_C f dmu_beta for radial
    //     |z|^{2m} e^{-c|z|^2}; the Fock side is the closed Gaussian moment.
    struct MeasureCase {
        double c;
        int m;
        const char* name;
    };
    const MeasureCase cases[] = {
        {1.0, 0, "exp(-|z|^2)"}, {0.5, 0, "exp(-0.5|z|^2)"}, {1.0, 2, "|z|^4 exp(-|z|^2)"},
        {0.7, 1, "|z|^2 exp(-0.7|z|^2)"}};
    for (const auto& mc : cases) {
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "limits.measure";
            rec.parameters = base_params({{"f", mc.name}});
            rec.sweep_param = "r";
            rec.sweep_values = r_list;
            rec.target = std::exp(log_gamma(double(mc.m) + 1.0) + std::log(beta) -
                                  double(mc.m + 1) * std::log(beta + mc.c));
            for (double r : r_list) {
                const double a = beta * r * r + sigma;
                Rule1D rule = gauss_jacobi01(300, a);
                double s = 0.0;
                for (size_t i = 0; i < rule.nodes.size(); ++i) {
                    const double x = rule.nodes[i];
                    s += rule.weights[i] * std::pow(r * r * x, mc.m) * std::exp(-mc.c * r * r * x);
                }
                rec.computed.push_back((a + 1.0) * s);
            }
            rec.tolerance = 1e-2;
            rec.kind = CheckKind::Trend;
            rec.strict_monotone = true;
            rec.finalize();
            return rec;
        });
    }
    jobs.push_back([=]() {
        SweepRecord rec;
        rec.theorem_tag = "limits.measure";
        rec.parameters = base_params({{"f", "1"}});
        rec.sweep_param = "r";
        rec.sweep_values = r_list;
        rec.target = 1.0;
        for (double r : r_list) {
            const double a = beta * r * r + sigma;
            Rule1D rule = gauss_jacobi01(200, a);
            double s = 0.0;
            for (double w : rule.weights) s += w;
            rec.computed.push_back((a + 1.0) * s);
        }
        rec.tolerance = 1e-12;
        rec.kind = CheckKind::Point;
        rec.finalize();
        return rec;
    });

    // (b) ||f_r||_{A^2_{beta r^2 + sigma}} -> ||f||_{F^2_beta}
    struct NormCase {
        std::vector<std::complex<double>> taylor;  // empty means exp(lambda z)
        double lambda;
        const char* name;
    };
    const NormCase norm_cases[] = {
        {{1.0, 1.0, 0.5}, 0.0, "1 + z + z^2/2"},
        {{}, 1.0, "exp(z)"},
        {{}, 0.6, "exp(0.6 z)"}};
    for (const auto& nc : norm_cases) {
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "limits.norm";
            rec.parameters = base_params({{"f", nc.name}});
            rec.sweep_param = "r";
            rec.sweep_values = r_list;
            double fock_sq = 0.0;
            if (!nc.taylor.empty()) {
                for (size_t n = 0; n < nc.taylor.size(); ++n) {
                    fock_sq += std::norm(nc.taylor[n]) *
                               std::exp(log_gamma(double(n) + 1.0) - double(n) * std::log(beta));
                }
            } else {
                fock_sq = std::exp(nc.lambda * nc.lambda / beta);
            }
            rec.target = std::sqrt(fock_sq);
            for (double r : r_list) {
                const double a = beta * r * r + sigma;
                double sq = 0.0;
                if (!nc.taylor.empty()) {
                    for (size_t n = 0; n < nc.taylor.size(); ++n) {
                        sq += std::norm(nc.taylor[n]) *
                              std::exp(2.0 * double(n) * std::log(r) + log_gamma(double(n) + 1.0) +
                                       log_gamma(a + 2.0) - log_gamma(double(n) + a + 2.0));
                    }
                } else {
                    for (int n = 0;; ++n) {
                        const double lt = 2.0 * double(n) * std::log(nc.lambda * r) -
                                          log_gamma(double(n) + 1.0) + log_gamma(a + 2.0) -
                                          log_gamma(double(n) + a + 2.0);
                        const double term = std::exp(lt);
                        sq += term;
                        if (n > 4 && term < 1e-18 * sq) break;
                        if (n > 10000) throw std::runtime_error("limit_suite: norm series stalled");
                    }
                }
                rec.computed.push_back(std::sqrt(sq));
            }
            rec.tolerance = 1e-2;
            rec.kind = CheckKind::Trend;
            rec.strict_monotone = true;
            rec.finalize();
            return rec;
        });
    }

    // (c) diagonal matrix elements of the scaled disc-indicator Toeplitz
    //     operator on A^2_{beta r^2} against the Fock eigenvalues gamma_n.
    for (int n = 0; n <= n_max; ++n) {
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "limits.monomial";
            rec.parameters = base_params({{"R", fmt(radius)}, {"n", std::to_string(n)}});
            rec.sweep_param = "r";
            rec.sweep_values = r_list;
            rec.target = reg_inc_gamma_p(double(n) + 1.0, beta * radius * radius);
            const SymbolSpec base = SymbolSpec::disc_indicator(SymbolSpec::Domain::Plane, radius);
            for (double r : r_list) {
                const SpaceParams space = SpaceParams::bergman(beta * r * r);
                auto diag = radial_toeplitz_diagonal(space, base.scaled(r, sigma), n + 1);
                rec.computed.push_back(diag[size_t(n)]);
            }
            rec.tolerance = 1e-2;
            rec.kind = CheckKind::Trend;
            rec.strict_monotone = true;
            rec.finalize();
            return rec;
        });
    }

    // (d) closed-form norm (a+1)/(a+sigma+1) [1 - (1-R^2/r^2)^{a+sigma+1}]
    jobs.push_back([=]() {
        SweepRecord rec;
        rec.theorem_tag = "limits.closed_norm";
        rec.parameters = base_params({{"R", fmt(radius)}});
        rec.sweep_param = "r";
        rec.sweep_values = r_list;
        rec.target = 1.0 - std::exp(-beta * radius * radius);
        for (double r : r_list) {
            const double a = beta * r * r;
            const double v = (a + 1.0) / (a + sigma + 1.0) *
                             (1.0 - std::exp((a + sigma + 1.0) * std::log1p(-radius * radius / (r * r))));
            rec.computed.push_back(v);
        }
        rec.tolerance = r_list.back() >= 100.0 ? 2e-3 : 1e-2;
        rec.kind = CheckKind::Trend;
        rec.strict_monotone = true;
        rec.finalize();
        return rec;
    });

    result.records = run_jobs(std::move(jobs));
    return result;
}

// -------------------------------------------------------- sharp_bound_suite

namespace {

// Bounded radial (1-s)^sigma G(s) disc profiles with finite L^1(d lambda).
struct DiscProfile {
    const char* name;
    double sigma;                          // boundary-vanishing exponent, > 1
    std::function<double(double)> g;       // function of s = rho^2, bounded
    double sup;                            // sup of (1-s)^sigma G(s) on [0,1]
};

double disc_profile_l1_dlambda(const DiscProfile& p) {
    // int (1-s)^{sigma-2} G(s) ds, the sigma weight absorbed by the rule
    Rule1D rule = gauss_jacobi01(400, p.sigma - 2.0);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * p.g(rule.nodes[i]);
    return s;
}

double bergman_bound_rhs(double alpha, double sup, double l1) {
    // (1 - sup^{a+1} / (sup + l1)^{a+1}) * sup
    return (1.0 - std::exp((alpha + 1.0) * (std::log(sup) - std::log(sup + l1)))) * sup;
}

double diagonal_sup(const std::vector<double>& diag) {
    double s = 0.0;
    for (double d : diag) s = std::max(s, std::fabs(d));
    return s;
}

}  // namespace

SuiteResult sharp_bound_suite(const std::vector<double>& alpha_list, double beta,
                              std::uint64_t seed) {
    if (alpha_list.empty()) throw std::domain_error("sharp_bound_suite: alpha_list must be nonempty");
    SuiteResult result;
    result.suite = "sharp-bounds";
    std::vector<std::function<SweepRecord()>> jobs;

    // (a) Bergman: equality for centered disc indicators, inequality for
    //     five boundary-vanishing radial profiles.
    for (double alpha : alpha_list) {
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "sharp.bergman.indicator";
            rec.parameters = {{"alpha", fmt(alpha)}};
            rec.sweep_param = "rho";
            rec.kind = CheckKind::Point;
            rec.tolerance = 1e-8;
            rec.target = 0.0;
            for (double rho : {0.3, 0.5, 0.7}) {
                const SymbolSpec f = SymbolSpec::disc_indicator(SymbolSpec::Domain::Disc, rho);
                auto diag = radial_toeplitz_diagonal(SpaceParams::bergman(alpha), f, 600);
                const double l1 = rho * rho / (1.0 - rho * rho);  // lambda(B(0, rho))
                const double rhs = bergman_bound_rhs(alpha, 1.0, l1);
                rec.sweep_values.push_back(rho);
                rec.computed.push_back(diagonal_sup(diag) - rhs);  // equality gap
            }
            rec.finalize();
            return rec;
        });
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "sharp.bergman.profile";
            rec.parameters = {{"alpha", fmt(alpha)}};
            rec.sweep_param = "profile";
            rec.kind = CheckKind::Inequality;
            rec.tolerance = 1e-8;
            rec.target = 0.0;
            const DiscProfile profiles[] = {
                {"(1-s)^2", 2.0, [](double) { return 1.0; }, 1.0},
                {"0.8(1-s)^3", 3.0, [](double) { return 0.8; }, 0.8},
                {"s(1-s)^2", 2.0, [](double s) { return s; }, 4.0 / 27.0},
                {"(1-s)^1.5", 1.5, [](double) { return 1.0; }, 1.0},
                {"exp(-s)(1-s)^2", 2.0, [](double s) { return std::exp(-s); }, 1.0}};
            int idx = 0;
            for (const auto& p : profiles) {
                const SymbolSpec base = SymbolSpec::radial_profile(
                    SymbolSpec::Domain::Disc, [g = p.g](double rho) { return g(rho * rho); }, p.sup,
                    p.name);
                const SymbolSpec f = base.scaled(1.0, p.sigma);
                auto diag = radial_toeplitz_diagonal(SpaceParams::bergman(alpha), f, 600, 300);
                const double rhs = bergman_bound_rhs(alpha, p.sup, disc_profile_l1_dlambda(p));
                rec.sweep_values.push_back(double(idx++));
                rec.computed.push_back(diagonal_sup(diag) - rhs);  // violation if positive
            }
            rec.finalize();
            return rec;
        });
    }

    // (b) Fock: equality for disc indicators, inequality for smooth profiles.
    jobs.push_back([=]() {
        SweepRecord rec;
        rec.theorem_tag = "sharp.fock.indicator";
        rec.parameters = {{"beta", fmt(beta)}};
        rec.sweep_param = "R";
        rec.kind = CheckKind::Point;
        rec.tolerance = 1e-10;
        rec.target = 0.0;
        for (double R : {0.5, 1.0, 2.0}) {
            const SymbolSpec f = SymbolSpec::disc_indicator(SymbolSpec::Domain::Plane, R);
            auto diag = radial_toeplitz_diagonal(SpaceParams::fock(beta), f, 400);
            const double l1 = M_PI * R * R;
            const double rhs = (1.0 - std::exp(-beta / M_PI * l1));
            rec.sweep_values.push_back(R);
            rec.computed.push_back(diagonal_sup(diag) - rhs);
        }
        rec.finalize();
        return rec;
    });
    jobs.push_back([=]() {
        SweepRecord rec;
        rec.theorem_tag = "sharp.fock.profile";
        rec.parameters = {{"beta", fmt(beta)}};
        rec.sweep_param = "profile";
        rec.kind = CheckKind::Inequality;
        rec.tolerance = 1e-8;
        rec.target = 0.0;
        struct FockProfile {
            const char* name;
            std::function<double(double)> f_of_u;  // u = |z|^2
            double sup;
            double l1_over_pi;  // (1/pi) ||f||_{L^1(C, dA)} = int_0^inf f(u) du
        };
        const FockProfile profiles[] = {
            {"exp(-0.5u)", [](double u) { return std::exp(-0.5 * u); }, 1.0, 2.0},
            {"exp(-u)", [](double u) { return std::exp(-u); }, 1.0, 1.0},
            {"exp(-2u)", [](double u) { return std::exp(-2.0 * u); }, 1.0, 0.5},
            {"u exp(-u)", [](double u) { return u * std::exp(-u); }, std::exp(-1.0), 1.0},
            {"exp(-(u-1)^2)",
             [](double u) { return std::exp(-(u - 1.0) * (u - 1.0)); },
             1.0,
             std::sqrt(M_PI) / 2.0 * (1.0 + std::erf(1.0))}};
        int idx = 0;
        for (const auto& p : profiles) {
            const SymbolSpec f = SymbolSpec::radial_profile(
                SymbolSpec::Domain::Plane, [g = p.f_of_u](double rho) { return g(rho * rho); }, p.sup,
                p.name);
            auto diag = radial_toeplitz_diagonal(SpaceParams::fock(beta), f, 400, 500);
            const double rhs = p.sup * (1.0 - std::exp(-beta * p.l1_over_pi / p.sup));
            rec.sweep_values.push_back(double(idx++));
            rec.computed.push_back(diagonal_sup(diag) - rhs);
        }
        rec.finalize();
        return rec;
    });

    // (c) concentration inequality on centered discs: random polynomials stay
    //     below the bound, the normalized kernel at 0 attains it.
    for (double alpha : alpha_list) {
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "sharp.concentration";
            rec.parameters = {{"alpha", fmt(alpha)}, {"seed", std::to_string(seed)}};
            rec.sweep_param = "trial";
            rec.kind = CheckKind::Inequality;
            rec.tolerance = 1e-8;
            rec.target = 0.0;
            std::mt19937_64 rng(seed ^ std::uint64_t(std::llround(alpha * 1009.0)));
            const SpaceParams space = SpaceParams::bergman(alpha);
            int idx = 0;
            for (double rho : {0.4, 0.6}) {
                const double lam = rho * rho / (1.0 - rho * rho);
                const double cap = 1.0 - std::exp(-(alpha + 1.0) * std::log1p(lam));
                for (int trial = 0; trial < 10; ++trial) {
                    std::vector<std::complex<double>> c(7, 0.0);
                    for (auto& v : c) v = random_coeff(rng);
                    CoefficientVector g(space, c);
                    double lhs = 0.0;
                    for (int n = 0; n <= g.degree(); ++n) {
                        lhs += std::norm(g.coeff(n)) * monomial_norm_sq(space, n) *
                               reg_inc_beta(rho * rho, double(n) + 1.0, alpha + 1.0);
                    }
                    rec.sweep_values.push_back(double(idx++));
                    rec.computed.push_back(lhs - cap * g.norm_sq());
                }
            }
            rec.finalize();
            return rec;
        });
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "sharp.concentration.equality";
            rec.parameters = {{"alpha", fmt(alpha)}};
            rec.sweep_param = "rho";
            rec.kind = CheckKind::Point;
            rec.tolerance = 1e-9;
            rec.target = 0.0;
            for (double rho : {0.4, 0.6}) {
                // g = k_0^alpha = 1: both sides are 1 - (1-rho^2)^{alpha+1}
                const double lhs = reg_inc_beta(rho * rho, 1.0, alpha + 1.0);
                const double lam = rho * rho / (1.0 - rho * rho);
                const double rhs = 1.0 - std::exp(-(alpha + 1.0) * std::log1p(lam));
                rec.sweep_values.push_back(rho);
                rec.computed.push_back(lhs - rhs);
            }
            rec.finalize();
            return rec;
        });
    }

    result.records = run_jobs(std::move(jobs));
    return result;
}

// -------------------------------------------------------------- szego_suite

namespace {

// Fast-path diagonal of the disc-indicator localization operator with the
// monomial window e_j.  For j = 0 the entries are I_{rho^2}(n+1, alpha+1);
// for j > 0 they are (alpha+1) N_{jn}^2 int_0^{rho^2} (1-s)^alpha S_jn(s)^2 ds
// with polynomial S_jn, integrated exactly on [0, rho^2].  The tail rule cuts
// at the first entry below 1e-10 past the transition.
std::vector<double> indicator_fast_diagonal(double rho, double alpha, int window_j) {
    const double x0 = rho * rho;
    std::vector<double> diag;
    diag.reserve(256);
    if (window_j == 0) {
        for (int n = 0;; ++n) {
            const double d = reg_inc_beta(x0, double(n) + 1.0, alpha + 1.0);
            if (d < 1e-10 && n > 0) break;
            diag.push_back(d);
            if (n > 4000000) throw std::runtime_error("indicator diagonal: tail rule did not trigger");
        }
        return diag;
    }
    int order = 300;
    Rule1D leg = gauss_legendre01(order);
    for (int n = 0;; ++n) {
        if ((window_j + n) / 2 + 4 > order) {
            order = window_j + n + 8;
            leg = gauss_legendre01(order);
        }
        const double log_norm = 0.5 * (log_gamma(double(n) + 1.0) + log_gamma(double(window_j) + alpha + 2.0) -
                                       log_gamma(double(window_j) + 1.0) - log_gamma(double(n) + alpha + 2.0));
        double lam = 0.0;
        for (size_t i = 0; i < leg.nodes.size(); ++i) {
            const double s = x0 * leg.nodes[i];
            double inner = 0.0;
            for (int l = 0; l <= std::min(window_j, n); ++l) {
                const double lc = log_norm + special::log_binomial(window_j, l) +
                                  log_gamma(double(n - l + window_j) + 2.0 + alpha) -
                                  log_gamma(double(n - l) + 1.0) - log_gamma(double(window_j) + 2.0 + alpha) +
                                  0.5 * double(window_j + n - 2 * l) * std::log(s) +
                                  0.5 * alpha * std::log1p(-s);
                inner += (((window_j - l) % 2) != 0 ? -1.0 : 1.0) * std::exp(lc);
            }
            lam += leg.weights[i] * x0 * inner * inner;
        }
        lam *= alpha + 1.0;
        if (lam < 1e-10 && n > window_j) break;
        diag.push_back(lam);
        if (n > 4000000) throw std::runtime_error("indicator diagonal: tail rule did not trigger");
    }
    return diag;
}

double power_sum(const std::vector<double>& diag, int k) {
    double s = 0.0;
    for (double d : diag) s += std::pow(d, k);
    return s;
}

}  // namespace

SuiteResult szego_suite(const SzegoParams& params) {
    if (!(params.rho > 0.0 && params.rho < 1.0)) throw std::domain_error("szego_suite: rho in (0,1) required");
    if (params.alpha_list.empty() || !std::is_sorted(params.alpha_list.begin(), params.alpha_list.end())) {
        throw std::domain_error("szego_suite: alpha_list must be nonempty increasing");
    }
    SuiteResult result;
    result.suite = "szego";
    const double rho = params.rho;
    const double target = rho * rho / (1.0 - rho * rho);  // lambda({f > 0})

    std::vector<std::pair<std::string, std::string>> base = {
        {"rho", fmt(rho)}, {"window", "e" + std::to_string(params.window_index)}};

    // tail gate: the dropped diagonal tail must stay below 1e-6 of the trace
    for (double alpha : params.alpha_list) {
        auto diag = indicator_fast_diagonal(rho, alpha, params.window_index);
        double tail = 0.0;
        const int n0 = int(diag.size());
        for (int n = n0; n < n0 + 400; ++n) tail += reg_inc_beta(rho * rho, double(n) + 1.0, alpha + 1.0);
        if (tail > 1e-6 * power_sum(diag, 1)) {
            throw std::runtime_error("szego_suite: diagonal tail exceeds 1e-6 of the trace");
        }
    }

    // normalized traces of powers: tr(L^k)/(alpha+1) -> lambda({f > 0})
    for (int k = 1; k <= 4; ++k) {
        SweepRecord rec;
        rec.theorem_tag = "szego.trace.pow" + std::to_string(k);
        rec.parameters = base;
        rec.parameters.emplace_back("h", k == 1 ? "1" : "x^" + std::to_string(k - 1));
        rec.sweep_param = "alpha";
        rec.sweep_values = params.alpha_list;
        rec.target = target;
        for (double alpha : params.alpha_list) {
            auto diag = indicator_fast_diagonal(rho, alpha, params.window_index);
            rec.computed.push_back(power_sum(diag, k) / (alpha + 1.0));
        }
        rec.kind = k == 1 ? CheckKind::Point : CheckKind::Trend;
        rec.strict_monotone = k != 1;
        rec.tolerance = k == 1 ? 1e-8 : params.trace_tolerance;
        rec.finalize();
        result.records.push_back(std::move(rec));
    }

    // threshold counts at the largest alpha
    {
        const double alpha = params.alpha_list.back();
        auto diag = indicator_fast_diagonal(rho, alpha, params.window_index);
        SweepRecord rec;
        rec.theorem_tag = "szego.count";
        rec.parameters = base;
        rec.parameters.emplace_back("alpha", fmt(alpha));
        rec.sweep_param = "delta";
        rec.sweep_values = params.deltas;
        rec.target = target;
        for (double delta : params.deltas) {
            int count = 0;
            for (double d : diag) {
                if (d > delta) ++count;
            }
            rec.computed.push_back(double(count) / (alpha + 1.0));
        }
        rec.kind = CheckKind::Point;
        rec.tolerance = params.trace_tolerance;
        rec.finalize();
        result.records.push_back(std::move(rec));
    }

    // operator norm -> ||f||_inf = 1
    {
        const double alpha = params.alpha_list.back();
        auto diag = indicator_fast_diagonal(rho, alpha, params.window_index);
        SweepRecord rec;
        rec.theorem_tag = "szego.norm";
        rec.parameters = base;
        rec.parameters.emplace_back("alpha", fmt(alpha));
        rec.computed.push_back(diagonal_sup(diag));
        rec.target = 1.0;
        rec.kind = CheckKind::Point;
        rec.tolerance = 0.01;  // op_norm >= 0.99
        rec.finalize();
        result.records.push_back(std::move(rec));
    }

    // trace defect tr(L^2 - L_{f^2})/(alpha+1) -> 0; f^2 = f for indicators
    {
        SweepRecord rec;
        rec.theorem_tag = "szego.defect";
        rec.parameters = base;
        rec.sweep_param = "alpha";
        rec.sweep_values = params.alpha_list;
        rec.target = 0.0;
        for (double alpha : params.alpha_list) {
            auto diag = indicator_fast_diagonal(rho, alpha, params.window_index);
            rec.computed.push_back((power_sum(diag, 2) - power_sum(diag, 1)) / (alpha + 1.0));
        }
        rec.kind = CheckKind::Trend;
        rec.strict_monotone = true;
        rec.tolerance = params.trace_tolerance;
        rec.finalize();
        result.records.push_back(std::move(rec));
    }

    // dense-path spot check with a nonconstant window at moderate alpha
    {
        const double alpha = params.dense_alpha;
        const int n = params.dense_n;
        const SpaceParams space = SpaceParams::bergman(alpha);
        const CoefficientVector window = basis_vector(space, params.dense_window_index);
        const SymbolSpec f = SymbolSpec::disc_indicator(SymbolSpec::Domain::Disc, rho);
        const QuadratureGrid grid = disc_grid_split(alpha, rho * rho, 80, 2 * n + 8);
        OperatorMatrix mat = localization_matrix(space, f, window, window, n, 1, grid);
        SpectralSummary summary = spectral_summary(mat);

        SweepRecord rec;
        rec.theorem_tag = "szego.dense";
        rec.parameters = {{"rho", fmt(rho)},
                          {"window", "e" + std::to_string(params.dense_window_index)},
                          {"alpha", fmt(alpha)},
                          {"N", std::to_string(n)},
                          {"captured_mass", fmt(mat.provenance.window_captured_mass)}};
        rec.sweep_param = "k";
        rec.target = target;
        // the dense normalized traces must agree with the fast-path trend:
        // deviations at moderate alpha stay on the same (low) side and exceed
        // the large-alpha deviations of the fast path.
        bool trend_ok = true;
        auto fast_final = indicator_fast_diagonal(rho, params.alpha_list.back(), params.window_index);
        for (int k = 1; k <= 4; ++k) {
            double tr = 0.0;
            for (double lam : summary.eigenvalues) tr += std::pow(lam, k);
            const double ratio = tr / (alpha + 1.0);
            rec.sweep_values.push_back(double(k));
            rec.computed.push_back(ratio);
            const double fast_dev = std::fabs(power_sum(fast_final, k) / (params.alpha_list.back() + 1.0) - target);
            if (k == 1) {
                trend_ok = trend_ok && std::fabs(ratio - target) <= 1e-6;
            } else {
                trend_ok = trend_ok && ratio <= target + 1e-6 && std::fabs(ratio - target) >= fast_dev;
            }
        }
        rec.kind = CheckKind::Point;
        rec.tolerance = 0.35;  // coarse envelope at alpha = 40; the trend gate is the check
        rec.finalize();
        // independent oracle: the closed quadrature diagonal for the monomial window
        auto oracle = indicator_fast_diagonal(rho, alpha, params.dense_window_index);
        std::vector<double> expected(size_t(n), 0.0);
        for (size_t i = 0; i < oracle.size() && i < size_t(n); ++i) expected[i] = oracle[i];
        std::sort(expected.begin(), expected.end());
        double eig_dev = 0.0;
        for (int i = 0; i < n; ++i) {
            eig_dev = std::max(eig_dev, std::fabs(summary.eigenvalues[size_t(i)] - expected[size_t(i)]));
        }
        rec.parameters.emplace_back("eigenvalue_oracle_dev", fmt(eig_dev));
        rec.pass = rec.pass && trend_ok && eig_dev <= 1e-7 && summary.op_norm <= 1.0 + 1e-8 &&
                   summary.eigenvalues.front() >= -1e-8 &&
                   mat.provenance.window_captured_mass >= 1.0 - 1e-6;
        if (!trend_ok) rec.note = "dense ratios fall outside the fast-path trend envelope";
        result.records.push_back(std::move(rec));
    }

    return result;
}

// ------------------------------------------------------ orthogonality_suite

namespace {

// (alpha+1) int dtheta/2pi int <g, U_z phi_theta><U_z psi_theta, h> dlambda(z)
// realized on the dA_alpha grid through the bare matrix elements.
std::complex<double> bergman_orthogonality_lhs(double alpha, const CoefficientVector& phi,
                                               const CoefficientVector& psi,
                                               const CoefficientVector& g,
                                               const CoefficientVector& h, int theta_nodes,
                                               const QuadratureGrid& grid) {
    const int dw = std::max(phi.degree(), psi.degree());
    const int dv = std::max(g.degree(), h.degree());
    std::vector<UBergmanRow> rows;
    for (int j = 0; j <= dw; ++j) rows.emplace_back(alpha, j, dv);
    std::vector<std::complex<double>> table(size_t(dw + 1) * size_t(dv + 1));
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        for (int j = 0; j <= dw; ++j) {
            rows[size_t(j)].bare_row(grid.nodes[i], table.data() + size_t(j) * size_t(dv + 1));
        }
        std::complex<double> node = 0.0;
        for (int t = 0; t < theta_nodes; ++t) {
            const double theta = 2.0 * M_PI * double(t) / double(theta_nodes);
            std::complex<double> a_phi_g = 0.0;  // <U_z phi_theta, g> (bare)
            std::complex<double> a_psi_h = 0.0;  // <U_z psi_theta, h> (bare)
            for (int j = 0; j <= dw; ++j) {
                const std::complex<double> ph = std::polar(1.0, double(j) * theta);
                for (int k = 0; k <= dv; ++k) {
                    const std::complex<double> u = table[size_t(j) * size_t(dv + 1) + size_t(k)];
                    a_phi_g += phi.onb_coeff(j) * ph * std::conj(g.onb_coeff(k)) * u;
                    a_psi_h += psi.onb_coeff(j) * ph * std::conj(h.onb_coeff(k)) * u;
                }
            }
            node += std::conj(a_phi_g) * a_psi_h;
        }
        acc += grid.weights[i] * node / double(theta_nodes);
    }
    return acc;
}

std::complex<double> fock_orthogonality_lhs(double beta, const CoefficientVector& phi,
                                            const CoefficientVector& psi, const CoefficientVector& g,
                                            const CoefficientVector& h, int theta_nodes,
                                            const QuadratureGrid& grid) {
    const int dw = std::max(phi.degree(), psi.degree());
    const int dv = std::max(g.degree(), h.degree());
    std::vector<WFockRow> rows;
    for (int j = 0; j <= dw; ++j) rows.emplace_back(beta, j, dv);
    std::vector<std::complex<double>> table(size_t(dw + 1) * size_t(dv + 1));
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        for (int j = 0; j <= dw; ++j) {
            rows[size_t(j)].bare_row(grid.nodes[i], table.data() + size_t(j) * size_t(dv + 1));
        }
        std::complex<double> node = 0.0;
        for (int t = 0; t < theta_nodes; ++t) {
            const double theta = 2.0 * M_PI * double(t) / double(theta_nodes);
            std::complex<double> a_phi_g = 0.0, a_psi_h = 0.0;
            for (int j = 0; j <= dw; ++j) {
                const std::complex<double> ph = std::polar(1.0, double(j) * theta);
                for (int k = 0; k <= dv; ++k) {
                    const std::complex<double> u = table[size_t(j) * size_t(dv + 1) + size_t(k)];
                    a_phi_g += phi.onb_coeff(j) * ph * std::conj(g.onb_coeff(k)) * u;
                    a_psi_h += psi.onb_coeff(j) * ph * std::conj(h.onb_coeff(k)) * u;
                }
            }
            node += std::conj(a_phi_g) * a_psi_h;
        }
        acc += grid.weights[i] * node / double(theta_nodes);
    }
    return acc;
}

}  // namespace

SuiteResult orthogonality_suite(const std::vector<double>& bergman_alphas,
                                const std::vector<double>& fock_betas, int degree, int trials,
                                std::uint64_t seed) {
    if (degree < 0) throw std::domain_error("orthogonality_suite: degree >= 0 required");
    if (trials < 1) throw std::domain_error("orthogonality_suite: trials >= 1 required");
    SuiteResult result;
    result.suite = "orthogonality";
    std::vector<std::function<SweepRecord()>> jobs;

    const int theta_nodes = 4 * degree + 8;
    const int n_rad = 2 * degree + 8;
    const int n_ang = 4 * degree + 8;

    for (double alpha : bergman_alphas) {
        jobs.push_back([=]() {
            const SpaceParams space = SpaceParams::bergman(alpha);
            const QuadratureGrid grid = disc_grid(alpha, n_rad, n_ang);
            std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL + std::uint64_t(std::llround(alpha * 65537.0))));
            SweepRecord rec;
            rec.theorem_tag = "orthogonality.bergman";
            rec.parameters = {{"alpha", fmt(alpha)},
                              {"degree", std::to_string(degree)},
                              {"seed", std::to_string(seed)}};
            rec.sweep_param = "trial";
            rec.kind = CheckKind::Point;
            rec.tolerance = 1e-7;
            rec.target = 0.0;
            for (int trial = 0; trial < trials; ++trial) {
                std::vector<CoefficientVector> q;
                for (int v = 0; v < 4; ++v) {
                    std::vector<std::complex<double>> c(size_t(degree) + 1, 0.0);
                    for (auto& x : c) x = random_coeff(rng);
                    q.emplace_back(space, c);
                }
                const auto lhs =
                    bergman_orthogonality_lhs(alpha, q[0], q[1], q[2], q[3], theta_nodes, grid);
                const auto rhs = inner_product(q[2], q[3]) * inner_product(q[1], q[0]);
                rec.sweep_values.push_back(double(trial));
                rec.computed.push_back(std::abs(lhs - rhs));
            }
            rec.finalize();
            return rec;
        });
    }
    for (double beta : fock_betas) {
        jobs.push_back([=]() {
            const SpaceParams space = SpaceParams::fock(beta);
            const QuadratureGrid grid = plane_grid(beta, n_rad, n_ang);
            std::mt19937_64 rng(seed ^ (0xbf58476d1ce4e5b9ULL + std::uint64_t(std::llround(beta * 65537.0))));
            SweepRecord rec;
            rec.theorem_tag = "orthogonality.fock";
            rec.parameters = {{"beta", fmt(beta)},
                              {"degree", std::to_string(degree)},
                              {"seed", std::to_string(seed)}};
            rec.sweep_param = "trial";
            rec.kind = CheckKind::Point;
            rec.tolerance = 1e-7;
            rec.target = 0.0;
            for (int trial = 0; trial < trials; ++trial) {
                std::vector<CoefficientVector> q;
                for (int v = 0; v < 4; ++v) {
                    std::vector<std::complex<double>> c(size_t(degree) + 1, 0.0);
                    for (auto& x : c) x = random_coeff(rng);
                    q.emplace_back(space, c);
                }
                const auto lhs = fock_orthogonality_lhs(beta, q[0], q[1], q[2], q[3], theta_nodes, grid);
                const auto rhs = inner_product(q[2], q[3]) * inner_product(q[1], q[0]);
                rec.sweep_values.push_back(double(trial));
                rec.computed.push_back(std::abs(lhs - rhs));
            }
            rec.finalize();
            return rec;
        });
    }

    // degenerate pairs: orthogonal monomials give 0 = 0, constants give 1 = 1
    jobs.push_back([=]() {
        const double alpha = bergman_alphas.empty() ? 0.0 : bergman_alphas.front();
        const SpaceParams space = SpaceParams::bergman(alpha);
        const QuadratureGrid grid = disc_grid(alpha, n_rad, n_ang);
        SweepRecord rec;
        rec.theorem_tag = "orthogonality.trivial";
        rec.parameters = {{"alpha", fmt(alpha)}};
        rec.sweep_param = "case";
        rec.kind = CheckKind::Point;
        rec.tolerance = 1e-9;
        rec.target = 0.0;
        const CoefficientVector one = basis_vector(space, 0);
        const CoefficientVector e1 = basis_vector(space, 1);
        // g = e_0 and h = e_1: both sides vanish
        auto lhs = bergman_orthogonality_lhs(alpha, one, one, one, e1, theta_nodes, grid);
        rec.sweep_values.push_back(0.0);
        rec.computed.push_back(std::abs(lhs));
        // all four constant: both sides are 1
        lhs = bergman_orthogonality_lhs(alpha, one, one, one, one, theta_nodes, grid);
        rec.sweep_values.push_back(1.0);
        rec.computed.push_back(std::abs(lhs - 1.0));
        rec.finalize();
        return rec;
    });

    result.records = run_jobs(std::move(jobs));
    return result;
}

// ------------------------------------------------------------ berezin_suite

SuiteResult berezin_suite(const std::vector<double>& alpha_list, const std::vector<double>& p_list,
                          const std::vector<int>& window_indices) {
    if (alpha_list.empty() || !std::is_sorted(alpha_list.begin(), alpha_list.end())) {
        throw std::domain_error("berezin_suite: alpha_list must be nonempty increasing");
    }
    for (double p : p_list) {
        if (p != 1.0 && p != 2.0) throw std::domain_error("berezin_suite: distance sweep needs p in {1, 2}");
    }
    SuiteResult result;
    result.suite = "berezin";
    std::vector<std::function<SweepRecord()>> jobs;

    const auto make_window = [](double alpha, int j) {
        return basis_vector(SpaceParams::bergman(alpha), j);  // = V^alpha e_j^0
    };
    const SymbolSpec f_smooth = SymbolSpec::constant(SymbolSpec::Domain::Disc, 1.0).scaled(1.0, 2.0);
    const SymbolSpec f_trunc = SymbolSpec::radial_profile(
        SymbolSpec::Domain::Disc,
        [](double rho) { return rho * rho <= 0.81 ? 1.0 - rho * rho : 0.0; }, 1.0,
        "(1-|z|^2) 1_{|z|^2<=0.81}");
    const SymbolSpec symbols[] = {f_smooth, f_trunc};
    const char* symbol_names[] = {"(1-|z|^2)^2", "(1-|z|^2) trunc 0.81"};

    for (int w : window_indices) {
        for (int si = 0; si < 2; ++si) {
            for (double p : p_list) {
                const SymbolSpec f = symbols[si];
                const std::string fname = symbol_names[si];
                jobs.push_back([=]() {
                    SweepRecord rec;
                    rec.theorem_tag = "berezin.distance";
                    rec.parameters = {{"window", "e" + std::to_string(w)},
                                      {"f", fname},
                                      {"p", fmt(p)}};
                    rec.sweep_param = "alpha";
                    rec.sweep_values = alpha_list;
                    rec.target = 0.0;
                    for (double alpha : alpha_list) {
                        BerezinEvaluator ev(alpha, make_window(alpha, w));
                        rec.computed.push_back(ev.lp_distance(f, p));
                    }
                    rec.kind = CheckKind::Trend;
                    rec.strict_monotone = true;
                    rec.tolerance = 1.0;  // the theorem gives no finite-alpha value; the trend is the check
                    rec.note = "limit theorem: decreasing-trend gate only";
                    rec.finalize();
                    return rec;
                });
            }
        }
    }

    // classical point value: psi = 1, f = |w|^2 at z = 0 gives 1/(alpha+2)
    jobs.push_back([=]() {
        SweepRecord rec;
        rec.theorem_tag = "berezin.classical";
        rec.parameters = {{"window", "e0"}, {"f", "|w|^2"}};
        rec.sweep_param = "alpha";
        rec.sweep_values = alpha_list;
        rec.target = 0.0;
        const SymbolSpec f = SymbolSpec::radial_profile(
            SymbolSpec::Domain::Disc, [](double rho) { return rho * rho; }, 1.0, "|w|^2");
        for (double alpha : alpha_list) {
            BerezinEvaluator ev(alpha, make_window(alpha, 0));
            rec.computed.push_back(ev.eval(f, 0.0, 0.0) - 1.0 / (alpha + 2.0));
        }
        rec.kind = CheckKind::Point;
        rec.tolerance = 1e-8;
        rec.finalize();
        return rec;
    });

    // contraction and non-negativity over a coarse eval set, mass at p = 1
    for (int w : window_indices) {
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "berezin.contraction";
            rec.parameters = {{"window", "e" + std::to_string(w)}, {"f", symbol_names[1]}};
            rec.sweep_param = "alpha";
            rec.sweep_values = alpha_list;
            rec.kind = CheckKind::Inequality;
            rec.tolerance = 1e-8;
            rec.target = 0.0;
            for (double alpha : alpha_list) {
                BerezinEvaluator ev(alpha, make_window(alpha, w));
                double worst = 0.0;
                double most_negative = 0.0;
                for (double rho : {0.0, 0.2, 0.45, 0.7, 0.9}) {
                    const double b = ev.eval(symbols[1], 0.0, std::complex<double>(rho, 0.0));
                    worst = std::max(worst, std::fabs(b) - symbols[1].sup_bound());
                    most_negative = std::min(most_negative, b);
                }
                rec.computed.push_back(std::max(worst, -most_negative - 1e-10));
            }
            rec.finalize();
            return rec;
        });
        jobs.push_back([=]() {
            SweepRecord rec;
            rec.theorem_tag = "berezin.mass";
            rec.parameters = {{"window", "e" + std::to_string(w)}, {"f", symbol_names[0]}};
            rec.sweep_param = "alpha";
            rec.sweep_values = alpha_list;
            rec.target = 1.0;  // int (1-|z|^2)^2 dlambda = 1
            rec.kind = CheckKind::Point;
            rec.tolerance = 2e-2;
            rec.note = "outer d lambda rule truncates the boundary; tolerance documented";
            for (double alpha : alpha_list) {
                BerezinEvaluator ev(alpha, make_window(alpha, w));
                rec.computed.push_back(ev.mass(symbols[0]));
            }
            rec.finalize();
            return rec;
        });
    }

    result.records = run_jobs(std::move(jobs));
    return result;
}

// ------------------------------------------------------------------ output

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) != 0 ? c : '_');
    return out;
}

}  // namespace

void write_suite_csv(const SuiteResult& result, const std::string& path,
                     const std::vector<std::pair<std::string, std::string>>& config) {
    const std::string tmp = path + ".tmp";
    {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("write_suite_csv: cannot open " + tmp);
    out << "# suite=" << result.suite << "\n";
    for (const auto& [k, v] : config) out << "# config " << k << "=" << v << "\n";
    out << "theorem_tag,params,sweep_param,sweep_value,computed,target,error,tolerance,pass\n";
    for (const auto& rec : result.records) {
        for (size_t i = 0; i < rec.computed.size(); ++i) {
            const double sv = i < rec.sweep_values.size() ? rec.sweep_values[i] : double(i);
            out << rec.theorem_tag << ",\"" << join_params(rec.parameters) << "\","
                << rec.sweep_param << "," << format_g17(sv) << "," << format_g17(rec.computed[i])
                << "," << format_g17(rec.target) << "," << format_g17(rec.errors[i]) << ","
                << format_g17(rec.tolerance) << "," << (rec.pass ? "1" : "0") << "\n";
        }
    }
    }
    std::filesystem::rename(tmp, path);
}

void write_suite_json(const SuiteResult& result, const std::string& path,
                      const std::vector<std::pair<std::string, std::string>>& config) {
    nlohmann::ordered_json j;
    j["suite"] = result.suite;
    auto& cfg = j["config"];
    for (const auto& [k, v] : config) cfg[k] = v;
    auto records = nlohmann::ordered_json::array();
    for (const auto& rec : result.records) {
        nlohmann::ordered_json r;
        r["theorem_tag"] = rec.theorem_tag;
        auto& params = r["parameters"];
        for (const auto& [k, v] : rec.parameters) params[k] = v;
        r["sweep_param"] = rec.sweep_param;
        r["sweep_values"] = rec.sweep_values;
        r["computed"] = rec.computed;
        r["target"] = rec.target;
        r["errors"] = rec.errors;
        r["tolerance"] = rec.tolerance;
        r["kind"] = rec.kind == CheckKind::Point ? "point"
                    : rec.kind == CheckKind::Trend ? "trend"
                                                   : "inequality";
        r["pass"] = rec.pass;
        if (!rec.note.empty()) r["note"] = rec.note;
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    j["all_pass"] = result.all_pass();
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("write_suite_json: cannot open " + tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

void write_suite_xy(const SuiteResult& result, const std::string& directory) {
    std::filesystem::create_directories(directory);
    for (const auto& rec : result.records) {
        const std::string name =
            sanitize(rec.theorem_tag) + "_" + sanitize(join_params(rec.parameters)) + ".xy";
        std::ofstream out(std::filesystem::path(directory) / name, std::ios::binary);
        if (!out) throw std::runtime_error("write_suite_xy: cannot open " + name);
        for (size_t i = 0; i < rec.computed.size(); ++i) {
            const double sv = i < rec.sweep_values.size() ? rec.sweep_values[i] : double(i);
            out << format_g17(sv) << " " << format_g17(rec.computed[i]) << "\n";
        }
    }
}

}  // namespace berfock
