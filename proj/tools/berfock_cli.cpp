// Command line front end: dispatches the verification suites and ad-hoc
// Toeplitz / localization computations with reproducible CSV/JSON output.
//
// Exit codes: 0 all verdicts pass, 1 suite failure, 2 config validation error.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "berfock/berezin.hpp"
#include "berfock/experiments.hpp"
#include "berfock/operators.hpp"
#include "berfock/quadrature.hpp"
#include "berfock/spaces.hpp"

namespace fs = std::filesystem;
using namespace berfock;

namespace {

struct GlobalOpts {
    std::string out = "berfock_out";
    std::uint64_t seed = 12345;
    bool xy = false;
};

using Config = std::vector<std::pair<std::string, std::string>>;

std::string join(const std::vector<double>& v) {
    std::string s;
    for (double x : v) {
        if (!s.empty()) s += ",";
        s += format_g17(x);
    }
    return s;
}

// window tokens: "1" or "e0" is the constant window, "eJ" the monomial e_J
int parse_window(const std::string& token) {
    if (token == "1" || token == "e0") return 0;
    if (token.size() >= 2 && token[0] == 'e') {
        const int j = std::stoi(token.substr(1));
        if (j < 0) throw std::domain_error("window index must be >= 0");
        return j;
    }
    throw std::domain_error("cannot parse window '" + token + "' (use 1, e0, e1, ...)");
}

// "indicator:R" | "constant:c" | "gauss:c"
SymbolSpec parse_symbol(const std::string& token, SymbolSpec::Domain domain) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) throw std::domain_error("symbol must be kind:value, got '" + token + "'");
    const std::string kind = token.substr(0, colon);
    const double value = std::stod(token.substr(colon + 1));
    if (kind == "indicator") return SymbolSpec::disc_indicator(domain, value);
    if (kind == "constant") return SymbolSpec::constant(domain, value);
    if (kind == "gauss") {
        if (!(value > 0.0)) throw std::domain_error("gauss symbol needs c > 0");
        return SymbolSpec::radial_profile(
            domain, [value](double rho) { return std::exp(-value * rho * rho); }, 1.0,
            "gauss(" + format_g17(value) + ")");
    }
    throw std::domain_error("unknown symbol kind '" + kind + "'");
}

// "re:im,re:im,..." Taylor coefficients
std::vector<std::complex<double>> parse_coeffs(const std::string& token) {
    std::vector<std::complex<double>> out;
    std::stringstream ss(token);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.emplace_back(std::stod(item), 0.0);
        } else {
            out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
        }
    }
    if (out.empty()) throw std::domain_error("empty coefficient list");
    return out;
}

int emit_suite(const SuiteResult& result, const GlobalOpts& g, const std::string& stem,
               const Config& config) {
    fs::create_directories(g.out);
    write_suite_csv(result, (fs::path(g.out) / (stem + ".csv")).string(), config);
    write_suite_json(result, (fs::path(g.out) / (stem + ".json")).string(), config);
    if (g.xy) write_suite_xy(result, (fs::path(g.out) / (stem + "_xy")).string());
    for (const auto& rec : result.records) {
        std::string params;
        for (const auto& [k, v] : rec.parameters) params += " " + k + "=" + v;
        const double final_err = rec.errors.empty() ? 0.0 : rec.errors.back();
        double worst = 0.0;
        for (double e : rec.errors) worst = std::max(worst, e);
        std::printf("[%s] %s%s final_err=%.3g worst_err=%.3g tol=%.3g%s%s\n",
                    rec.pass ? " ok " : "FAIL", rec.theorem_tag.c_str(), params.c_str(), final_err,
                    worst, rec.tolerance, rec.note.empty() ? "" : " note=", rec.note.c_str());
    }
    std::printf("%s: %s -> %s\n", result.suite.c_str(),
                result.all_pass() ? "all checks passed" : "FAILURES present", g.out.c_str());
    return result.all_pass() ? 0 : 1;
}

Config base_config(const GlobalOpts& g, const std::string& command) {
    return {{"command", command}, {"seed", std::to_string(g.seed)}, {"out", g.out}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"berfock: Toeplitz and localization operators on Bergman and Fock spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--out", g.out, "Output directory for CSV/JSON artifacts");
    app.add_option("--seed", g.seed, "Seed for randomized property checks");
    app.add_flag("--xy", g.xy, "Also emit whitespace-delimited xy files for plotting");
    app.set_config("--config", "", "Read options from a config file (flags override)");

    // ---- orthogonality ----
    auto* c_orth = app.add_subcommand("orthogonality", "Orthogonality relations on A^2_alpha / F^2_beta");
    std::string orth_space = "both";
    std::vector<double> orth_alphas = {0.0, 2.5, 10.0};
    std::vector<double> orth_betas = {0.5, 1.0, 3.0};
    int orth_degree = 3, orth_trials = 5;
    c_orth->add_option("--space", orth_space, "bergman | fock | both")
        ->check(CLI::IsMember({"bergman", "fock", "both"}));
    c_orth->add_option("--alpha", orth_alphas, "Bergman weights")->delimiter(',');
    c_orth->add_option("--beta", orth_betas, "Fock weights")->delimiter(',');
    c_orth->add_option("--degree", orth_degree, "Polynomial degree of the quadruples");
    c_orth->add_option("--trials", orth_trials, "Random quadruples per weight");

    // ---- limits ----
    auto* c_lim = app.add_subcommand("limits", "Bergman-to-Fock limit sweeps");
    double lim_beta = 1.0, lim_sigma = 0.0;
    std::vector<double> lim_r = {2.0, 4.0, 8.0, 16.0, 32.0};
    int lim_nmax = 8;
    c_lim->add_option("--beta", lim_beta, "Fock weight");
    c_lim->add_option("--sigma", lim_sigma, "Symbol scaling exponent");
    c_lim->add_option("--r", lim_r, "Increasing r sweep")->delimiter(',')->expected(0, -1);
    c_lim->add_option("--nmax", lim_nmax, "Largest monomial index (-1 skips the monomial sweep)");

    // ---- sharp-bounds ----
    auto* c_sharp = app.add_subcommand("sharp-bounds", "Sharp Toeplitz norm bounds");
    std::vector<double> sharp_alphas = {0.0, 2.0, 5.0, 10.0};
    double sharp_beta = 1.0;
    c_sharp->add_option("--alpha", sharp_alphas, "Bergman weights")->delimiter(',');
    c_sharp->add_option("--beta", sharp_beta, "Fock weight");

    // ---- szego ----
    auto* c_szego = app.add_subcommand("szego", "Eigenvalue-distribution (Szego-type) sweeps");
    SzegoParams szego;
    std::string szego_window = "1", szego_dense_window = "e1";
    c_szego->add_option("--rho", szego.rho, "Indicator radius");
    c_szego->add_option("--alpha", szego.alpha_list, "Increasing alpha sweep")->delimiter(',');
    c_szego->add_option("--window", szego_window, "Fast-path window (1, e0, e1, ...)");
    c_szego->add_option("--delta", szego.deltas, "Threshold list")->delimiter(',');
    c_szego->add_option("--dense-alpha", szego.dense_alpha, "Dense spot-check weight");
    c_szego->add_option("--dense-window", szego_dense_window, "Dense spot-check window");
    c_szego->add_option("--dense-n", szego.dense_n, "Dense truncation");
    c_szego->add_option("--trace-tol", szego.trace_tolerance, "Trace-ratio tolerance (absolute)");

    // ---- berezin ----
    auto* c_ber = app.add_subcommand("berezin", "Windowed Berezin transform distance sweeps");
    std::vector<double> ber_alphas = {10.0, 40.0, 160.0};
    std::vector<double> ber_p = {1.0, 2.0};
    std::vector<std::string> ber_windows = {"1", "e1"};
    c_ber->add_option("--alpha", ber_alphas, "Increasing alpha sweep")->delimiter(',');
    c_ber->add_option("--p", ber_p, "Distance exponents (1 and/or 2)")->delimiter(',');
    c_ber->add_option("--window", ber_windows, "Window list")->delimiter(',');

    // ---- toeplitz-spectrum ----
    auto* c_toep = app.add_subcommand("toeplitz-spectrum", "Assemble a Toeplitz matrix and emit its spectrum");
    std::string toep_space = "bergman", toep_symbol = "indicator:0.5";
    double toep_weight = 0.0;
    int toep_n = 40, toep_nrad = 80, toep_nang = 64;
    c_toep->add_option("--space", toep_space)->check(CLI::IsMember({"bergman", "fock"}));
    c_toep->add_option("--weight", toep_weight, "alpha (> -1) or beta (> 0)");
    c_toep->add_option("--symbol", toep_symbol, "indicator:R | constant:c | gauss:c");
    c_toep->add_option("--n", toep_n, "Truncation");
    c_toep->add_option("--nrad", toep_nrad);
    c_toep->add_option("--nang", toep_nang);
    double toep_scale_r = 1.0, toep_scale_sigma = 0.0;
    c_toep->add_option("--scale-r", toep_scale_r, "Symbol scaling f(r z) (disc spaces)");
    c_toep->add_option("--scale-sigma", toep_scale_sigma, "Symbol weight (1-|z|^2)^sigma");

    // ---- localization-matrix ----
    auto* c_loc = app.add_subcommand("localization-matrix", "Assemble a localization matrix");
    std::string loc_space = "bergman", loc_symbol = "indicator:0.5", loc_phi = "1", loc_psi;
    double loc_weight = 0.0;
    int loc_n = 16, loc_theta = 1, loc_nrad = 60, loc_nang = 48;
    c_loc->add_option("--space", loc_space)->check(CLI::IsMember({"bergman", "fock"}));
    c_loc->add_option("--weight", loc_weight);
    c_loc->add_option("--symbol", loc_symbol, "indicator:R | constant:c | gauss:c");
    c_loc->add_option("--phi", loc_phi, "Window Taylor coefficients re:im,re:im,...");
    c_loc->add_option("--psi", loc_psi, "Second window (defaults to phi)");
    c_loc->add_option("--n", loc_n, "Truncation");
    c_loc->add_option("--theta-nodes", loc_theta);
    c_loc->add_option("--nrad", loc_nrad);
    c_loc->add_option("--nang", loc_nang);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_orth->parsed()) {
            auto alphas = orth_space == "fock" ? std::vector<double>{} : orth_alphas;
            auto betas = orth_space == "bergman" ? std::vector<double>{} : orth_betas;
            auto result = orthogonality_suite(alphas, betas, orth_degree, orth_trials, g.seed);
            Config cfg = base_config(g, "orthogonality");
            cfg.insert(cfg.end(), {{"space", orth_space},
                                   {"alpha", join(alphas)},
                                   {"beta", join(betas)},
                                   {"degree", std::to_string(orth_degree)},
                                   {"trials", std::to_string(orth_trials)}});
            return emit_suite(result, g, "orthogonality_degree" + std::to_string(orth_degree) +
                                             "_trials" + std::to_string(orth_trials) + "_seed" +
                                             std::to_string(g.seed),
                              cfg);
        }
        if (c_lim->parsed()) {
            auto result = limit_suite(lim_beta, lim_sigma, lim_r, lim_nmax);
            Config cfg = base_config(g, "limits");
            cfg.insert(cfg.end(), {{"beta", format_g17(lim_beta)},
                                   {"sigma", format_g17(lim_sigma)},
                                   {"r", join(lim_r)},
                                   {"nmax", std::to_string(lim_nmax)}});
            char stem[128];
            std::snprintf(stem, sizeof stem, "limits_beta%g_sigma%g_rmax%g_nmax%d", lim_beta,
                          lim_sigma, lim_r.empty() ? 0.0 : lim_r.back(), lim_nmax);
            return emit_suite(result, g, stem, cfg);
        }
        if (c_sharp->parsed()) {
            auto result = sharp_bound_suite(sharp_alphas, sharp_beta, g.seed);
            Config cfg = base_config(g, "sharp-bounds");
            cfg.insert(cfg.end(), {{"alpha", join(sharp_alphas)}, {"beta", format_g17(sharp_beta)}});
            char stem[128];
            std::snprintf(stem, sizeof stem, "sharp_bounds_beta%g_seed%llu", sharp_beta,
                          static_cast<unsigned long long>(g.seed));
            return emit_suite(result, g, stem, cfg);
        }
        if (c_szego->parsed()) {
            szego.window_index = parse_window(szego_window);
            szego.dense_window_index = parse_window(szego_dense_window);
            auto result = szego_suite(szego);
            Config cfg = base_config(g, "szego");
            cfg.insert(cfg.end(), {{"rho", format_g17(szego.rho)},
                                   {"alpha", join(szego.alpha_list)},
                                   {"window", szego_window},
                                   {"delta", join(szego.deltas)},
                                   {"dense_alpha", format_g17(szego.dense_alpha)},
                                   {"dense_window", szego_dense_window},
                                   {"dense_n", std::to_string(szego.dense_n)},
                                   {"trace_tol", format_g17(szego.trace_tolerance)}});
            char stem[160];
            std::snprintf(stem, sizeof stem, "szego_rho%g_window%s_alphamax%g", szego.rho,
                          szego_window.c_str(), szego.alpha_list.empty() ? 0.0 : szego.alpha_list.back());
            return emit_suite(result, g, stem, cfg);
        }
        if (c_ber->parsed()) {
            std::vector<int> windows;
            for (const auto& w : ber_windows) windows.push_back(parse_window(w));
            // per-point value rows: (alpha, theta, z_re, z_im, B_value, f_value)
            fs::create_directories(g.out);
            const SymbolSpec fsym = SymbolSpec::radial_profile(
                SymbolSpec::Domain::Disc,
                [](double rho) { return (1.0 - rho * rho) * (1.0 - rho * rho); }, 1.0, "(1-|z|^2)^2");
            for (size_t wi = 0; wi < windows.size(); ++wi) {
                char name[128];
                std::snprintf(name, sizeof name, "berezin_values_window%s.csv",
                              ber_windows[wi].c_str());
                std::ofstream csv(fs::path(g.out) / name, std::ios::binary);
                csv << "# command=berezin window=" << ber_windows[wi] << " f=(1-|z|^2)^2 seed=" << g.seed
                    << "\n";
                csv << "alpha,theta,z_re,z_im,b_value,f_value\n";
                for (double alpha : ber_alphas) {
                    BerezinEvaluator ev(alpha, basis_vector(SpaceParams::bergman(alpha), windows[wi]));
                    for (double theta : {0.0, M_PI / 2.0}) {
                        for (double rho : {0.0, 0.25, 0.5, 0.75}) {
                            const std::complex<double> z = std::polar(rho, theta / 3.0);
                            const double b = ev.eval(fsym, theta, z);
                            csv << format_g17(alpha) << "," << format_g17(theta) << ","
                                << format_g17(z.real()) << "," << format_g17(z.imag()) << ","
                                << format_g17(b) << "," << format_g17(fsym.eval(theta, z)) << "\n";
                        }
                    }
                }
            }
            auto result = berezin_suite(ber_alphas, ber_p, windows);
            Config cfg = base_config(g, "berezin");
            cfg.insert(cfg.end(), {{"alpha", join(ber_alphas)},
                                   {"p", join(ber_p)},
                                   {"window", [&] {
                                        std::string s;
                                        for (const auto& w : ber_windows) s += (s.empty() ? "" : ",") + w;
                                        return s;
                                    }()}});
            char stem[128];
            std::snprintf(stem, sizeof stem, "berezin_alphamax%g", ber_alphas.empty() ? 0.0 : ber_alphas.back());
            return emit_suite(result, g, stem, cfg);
        }
        if (c_toep->parsed()) {
            const bool bergman = toep_space == "bergman";
            const SpaceParams space =
                bergman ? SpaceParams::bergman(toep_weight) : SpaceParams::fock(toep_weight);
            const bool scaled = toep_scale_r != 1.0 || toep_scale_sigma != 0.0;
            // a scaled symbol wraps a plane-domain base: f(r z) (1-|z|^2)^sigma
            const auto domain =
                bergman && !scaled ? SymbolSpec::Domain::Disc : SymbolSpec::Domain::Plane;
            SymbolSpec symbol = parse_symbol(toep_symbol, domain);
            if (scaled) symbol = symbol.scaled(toep_scale_r, toep_scale_sigma);
            QuadratureGrid grid;
            if (symbol.form() == SymbolSpec::Form::DiscIndicator && !scaled) {
                // split the radial rule on the jump circle
                grid = bergman ? disc_grid_split(toep_weight,
                                                 symbol.indicator_radius() * symbol.indicator_radius(),
                                                 toep_nrad, toep_nang)
                               : plane_grid_split(toep_weight,
                                                  toep_weight * symbol.indicator_radius() *
                                                      symbol.indicator_radius(),
                                                  toep_nrad, toep_nang);
            } else if (symbol.form() == SymbolSpec::Form::DiscIndicator && bergman &&
                       symbol.indicator_radius() < toep_scale_r) {
                const double s0 = std::pow(symbol.indicator_radius() / toep_scale_r, 2.0);
                grid = disc_grid_split(toep_weight, s0, toep_nrad, toep_nang);
            } else {
                grid = bergman ? disc_grid(toep_weight, toep_nrad, toep_nang)
                               : plane_grid(toep_weight, toep_nrad, toep_nang);
            }
            OperatorMatrix mat = toeplitz_matrix(space, symbol, toep_n, grid);
            SpectralSummary summary = spectral_summary(mat);
            fs::create_directories(g.out);
            char stem[160];
            std::snprintf(stem, sizeof stem, "toeplitz_%s_w%g_%s_n%d", toep_space.c_str(), toep_weight,
                          toep_symbol.c_str(), toep_n);
            std::string base = stem;
            for (auto& ch : base) {
                if (ch == ':' || ch == '.') ch = '_';
            }
            std::ofstream csv(fs::path(g.out) / (base + "_spectrum.csv"), std::ios::binary);
            csv << "# command=toeplitz-spectrum space=" << toep_space << " weight=" << format_g17(toep_weight)
                << " symbol=" << toep_symbol << " n=" << toep_n << " nrad=" << toep_nrad
                << " nang=" << toep_nang << " seed=" << g.seed << "\n";
            csv << to_csv_string(summary);
            std::ofstream js(fs::path(g.out) / (base + "_matrix.json"), std::ios::binary);
            js << to_json_string(mat) << "\n";
            std::printf("[ ok ] toeplitz-spectrum op_norm=%.12g trace=%.12g hermitian=%d -> %s\n",
                        summary.op_norm, summary.trace, mat.hermitian ? 1 : 0, g.out.c_str());
            return 0;
        }
        if (c_loc->parsed()) {
            const bool bergman = loc_space == "bergman";
            const SpaceParams space =
                bergman ? SpaceParams::bergman(loc_weight) : SpaceParams::fock(loc_weight);
            const auto domain = bergman ? SymbolSpec::Domain::Disc : SymbolSpec::Domain::Plane;
            const SymbolSpec symbol = parse_symbol(loc_symbol, domain);
            CoefficientVector phi(space, parse_coeffs(loc_phi));
            CoefficientVector psi = loc_psi.empty() ? phi : CoefficientVector(space, parse_coeffs(loc_psi));
            QuadratureGrid grid;
            if (symbol.form() == SymbolSpec::Form::DiscIndicator) {
                const double r2 = symbol.indicator_radius() * symbol.indicator_radius();
                grid = bergman ? disc_grid_split(loc_weight, r2, loc_nrad, loc_nang)
                               : plane_grid_split(loc_weight, loc_weight * r2, loc_nrad, loc_nang);
            } else {
                grid = bergman ? disc_grid(loc_weight, loc_nrad, loc_nang)
                               : plane_grid(loc_weight, loc_nrad, loc_nang);
            }
            OperatorMatrix mat = localization_matrix(space, symbol, phi, psi, loc_n, loc_theta, grid);
            SpectralSummary summary = spectral_summary(mat);
            fs::create_directories(g.out);
            char stem[160];
            std::snprintf(stem, sizeof stem, "localization_%s_w%g_%s_n%d_t%d", loc_space.c_str(),
                          loc_weight, loc_symbol.c_str(), loc_n, loc_theta);
            std::string base = stem;
            for (auto& ch : base) {
                if (ch == ':' || ch == '.') ch = '_';
            }
            std::ofstream js(fs::path(g.out) / (base + "_matrix.json"), std::ios::binary);
            js << to_json_string(mat) << "\n";
            std::ofstream csv(fs::path(g.out) / (base + "_spectrum.csv"), std::ios::binary);
            csv << "# command=localization-matrix space=" << loc_space << " weight=" << format_g17(loc_weight)
                << " symbol=" << loc_symbol << " phi=" << loc_phi << " psi=" << (loc_psi.empty() ? loc_phi : loc_psi)
                << " n=" << loc_n << " theta_nodes=" << loc_theta << " seed=" << g.seed << "\n";
            csv << to_csv_string(summary);
            std::printf("[ ok ] localization-matrix op_norm=%.12g trace=%.12g hermitian=%d captured_mass=%.12g -> %s\n",
                        summary.op_norm, summary.trace, mat.hermitian ? 1 : 0,
                        mat.provenance.window_captured_mass, g.out.c_str());
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
