// Acceptance suite: runs the project's numbered acceptance criteria and
// prints one pass/fail line per criterion (plus sub-check details).
//
// usage: berfock_acceptance [--criterion N] [--cli PATH]
//   --criterion N  run a single criterion (1..9); default runs all
//   --cli PATH     berfock CLI binary, needed by criterion 9

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "berfock/berezin.hpp"
#include "berfock/experiments.hpp"
#include "berfock/geometry.hpp"
#include "berfock/operators.hpp"
#include "berfock/quadrature.hpp"
#include "berfock/spaces.hpp"
#include "berfock/special.hpp"
#include "berfock/unitaries.hpp"

using namespace berfock;
using cplx = std::complex<double>;
namespace fs = std::filesystem;

namespace {

struct Reporter {
    bool ok = true;
    void sub(bool pass, const std::string& what) {
        ok = ok && pass;
        std::printf("    [%s] %s\n", pass ? "pass" : "FAIL", what.c_str());
    }
};

std::string g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

GroupElement random_element(std::mt19937_64& rng) {
    return GroupElement(2.0 * M_PI * uniform(rng),
                        std::polar(0.95 * uniform(rng), 2.0 * M_PI * uniform(rng)));
}

CoefficientVector unit_window(const SpaceParams& space, std::mt19937_64& rng, int degree) {
    std::vector<cplx> c(size_t(degree) + 1, 0.0);
    for (auto& x : c) x = cplx(uniform(rng) - 0.5, uniform(rng) - 0.5);
    CoefficientVector u(space, c);
    const double norm = std::sqrt(u.norm_sq());
    for (auto& x : c) x /= norm;
    return CoefficientVector(space, c);
}

bool record_passes(const SuiteResult& result, Reporter& rep) {
    bool all = true;
    for (const auto& rec : result.records) {
        double worst = 0.0;
        for (double e : rec.errors) worst = std::max(worst, e);
        rep.sub(rec.pass, rec.theorem_tag + " worst_err=" + g(worst) + " tol=" + g(rec.tolerance) +
                              (rec.note.empty() ? "" : " (" + rec.note + ")"));
        all = all && rec.pass;
    }
    return all;
}

// ---- criterion 1: group axioms --------------------------------------------
bool criterion1() {
    Reporter rep;
    std::mt19937_64 rng(20250810);
    double assoc = 0.0, inv = 0.0, hom = 0.0;
    for (int i = 0; i < 1000; ++i) {
        GroupElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
        GroupElement l = compose(compose(a, b), c), r = compose(a, compose(b, c));
        assoc = std::max(assoc, std::abs(l.unit() - r.unit()) + std::abs(l.point() - r.point()));
        GroupElement e = compose(a, inverse(a));
        inv = std::max(inv, std::abs(e.unit() - 1.0) + std::abs(e.point()));
        const cplx zeta = std::polar(0.85 * uniform(rng), 2.0 * M_PI * uniform(rng));
        hom = std::max(hom, std::abs(mobius_eval(compose(a, b), zeta) -
                                     mobius_eval(a, mobius_eval(b, zeta))));
    }
    rep.sub(assoc <= 1e-12, "associativity max dev = " + g(assoc) + " <= 1e-12");
    rep.sub(inv <= 1e-12, "inverse/identity max dev = " + g(inv) + " <= 1e-12");
    rep.sub(hom <= 1e-12, "pointwise homomorphism max dev = " + g(hom) + " <= 1e-12");
    return rep.ok;
}

// ---- criterion 2: orthogonality relations ----------------------------------
bool criterion2() {
    Reporter rep;
    auto result = orthogonality_suite({0.0, 2.5, 10.0}, {0.5, 1.0, 3.0}, 3, 5, 99);
    return record_passes(result, rep);
}

// ---- criterion 3: diagonal spectra -----------------------------------------
bool criterion3() {
    Reporter rep;
    {
        const double beta = 1.0, R = 1.0;
        auto mat = toeplitz_matrix(SpaceParams::fock(beta),
                                   SymbolSpec::disc_indicator(SymbolSpec::Domain::Plane, R), 40,
                                   plane_grid_split(beta, beta * R * R, 80, 16));
        auto s = spectral_summary(mat);
        std::vector<double> expect;
        for (int n = 0; n < 40; ++n) expect.push_back(special::reg_inc_gamma_p(n + 1.0, beta * R * R));
        std::sort(expect.begin(), expect.end());
        double dev = 0.0;
        for (int n = 0; n < 40; ++n) dev = std::max(dev, std::fabs(s.eigenvalues[size_t(n)] - expect[size_t(n)]));
        rep.sub(dev <= 1e-10, "Fock indicator eigenvalues vs P(n+1, beta R^2), max dev = " + g(dev));
        const double g0 = special::reg_inc_gamma_p(1.0, 1.0);
        rep.sub(std::fabs(g0 - (1.0 - std::exp(-1.0))) <= 1e-12 && std::fabs(g0 - 0.6321206) <= 1e-7,
                "gamma_0 = " + g(g0) + " = 1 - e^{-1} (~0.6321206)");
    }
    for (double alpha : {0.0, 3.7}) {
        const double rho = 0.5;
        auto mat = toeplitz_matrix(SpaceParams::bergman(alpha),
                                   SymbolSpec::disc_indicator(SymbolSpec::Domain::Disc, rho), 40,
                                   disc_grid_split(alpha, rho * rho, 60, 16));
        double dev = 0.0;
        for (int n = 0; n < 40; ++n) {
            dev = std::max(dev, std::abs(mat.entries(n, n) -
                                         cplx(special::reg_inc_beta(rho * rho, n + 1.0, alpha + 1.0))));
        }
        rep.sub(dev <= 1e-10, "Bergman indicator diagonal vs I_x(n+1, alpha+1) at alpha=" + g(alpha) +
                                  ", max dev = " + g(dev));
    }
    return rep.ok;
}

// ---- criterion 4: norm bound and positivity --------------------------------
bool criterion4() {
    Reporter rep;
    std::mt19937_64 rng(424242);
    double worst_excess = -1.0, worst_negative = 1.0;
    for (int trial = 0; trial < 20; ++trial) {
        const bool bergman = trial < 10;
        const double a = 0.2 + uniform(rng), c = uniform(rng);
        const double delta = 2.0 * M_PI * uniform(rng), gamma = 2.0 * M_PI * uniform(rng);
        double sup;
        SymbolSpec f = [&]() {
            if (bergman) {
                sup = 2.0 * a + c;
                return SymbolSpec::general(
                    SymbolSpec::Domain::Disc,
                    [=](double t, cplx z) {
                        return a * (1.0 + std::cos(t + delta) * (z * std::polar(1.0, gamma)).real()) +
                               c * std::norm(z);
                    },
                    sup, "seeded-disc");
            }
            const double m = 1.0 / std::sqrt(2.0 * std::exp(1.0));  // max of |z| e^{-|z|^2}
            sup = a * (1.0 + m) + c;
            return SymbolSpec::general(
                SymbolSpec::Domain::Plane,
                [=](double t, cplx z) {
                    const double env = std::exp(-std::norm(z));
                    return a * env *
                               (1.0 + std::cos(t + delta) * (z * std::polar(1.0, gamma)).real() * env) +
                           c * std::exp(-2.0 * std::norm(z));
                },
                sup, "seeded-plane");
        }();
        OperatorMatrix mat = [&]() {
            if (bergman) {
                const double alpha = 6.0 * uniform(rng);
                const auto space = SpaceParams::bergman(alpha);
                return localization_matrix(space, f, unit_window(space, rng, 2),
                                           unit_window(space, rng, 2), 14, 24,
                                           disc_grid(alpha, 30, 48));
            }
            const double beta = 0.5 + 1.5 * uniform(rng);
            const auto space = SpaceParams::fock(beta);
            return localization_matrix(space, f, unit_window(space, rng, 2),
                                       unit_window(space, rng, 2), 14, 24, plane_grid(beta, 60, 48));
        }();
        // norm bound with the two independent windows
        auto s = spectral_summary(mat);
        worst_excess = std::max(worst_excess, s.op_norm - sup);
        // positivity with phi = psi
        const auto space = mat.space;
        auto w = unit_window(space, rng, 2);
        auto psd = localization_matrix(space, f, w, w, 14, 24,
                                       bergman ? disc_grid(space.weight, 30, 48)
                                               : plane_grid(space.weight, 60, 48));
        auto sp = spectral_summary(psd);
        worst_negative = std::min(worst_negative, sp.eigenvalues.front());
        worst_excess = std::max(worst_excess, sp.op_norm - sup);
    }
    rep.sub(worst_excess <= 1e-6, "op_norm <= sup|f| + 1e-6, worst excess = " + g(worst_excess));
    rep.sub(worst_negative >= -1e-8,
            "min eigenvalue >= -1e-8 for f >= 0, phi = psi; worst = " + g(worst_negative));
    return rep.ok;
}

// ---- criterion 5: sharp bounds ----------------------------------------------
bool criterion5() {
    Reporter rep;
    auto result = sharp_bound_suite({0.0, 2.0, 5.0, 10.0}, 1.0, 31);
    return record_passes(result, rep);
}

// ---- criterion 6: Bergman-to-Fock limits ------------------------------------
bool criterion6() {
    Reporter rep;
    auto sweep = limit_suite(1.0, 0.0, {2.0, 4.0, 8.0, 16.0, 32.0}, 8);
    bool all = record_passes(sweep, rep);
    // closed-form norm expression at r = 100, sigma = 2 (point value; the
    // sigma > 0 deviation changes sign near r = 4, so no trend is gated here)
    {
        const double r = 100.0, sigma = 2.0, a = r * r;
        const double v = (a + 1.0) / (a + sigma + 1.0) *
                         (1.0 - std::exp((a + sigma + 1.0) * std::log1p(-1.0 / (r * r))));
        const double err = std::fabs(v - (1.0 - std::exp(-1.0)));
        rep.sub(err <= 2e-3,
                "closed-form norm at r=100, sigma=2: |value - (1-e^{-1})| = " + g(err) + " <= 2e-3");
        all = all && err <= 2e-3;
    }
    return all;
}

// ---- criterion 7: Szego suite -----------------------------------------------
bool criterion7() {
    Reporter rep;
    SzegoParams params;  // rho = 0.5, alpha sweep up to 2000, window 1
    auto result = szego_suite(params);
    const double target = 1.0 / 3.0;

    // point checks at alpha = 1000 for h in {x, x^2, x^3}; "within 2%" is the
    // absolute deviation of the normalized ratio (the convention the defect
    // gate below uses)
    const char* names[] = {"x", "x^2", "x^3"};
    for (int k = 2; k <= 4; ++k) {
        for (const auto& rec : result.records) {
            if (rec.theorem_tag != "szego.trace.pow" + std::to_string(k)) continue;
            double at1000 = 0.0;
            for (size_t i = 0; i < rec.sweep_values.size(); ++i) {
                if (rec.sweep_values[i] == 1000.0) at1000 = rec.computed[i];
            }
            const double dev = std::fabs(at1000 - target);
            rep.sub(dev <= 0.02, std::string("tr(L h(L))/(alpha+1), h=") + names[k - 2] +
                                     " at alpha=1000: " + g(at1000) + ", |dev from 1/3| = " + g(dev) +
                                     " <= 0.02");
        }
    }
    for (const auto& rec : result.records) {
        if (rec.theorem_tag == "szego.count") {
            for (size_t i = 0; i < rec.computed.size(); ++i) {
                const double dev = std::fabs(rec.computed[i] - target);
                rep.sub(dev <= 0.02, "count ratio at alpha=2000, delta=" + g(rec.sweep_values[i]) +
                                         ": dev = " + g(dev) + " <= 0.02");
            }
        } else if (rec.theorem_tag == "szego.norm") {
            rep.sub(rec.computed[0] >= 0.99, "op_norm at alpha=2000 = " + g(rec.computed[0]) + " >= 0.99");
        } else if (rec.theorem_tag == "szego.defect") {
            bool dec = true;
            for (size_t i = 1; i < rec.errors.size(); ++i) dec = dec && rec.errors[i] < rec.errors[i - 1];
            double at1000 = 0.0;
            for (size_t i = 0; i < rec.sweep_values.size(); ++i) {
                if (rec.sweep_values[i] == 1000.0) at1000 = rec.errors[i];
            }
            rep.sub(dec && at1000 <= 0.02,
                    "defect ratio decreasing, value at alpha=1000 = " + g(at1000) + " <= 0.02");
        } else if (rec.theorem_tag == "szego.dense") {
            rep.sub(rec.pass, "dense spot check (psi = e_1, alpha = 40, N = 60) agrees with the trend");
        }
    }
    return rep.ok;
}

// ---- criterion 8: Berezin ----------------------------------------------------
bool criterion8() {
    Reporter rep;
    // classical value 1/(alpha+2) for f = |w|^2 at z = 0
    const auto fsq = SymbolSpec::radial_profile(SymbolSpec::Domain::Disc,
                                                [](double rho) { return rho * rho; }, 1.0, "|w|^2");
    for (double alpha : {10.0, 40.0}) {
        BerezinEvaluator ev(alpha, basis_vector(SpaceParams::bergman(alpha), 0));
        const double dev = std::fabs(ev.eval(fsq, 0.0, 0.0) - 1.0 / (alpha + 2.0));
        rep.sub(dev <= 1e-8, "classical Berezin of |w|^2 at 0, alpha=" + g(alpha) + ": dev = " + g(dev));
    }
    auto result = berezin_suite({10.0, 40.0, 160.0}, {1.0, 2.0}, {0, 1});
    const bool suites = record_passes(result, rep);
    return rep.ok && suites;
}

// ---- criterion 9: CLI determinism --------------------------------------------
bool criterion9(const std::string& cli) {
    Reporter rep;
    if (cli.empty()) {
        rep.sub(false, "no --cli path supplied");
        return false;
    }
    const fs::path base = fs::temp_directory_path() / "berfock_acceptance_determinism";
    std::error_code ec;
    fs::remove_all(base, ec);
    const std::vector<std::string> runs = {
        " szego --rho 0.5 --alpha 500,1000,2000 --window 1 --dense-alpha 20 --dense-n 30 --seed 7 --out ",
        " limits --beta 1 --sigma 0 --r 2,4,8,16 --nmax 2 --seed 7 --out ",
    };
    bool all = true;
    for (size_t i = 0; i < runs.size(); ++i) {
        // identical config means the same --out too: rerun into the same
        // directory and compare the bytes captured in between
        const fs::path dir = base / ("run" + std::to_string(i));
        const auto snapshot = [&]() {
            std::map<std::string, std::string> files;
            for (const auto& e : fs::recursive_directory_iterator(dir)) {
                if (!e.is_regular_file()) continue;
                std::ifstream in(e.path(), std::ios::binary);
                std::stringstream ss;
                ss << in.rdbuf();
                files[fs::relative(e.path(), dir).string()] = ss.str();
            }
            return files;
        };
        const std::string cmd = "\"" + cli + "\"" + runs[i] + "\"" + dir.string() + "\" > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
            rep.sub(false, "CLI run failed (exit " + std::to_string(rc) + "): " + runs[i]);
            return false;
        }
        const auto first = snapshot();
        fs::remove_all(dir, ec);
        rc = std::system(cmd.c_str());
        if (rc != 0) {
            rep.sub(false, "CLI rerun failed (exit " + std::to_string(rc) + "): " + runs[i]);
            return false;
        }
        const auto second = snapshot();
        const bool same = !first.empty() && first == second;
        rep.sub(same, "byte-identical outputs (" + std::to_string(first.size()) + " files) for" + runs[i]);
        all = all && same;
    }
    fs::remove_all(base, ec);
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::string cli;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
        if (arg == "--cli" && i + 1 < argc) cli = argv[++i];
    }
    struct Entry {
        int id;
        const char* title;
        double time_limit;  // seconds; 0 = no stated limit
        std::function<bool()> run;
    };
    const std::vector<Entry> entries = {
        {1, "group axioms and Mobius homomorphism (1e-12)", 1.0, [] { return criterion1(); }},
        {2, "orthogonality relations on A^2_alpha and F^2_beta (1e-7)", 60.0, [] { return criterion2(); }},
        {3, "diagonal spectra vs regularized incomplete gamma/beta (1e-10)", 0.0, [] { return criterion3(); }},
        {4, "norm bound and positivity for 20 seeded symbols", 0.0, [] { return criterion4(); }},
        {5, "sharp norm bounds with indicator equality", 60.0, [] { return criterion5(); }},
        {6, "Bergman-to-Fock limit sweeps", 120.0, [] { return criterion6(); }},
        {7, "Szego eigenvalue-distribution suite", 300.0, [] { return criterion7(); }},
        {8, "windowed Berezin transform checks", 300.0, [] { return criterion8(); }},
        {9, "CLI determinism (byte-identical reruns)", 0.0, [&] { return criterion9(cli); }},
    };
    bool all = true;
    for (const auto& e : entries) {
        if (only != 0 && e.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = e.run();
        } catch (const std::exception& ex) {
            std::printf("    [FAIL] exception: %s\n", ex.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (e.time_limit > 0.0 && secs > e.time_limit) {
            std::printf("    [FAIL] runtime %.1fs exceeds the %.0fs budget\n", secs, e.time_limit);
            ok = false;
        }
        std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", e.id, e.title, secs);
        all = all && ok;
    }
    return all ? 0 : 1;
}
