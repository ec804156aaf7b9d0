#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "berfock/spaces.hpp"

namespace berfock {

enum class CheckKind { Point, Trend, Inequality };

// One verification sweep: a computed sequence against a target with an
// explicit tolerance, plus the monotone-trend gate for limit theorems.
struct SweepRecord {
    std::string theorem_tag;
    std::vector<std::pair<std::string, std::string>> parameters;  // deterministic order
    std::string sweep_param;  // "" for scalar records
    std::vector<double> sweep_values;
    std::vector<double> computed;
    double target = 0.0;
    std::vector<double> errors;  // |computed - target|, or max(0, violation) for bounds
    double tolerance = 0.0;
    CheckKind kind = CheckKind::Point;
    bool strict_monotone = false;
    bool pass = false;
    std::string note;

    // Fills errors and the verdict.  Trend records pass when the final error
    // is within tolerance and the error sequence decreases after its first
    // element; dips below the 1e-12 quadrature floor are exempt and noted.
    void finalize();
};

struct SuiteResult {
    std::string suite;
    std::vector<SweepRecord> records;
    bool all_pass() const;
};

// Bergman-to-Fock limit checks (measure, norm, monomial diagonal, closed-form
// norm expression), each a decreasing-error sweep over r_list.
SuiteResult limit_suite(double beta, double sigma, const std::vector<double>& r_list, int n_max);

// Sharp Toeplitz norm bounds: the Bergman bound with hyperbolic-disc equality,
// the Fock bound with Euclidean-disc equality, and the concentration
// inequality with equality at the normalized kernel at 0.
SuiteResult sharp_bound_suite(const std::vector<double>& alpha_list, double beta, std::uint64_t seed);

struct SzegoParams {
    double rho = 0.5;
    std::vector<double> alpha_list = {250.0, 500.0, 1000.0, 2000.0};
    std::vector<double> deltas = {0.3, 0.5, 0.7};
    int window_index = 0;     // psi = V^alpha e_j^0 for the fast path (0 = constant window)
    double dense_alpha = 40.0;  // dense-path spot check
    int dense_window_index = 1;
    int dense_n = 60;
    double trace_tolerance = 0.02;  // absolute deviation of the normalized ratios
};

// Eigenvalue-distribution laws for localization operators with radial
// disc-indicator symbols: normalized traces of powers, threshold counts, the
// operator norm, and the trace defect, as sweeps in alpha.
SuiteResult szego_suite(const SzegoParams& params);

// Orthogonality relations on A^2_alpha and F^2_beta for random polynomial
// quadruples of bounded degree; both sides agree to quadrature exactness.
SuiteResult orthogonality_suite(const std::vector<double>& bergman_alphas,
                                const std::vector<double>& fock_betas, int degree, int trials,
                                std::uint64_t seed);

// Windowed-Berezin convergence: L^p(T x D) distances decreasing in alpha for
// p in {1, 2}, plus the classical point value, contraction, and mass checks.
SuiteResult berezin_suite(const std::vector<double>& alpha_list, const std::vector<double>& p_list,
                          const std::vector<int>& window_indices);

// Deterministic CSV (long format) / JSON verdict emission.  `config` is the
// fully resolved run configuration, embedded in every output file.
void write_suite_csv(const SuiteResult& result, const std::string& path,
                     const std::vector<std::pair<std::string, std::string>>& config);
void write_suite_json(const SuiteResult& result, const std::string& path,
                      const std::vector<std::pair<std::string, std::string>>& config);
// Two-column whitespace-delimited (sweep_value, computed) files for plotting.
void write_suite_xy(const SuiteResult& result, const std::string& directory);

std::string format_g17(double v);

// Worker count for fanning independent records out (BERFOCK_WORKERS, >= 1).
int worker_count_from_env();

}  // namespace berfock
