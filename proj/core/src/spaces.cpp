#include "berfock/spaces.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "berfock/special.hpp"

namespace berfock {

using special::log_gamma;

SpaceParams::SpaceParams(SpaceKind k, double w) : kind(k), weight(w) {
    if (k == SpaceKind::Bergman && !(w > -1.0)) {
        throw std::domain_error("SpaceParams: Bergman weight requires alpha > -1");
    }
    if (k == SpaceKind::Fock && !(w > 0.0)) {
        throw std::domain_error("SpaceParams: Fock weight requires beta > 0");
    }
    if (!std::isfinite(w)) throw std::domain_error("SpaceParams: non-finite weight");
}

double log_monomial_norm_sq(const SpaceParams& space, int n) {
    if (n < 0) throw std::domain_error("log_monomial_norm_sq: n >= 0 required");
    const double nn = double(n);
    if (space.kind == SpaceKind::Bergman) {
        const double a = space.weight;
        return log_gamma(nn + 1.0) + log_gamma(a + 2.0) - log_gamma(nn + a + 2.0);
    }
    return log_gamma(nn + 1.0) - nn * std::log(space.weight);
}

double monomial_norm_sq(const SpaceParams& space, int n) {
    return std::exp(log_monomial_norm_sq(space, n));
}

double log_basis_coeff(const SpaceParams& space, int n) {
    return -0.5 * log_monomial_norm_sq(space, n);
}

CoefficientVector::CoefficientVector(SpaceParams space, std::vector<std::complex<double>> coeffs)
    : space_(space), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::domain_error("CoefficientVector: needs at least one coefficient");
    for (auto c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::domain_error("CoefficientVector: non-finite coefficient");
        }
    }
}

std::complex<double> CoefficientVector::onb_coeff(int n) const {
    auto a = coeff(n);
    if (a == 0.0) return 0.0;
    return a * std::exp(0.5 * log_monomial_norm_sq(space_, n));
}

double CoefficientVector::norm_sq() const {
    double s = 0.0;
    for (int n = 0; n <= degree(); ++n) s += std::norm(coeffs_[size_t(n)]) * monomial_norm_sq(space_, n);
    return s;
}

std::complex<double> CoefficientVector::evaluate(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (int n = degree(); n >= 0; --n) acc = acc * z + coeffs_[size_t(n)];
    return acc;
}

CoefficientVector basis_vector(const SpaceParams& space, int n) {
    std::vector<std::complex<double>> c(size_t(n) + 1, 0.0);
    c[size_t(n)] = std::exp(log_basis_coeff(space, n));
    return CoefficientVector(space, std::move(c));
}

std::complex<double> inner_product(const CoefficientVector& u, const CoefficientVector& v) {
    if (!(u.space() == v.space())) throw std::invalid_argument("inner_product: space mismatch");
    std::complex<double> s = 0.0;
    const int d = std::min(u.degree(), v.degree());
    for (int n = 0; n <= d; ++n) {
        s += u.coeff(n) * std::conj(v.coeff(n)) * monomial_norm_sq(u.space(), n);
    }
    return s;
}

CoefficientVector v_alpha_transform(const CoefficientVector& u, double target_alpha) {
    if (u.space().kind != SpaceKind::Bergman || u.space().weight != 0.0) {
        throw std::invalid_argument("v_alpha_transform: input must live in Bergman alpha = 0");
    }
    const SpaceParams target = SpaceParams::bergman(target_alpha);
    std::vector<std::complex<double>> out(size_t(u.degree()) + 1, 0.0);
    for (int n = 0; n <= u.degree(); ++n) {
        // log factor = -1/2 log(n+1) + 1/2 [lgamma(n+a+2) - lgamma(n+1) - lgamma(a+2)]
        const double lf = -0.5 * std::log(double(n) + 1.0) +
                          0.5 * (log_gamma(double(n) + target_alpha + 2.0) -
                                 log_gamma(double(n) + 1.0) - log_gamma(target_alpha + 2.0));
        out[size_t(n)] = u.coeff(n) * std::exp(lf);
    }
    return CoefficientVector(target, std::move(out));
}

CoefficientVector rotate(const CoefficientVector& u, double theta) {
    std::vector<std::complex<double>> out(size_t(u.degree()) + 1, 0.0);
    for (int n = 0; n <= u.degree(); ++n) out[size_t(n)] = u.coeff(n) * std::polar(1.0, double(n) * theta);
    return CoefficientVector(u.space(), std::move(out));
}

std::complex<double> kernel_eval(const SpaceParams& space, std::complex<double> z,
                                 std::complex<double> w) {
    std::complex<double> log_k;
    if (space.kind == SpaceKind::Bergman) {
        if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0) {
            throw std::domain_error("kernel_eval: Bergman arguments must lie in the open disc");
        }
        log_k = -(2.0 + space.weight) * std::log(1.0 - z * std::conj(w));
    } else {
        log_k = space.weight * z * std::conj(w);
    }
    if (log_k.real() > 709.0) throw std::overflow_error("kernel_eval: kernel overflows double");
    return std::exp(log_k);
}

CoefficientVector kernel_coefficients(const SpaceParams& space, std::complex<double> w, int degree) {
    if (degree < 0) throw std::domain_error("kernel_coefficients: degree >= 0 required");
    std::vector<std::complex<double>> c(size_t(degree) + 1, 0.0);
    const std::complex<double> wbar = std::conj(w);
    if (space.kind == SpaceKind::Bergman) {
        // K_w(z) = sum_n Gamma(n+a+2)/(n! Gamma(a+2)) conj(w)^n z^n
        const double a = space.weight;
        std::complex<double> term = 1.0;
        for (int n = 0; n <= degree; ++n) {
            c[size_t(n)] = term;
            term *= wbar * (double(n) + a + 2.0) / (double(n) + 1.0);
        }
    } else {
        // K_w(z) = sum_n (beta conj(w))^n / n! z^n
        std::complex<double> term = 1.0;
        for (int n = 0; n <= degree; ++n) {
            c[size_t(n)] = term;
            term *= space.weight * wbar / (double(n) + 1.0);
        }
    }
    return CoefficientVector(space, std::move(c));
}

std::string to_json_string(const CoefficientVector& u) {
    nlohmann::json j;
    j["kind"] = u.space().kind == SpaceKind::Bergman ? "bergman" : "fock";
    j["weight"] = u.space().weight;
    auto arr = nlohmann::json::array();
    for (auto c : u.coeffs()) arr.push_back({c.real(), c.imag()});
    j["coeffs"] = std::move(arr);
    return j.dump();
}

CoefficientVector coefficient_vector_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    SpaceParams space(kind == "bergman" ? SpaceKind::Bergman : SpaceKind::Fock,
                      j.at("weight").get<double>());
    std::vector<std::complex<double>> coeffs;
    for (const auto& p : j.at("coeffs")) {
        coeffs.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    return CoefficientVector(space, std::move(coeffs));
}

}  // namespace berfock
