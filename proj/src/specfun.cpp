#include "curvebound/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "curvebound/kahan.hpp"

namespace curvebound {

namespace {

// Lanczos g = 7, n = 9. Standard coefficient set (Godfrey / GSL lineage),
// relative error ~1e-15 for x > 0.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2 pi)/2

double lanczos_log_gamma(double x) {
    // Computes ln Gamma(x) for x >= 0.5.
    const double z = x - 1.0;
    CompensatedSum<double> series;
    series.add(kLanczos[0]);
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        series.add(kLanczos[i] / (z + static_cast<double>(i)));
    const double t = z + kLanczosG + 0.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(series.result());
}

}  // namespace

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("log_gamma: requires finite x > 0, got " + std::to_string(x));
    if (x >= 0.5) return lanczos_log_gamma(x);
    // Recurrence Gamma(x) = Gamma(x+1)/x keeps the Lanczos argument >= 0.5.
    return lanczos_log_gamma(x + 1.0) - std::log(x);
}

SignedLogValue generalized_binomial(double alpha, int n) {
    if (n < 0) throw std::domain_error("generalized_binomial: n must be >= 0");
    if (!std::isfinite(alpha))
        throw std::domain_error("generalized_binomial: alpha must be finite");
    double log_mag = 0.0;
    int sign = +1;
    for (int j = 0; j < n; ++j) {
        const double factor = alpha - static_cast<double>(j);
        if (factor == 0.0) return SignedLogValue::zero();
        if (factor < 0.0) sign = -sign;
        log_mag += std::log(std::fabs(factor)) - std::log(static_cast<double>(j + 1));
    }
    return SignedLogValue::from_log(log_mag, sign);
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be >= 0");
    static const std::array<double, 21> table = [] {
        std::array<double, 21> t{};
        double f = 1.0;
        t[0] = 0.0;
        for (int i = 1; i <= 20; ++i) {
            f *= i;
            t[static_cast<std::size_t>(i)] = std::log(f);
        }
        return t;
    }();
    if (n <= 20) return table[static_cast<std::size_t>(n)];
    return log_gamma(static_cast<double>(n) + 1.0);
}

double legendre_eval(int n, double t) {
    if (n < 0) throw std::domain_error("legendre_eval: n must be >= 0");
    if (std::fabs(t) > 1.0)
        throw std::domain_error("legendre_eval: |t| must be <= 1, got " + std::to_string(t));
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = t;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0) * t * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double legendre_eval_explicit(int n, double t) {
    if (n < 0) throw std::domain_error("legendre_eval_explicit: n must be >= 0");
    if (std::fabs(t) > 1.0)
        throw std::domain_error("legendre_eval_explicit: |t| must be <= 1");
    CompensatedSum<double> sum;
    for (int k = 0; k <= n; ++k) {
        const SignedLogValue b1 = generalized_binomial(static_cast<double>(n), k);
        const SignedLogValue b2 =
            generalized_binomial((static_cast<double>(n + k) - 1.0) / 2.0, n);
        sum.add((b1 * b2).value() * std::pow(t, k));
    }
    return std::ldexp(sum.result(), n);  // 2^n * sum
}

LegendreBasis::LegendreBasis(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw std::domain_error("LegendreBasis: max_degree must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        auto& row = coeffs_[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 0.0);
        for (int k = 0; k <= n; ++k) {
            const SignedLogValue b1 = generalized_binomial(static_cast<double>(n), k);
            const SignedLogValue b2 =
                generalized_binomial((static_cast<double>(n + k) - 1.0) / 2.0, n);
            row[static_cast<std::size_t>(k)] = std::ldexp((b1 * b2).value(), n);
        }
    }
}

double LegendreBasis::coefficient(int n, int k) const {
    if (n < 0 || n > max_degree_ || k < 0 || k > n)
        throw std::domain_error("LegendreBasis::coefficient: index out of range");
    return coeffs_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

double LegendreBasis::evaluate(int n, double t) const {
    if (n < 0 || n > max_degree_)
        throw std::domain_error("LegendreBasis::evaluate: degree out of range");
    const auto& row = coeffs_[static_cast<std::size_t>(n)];
    double acc = 0.0;
    for (int k = n; k >= 0; --k) acc = acc * t + row[static_cast<std::size_t>(k)];
    return acc;
}

GaussLegendreRule gauss_legendre(int m) {
    if (m < 1) throw std::domain_error("gauss_legendre: m must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(m));
    rule.weights.resize(static_cast<std::size_t>(m));
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Initial guess (Abramowitz & Stegun 22.16.6), then Newton.
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double prev = 1.0, cur = x;
            for (int k = 1; k < m; ++k) {
                const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
                prev = cur;
                cur = next;
            }
            dp = m * (x * cur - prev) / (x * x - 1.0);
            const double dx = cur / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.nodes[static_cast<std::size_t>(m - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(m - 1 - i)] = w;
    }
    return rule;
}

}  // namespace curvebound
