#include "curvebound/trial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "curvebound/quadrature.hpp"

namespace curvebound {

namespace {

constexpr double kLogCutoff = 45.0;  // exp(-45) ~ 3e-20 of the peak

/// log of  int e^{-lam (|y|^p + drift y)} |y|^{wexp} dy  over the support.
/// Robust against large lam: the exponent minimum is subtracted and
/// reinstated in the returned log. Throws DivergenceError if the exponent
/// fails to grow on either side.
double log_weighted_exp_integral(double p, double lam, double drift, double wexp,
                                 Support support, double rel_tol) {
    auto E = [&](double y) { return lam * (std::pow(std::fabs(y), p) + drift * y); };
    // exponent minimizer: psi'(y) = -drift
    double ystar = 0.0;
    if (drift != 0.0)
        ystar = -(drift > 0 ? 1.0 : -1.0) * std::pow(std::fabs(drift) / p, 1.0 / (p - 1.0));
    const double lo_support = (support == Support::half_line_positive) ? 0.0
                                                                       : -std::numeric_limits<double>::infinity();
    if (ystar < lo_support) ystar = lo_support;
    const double e0 = E(ystar);

    // truncation points where E - e0 reaches the cutoff
    auto find_cut = [&](double dir) {
        double step = std::max({1.0, std::fabs(ystar)}) * 0.5;
        double y = ystar;
        for (int i = 0; i < 400; ++i) {
            const double cand = y + dir * step;
            if (cand < lo_support) return lo_support;
            if (E(cand) - e0 > kLogCutoff) return cand;
            y = cand;
            step *= 1.5;
        }
        throw DivergenceError("trial integral: exponent does not grow; integral diverges");
    };
    const double A = find_cut(-1.0);
    const double B = find_cut(+1.0);

    auto g = [&](double y) {
        const double e = E(y) - e0;
        if (e > kLogCutoff) return 0.0;
        return std::pow(std::fabs(y), wexp) * std::exp(-e);
    };

    // panels split at 0 and at the peak; weight singularity at 0 removed
    // by the power substitution y = u^{1/(1+wexp)}
    std::vector<double> cuts = {A, B};
    if (A < 0.0 && B > 0.0) cuts.push_back(0.0);
    if (A < ystar && ystar < B) cuts.push_back(ystar);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (b <= a) continue;
        const bool touches_zero = (a == 0.0 || b == 0.0);
        if (touches_zero && wexp < 0.0) {
            // y = sign * u^m with m = 1/(1+wexp); the transformed integrand
            // m u^{m(1+wexp)-1} e^{-E} has exponent exactly zero on u.
            const double m = 1.0 / (1.0 + wexp);
            const double sign = (a == 0.0) ? +1.0 : -1.0;
            const double extent = (a == 0.0) ? b : -a;
            auto sub = [&](double u) {
                const double y = sign * std::pow(u, m);
                const double e = E(y) - e0;
                return (e > kLogCutoff) ? 0.0 : m * std::exp(-e);
            };
            total += integrate_checked(sub, 0.0, std::pow(extent, 1.0 / m), rel_tol, 0.0);
        } else {
            total += integrate_checked(g, a, b, rel_tol, 0.0);
        }
    }
    if (!(total > 0.0))
        throw DivergenceError("trial integral: vanishing or invalid integral");
    return -e0 + std::log(total);
}

}  // namespace

double exp_trial_bound(const TrialFunction& trial) {
    const double p = trial.p;
    const double lam2 = 2.0 * trial.lambda;
    const double rel_tol = 1e-11;

    // ||f||_2^2 = int e^{-2 lam (psi + drift y)} |y|^{2 wp} dy
    const double log_num =
        log_weighted_exp_integral(p, lam2, trial.drift, 2.0 * trial.weight_power,
                                  trial.support, rel_tol);

    // int_{E_p} e^{-2 lam (tau + drift xi)} = 3^{1-1/p}/(2 lam) *
    //   int e^{-2 lam (|z|^p + drift 3^{1-1/p} z)} dz            (xi = 3^{1-1/p} z)
    const double scale = std::pow(3.0, 1.0 - 1.0 / p);
    const double log_den =
        std::log(scale) - std::log(lam2) +
        log_weighted_exp_integral(p, lam2, trial.drift * scale, 0.0, Support::full_line,
                                  rel_tol);

    return std::exp(3.0 * log_num - log_den);
}

double phi_value(double p, double lambda) {
    if (!(p > 1.0)) throw std::domain_error("phi_value: p must be > 1");
    if (!(lambda > 0.0)) throw std::domain_error("phi_value: lambda must be > 0");
    const double rel_tol = 1e-11;
    // phi_p(lam) = lam (int e^{-lam(psi - p y)} |y|^{(p-2)/3} dy)^3
    //              / int e^{-lam(3^{1-p}|xi|^p - p xi)} dxi
    const double log_num =
        log_weighted_exp_integral(p, lambda, -p, (p - 2.0) / 3.0, Support::full_line, rel_tol);
    const double scale = std::pow(3.0, 1.0 - 1.0 / p);
    const double log_den =
        std::log(scale) +
        log_weighted_exp_integral(p, lambda, -p * scale, 0.0, Support::full_line, rel_tol);
    return std::exp(std::log(lambda) + 3.0 * log_num - log_den);
}

PerturbativeReport phi_lambda(double p, double lambda) {
    if (!(p > 1.0 && p < 2.0))
        throw std::domain_error("phi_lambda: requires 1 < p < 2");
    if (!(lambda > 0.0)) throw std::domain_error("phi_lambda: lambda must be > 0");
    PerturbativeReport rep;
    rep.p = p;
    rep.lambda = lambda;
    rep.phi_value = phi_value(p, lambda);
    rep.limit_value = threshold(p, Parity::even);
    rep.predicted_slope =
        M_PI * (2.0 - p) * (2.0 * p - 1.0) / (9.0 * kSqrt3 * p * p * (p - 1.0) * (p - 1.0));
    // fixed abscissae in the asymptotic-but-quiet window
    const double phi_a = phi_value(p, 1e3);
    const double phi_b = phi_value(p, 2e3);
    rep.slope_estimate = (phi_a - phi_b) / (1e-3 - 5e-4);
    return rep;
}

}  // namespace curvebound
