#include "curvebound/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "curvebound/kahan.hpp"
#include "curvebound/moments.hpp"
#include "curvebound/specfun.hpp"

namespace curvebound {

void DensityGrid::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < column_names.size(); ++i)
        os << (i ? "," : "") << column_names[i];
    os << "\n";
    char buf[32];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << "\n";
    }
}

double legendre_coefficient(int n, const std::vector<double>& moments) {
    if (n < 0 || static_cast<std::size_t>(n) >= moments.size())
        throw std::domain_error("legendre_coefficient: moment table too short");
    CompensatedSum<long double> sum;
    for (int k = 0; k <= n; ++k) {
        const SignedLogValue b1 = generalized_binomial(2.0 * n, 2 * k);
        const SignedLogValue b2 = generalized_binomial(n + k - 0.5, 2 * n);
        const SignedLogValue prod = b1 * b2;
        sum.add(static_cast<long double>(prod.value()) *
                static_cast<long double>(moments[static_cast<std::size_t>(k)]));
    }
    return static_cast<double>(sum.result());
}

double legendre_coefficient(int n, double p, double a) {
    MomentVector mv(p, a, n);
    return legendre_coefficient(n, mv.entries);
}

namespace {

/// log of the series prefactor, written with every Gamma argument positive
/// on a > -(p+1)/6:
///   3^{1-1/p} p^3 Gamma(1+(1+6a)/p) / (8 Gamma((p+1+6a)/(3p))^3)
double log_prefactor(double p, double a) {
    return (1.0 - 1.0 / p) * std::log(3.0) + 3.0 * std::log(p) +
           log_gamma(1.0 + (1.0 + 6.0 * a) / p) - std::log(8.0) -
           3.0 * log_gamma((p + 1.0 + 6.0 * a) / (3.0 * p));
}

}  // namespace

BoundReport series_bound(double p, double a, int N) {
    if (!(p > 1.0)) throw std::domain_error("series_bound: p must be > 1");
    if (N < 0) throw std::domain_error("series_bound: N must be >= 0");
    check_weight_tweak(p, a);

    BoundReport report;
    report.p = p;
    report.a = a;
    report.N = N;
    report.threshold = threshold(p, Parity::even);

    const double pref = std::exp(log_prefactor(p, a));
    MomentVector mv(p, a, N);
    report.per_term.reserve(static_cast<std::size_t>(N) + 1);
    CompensatedSum<double> sum;
    for (int n = 0; n <= N; ++n) {
        const double c = legendre_coefficient(n, mv.entries);
        // (4n+1) 2^{4n-1} c^2; log-form guards the 2^{4N} growth
        const double log_term = std::log(4.0 * n + 1.0) + (4.0 * n - 1.0) * std::log(2.0) +
                                2.0 * std::log(std::fabs(c) + 1e-300);
        const double term = (c == 0.0) ? 0.0 : pref * std::exp(log_term);
        if (!std::isfinite(term))
            throw std::runtime_error("series_bound: term overflow at n=" + std::to_string(n));
        report.per_term.push_back(term);
        sum.add(term);
    }
    report.partial_sum = sum.result();
    report.margin = report.partial_sum - report.threshold;
    return report;
}

DensityGrid profile(double p, double a, int N, const std::vector<double>& grid) {
    if (!(p > 1.0)) throw std::domain_error("profile: p must be > 1");
    if (N < 0) throw std::domain_error("profile: N must be >= 0");
    check_weight_tweak(p, a);

    MomentVector mv(p, a, N);
    std::vector<double> coeff(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        // (4n+1) 2^{2n-1} c_n, the coefficient of P_{2n} in g_{p,N}
        coeff[static_cast<std::size_t>(n)] =
            (4.0 * n + 1.0) * std::ldexp(0.5, 2 * n) * legendre_coefficient(n, mv.entries);
    }
    const double boundary = threshold(p, Parity::even);

    DensityGrid out;
    out.description = "normalized Legendre profile g_{p,N}";
    out.fold_count = 3;
    out.column_names = {"t", "value"};
    out.rows.reserve(grid.size());
    for (double t : grid) {
        if (std::fabs(t) > 1.0)
            throw std::domain_error("profile: grid points must lie in [-1,1]");
        CompensatedSum<double> g;
        for (int n = 0; n <= N; ++n)
            g.add(coeff[static_cast<std::size_t>(n)] * legendre_eval(2 * n, t));
        out.rows.push_back({t, g.result() / boundary});
    }
    return out;
}

CriticalExponent critical_exponent(double a, int N, double p_lo, double p_hi) {
    if (!(p_lo > 1.0) || !(p_hi > p_lo))
        throw std::domain_error("critical_exponent: need 1 < p_lo < p_hi");
    auto margin = [&](double p) { return series_bound(p, a, N).margin; };

    CriticalExponent out;
    double f_lo = margin(p_lo);
    double f_hi = margin(p_hi);
    out.margin_trace.push_back({p_lo, f_lo});
    out.margin_trace.push_back({p_hi, f_hi});
    if (f_lo == 0.0) { out.p_star = p_lo; return out; }
    if (f_hi == 0.0) { out.p_star = p_hi; return out; }
    if ((f_lo > 0) == (f_hi > 0))
        throw NoSignChangeError("critical_exponent: margins at bracket endpoints have equal sign");

    while (p_hi - p_lo > 1e-6) {
        const double mid = 0.5 * (p_lo + p_hi);
        const double f_mid = margin(mid);
        out.margin_trace.push_back({mid, f_mid});
        ++out.iterations;
        if (f_mid == 0.0) { p_lo = p_hi = mid; break; }
        if ((f_mid > 0) == (f_lo > 0)) {
            p_lo = mid;
            f_lo = f_mid;
        } else {
            p_hi = mid;
        }
    }
    out.p_star = 0.5 * (p_lo + p_hi);
    return out;
}

}  // namespace curvebound
