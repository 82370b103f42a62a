#pragma once

#include <vector>

#include "curvebound/curve.hpp"
#include "curvebound/grid.hpp"

namespace curvebound {

/// Truncated Legendre-series lower bound for C_p^6.
struct BoundReport {
    double p = 0.0;
    double a = 0.0;
    int N = 0;
    double partial_sum = 0.0;           ///< the lower bound itself
    std::vector<double> per_term;       ///< nonnegative series terms, prefactor folded in
    double threshold = 0.0;             ///< 2 pi / (sqrt(3) p (p-1))
    double margin = 0.0;                ///< partial_sum - threshold
};

/// Legendre coefficient c_n = sum_k binom(2n,2k) binom(n+k-1/2,2n) I_{2k}(p,a).
/// Exposed because the p = 2 degeneracy (c_n ~ 0 for n >= 1) is a key
/// correctness check.
double legendre_coefficient(int n, double p, double a = 0.0);
double legendre_coefficient(int n, const std::vector<double>& moments);

/// Partial sum of the series expansion of Phi_p over the first N+1
/// Legendre modes; a lower bound for C_p^6. Throws on invalid parameters
/// and on overflow (cannot occur for N <= 20, p <= 12).
BoundReport series_bound(double p, double a, int N);

/// Samples of the truncated profile g_{p,N}(t), normalized by the
/// boundary value 2 pi/(sqrt(3) p (p-1)) so that the profile is close to 1
/// at t = +-1.
DensityGrid profile(double p, double a, int N, const std::vector<double>& grid);

struct NoSignChangeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct CriticalExponent {
    double p_star = 0.0;
    int iterations = 0;
    std::vector<std::pair<double, double>> margin_trace;  ///< (p, margin) per step
};

/// Bisection for the p where series_bound(p,a,N) crosses threshold(p,even),
/// to |bracket| <= 1e-6. Throws NoSignChangeError if the endpoint margins
/// have equal sign.
CriticalExponent critical_exponent(double a, int N, double p_lo, double p_hi);

}  // namespace curvebound
