#pragma once

#include <vector>

#include "curvebound/signed_log.hpp"

namespace curvebound {

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
/// Relative error of the returned log value is below 1e-14 on [1e-3, 200].
/// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

/// Generalized binomial coefficient binom(alpha, n) =
/// alpha (alpha-1) ... (alpha-n+1) / n!, as an overflow-safe signed log
/// value. Computed by the iterated product (alpha-j)/(j+1) so that sign
/// changes are exact even when alpha - j crosses zero.
SignedLogValue generalized_binomial(double alpha, int n);

/// ln n! (exact table up to 20!, log_gamma beyond).
double log_factorial(int n);

/// Legendre polynomial P_n(t) on [-1, 1], by the three-term recurrence.
/// Throws std::domain_error for |t| > 1 or n < 0.
double legendre_eval(int n, double t);

/// P_n(t) by the explicit hypergeometric-style coefficient form
///   P_n(t) = 2^n sum_k binom(n,k) binom((n+k-1)/2, n) t^k.
/// Slower and less stable than the recurrence; kept as a cross-check
/// oracle for small n.
double legendre_eval_explicit(int n, double t);

/// Monomial coefficient table for P_0 .. P_max_degree.
class LegendreBasis {
public:
    explicit LegendreBasis(int max_degree);

    int max_degree() const { return max_degree_; }

    /// Coefficient of t^k in P_n.
    double coefficient(int n, int k) const;

    /// Evaluate P_n(t) from the stored monomial coefficients.
    double evaluate(int n, double t) const;

private:
    int max_degree_;
    std::vector<std::vector<double>> coeffs_;  // coeffs_[n][k]
};

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1],
/// exact for polynomials of degree <= 2m - 1.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int m);

}  // namespace curvebound
