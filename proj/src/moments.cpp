#include "curvebound/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curvebound/curve.hpp"
#include "curvebound/kahan.hpp"
#include "curvebound/specfun.hpp"

namespace curvebound {

double moment(int n, double p, double a) {
    if (n < 0) throw std::domain_error("moment: n must be >= 0");
    if (!(p > 1.0)) throw std::domain_error("moment: p must be > 1");
    check_weight_tweak(p, a);

    // I_{2n}(p,a) = 8 (2n)! / (3^{(1-1/p)(2n+1)} p^3 Gamma(1 + (2n+1+3a)/p))
    //              * sum_{k+m+j=n} prod Gamma((p+1+6*+3a)/(3p)) / prod (2*)!
    // The (2n+1+3a) Gamma((2n+1+3a)/p) factor is folded into
    // p Gamma(1 + (2n+1+3a)/p), which keeps every Gamma argument positive
    // on the whole admissible a-range.
    const double log_pref = std::log(8.0) + log_factorial(2 * n) -
                            (1.0 - 1.0 / p) * (2 * n + 1) * std::log(3.0) -
                            3.0 * std::log(p) -
                            log_gamma(1.0 + (2.0 * n + 1.0 + 3.0 * a) / p);

    // All terms positive; accumulate in descending magnitude with
    // compensation (they span many orders of magnitude for large n).
    std::vector<double> log_terms;
    log_terms.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    for (int k = 0; k <= n; ++k) {
        for (int m = 0; m <= n - k; ++m) {
            const int j = n - k - m;
            const double lt = log_gamma((p + 1.0 + 6.0 * k + 3.0 * a) / (3.0 * p)) +
                              log_gamma((p + 1.0 + 6.0 * m + 3.0 * a) / (3.0 * p)) +
                              log_gamma((p + 1.0 + 6.0 * j + 3.0 * a) / (3.0 * p)) -
                              log_factorial(2 * k) - log_factorial(2 * m) -
                              log_factorial(2 * j);
            log_terms.push_back(lt);
        }
    }
    const double lmax = *std::max_element(log_terms.begin(), log_terms.end());
    std::sort(log_terms.begin(), log_terms.end(), std::greater<double>());
    CompensatedSum<double> sum;
    for (double lt : log_terms) sum.add(std::exp(lt - lmax));
    const double value = std::exp(log_pref + lmax) * sum.result();
    if (!std::isfinite(value))
        throw std::runtime_error("moment: overflow in Gamma-sum evaluation");
    return value;
}

MomentVector::MomentVector(double p_, double a_, int N) : p(p_), a(a_) {
    if (N < 0) throw std::domain_error("MomentVector: N must be >= 0");
    entries.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) entries.push_back(moment(n, p_, a_));
}

}  // namespace curvebound
