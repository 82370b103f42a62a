#include "curvebound/odd.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace curvebound {

OddBoundReport odd_bound(double p, double lambda, double a, int grid_size) {
    OddBoundReport rep;
    rep.p = p;
    rep.lambda = lambda;
    rep.a = a;
    const OddTerms terms = odd_expansion_terms(p, lambda, a, grid_size);
    rep.A = terms.A;
    rep.B = terms.B;
    rep.a_rel_err = terms.a_rel_err;
    rep.b_rel_err = terms.b_rel_err;
    rep.q_lower_bound = 2.5 * rep.A + 3.75 * rep.B;
    rep.threshold = threshold(p, Parity::odd);
    rep.invariant_ratio = rep.q_lower_bound * kSqrt3 / M_PI;
    rep.margin = rep.q_lower_bound - rep.threshold;
    return rep;
}

std::vector<OddBoundReport> conjecture_scan(const std::vector<double>& p_grid,
                                            const std::vector<double>& lambda_grid,
                                            const std::vector<double>& a_grid,
                                            int grid_size) {
    if (p_grid.empty() || lambda_grid.empty() || a_grid.empty())
        throw std::domain_error("conjecture_scan: grids must be nonempty");
    std::vector<OddBoundReport> rows;
    rows.reserve(p_grid.size() * lambda_grid.size() * a_grid.size());
    for (double p : p_grid)
        for (double lambda : lambda_grid)
            for (double a : a_grid) rows.push_back(odd_bound(p, lambda, a, grid_size));
    return rows;
}

void write_scan_csv(const std::vector<OddBoundReport>& rows, std::ostream& os) {
    os << "p,lambda,a,A,B,bound,threshold,margin\n";
    char buf[32];
    auto put = [&](double x, bool last) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        os << buf << (last ? "\n" : ",");
    };
    for (const auto& r : rows) {
        put(r.p, false);
        put(r.lambda, false);
        put(r.a, false);
        put(r.A, false);
        put(r.B, false);
        put(r.q_lower_bound, false);
        put(r.threshold, false);
        put(r.margin, true);
    }
}

}  // namespace curvebound
