#pragma once

#include <ostream>
#include <vector>

#include "curvebound/convolution.hpp"

namespace curvebound {

/// Lower bound for Q_p^6 assembled from the even/odd expansion
///   Phi^odd = (5/2) A + (15/4) B
/// for the mirrored half-line trial f = g + g(-.).
struct OddBoundReport {
    double p = 0.0;
    double lambda = 0.0;
    double a = 0.0;
    double A = 0.0;
    double B = 0.0;
    double q_lower_bound = 0.0;   ///< (5/2) A + (15/4) B
    double threshold = 0.0;       ///< 5 pi / (sqrt(3) p (p-1))
    double invariant_ratio = 0.0; ///< q_lower_bound / (pi/sqrt 3), i.e. (Q_p/C_2)^6 form
    double margin = 0.0;
    double a_rel_err = 0.0;
    double b_rel_err = 0.0;
};

/// Evaluate the odd-curve lower bound with the concentrating half-line
/// trial g(y) = exp(-lambda(y^p - 1 - p(y-1))) y^{(p-2)/6 + a} 1_{y>=0}.
OddBoundReport odd_bound(double p, double lambda, double a = 0.0, int grid_size = 256);

/// Scan table over (p, lambda, a) grids; rows carry the full report.
/// Rejects empty grids.
std::vector<OddBoundReport> conjecture_scan(const std::vector<double>& p_grid,
                                            const std::vector<double>& lambda_grid,
                                            const std::vector<double>& a_grid,
                                            int grid_size = 192);

/// CSV with columns p, lambda, a, A, B, bound, threshold, margin.
void write_scan_csv(const std::vector<OddBoundReport>& rows, std::ostream& os);

}  // namespace curvebound
