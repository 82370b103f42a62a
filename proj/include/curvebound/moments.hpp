#pragma once

#include <vector>

namespace curvebound {

/// 2n-th moment I_{2n}(p, a) of the weighted triple-convolution slice at
/// tau = 1, evaluated through its closed Gamma-function form. Requires
/// p > 1, a > -(p+1)/6, n >= 0. Always strictly positive.
double moment(int n, double p, double a = 0.0);

/// Moments I_0, I_2, ..., I_{2N}.
struct MomentVector {
    double p;
    double a;
    std::vector<double> entries;

    MomentVector(double p_, double a_, int N);
};

}  // namespace curvebound
