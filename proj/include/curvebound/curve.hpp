#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace curvebound {

enum class Parity { even, odd };

inline constexpr double kSqrt3 = 1.7320508075688772935;

/// The planar curve s = |y|^p (even) or s = y|y|^{p-1} (odd), p > 1,
/// with the measure weight carried as the exponent on |y| in the
/// amplitude (default (p-2)/6, i.e. (p-2)/3 on the density).
struct CurveFamily {
    double p;
    Parity parity = Parity::even;
    double weight_exponent;

    explicit CurveFamily(double p_, Parity parity_ = Parity::even)
        : p(p_), parity(parity_), weight_exponent((p_ - 2.0) / 6.0) {
        if (!(p_ > 1.0))
            throw std::domain_error("CurveFamily: p must be > 1 (got " + std::to_string(p_) +
                                    "); the curve s=|y| has no curvature");
    }

    /// psi(y): the curve height at y.
    double psi(double y) const {
        if (parity == Parity::even) return std::pow(std::fabs(y), p);
        return y >= 0 ? std::pow(y, p) : -std::pow(-y, p);
    }

    /// psi'(y); for the odd curve this is p|y|^{p-1} >= 0.
    double dpsi(double y) const {
        const double m = p * std::pow(std::fabs(y), p - 1.0);
        if (parity == Parity::even) return y >= 0 ? m : -m;
        return m;
    }

    /// psi''(y) away from y = 0.
    double ddpsi(double y) const {
        const double m = p * (p - 1.0) * std::pow(std::fabs(y), p - 2.0);
        if (parity == Parity::even) return m;
        return y >= 0 ? m : -m;
    }
};

/// Concentration threshold: 2 pi / (sqrt(3) p (p-1)) for even curves,
/// 5 pi / (sqrt(3) p (p-1)) for odd ones.
inline double threshold(double p, Parity parity) {
    if (!(p > 1.0)) throw std::domain_error("threshold: p must be > 1");
    const double num = (parity == Parity::even) ? 2.0 : 5.0;
    return num * M_PI / (kSqrt3 * p * (p - 1.0));
}

/// Lowest admissible weight tweak: L^2-integrability of the trial family
/// forces a > -(p+1)/6.
inline double min_weight_tweak(double p) { return -(p + 1.0) / 6.0; }

inline void check_weight_tweak(double p, double a) {
    if (!(a > min_weight_tweak(p)))
        throw std::domain_error("weight tweak a must exceed -(p+1)/6 = " +
                                std::to_string(min_weight_tweak(p)));
}

}  // namespace curvebound
