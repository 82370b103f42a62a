#pragma once

#include <stdexcept>

#include "curvebound/curve.hpp"

namespace curvebound {

enum class Support { full_line, half_line_positive };

/// Member of the exponential trial family
///   f(y) = exp(-lambda (|y|^p + drift y)) |y|^{weight_power},
/// restricted to the declared support.
struct TrialFunction {
    double p;
    double lambda = 1.0;
    double drift = 0.0;
    double weight_power;         ///< exponent on |y| in the amplitude
    Support support = Support::full_line;

    TrialFunction(double p_, double lambda_, double drift_, double weight_power_,
                  Support support_ = Support::full_line)
        : p(p_), lambda(lambda_), drift(drift_), weight_power(weight_power_),
          support(support_) {
        if (!(p_ > 1.0)) throw std::domain_error("TrialFunction: p must be > 1");
        if (!(lambda_ > 0.0)) throw std::domain_error("TrialFunction: lambda must be > 0");
        if (!(weight_power_ > -0.5))
            throw std::domain_error("TrialFunction: weight_power must exceed -1/2");
    }

    static TrialFunction natural(double p, double lambda = 1.0) {
        return TrialFunction(p, lambda, 0.0, (p - 2.0) / 6.0);
    }
};

struct DivergenceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Certified lower bound for C_p^6 from the exponential trial:
///   ||f||_2^6 / int_{E_p} exp(-2 lambda (tau + drift xi)) dxi dtau.
/// The inner tau-integral is closed-form; the xi-integral is adaptive
/// quadrature. Throws DivergenceError when the denominator fails its
/// convergence check.
double exp_trial_bound(const TrialFunction& trial);

/// phi_p(lambda) evaluation for the perturbative regime 1 < p < 2.
struct PerturbativeReport {
    double p = 0.0;
    double lambda = 0.0;
    double phi_value = 0.0;
    double limit_value = 0.0;      ///< 2 pi / (sqrt(3) p (p-1))
    double slope_estimate = 0.0;   ///< finite-difference slope of phi_p in 1/lambda
    double predicted_slope = 0.0;  ///< pi (2-p)(2p-1) / (9 sqrt(3) p^2 (p-1)^2)
};

/// phi_p(lambda) = lambda (int e^{-lambda(|y|^p - p y)} |y|^{-(2-p)/3} dy)^3
///                 / int e^{-lambda(3^{1-p}|xi|^p - p xi)} dxi,
/// evaluated in centered/shifted variables so large lambda cannot
/// overflow. The slope estimate uses the fixed abscissae
/// lambda in {1e3, 2e3} in the 1/lambda variable.
PerturbativeReport phi_lambda(double p, double lambda);

/// The bare phi_p value (no report bookkeeping).
double phi_value(double p, double lambda);

}  // namespace curvebound
