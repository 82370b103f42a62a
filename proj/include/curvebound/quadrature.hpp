#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace curvebound {

struct QuadratureError : std::runtime_error {
    double achieved_error;
    explicit QuadratureError(const std::string& what, double err)
        : std::runtime_error(what), achieved_error(err) {}
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b]. Bisects the worst panel
/// until |error| <= max(abs_tol, rel_tol * |value|) or the panel budget
/// is exhausted (converged = false in that case; no throw).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-10, double abs_tol = 1e-14,
                           int max_panels = 2500);

/// As integrate(), but throws QuadratureError on non-convergence.
double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-10, double abs_tol = 1e-14,
                         int max_panels = 2500);

/// Laplace-type integral  int pre(y) exp(-(E(y) - E(center))) dy  over the
/// component of {E - E(center) <= cutoff} containing `center`, bracketed by
/// [lo, hi] (pass -inf/+inf for unbounded sides). E is assumed unimodal with
/// its minimum near `center`; `width` sets the initial bracketing step.
/// The returned value is the integral of pre * exp(-(E - E(center))); the
/// caller reinstates the exp(-E(center)) scale in log space.
double integrate_peaked(const std::function<double(double)>& exponent,
                        const std::function<double(double)>& prefactor, double center,
                        double width, double lo, double hi, double rel_tol = 1e-11,
                        double cutoff = 45.0);

}  // namespace curvebound
