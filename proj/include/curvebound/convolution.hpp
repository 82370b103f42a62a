#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curvebound/curve.hpp"
#include "curvebound/grid.hpp"

namespace curvebound {

struct BoundaryError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Weighted curve measure delta(s - psi(y)) |y|^q dy ds, optionally
/// multiplied by a trial amplitude and/or restricted to y >= 0.
struct CurveMeasure {
    CurveFamily curve;
    double density_weight;                   ///< q, the exponent on |y|
    std::function<double(double)> trial;     ///< optional amplitude; empty = 1
    bool half_line = false;

    CurveMeasure(CurveFamily c, double q) : curve(c), density_weight(q) {}

    double amplitude(double y) const {
        if (half_line && y < 0.0) return 0.0;
        double w = std::pow(std::fabs(y), density_weight);
        if (trial) w *= trial(y);
        return w;
    }
};

/// Solution of psi(u/2 - alpha) + psi(u/2 + alpha) = v on alpha > 0,
/// together with the change-of-variables Jacobian.
struct AlphaSolve {
    double u = 0.0;
    double v = 0.0;
    double alpha = 0.0;
    double jacobian = 0.0;  ///< 1 / |psi'(u/2+alpha) - psi'(u/2-alpha)|
};

/// Safeguarded Newton with bisection fallback; relies on the strict
/// monotonicity of alpha -> psi(u/2-alpha) + psi(u/2+alpha). Residual is
/// driven below 1e-12 max(1,|v|). Throws BoundaryError for
/// v <= 2 psi(u/2) + 1e-14 (odd curves with u < 0 are solved by
/// reflection).
AlphaSolve solve_alpha(double p, Parity parity, double u, double v);

/// Closed-form 2-fold convolution density at (u, v), strictly inside the
/// fold region. `second_trial`, when given, plays the role of g in
/// (f m * g m); both branch assignments are summed. With a single trial
/// the symmetric factor 2 applies.
double twofold_density(const CurveMeasure& m, double u, double v,
                       const std::function<double(double)>& second_trial = nullptr);

/// 3-fold convolution density at (xi, tau) by one adaptive quadrature over
/// the closed 2-fold form. Fold-boundary inverse-square-root singularities
/// are removed by endpoint substitutions; for 1 < p < 2 the interior
/// weight singularities get their own panels. Throws BoundaryError outside
/// the support (for half-line measures the support is
/// 3^{1-p} xi^p <= tau <= xi^p, xi > 0).
double triple_density(const CurveMeasure& m, double xi, double tau, double rel_tol = 1e-9);

/// Whether Prop-4.1-style continuity is guaranteed at (xi, tau): always in
/// the interior for p >= 2; only on 3^{1-p}|xi|^p < tau < 2^{1-p}|xi|^p
/// for 1 < p < 2.
bool in_continuity_region(double p, double xi, double tau);

/// Near-boundary sample of the natural triple density: evaluates at
/// (xi, 3^{1-p}|xi|^p (1+eps)). Converges to 2 pi/(sqrt(3) p(p-1)) as
/// eps -> 0.
double boundary_value(double p, double xi, double eps, double rel_tol = 1e-9);

/// ||f sigma_p * f sigma_p * f sigma_p||_2^2 / ||f||_2^6 for the trial
/// f(y) = exp(-lambda |y|^p) |y|^{(p-2)/6 + a}, computed by quadrature of
/// the squared 3-fold density on the tau = 1 slice (the homogeneity
/// reduction collapses one dimension). Throws QuadratureError if the
/// estimated relative error exceeds 0.5%.
double triple_norm_ratio(double p, double a = 0.0, double lambda = 1.0,
                         double* rel_err_out = nullptr);

/// Hausdorff-Young bilinear majorant for indicator trials on the dyadic
/// shells I_k^bullet, I_{k'}^bullet, normalized by ||f||_2 ||g||_2:
///   ( int int w^{3/4} w'^{3/4} |J|^{1/2} )^{2/3} / (||f|| ||g||).
/// Requires |k - k'| >= 2.
double bilinear_decay(double p, int k, int kprime);

/// The odd-curve expansion terms for a half-line trial
/// g(y) = exp(-lambda(y^p - 1 - p(y-1))) y^{(p-2)/6 + a} 1_{y>=0}:
///   A = ||g sigma * g sigma * g sigma||^2 / ||g||^6
///   B = <(g sigma)^{*4}, (g sigma)^{*2}> / ||g||^6
/// A is computed on the homogeneity slice with an exponential change of
/// variables; B on a uniform grid by a direct (hence nonnegative)
/// lattice convolution.
struct OddTerms {
    double A = 0.0;
    double B = 0.0;
    double a_rel_err = 0.0;  ///< quadrature estimate for A
    double b_rel_err = 0.0;  ///< grid-resolution estimate for B
};
OddTerms odd_expansion_terms(double p, double lambda, double a = 0.0, int grid_size = 256);

/// Sample the natural-measure 3-fold density on the tau = 1 slice
/// (t = xi 3^{-(1-1/p)} in [-1, 1]); CSV-ready.
DensityGrid sample_triple_slice(double p, double a, int points, double rel_tol = 1e-8);

/// Sample a 2-fold density on a (u, v) rectangle; points outside the fold
/// region get value 0.
DensityGrid sample_twofold_rectangle(const CurveMeasure& m, double u0, double u1,
                                     double v0, double v1, int nu, int nv);

}  // namespace curvebound
