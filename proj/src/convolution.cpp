#include "curvebound/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "curvebound/kahan.hpp"
#include "curvebound/quadrature.hpp"

namespace curvebound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pow_abs(double y, double e) { return std::pow(std::fabs(y), e); }

/// Lower support edge of the 3-fold convolution: tau >= 3^{1-p} |xi|^p.
double fold3_edge(double p, double xi) { return std::pow(3.0, 1.0 - p) * pow_abs(xi, p); }

/// Integrate f over [a, b] with the substitution y = a + s^2 on the left
/// half and y = b - s^2 on the right half. Removes inverse-square-root and
/// mild power singularities at both endpoints. Error accounting is left to
/// the caller (tiny sliver panels cannot meet a purely relative target).
QuadratureResult integrate_two_sided(const std::function<double(double)>& f, double a,
                                     double b, double rel_tol, double abs_tol) {
    QuadratureResult out;
    if (!(b > a)) return out;
    const double mid = 0.5 * (a + b);
    const QuadratureResult left = integrate(
        [&](double s) { return 2.0 * s * f(a + s * s); }, 0.0, std::sqrt(mid - a), rel_tol,
        abs_tol);
    const QuadratureResult right = integrate(
        [&](double s) { return 2.0 * s * f(b - s * s); }, 0.0, std::sqrt(b - mid), rel_tol,
        abs_tol);
    out.value = left.value + right.value;
    out.error_estimate = left.error_estimate + right.error_estimate;
    out.converged = left.converged && right.converged;
    return out;
}

}  // namespace

AlphaSolve solve_alpha(double p, Parity parity, double u, double v) {
    if (!(p > 1.0)) throw std::domain_error("solve_alpha: p must be > 1");
    // Odd curves are antipodally symmetric: solve the reflected problem.
    if (parity == Parity::odd && u < 0.0) {
        AlphaSolve s = solve_alpha(p, parity, -u, -v);
        s.u = u;
        s.v = v;
        return s;
    }
    CurveFamily curve(p, parity);
    if (parity == Parity::odd && u == 0.0)
        throw BoundaryError("solve_alpha: odd curve degenerates on the axis u = 0");

    const double vfold = 2.0 * curve.psi(0.5 * u);
    if (v - vfold <= 1e-14 * std::max(1.0, std::fabs(v)))
        throw BoundaryError("solve_alpha: (u,v) on or below the fold boundary");

    auto F = [&](double alpha) { return curve.psi(0.5 * u - alpha) + curve.psi(0.5 * u + alpha); };
    auto dF = [&](double alpha) {
        return curve.dpsi(0.5 * u + alpha) - curve.dpsi(0.5 * u - alpha);
    };

    double lo = 0.0;
    double hi;
    if (u == 0.0) {
        // psi(alpha) + psi(-alpha) = 2 alpha^p (even curve)
        hi = std::pow(0.5 * v, 1.0 / p);
        lo = hi;
    } else {
        hi = std::max(std::fabs(u), 1.0);
        for (int i = 0; i < 200 && F(hi) < v; ++i) hi *= 2.0;
        if (F(hi) < v) throw std::runtime_error("solve_alpha: bracket search failed");
    }

    // initial guess from the quadratic fold expansion, else bisection midpoint
    double alpha;
    if (lo == hi) {
        alpha = hi;
    } else {
        const double curv = curve.ddpsi(0.5 * u);
        alpha = (curv > 0.0 && std::isfinite(curv)) ? std::sqrt((v - vfold) / curv)
                                                    : 0.5 * (lo + hi);
        if (!(alpha > lo && alpha < hi)) alpha = 0.5 * (lo + hi);
    }

    const double res_tol = 1e-13 * std::max(1.0, std::fabs(v));
    for (int it = 0; it < 200; ++it) {
        const double r = F(alpha) - v;
        if (std::fabs(r) <= res_tol) break;
        if (r > 0)
            hi = alpha;
        else
            lo = alpha;
        const double d = dF(alpha);
        double next = (d > 0.0) ? alpha - r / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == alpha) break;
        alpha = next;
    }

    AlphaSolve out;
    out.u = u;
    out.v = v;
    out.alpha = alpha;
    const double d = std::fabs(dF(alpha));
    if (!(d > 0.0) || !std::isfinite(d))
        throw BoundaryError("solve_alpha: degenerate Jacobian at the fold");
    out.jacobian = 1.0 / d;
    return out;
}

double twofold_density(const CurveMeasure& m, double u, double v,
                       const std::function<double(double)>& second_trial) {
    const AlphaSolve s = solve_alpha(m.curve.p, m.curve.parity, u, v);
    double y1 = 0.5 * u - s.alpha;
    double y2 = 0.5 * u + s.alpha;
    if (m.curve.parity == Parity::odd && u < 0.0) {
        // reflected pair
        y1 = 0.5 * u + s.alpha;
        y2 = 0.5 * u - s.alpha;
    }
    auto amp2 = [&](double y) {
        if (m.half_line && y < 0.0) return 0.0;
        double w = pow_abs(y, m.density_weight);
        if (second_trial) w *= second_trial(y);
        return w;
    };
    if (second_trial)
        return s.jacobian * (m.amplitude(y1) * amp2(y2) + m.amplitude(y2) * amp2(y1));
    return 2.0 * s.jacobian * m.amplitude(y1) * m.amplitude(y2);
}

bool in_continuity_region(double p, double xi, double tau) {
    const double lower = fold3_edge(p, xi);
    if (p >= 2.0) return tau > lower;
    return tau > lower && tau < std::pow(2.0, 1.0 - p) * pow_abs(xi, p);
}

namespace {

/// Admissible y-panels for the iterated 3-fold integral at (xi, tau),
/// split at every singular or boundary point of the integrand.
std::vector<std::pair<double, double>> triple_panels(const CurveMeasure& m, double xi,
                                                     double tau) {
    const CurveFamily& c = m.curve;
    const double p = c.p;

    // S(y) = tau - psi(y) - 2 psi((xi-y)/2) is concave; its positivity set
    // is the base interval.
    auto S = [&](double y) { return tau - c.psi(y) - 2.0 * c.psi(0.5 * (xi - y)); };
    auto dS = [&](double y) { return -c.dpsi(y) + c.dpsi(0.5 * (xi - y)); };
    const double yc = xi / 3.0;
    if (S(yc) <= 0.0) throw BoundaryError("triple_density: (xi,tau) outside the support");

    auto root = [&](double inside, double dir) {
        double step = std::max({1.0, std::fabs(xi), std::pow(tau, 1.0 / p)});
        double out = inside + dir * step;
        for (int i = 0; i < 200 && S(out) > 0.0; ++i) {
            step *= 2.0;
            out = inside + dir * step;
        }
        if (S(out) > 0.0) throw std::runtime_error("triple_density: support bracket failed");
        // safeguarded Newton between inside (S>0) and out (S<=0)
        double a = inside, b = out;
        double y = 0.5 * (a + b);
        for (int it = 0; it < 200; ++it) {
            const double s = S(y);
            if (s > 0.0)
                a = y;
            else
                b = y;
            const double d = dS(y);
            double next = (d != 0.0) ? y - s / d : 0.5 * (a + b);
            const double lo = std::min(a, b), hi = std::max(a, b);
            if (!(next > lo && next < hi)) next = 0.5 * (a + b);
            if (std::fabs(next - y) <= 1e-15 * std::max(1.0, std::fabs(y))) { y = next; break; }
            y = next;
        }
        return y;
    };

    double y_lo = root(yc, -1.0);
    double y_hi = root(yc, +1.0);
    if (m.half_line) {
        y_lo = std::max(y_lo, 0.0);
        y_hi = std::min(y_hi, xi);
    }
    if (!(y_hi > y_lo)) throw BoundaryError("triple_density: empty admissible interval");

    // Z(y) = tau - psi(y) - psi(xi - y) > 0 marks the region where the
    // inner 2-fold argument crosses its own one-sided edge (a weight
    // singularity for the full line with p < 2; excluded outright for
    // half-line measures).
    auto Z = [&](double y) { return tau - c.psi(y) - c.psi(xi - y); };
    double z_lo = 0.0, z_hi = 0.0;
    bool has_z = false;
    if (Z(0.5 * xi) > 0.0) {
        double step = std::max(1.0, std::fabs(xi));
        double out = 0.5 * xi - step;
        for (int i = 0; i < 200 && Z(out) > 0.0; ++i) {
            step *= 2.0;
            out = 0.5 * xi - step;
        }
        if (Z(out) <= 0.0) {
            double a = out, b = 0.5 * xi;  // Z(a) <= 0 < Z(b)
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if (b - a <= 1e-15 * std::max(1.0, std::fabs(mid))) break;
                (Z(mid) > 0.0 ? b : a) = mid;
            }
            z_lo = 0.5 * (a + b);
            z_hi = xi - z_lo;  // Z is symmetric about xi/2
            has_z = true;
        }
    }

    std::vector<std::pair<double, double>> pieces;
    if (m.half_line && has_z) {
        // keep [y_lo, z_lo] and [z_hi, y_hi] only
        if (z_lo > y_lo) pieces.push_back({y_lo, std::min(z_lo, y_hi)});
        if (z_hi < y_hi) pieces.push_back({std::max(z_hi, y_lo), y_hi});
    } else {
        pieces.push_back({y_lo, y_hi});
    }

    // split points inside pieces: the weight singularity at 0 and, for
    // full-line measures, the Z-roots
    std::vector<double> cuts;
    cuts.push_back(0.0);
    if (!m.half_line && has_z) {
        cuts.push_back(z_lo);
        cuts.push_back(z_hi);
    }
    std::vector<std::pair<double, double>> panels;
    for (auto [a, b] : pieces) {
        std::vector<double> pts = {a, b};
        for (double t : cuts)
            if (t > a && t < b) pts.push_back(t);
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i + 1] > pts[i]) panels.push_back({pts[i], pts[i + 1]});
    }
    return panels;
}

}  // namespace

double triple_density(const CurveMeasure& m, double xi, double tau, double rel_tol) {
    if (m.curve.parity != Parity::even)
        throw std::domain_error("triple_density: implemented for the even curve measure");
    const double p = m.curve.p;
    if (m.half_line) {
        if (!(xi > 0.0)) throw BoundaryError("triple_density: half-line support needs xi > 0");
        const double top = std::pow(xi, p);
        if (!(tau < top * (1.0 - 1e-14)))
            throw BoundaryError("triple_density: above the half-line support");
    }
    const double edge = fold3_edge(p, xi);
    if (!(tau - edge > 1e-13 * std::max(1.0, tau)))
        throw BoundaryError("triple_density: at or below the support boundary");

    auto integrand = [&](double y) {
        const double w = m.amplitude(y);
        if (w == 0.0) return 0.0;
        double d2;
        try {
            d2 = twofold_density(m, xi - y, tau - m.curve.psi(y));
        } catch (const BoundaryError&) {
            return 0.0;
        }
        if (!std::isfinite(d2)) return 0.0;
        return w * d2;
    };

    CompensatedSum<double> total;
    double err_sum = 0.0;
    for (auto [a, b] : triple_panels(m, xi, tau)) {
        const QuadratureResult r = integrate_two_sided(integrand, a, b, rel_tol, 1e-13);
        total.add(r.value);
        err_sum += r.error_estimate;
    }
    const double value = total.result();
    if (err_sum > std::max(10.0 * rel_tol * std::fabs(value), 1e-11))
        throw QuadratureError("triple_density: accumulated quadrature error too large",
                              err_sum);
    return value;
}

double boundary_value(double p, double xi, double eps, double rel_tol) {
    if (xi == 0.0) throw std::domain_error("boundary_value: xi must be nonzero");
    if (!(eps > 0.0)) throw std::domain_error("boundary_value: eps must be > 0");
    CurveMeasure m(CurveFamily(p), (p - 2.0) / 3.0);
    return triple_density(m, xi, fold3_edge(p, xi) * (1.0 + eps), rel_tol);
}

namespace {

/// int_0^X x^e exp(-x) dx with the power substitution for -1 < e < 0.
double truncated_gamma_integral(double e, double X, double rel_tol) {
    if (!(e > -1.0)) throw std::domain_error("truncated_gamma_integral: exponent <= -1");
    if (e >= 0.0)
        return integrate_checked([&](double x) { return std::pow(x, e) * std::exp(-x); }, 0.0,
                                 X, rel_tol, 0.0);
    const double mexp = 1.0 / (1.0 + e);
    return integrate_checked(
        [&](double u) { return mexp * std::exp(-std::pow(u, mexp)); }, 0.0,
        std::pow(X, 1.0 + e), rel_tol, 0.0);
}

}  // namespace

double triple_norm_ratio(double p, double a, double lambda, double* rel_err_out) {
    if (!(p > 1.0)) throw std::domain_error("triple_norm_ratio: p must be > 1");
    if (!(lambda > 0.0)) throw std::domain_error("triple_norm_ratio: lambda must be > 0");
    check_weight_tweak(p, a);

    const double inner_tol = 1e-8;
    CurveMeasure m(CurveFamily(p), (p - 2.0) / 3.0 + a);
    const double scale = std::pow(3.0, 1.0 - 1.0 / p);

    // slice integral of the squared density (even in t)
    QuadratureResult slice = integrate(
        [&](double t) {
            const double h = triple_density(m, scale * t, 1.0, inner_tol);
            return h * h;
        },
        0.0, 1.0, 1e-7, 0.0, 400);
    const double Ih = 2.0 * slice.value;

    // tau-moment int_0^inf tau^{(1+6a)/p} e^{-2 lambda tau} dtau, evaluated
    // numerically so the lambda-scale invariance of the assembled ratio is
    // a genuine cross-check
    const double e = (1.0 + 6.0 * a) / p;
    const double tmom =
        std::pow(2.0 * lambda, -1.0 - e) * truncated_gamma_integral(e, 60.0, 1e-12);

    // ||f||_2^2 = 2 int_0^infty y^{(p-2)/3 + 2a} e^{-2 lambda y^p} dy
    //           = (2/p) (2 lambda)^{-(c+1)/p} int x^{(c+1)/p - 1} e^{-x} dx
    const double c = (p - 2.0) / 3.0 + 2.0 * a;
    const double n1 = 2.0 / p * std::pow(2.0 * lambda, -(c + 1.0) / p) *
                      truncated_gamma_integral((c + 1.0) / p - 1.0, 60.0, 1e-12);

    const double ratio = tmom * scale * Ih / (n1 * n1 * n1);
    const double rel_err = slice.error_estimate / std::max(slice.value, 1e-300) +
                           20.0 * inner_tol + 1e-10;
    if (rel_err_out) *rel_err_out = rel_err;
    if (rel_err > 0.005)
        throw QuadratureError("triple_norm_ratio: estimated relative error above 0.5%",
                              rel_err);
    return ratio;
}

double bilinear_decay(double p, int k, int kprime) {
    if (!(p > 1.0)) throw std::domain_error("bilinear_decay: p must be > 1");
    if (std::abs(k - kprime) < 2)
        throw std::domain_error("bilinear_decay: requires |k - k'| >= 2");
    const double w34 = (p - 2.0) / 4.0;  // (w^{3/4}) exponent on |y|
    auto kernel_same = [&](double y, double yp) {
        return pow_abs(y, w34) * pow_abs(yp, w34) /
               std::sqrt(p * std::fabs(std::pow(y, p - 1.0) - std::pow(yp, p - 1.0)));
    };
    auto kernel_opp = [&](double y, double yp) {
        return pow_abs(y, w34) * pow_abs(yp, w34) /
               std::sqrt(p * (std::pow(y, p - 1.0) + std::pow(yp, p - 1.0)));
    };
    const double a1 = std::ldexp(1.0, k), b1 = std::ldexp(1.0, k + 1);
    const double a2 = std::ldexp(1.0, kprime), b2 = std::ldexp(1.0, kprime + 1);
    auto dbl = [&](const std::function<double(double, double)>& ker) {
        return integrate_checked(
            [&](double y) {
                return integrate_checked([&](double yp) { return ker(y, yp); }, a2, b2, 1e-9,
                                         0.0);
            },
            a1, b1, 1e-9, 0.0);
    };
    // sign symmetry: (+,+) == (-,-) and (+,-) == (-,+)
    const double total = 2.0 * dbl(kernel_same) + 2.0 * dbl(kernel_opp);
    const double nf = std::sqrt(2.0 * std::ldexp(1.0, k));
    const double ng = std::sqrt(2.0 * std::ldexp(1.0, kprime));
    return std::pow(total, 2.0 / 3.0) / (nf * ng);
}

namespace {

/// ||g||_2^2 for the shifted half-line trial: the exponent
/// 2 lambda (y^p - 1 - p(y-1)) vanishes at y = 1.
double odd_trial_norm_sq(double p, double lambda, double a) {
    auto E = [&](double y) {
        return 2.0 * lambda * (std::pow(y, p) - 1.0 - p * (y - 1.0));
    };
    const double width = 1.0 / std::sqrt(2.0 * lambda * p * (p - 1.0));
    const double wexp = (p - 2.0) / 3.0 + 2.0 * a;
    return integrate_peaked(E, [&](double y) { return std::pow(y, wexp); }, 1.0, width, 0.0,
                            kInf, 1e-11);
}

double odd_A_term(double p, double lambda, double a, double* rel_err) {
    CurveMeasure m(CurveFamily(p), (p - 2.0) / 3.0 + a);
    m.half_line = true;

    auto H = [&](double s) { return triple_density(m, s, 1.0, 1e-10); };
    // R(s,c) = int_0^inf p rho^{p + 6a} e^{-2 lambda (rho^p - p s rho + (p-1) c)} drho;
    // the exponent is >= 0 with minimum 0 at rho* = s^{1/(p-1)}.
    auto R = [&](double s, double c) {
        const double rstar = std::pow(s, 1.0 / (p - 1.0));
        auto E = [&](double r) {
            return 2.0 * lambda * (std::pow(r, p) - p * s * r + (p - 1.0) * c);
        };
        const double width =
            1.0 / std::sqrt(2.0 * lambda * p * (p - 1.0) * std::pow(rstar, p - 2.0));
        const double val = integrate_peaked(
            E, [&](double r) { return p * std::pow(r, p + 6.0 * a); }, rstar, width, 0.0,
            kInf, 1e-11);
        return val * std::exp(-E(rstar));
    };

    const double two_lam_p1 = 2.0 * lambda * (p - 1.0);
    auto F = [&](double z) {
        const double c = 3.0 - z / two_lam_p1;
        if (c <= 1.0 + 1e-12) return 0.0;
        const double s = std::pow(c, (p - 1.0) / p);
        const double h = H(s);
        return std::exp(-z) * h * h * R(s, c) * ((p - 1.0) / p) *
               std::pow(c, -1.0 / p) / two_lam_p1;
    };
    const double Z = std::min(2.0 * two_lam_p1, 45.0);
    QuadratureResult num = integrate(F, 0.0, Z, 1e-9, 0.0, 600);
    const double n1 = odd_trial_norm_sq(p, lambda, a);
    if (rel_err)
        *rel_err = num.error_estimate / std::max(num.value, 1e-300) + 1e-7;
    return num.value / (n1 * n1 * n1);
}

struct TwofoldGrid {
    double hu = 0.0, hv = 0.0;
    int mu0 = 0, mv0 = 0;  // index offsets: cell (i,j) is centered at ((mu0+i) hu, (mv0+j) hv)
    int nu = 0, nv = 0;
    std::vector<double> value;  // row-major [i * nv + j], cell-averaged in v

    double at(int i, int j) const {
        if (i < 0 || i >= nu || j < 0 || j >= nv) return 0.0;
        return value[static_cast<std::size_t>(i) * static_cast<std::size_t>(nv) +
                     static_cast<std::size_t>(j)];
    }
};

/// Cell-averaged 2-fold density grid of the shifted half-line trial on its
/// effective support. Cell centers sit on integer multiples of the spacing
/// so that lattice sums land back on cell centers exactly.
TwofoldGrid build_twofold_grid(double p, double lambda, double a, int n) {
    CurveFamily curve(p);
    auto phi = [&](double y) { return std::pow(y, p) - 1.0 - p * (y - 1.0); };
    // effective trial support: lambda phi(y) <= 30 (amplitude^1 ~ 1e-13 of peak)
    const double cut = 30.0;
    double y_lo = 0.0;
    if (lambda * (p - 1.0) > cut) {  // phi(0) = p - 1
        double A = 0.0, B = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (A + B);
            (lambda * phi(mid) > cut ? A : B) = mid;
        }
        y_lo = 0.5 * (A + B);
    }
    double y_hi = 2.0;
    while (lambda * phi(y_hi) < cut) y_hi *= 1.5;
    {
        double A = 1.0, B = y_hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (A + B);
            (lambda * phi(mid) > cut ? B : A) = mid;
        }
        y_hi = 0.5 * (A + B);
    }

    const double q = (p - 2.0) / 3.0 + a;
    auto trial = [=](double y) { return std::exp(-lambda * (std::pow(y, p) - 1.0 - p * (y - 1.0))); };
    CurveMeasure m(curve, q);
    m.half_line = true;
    m.trial = trial;

    TwofoldGrid g;
    const double u_lo = 2.0 * y_lo, u_hi = 2.0 * y_hi;
    const double v_lo = 2.0 * curve.psi(y_lo), v_hi = 2.0 * curve.psi(y_hi);
    g.hu = (u_hi - u_lo) / n;
    g.hv = (v_hi - v_lo) / n;
    g.mu0 = static_cast<int>(std::floor(u_lo / g.hu + 0.5));
    g.mv0 = static_cast<int>(std::floor(v_lo / g.hv + 0.5));
    g.nu = n + 2;
    g.nv = n + 2;
    g.value.assign(static_cast<std::size_t>(g.nu) * static_cast<std::size_t>(g.nv), 0.0);

    for (int i = 0; i < g.nu; ++i) {
        const double u = (g.mu0 + i) * g.hu;
        if (u <= 0.0) continue;
        const double vfold = 2.0 * curve.psi(0.5 * u);
        const double vtop = curve.psi(u);
        auto d2 = [&](double v) {
            try {
                const double val = twofold_density(m, u, v);
                return std::isfinite(val) ? val : 0.0;
            } catch (const BoundaryError&) {
                return 0.0;
            }
        };
        for (int j = 0; j < g.nv; ++j) {
            const double vc = (g.mv0 + j) * g.hv;
            double va = std::max(vc - 0.5 * g.hv, vfold);
            double vb = std::min(vc + 0.5 * g.hv, vtop);
            if (vb <= va) continue;
            double cell;
            if (va - vfold < g.hv) {
                // fold-adjacent: v = vfold + t^2
                const double t0 = std::sqrt(va - vfold), t1 = std::sqrt(vb - vfold);
                cell = integrate([&](double t) { return 2.0 * t * d2(vfold + t * t); }, t0, t1,
                                 1e-6, 0.0, 60)
                           .value;
            } else {
                cell = integrate(d2, va, vb, 1e-6, 0.0, 60).value;
            }
            g.value[static_cast<std::size_t>(i) * static_cast<std::size_t>(g.nv) +
                    static_cast<std::size_t>(j)] = cell / g.hv;
        }
    }
    return g;
}

/// <D2 * D2, D2> by a direct lattice sum; nonnegative by construction.
double grid_inner_product(const TwofoldGrid& g) {
    struct Cell {
        int i, j;
        double v;
    };
    std::vector<Cell> nz;
    for (int i = 0; i < g.nu; ++i)
        for (int j = 0; j < g.nv; ++j) {
            const double v = g.at(i, j);
            if (v > 0.0) nz.push_back({i, j, v});
        }
    double total = 0.0;
    for (const Cell& c1 : nz) {
        double row = 0.0;
        for (const Cell& c2 : nz) {
            // (mu0+i1)+(mu0+i2) = mu0 + i3  =>  i3 = i1 + i2 + mu0
            const double d3 = g.at(c1.i + c2.i + g.mu0, c1.j + c2.j + g.mv0);
            if (d3 > 0.0) row += c2.v * d3;
        }
        total += c1.v * row;
    }
    const double cell_area = g.hu * g.hv;
    return total * cell_area * cell_area;
}

double odd_B_term(double p, double lambda, double a, int n) {
    const TwofoldGrid g = build_twofold_grid(p, lambda, a, n);
    const double n1 = odd_trial_norm_sq(p, lambda, a);
    return grid_inner_product(g) / (n1 * n1 * n1);
}

}  // namespace

OddTerms odd_expansion_terms(double p, double lambda, double a, int grid_size) {
    if (!(p > 1.0)) throw std::domain_error("odd_expansion_terms: p must be > 1");
    if (!(lambda > 0.0)) throw std::domain_error("odd_expansion_terms: lambda must be > 0");
    check_weight_tweak(p, a);
    if (grid_size < 16 || grid_size > 4096)
        throw std::domain_error("odd_expansion_terms: grid_size out of range [16, 4096]");

    OddTerms out;
    out.A = odd_A_term(p, lambda, a, &out.a_rel_err);
    out.B = odd_B_term(p, lambda, a, grid_size);
    const double b_half = odd_B_term(p, lambda, a, grid_size / 2);
    out.b_rel_err = (out.B > 0.0) ? std::fabs(out.B - b_half) / out.B : 0.0;
    return out;
}

DensityGrid sample_triple_slice(double p, double a, int points, double rel_tol) {
    if (points < 1) throw std::domain_error("sample_triple_slice: points must be >= 1");
    CurveMeasure m(CurveFamily(p), (p - 2.0) / 3.0 + a);
    const double scale = std::pow(3.0, 1.0 - 1.0 / p);
    DensityGrid out;
    out.description = "3-fold convolution density on the tau = 1 slice";
    out.fold_count = 3;
    out.column_names = {"t", "value"};
    for (int i = 0; i < points; ++i) {
        const double t = -1.0 + 2.0 * (i + 0.5) / points;
        out.rows.push_back({t, triple_density(m, scale * t, 1.0, rel_tol)});
    }
    return out;
}

DensityGrid sample_twofold_rectangle(const CurveMeasure& m, double u0, double u1, double v0,
                                     double v1, int nu, int nv) {
    if (nu < 1 || nv < 1)
        throw std::domain_error("sample_twofold_rectangle: grid dims must be >= 1");
    DensityGrid out;
    out.description = "2-fold convolution density on a rectangle";
    out.fold_count = 2;
    out.column_names = {"u", "v", "value"};
    for (int i = 0; i < nu; ++i) {
        const double u = u0 + (u1 - u0) * (nu == 1 ? 0.5 : static_cast<double>(i) / (nu - 1));
        for (int j = 0; j < nv; ++j) {
            const double v =
                v0 + (v1 - v0) * (nv == 1 ? 0.5 : static_cast<double>(j) / (nv - 1));
            double val = 0.0;
            try {
                val = twofold_density(m, u, v);
                if (!std::isfinite(val)) val = 0.0;
            } catch (const BoundaryError&) {
                val = 0.0;
            }
            out.rows.push_back({u, v, val});
        }
    }
    return out;
}

}  // namespace curvebound
