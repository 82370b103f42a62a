#include "curvebound/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "curvebound/kahan.hpp"

namespace curvebound {

namespace {

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights. QUADPACK dqk15 constants.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<double, 15> fv{};
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[static_cast<std::size_t>(j)];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        fv[static_cast<std::size_t>(j)] = f1;
        fv[static_cast<std::size_t>(j) + 8] = f2;
        const double fsum = f1 + f2;
        resk += kWgk[static_cast<std::size_t>(j)] * fsum;
        if (j % 2 == 1) resg += kWg[static_cast<std::size_t>(j / 2)] * fsum;
    }
    fv[7] = fc;
    // QUADPACK dqk15 error sharpening via resasc
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[static_cast<std::size_t>(j)] *
                  (std::fabs(fv[static_cast<std::size_t>(j)] - reskh) +
                   std::fabs(fv[static_cast<std::size_t>(j) + 8] - reskh));
    resasc *= std::fabs(h);
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, resk * h, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, int max_panels) {
    QuadratureResult out;
    if (a == b) return out;
    std::priority_queue<Panel> queue;
    Panel p0 = gk15(f, a, b);
    double total = p0.value;
    double total_err = p0.error;
    queue.push(p0);
    int panels = 1;
    while (panels < max_panels) {
        if (total_err <= std::max(abs_tol, rel_tol * std::fabs(total))) break;
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // panel at floating-point resolution; keep its estimate
            total_err -= worst.error;
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    // Recompute sum from surviving panels for a compensated total.
    CompensatedSum<double> sum;
    CompensatedSum<double> errsum;
    while (!queue.empty()) {
        sum.add(queue.top().value);
        errsum.add(queue.top().error);
        queue.pop();
    }
    out.value = sum.result();
    out.error_estimate = errsum.result();
    out.panels = panels;
    out.converged =
        out.error_estimate <= std::max(abs_tol, rel_tol * std::fabs(out.value)) * 1.001 ||
        out.error_estimate <= abs_tol;
    return out;
}

double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double rel_tol, double abs_tol, int max_panels) {
    QuadratureResult r = integrate(f, a, b, rel_tol, abs_tol, max_panels);
    if (!r.converged)
        throw QuadratureError("quadrature did not reach requested tolerance (achieved " +
                                  std::to_string(r.error_estimate) + ")",
                              r.error_estimate);
    return r.value;
}

double integrate_peaked(const std::function<double(double)>& exponent,
                        const std::function<double(double)>& prefactor, double center,
                        double width, double lo, double hi, double rel_tol, double cutoff) {
    const double e0 = exponent(center);
    auto rel_exp = [&](double y) { return exponent(y) - e0; };
    // expand bracket until the exponential is negligible or the hard bound hits
    double a = center - width;
    for (int i = 0; i < 200 && a > lo && rel_exp(a) < cutoff; ++i) {
        width *= 1.5;
        a = center - width;
    }
    a = std::max(a, lo);
    double width_r = (a != lo) ? (center - a) : std::max(width, 1e-3 * std::fabs(center) + 1e-6);
    double b = center + width_r;
    for (int i = 0; i < 200 && b < hi && rel_exp(b) < cutoff; ++i) {
        width_r *= 1.5;
        b = center + width_r;
    }
    b = std::min(b, hi);
    auto integrand = [&](double y) {
        const double e = rel_exp(y);
        if (e > cutoff) return 0.0;
        return prefactor(y) * std::exp(-e);
    };
    // split at the peak so the GK panels see one-sided decay
    QuadratureResult left = integrate(integrand, a, center, rel_tol, 0.0);
    QuadratureResult right = integrate(integrand, center, b, rel_tol, 0.0);
    return left.value + right.value;
}

}  // namespace curvebound
