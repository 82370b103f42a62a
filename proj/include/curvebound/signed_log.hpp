#pragma once

#include <cmath>
#include <stdexcept>

namespace curvebound {

/// A real number carried as sign * exp(log_magnitude).
///
/// Used wherever products of Gamma values, factorials and powers would
/// overflow a double long before the final combined quantity does.
/// sign == 0 represents an exact zero; log_magnitude is then meaningless.
struct SignedLogValue {
    double log_magnitude = 0.0;
    int sign = 0;

    static SignedLogValue zero() { return {0.0, 0}; }
    static SignedLogValue one() { return {0.0, +1}; }

    static SignedLogValue from_value(double x) {
        if (x == 0.0) return zero();
        return {std::log(std::fabs(x)), x > 0 ? +1 : -1};
    }

    /// sign * exp(log_magnitude) of a positive log-scale quantity.
    static SignedLogValue from_log(double log_mag, int s) {
        if (s == 0) return zero();
        return {log_mag, s > 0 ? +1 : -1};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_magnitude);
    }

    bool is_zero() const { return sign == 0; }

    SignedLogValue operator*(const SignedLogValue& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {log_magnitude + o.log_magnitude, sign * o.sign};
    }

    SignedLogValue operator/(const SignedLogValue& o) const {
        if (o.sign == 0) throw std::domain_error("SignedLogValue: division by zero");
        if (sign == 0) return zero();
        return {log_magnitude - o.log_magnitude, sign * o.sign};
    }
};

}  // namespace curvebound
