#pragma once

namespace curvebound {

/// Neumaier-compensated accumulator. Safe for terms of wildly mixed
/// magnitude and sign (the Legendre coefficient sums cancel almost
/// completely at p = 2).
template <typename T = double>
struct CompensatedSum {
    T sum = T(0);
    T comp = T(0);

    void add(T value) {
        const T t = sum + value;
        if ((sum >= 0 ? sum : -sum) >= (value >= 0 ? value : -value))
            comp += (sum - t) + value;
        else
            comp += (value - t) + sum;
        sum = t;
    }

    T result() const { return sum + comp; }
};

}  // namespace curvebound
