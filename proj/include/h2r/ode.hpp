#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace h2r {

// Dormand-Prince 5(4) adaptive step integrator for small autonomous-in-size
// systems y' = f(t, y).  Integrates from t0 to t1 in either direction.
template <std::size_t N, class F>
std::array<double, N> integrate_ode(const F& f, double t0, std::array<double, N> y,
                                    double t1, double tol = 1e-13) {
    using State = std::array<double, N>;
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                            a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                            a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                            a65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                            b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                            e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
    static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                            c5 = 8.0 / 9.0;

    if (t1 == t0) return y;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::min(0.1, std::abs(t1 - t0));
    State k1 = f(t, y);
    std::size_t steps = 0;
    const std::size_t max_steps = 2000000;

    while (dir * (t1 - t) > 0.0) {
        if (++steps > max_steps) throw std::runtime_error("integrate_ode: step limit reached");
        if (dir * (t + h - t1) > 0.0) h = t1 - t;

        State y2, y3, y4, y5, y6, y7;
        for (std::size_t i = 0; i < N; ++i) y2[i] = y[i] + h * a21 * k1[i];
        const State k2 = f(t + c2 * h, y2);
        for (std::size_t i = 0; i < N; ++i) y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        const State k3 = f(t + c3 * h, y3);
        for (std::size_t i = 0; i < N; ++i)
            y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        const State k4 = f(t + c4 * h, y4);
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        const State k5 = f(t + c5 * h, y5);
        for (std::size_t i = 0; i < N; ++i)
            y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                a65 * k5[i]);
        const State k6 = f(t + h, y6);
        for (std::size_t i = 0; i < N; ++i)
            y7[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        const State k7 = f(t + h, y7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double scale = tol * (1.0 + std::max(std::abs(y[i]), std::abs(y7[i])));
            err = std::max(err, std::abs(ei) / scale);
        }
        if (err <= 1.0) {
            t += h;
            y = y7;
            k1 = k7;  // first-same-as-last
        }
        const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, factor));
        if (std::abs(h) < 1e-15 * (1.0 + std::abs(t)))
            throw std::runtime_error("integrate_ode: step underflow");
    }
    return y;
}

}  // namespace h2r
