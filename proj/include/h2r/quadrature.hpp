#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace h2r {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod abscissae (positive half), embedded 7-point Gauss weights.
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Segment {
    double a, b, value, error;
};

template <class F>
Segment gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = kWgk[7] * f(c);
    double resg = kWg[3] * f(c);
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    resk *= h;
    resg *= h;
    return {a, b, resk, std::abs(resk - resg)};
}

}  // namespace detail

// Adaptive Gauss-Kronrod 15(7).  Bisects the worst segment until the summed
// error estimate meets the tolerance.  Integrands must be finite on the open
// interval; endpoint singularities belong to integrate_tanh_sinh instead.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abstol = 1e-12,
                     double reltol = 1e-12, std::size_t max_segments = 2000) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::vector<detail::Segment> segs;
    segs.push_back(detail::gk15(f, a, b));
    out.evaluations = 15;
    for (;;) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        out.value = total;
        out.error = err;
        if (err <= abstol || err <= reltol * std::abs(total)) {
            out.converged = true;
            return out;
        }
        if (segs.size() >= max_segments) return out;
        const detail::Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) return out;  // exhausted double precision
        segs[worst] = detail::gk15(f, s.a, mid);
        segs.push_back(detail::gk15(f, mid, s.b));
        out.evaluations += 30;
    }
}

// Tanh-sinh (double-exponential) quadrature on (a,b).  The integrand receives
// cancellation-free offsets from both endpoints, f(x, x-a, b-x), so inverse
// square-root endpoint singularities integrate to near machine precision.
// Uses x = c + (b-a)/2 * tanh(pi/2 sinh u) and doubles the trapezoid density
// per level, reusing previous nodes.
template <class F>
QuadResult integrate_tanh_sinh(const F& f, double a, double b, int levels = 11) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    const double half = 0.5 * (b - a);
    const double umax = 4.0;  // offsets decay like exp(-pi/2 sinh u): ~1e-19 at u=4

    auto node = [&](double u, double& x, double& da, double& db, double& w) -> bool {
        const double t = 0.5 * M_PI * std::sinh(u);
        const double sech = 1.0 / std::cosh(t);
        const double em = std::exp(-2.0 * std::abs(t));
        const double one_minus = 2.0 * em / (1.0 + em);  // 1 - |tanh t|, stable
        if (t >= 0.0) {
            db = half * one_minus;
            da = (b - a) - db;
        } else {
            da = half * one_minus;
            db = (b - a) - da;
        }
        x = a + da;
        w = half * 0.5 * M_PI * std::cosh(u) * sech * sech;
        return da > 0.0 && db > 0.0;
    };

    double h = 1.0;
    double sum = 0.0;
    {  // level 0: all nodes at integer u
        double x, da, db, w;
        node(0.0, x, da, db, w);
        sum = w * f(x, da, db);
        ++out.evaluations;
        for (double u = 1.0; u <= umax; u += 1.0) {
            for (double su : {u, -u}) {
                if (node(su, x, da, db, w)) {
                    sum += w * f(x, da, db);
                    ++out.evaluations;
                }
            }
        }
    }
    double prev = h * sum;
    for (int level = 1; level <= levels; ++level) {
        h *= 0.5;
        for (double u = h; u <= umax; u += 2.0 * h) {  // odd multiples of new h
            double x, da, db, w;
            for (double su : {u, -u}) {
                if (node(su, x, da, db, w)) {
                    sum += w * f(x, da, db);
                    ++out.evaluations;
                }
            }
        }
        out.value = h * sum;
        out.error = std::abs(out.value - prev);
        prev = out.value;
        if (level >= 5 && out.error < 1e-15 * (1.0 + std::abs(out.value))) {
            out.converged = true;
            return out;
        }
    }
    out.converged = out.error < 1e-10 * (1.0 + std::abs(out.value));
    return out;
}

}  // namespace h2r
