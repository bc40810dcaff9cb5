#pragma once

#include <cmath>

namespace h2r {

// Second-order two-variable forward-mode derivative carrier.  Tracks value,
// gradient and Hessian of a scalar function of (x, y) through arithmetic.
struct Jet2 {
    double v = 0.0;
    double dx = 0.0, dy = 0.0;
    double dxx = 0.0, dxy = 0.0, dyy = 0.0;

    Jet2() = default;
    Jet2(double value) : v(value) {}
    Jet2(double value, double gx, double gy, double hxx, double hxy, double hyy)
        : v(value), dx(gx), dy(gy), dxx(hxx), dxy(hxy), dyy(hyy) {}

    static Jet2 var_x(double value) { return {value, 1.0, 0.0, 0.0, 0.0, 0.0}; }
    static Jet2 var_y(double value) { return {value, 0.0, 1.0, 0.0, 0.0, 0.0}; }

    Jet2 operator-() const { return {-v, -dx, -dy, -dxx, -dxy, -dyy}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.dx + b.dx, a.dy + b.dy, a.dxx + b.dxx, a.dxy + b.dxy, a.dyy + b.dyy};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.dx - b.dx, a.dy - b.dy, a.dxx - b.dxx, a.dxy - b.dxy, a.dyy - b.dyy};
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.dx * b.v + a.v * b.dx,
            a.dy * b.v + a.v * b.dy,
            a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx,
            a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
            a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy};
}

// Chain rule through a scalar function with derivatives f1 = f'(u.v), f2 = f''(u.v).
inline Jet2 compose(const Jet2& u, double f0, double f1, double f2) {
    return {f0,
            f1 * u.dx,
            f1 * u.dy,
            f2 * u.dx * u.dx + f1 * u.dxx,
            f2 * u.dx * u.dy + f1 * u.dxy,
            f2 * u.dy * u.dy + f1 * u.dyy};
}

inline Jet2 inv(const Jet2& a) {
    const double iv = 1.0 / a.v;
    return compose(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }

inline Jet2 operator+(double s, const Jet2& a) { return Jet2(s) + a; }
inline Jet2 operator+(const Jet2& a, double s) { return a + Jet2(s); }
inline Jet2 operator-(double s, const Jet2& a) { return Jet2(s) - a; }
inline Jet2 operator-(const Jet2& a, double s) { return a - Jet2(s); }
inline Jet2 operator*(double s, const Jet2& a) {
    return {s * a.v, s * a.dx, s * a.dy, s * a.dxx, s * a.dxy, s * a.dyy};
}
inline Jet2 operator*(const Jet2& a, double s) { return s * a; }
inline Jet2 operator/(const Jet2& a, double s) { return (1.0 / s) * a; }
inline Jet2 operator/(double s, const Jet2& a) { return s * inv(a); }

inline Jet2 sqrt(const Jet2& a) {
    const double r = std::sqrt(a.v);
    return compose(a, r, 0.5 / r, -0.25 / (r * a.v));
}
inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return compose(a, e, e, e);
}
inline Jet2 log(const Jet2& a) {
    const double iv = 1.0 / a.v;
    return compose(a, std::log(a.v), iv, -iv * iv);
}
inline Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, c, -s, -c);
}
inline Jet2 asin(const Jet2& a) {
    const double q = 1.0 - a.v * a.v;
    const double r = std::sqrt(q);
    return compose(a, std::asin(a.v), 1.0 / r, a.v / (q * r));
}
inline Jet2 acos(const Jet2& a) {
    const double q = 1.0 - a.v * a.v;
    const double r = std::sqrt(q);
    return compose(a, std::acos(a.v), -1.0 / r, -a.v / (q * r));
}
inline Jet2 atan(const Jet2& a) {
    const double q = 1.0 + a.v * a.v;
    return compose(a, std::atan(a.v), 1.0 / q, -2.0 * a.v / (q * q));
}
inline Jet2 cosh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, c, s, c);
}
inline Jet2 sinh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, s, c, s);
}

// Complex value built from two jets, enough for Moebius transformations.
struct CJet2 {
    Jet2 re, im;

    CJet2() = default;
    CJet2(Jet2 r, Jet2 i) : re(r), im(i) {}
    CJet2(double r, double i = 0.0) : re(r), im(i) {}
};

inline CJet2 operator+(const CJet2& a, const CJet2& b) { return {a.re + b.re, a.im + b.im}; }
inline CJet2 operator-(const CJet2& a, const CJet2& b) { return {a.re - b.re, a.im - b.im}; }
inline CJet2 operator*(const CJet2& a, const CJet2& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CJet2 operator/(const CJet2& a, const CJet2& b) {
    const Jet2 den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline Jet2 abs2(const CJet2& a) { return a.re * a.re + a.im * a.im; }
inline Jet2 abs(const CJet2& a) { return sqrt(abs2(a)); }

}  // namespace h2r
