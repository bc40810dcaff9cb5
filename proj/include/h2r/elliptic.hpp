#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace h2r {

using complexd = std::complex<double>;

// Carlson symmetric integral R_F(x, y, z) by the duplication algorithm, valid
// for complex arguments off the negative real axis.  Negative real inputs must
// be passed with a +0.0 imaginary part so the principal square root lands on
// the upper branch.
inline complexd carlson_rf(complexd x, complexd y, complexd z) {
    const complexd A0 = (x + y + z) / 3.0;
    const double q = std::pow(3.0 * 1e-18, -1.0 / 6.0) *
                     std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)});
    complexd A = A0;
    double scale = 1.0;
    for (int iter = 0; iter < 60 && q > scale * std::abs(A); ++iter) {
        const complexd sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const complexd lam = sx * sy + sy * sz + sz * sx;
        A = 0.25 * (A + lam);
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        scale *= 4.0;
    }
    // (A_n - x_n) = (A_0 - x_0)/4^n exactly, so the scaled differences come
    // from the current iterates without touching the originals.
    const complexd X = (A - x) / A;
    const complexd Y = (A - y) / A;
    const complexd Z = -X - Y;
    const complexd E2 = X * Y - Z * Z;
    const complexd E3 = X * Y * Z;
    return (1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0) /
           std::sqrt(A);
}

// Incomplete elliptic integral of the first kind in the parameter convention,
//   F(phi | m) = int_0^phi (1 - m sin^2 theta)^{-1/2} dtheta,
// continued to m sin^2 phi > 1 through the upper half plane (principal branch
// of the square root with the cut approached from above).
inline complexd elliptic_F(double phi, double m) {
    if (!(phi >= 0.0 && phi <= M_PI / 2.0))
        throw std::domain_error("elliptic_F: phi outside [0, pi/2]");
    const double s = std::sin(phi);
    const double c2 = std::cos(phi) * std::cos(phi);
    const double a2 = 1.0 - m * s * s;
    // +0.0 imaginary parts select the upper branch when c2 or a2 is negative.
    return s * carlson_rf(complexd(c2, 0.0), complexd(a2, 0.0), complexd(1.0, 0.0));
}

}  // namespace h2r
