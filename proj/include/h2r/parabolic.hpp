#pragma once

#include <cmath>
#include <stdexcept>

#include "h2r/curvature.hpp"
#include "h2r/geometry.hpp"

namespace h2r {

// Parabolic catenoid in the sine gauge: Psi_lambda(x,t) = (lambda x,
// lambda sin t, t), t in (0, pi).  All lambda give congruent surfaces.
inline Point3 psi(double lambda, double x, double t) {
    if (!(lambda > 0.0)) throw std::domain_error("psi: lambda must be positive");
    if (!(t > 0.0 && t < M_PI)) throw std::domain_error("psi: t outside (0, pi)");
    return {lambda * x, lambda * std::sin(t), t, Model::HalfPlane};
}

// Cosine gauge: Fhat(x,t) = (x, cos t, t), t in (-pi/2, pi/2); equals the
// sine gauge at lambda = 1 shifted vertically by -pi/2.
inline Point3 fhat(double x, double t) {
    if (!(t > -M_PI / 2.0 && t < M_PI / 2.0))
        throw std::domain_error("fhat: t outside (-pi/2, pi/2)");
    return {x, std::cos(t), t, Model::HalfPlane};
}

// Defect of membership in the ambient surface whose cylinder intersection is
// the stack of parabolic catenoids: (1-x^2-y^2) - cos(t)((1+x)^2 + y^2).
inline double q_residual(const Point3& p) {
    const double a = 1.0 - p.u * p.u - p.v * p.v;
    const double b = (1.0 + p.u) * (1.0 + p.u) + p.v * p.v;
    return a - std::cos(p.t) * b;
}

inline PatchJet psi_patch(double lambda, double x, double t) {
    const Jet2 X = Jet2::var_x(x), T = Jet2::var_y(t);
    return {{lambda * X, lambda * sin(T), T}, Model::HalfPlane};
}

// Cosine-gauge patch for general lambda: (lambda x, lambda cos t, t).
inline PatchJet fhat_patch(double lambda, double x, double t) {
    const Jet2 X = Jet2::var_x(x), T = Jet2::var_y(t);
    return {{lambda * X, lambda * cos(T), T}, Model::HalfPlane};
}

// The limit graph (x, y, arccos y) over the half-plane strip 0 < y < 1.
inline PatchJet graph_phi0_patch(double x, double y) {
    const Jet2 X = Jet2::var_x(x), Y = Jet2::var_y(y);
    return {{X, Y, acos(Y)}, Model::HalfPlane};
}

}  // namespace h2r
