#pragma once

#include <cstddef>

#include "h2r/curvature.hpp"
#include "h2r/geometry.hpp"
#include "h2r/jet.hpp"
#include "h2r/strip.hpp"

namespace h2r {

// Coordinate gauge on the parabolic catenoid: sine gauge t in (0, pi) or
// cosine gauge t in (-pi/2, pi/2); they differ by t -> t - pi/2.
enum class Gauge { Psi, Fhat };

// The closed-form solutions of L u = 0 carried by the library:
//   Psi     vertical-translation speed (sin t / cos t by gauge),
//   Utilde  the companion non-decaying solution x sin t,
//   WCat    normal speed of the catenoid regeneration,
//   WTall   normal speed of the tall-rectangle regeneration (= -WCat).
enum class JacobiField { Psi, Utilde, WCat, WTall };

// Value and exact derivatives of a closed-form field at (x, t).
Jet2 analytic_field_jet(JacobiField f, Gauge g, double x, double t);
double analytic_field(JacobiField f, Gauge g, double x, double t);

// Jacobi operator applied to a closed-form field via its exact jet:
// L u = -sin^2(t) (u_xx + u_tt + u) in the sine gauge, -cos^2(t) (...) in the
// cosine gauge.
double jacobi_apply(JacobiField f, Gauge g, double x, double t);

// Discrete Jacobi operator on a strip field at interior row i (second-order
// central differences, periodic in x).
double jacobi_apply(const StripField& u, std::size_t i, std::size_t j);

// Deformation-series coefficients in powers of the square-rooted family
// parameter: a_i for the catenoid side, h_i for the tall-rectangle side
// (a_0 = h_0).  Verbatim closed forms; integrable endpoint singularities in s
// are the caller's quadrature concern.
double series_a(int i, double x, double y, double s);
double series_h(int i, double x, double y, double s);

enum class SeriesKind { Cat, Tall };

// Closed form of the second-order s-integral: int_0^1 a_2 ds =
// (x^2 y / sqrt(1-y^2) - arccos y)/4 for the catenoid side; the tall side has
// the opposite sign.
double second_order_integral(SeriesKind kind, double x, double y);

// Pointwise g-inner product of a deformation velocity with the patch's unit
// normal: the scalar Jacobi field generated by the deformation.
double jacobi_field_from_normal(const PatchJet& patch, const Vec3& velocity);

// Truncated moment of a strip field:
//   M(r) = int_{-r}^{r} (w(x,pi) + w(x,0)) dx
//        + int_0^pi sin t (w_x(r,t) - w_x(-r,t)) dt,
// which vanishes as r grows for Jacobi fields with lateral decay.  The
// convergence flag reports whether the lateral trace actually decays between
// r/2 and r (or is negligible); a bounded non-decaying field like sin t keeps
// M = 0 yet fails the flag.
struct MomentReport {
    double value = 0.0;
    double value_half = 0.0;
    double lateral_trace = 0.0;
    double lateral_trace_half = 0.0;
    bool converged = false;
};
MomentReport moment_residual(const StripField& w, double r);

}  // namespace h2r
