#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "h2r/curvature.hpp"
#include "h2r/geometry.hpp"
#include "h2r/jet.hpp"

namespace h2r {

struct ProfileSample {
    double t, r, rprime;
};

// One member of the rotational catenoid family, identified by the conserved
// value k of (1-r^2)^2/(4r^2) + (r'/r)^2 along the profile r(t).
// r oscillates between r0 = sqrt(k+1)-sqrt(k) and rmax = sqrt(k+1)+sqrt(k)
// (note r0*rmax = 1); the piece inside the unit cylinder has height h(k) and
// the full profile is periodic with period 2*h(k).
struct CatenoidProfile {
    double k = 0.0;
    double r0 = 0.0;
    double rmax = 0.0;
    double height = 0.0;
    double period = 0.0;
    double modulus_estimate = 0.0;
    double max_first_integral_drift = 0.0;
    std::vector<ProfileSample> samples;

    // r, r', r'' at arbitrary t; fresh integration from the waist, reduced by
    // the r(-t) = r(t), r(period - t) = r(t) symmetries.
    std::array<double, 3> eval(double t) const;
};

// (1-r^2)^2/(4r^2) + (r'/r)^2; conserved along profiles.
double first_integral(double r, double rprime);

// Profile data without samples (radii, height, period, modulus).
CatenoidProfile make_catenoid(double k);

// Integrate the profile ODE 4rr'' - 4(r')^2 + r^4 - 1 = 0 from r(0) = r0,
// r'(0) = 0 up to t_max, storing n_samples+1 equispaced samples (continuous
// stepping, so conserved-quantity drift accumulates honestly).
// n_samples = 0 picks roughly 128 samples per period.
CatenoidProfile integrate_profile(double k, double t_max, std::size_t n_samples = 0);

// Local extrema of r over the sampled range, polished to r' = 0 by bisection.
struct ProfileExtremum {
    double t, r;
    bool is_min;
};
std::vector<ProfileExtremum> profile_extremes(const CatenoidProfile& c);

// Time t >= 0 at which the rising profile first reaches radius r, by the
// quadrature t(r) = int_{r0}^r 2 du / sqrt(4k u^2 - (1-u^2)^2); r in [r0, 1].
double t_of_r(double k, double r);

// Same map threaded through a jet (value by quadrature, derivatives in closed
// form); requires r strictly between r0 and rmax.
Jet2 t_of_r_jet(double k, const Jet2& r);

// Height h(k) = 2 t_of_r(k, 1) of the piece inside the cylinder; (0, pi),
// strictly decreasing in k.
double height(double k);

// Annulus modulus estimate exp(-sqrt(k) h(k)).
double conformal_modulus(double k);

// X(theta, t) = (r(t) cos(sqrt(k) theta), r(t) sin(sqrt(k) theta), t) in the
// disk model; rejects points outside the open unit cylinder.
Point3 immerse_catenoid(const CatenoidProfile& c, double theta, double t);
Point3 immerse_catenoid(double k, double theta, double t);

// Same formula without the cylinder restriction (ambient surface of
// revolution; mesh export only).
Point3 ambient_unduloid(const CatenoidProfile& c, double theta, double t);
Point3 ambient_unduloid(double k, double theta, double t);

// Revolution patch jet at (theta, t): the immersion components with their
// exact derivatives (profile second derivative from the ODE).
PatchJet catenoid_patch(const CatenoidProfile& c, double theta, double t);

// Graph point (x, y, t(x,y)) of the dilated catenoid over the half-plane:
// pull (x,y) back by the dilation by mu0(k) and the disk map, then apply
// t_of_r to the resulting disk radius.
Point3 dilated_graph_phi(double k, double x, double y);

}  // namespace h2r
