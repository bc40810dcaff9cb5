#pragma once

#include "h2r/curvature.hpp"
#include "h2r/elliptic.hpp"
#include "h2r/geometry.hpp"
#include "h2r/jet.hpp"

namespace h2r {

// Tall rectangle surface: a properly embedded minimal disk of height
// h_d > pi foliated by equidistant curves, with generating profile lambda_d
// over x in [d1, 1] and an ambient annular extension up to x < 1/d1.
struct TallRectSpec {
    double d = 0.0;
    double d1 = 0.0;      // sqrt(1-d)/sqrt(1+d)
    double height = 0.0;  // h_d = 2 lambda_d(1)
};

double d1(double d);
TallRectSpec make_tall(double d);

// lambda_d(x) = int_{d1}^x 2 dv / sqrt(d^2(1+v^2)^2 - (1-v^2)^2) with the
// turning-point singularity at v = d1 removed by v = d1 + (x-d1)s^2.
// Domain [d1, 1].
double lambda_quadrature(double d, double x);

// Same integral continued across x = 1 up to the outer turning point 1/d1
// (the ambient annular extension; mesh export only).
double lambda_extended(double d, double x);

// Closed form -(2/(1-d)) Im F(arcsin(d1 x) | 1/d1^4); the slot in the
// elliptic integral is the modulus of the defining integral, entering the
// parameter convention squared.  Validated against lambda_quadrature.
double lambda_elliptic(double d, double x);

// d(lambda)/d(rho) = 1/sqrt(d^2 cosh^2 rho - 1), rho the hyperbolic distance
// variable with x = tanh(rho/2); rho > arccosh(1/d).
double lambda_rho_derivative(double d, double rho);

// h_d = 2 lambda_d(1); > pi, increasing in d, -> pi as d -> 0.
double height_tall(double d);

// Bigraph parametrization of the two sheets:
//   Upsilon_d(x,y) = ((x-x y^2)/(x^2 y^2 + 1), ((x^2+1) y)/(x^2 y^2 + 1),
//                     sign * lambda_d(x)).
// Restricted surface: d1 < x < 1; the annular extension allows x < 1/d1.
Point3 upsilon(double d, double x, double y, int sign);

// lambda_d threaded through a jet (closed-form first/second derivatives).
Jet2 lambda_jet(double d, const Jet2& x);

PatchJet upsilon_patch(double d, double x, double y, int sign);

// Squared-distance defect of the horizontal projection of Upsilon_d(x, .)
// from the circle through (0, 1) and (0, -1) with center ((x^2-1)/(2x), 0):
// zero means the slice is an arc of that circle.
double slice_circle_residual(double x, double y);

// Moebius map of the disk taking the inner turning radius d1 to 0; conjugated
// dilation used in the d -> 0 limit comparisons.
complexd tall_regeneration_map(double d, complexd z);
complexd tall_regeneration_map_inverse(double d, complexd z);

}  // namespace h2r
