#pragma once

#include <array>
#include <functional>

#include "h2r/geometry.hpp"
#include "h2r/jet.hpp"

namespace h2r {

// Full 2-jet of an immersion at one parameter point: the three coordinate
// components with value, gradient and Hessian in the patch variables (u,v).
struct PatchJet {
    std::array<Jet2, 3> c{};
    Model model = Model::Disk;
};

using PatchFn = std::function<PatchJet(double, double)>;

struct ExtrinsicReport {
    double E = 0.0, F = 0.0, G = 0.0;  // induced metric coefficients
    Vec3 nu{};                          // unit normal, coordinate components
    double H = 0.0;                     // mean curvature (average convention)
    double A2 = 0.0;                    // squared norm of the shape operator
    double ric_nu = 0.0;                // ambient Ricci in the normal direction
};

// First and second fundamental forms, unit normal, H, |A|^2 and Ric(nu,nu) at
// an evaluated jet.  The second form uses covariant second derivatives with
// the closed-form Christoffel symbols of the product metric; throws on
// degenerate immersions (EG - F^2 < 1e-14) and near the model boundary.
ExtrinsicReport fundamental_forms(const PatchJet& P);
inline ExtrinsicReport fundamental_forms(const PatchFn& patch, double u, double v) {
    return fundamental_forms(patch(u, v));
}

double ricci_normal(const PatchJet& P);
inline double ricci_normal(const PatchFn& patch, double u, double v) {
    return ricci_normal(patch(u, v));
}

double conformality_defect(const PatchJet& P);
inline double conformality_defect(const PatchFn& patch, double u, double v) {
    return conformality_defect(patch(u, v));
}

}  // namespace h2r
