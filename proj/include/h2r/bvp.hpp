#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "h2r/jacobi.hpp"
#include "h2r/strip.hpp"

namespace h2r {

enum class Side { Plus, Minus };

// Fourier-mode solution of (-d/dt^2 + xi^2 - 1) v = 0 on (0, pi) with
// v_plus(xi, 0) = 0, v_plus(xi, pi) = 1 (and the mirrored v_minus).  The
// trigonometric and hyperbolic regimes meet at |xi| = 1, where a series form
// of sin(mu t)/mu is used to dodge the cancellation in sin(mu pi).
double multiplier_v(double xi, double t, Side side);

// Dirichlet Green function of -d/dt^2 + (xi^2 - 1) on (0, pi); symmetric,
// vanishing at both ends.  Evaluated in overflow-safe exponential form for
// |xi| > 1.
double green_hat(double xi, double t, double tp);

// Sampled boundary traces at t = pi (plus) and t = 0 (minus) on the periodic
// x-grid of StripField.
struct BoundaryData {
    double X = 0.0;
    std::size_t nx = 0;
    std::vector<double> phi_plus, phi_minus;
    double mean_plus = 0.0, mean_minus = 0.0;

    static BoundaryData from_samples(double X, std::vector<double> plus,
                                     std::vector<double> minus);
};

// Reduced right-hand side ftilde = f / sin^2 t sampled on the full strip grid
// ((nt+1) x nx, row-major); must vanish on the two boundary rows.
struct SourceData {
    double X = 0.0;
    std::size_t nx = 0, nt = 0;
    std::vector<double> ftilde;

    double at(std::size_t i, std::size_t j) const { return ftilde[i * nx + j]; }
};

// Solve (d_x^2 + d_t^2 + 1) u = 0 with u(., pi) = phi_plus, u(., 0) =
// phi_minus by the multiplier method: u-hat(xi, t) = phi-hat_+ v_+ +
// phi-hat_- v_-.  Boundary data must have (near-)zero mean; the zero mode is
// the xi = 0 double pole and is rejected, not regularized.
StripField solve_dirichlet(const BoundaryData& bd, std::size_t nt = 256);

// Solve L u = f with zero boundary traces through the Green function:
// u-hat(xi, t) = int G-hat(xi, t, t') ftilde-hat(xi, t') dt'.
StripField solve_inhomogeneous(const SourceData& src);

// Dirichlet solve followed by the truncated-moment diagnostics of the
// resulting field at several radii.
struct MomentPipelineReport {
    StripField field;
    std::vector<std::pair<double, double>> moments;  // (r, M(r))
    MomentReport edge;                               // at r = X - 2
};
MomentPipelineReport moment_check_pipeline(const BoundaryData& bd, std::size_t nt = 256);

// Named boundary presets used by tests and the CLI: "gaussian_derivative"
// x e^{-x^2}, "mexican_hat" (1-2x^2) e^{-x^2}, "bump_pair" (difference of two
// compact bumps, mean-subtracted), "none" zeros.
std::vector<double> boundary_preset(const std::string& name, double X, std::size_t nx,
                                    double scale = 1.0);

// Source preset "mms": x (9 - 4x^2) e^{-x^2} sin(2t), the image of
// x e^{-x^2} sin(2t) under -(d_x^2 + d_t^2 + 1).
SourceData source_preset(const std::string& name, double X, std::size_t nx, std::size_t nt,
                         double scale = 1.0);

}  // namespace h2r
