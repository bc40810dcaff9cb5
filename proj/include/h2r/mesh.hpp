#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "h2r/catenoid.hpp"
#include "h2r/strip.hpp"
#include "h2r/tall.hpp"

namespace h2r {

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::size_t, 3>> faces;  // 0-based; OBJ writer shifts
};

// Plain vertex/face OBJ, deterministic %.17g formatting.
void write_obj(const Mesh& mesh, const std::string& path);

// Surface of revolution swept by the profile r(t) over `periods` full periods
// of oscillation, optionally dropping faces that leave the open unit cylinder.
Mesh mesh_unduloid(const CatenoidProfile& c, std::size_t n_angle, std::size_t n_t,
                   double periods, bool clip_to_cylinder);

// One catenoid piece: |t| < h/2 inside the cylinder.
Mesh mesh_catenoid(const CatenoidProfile& c, std::size_t n_angle, std::size_t n_t);

// Parabolic catenoid mapped to the disk model, x in [-box, box].
Mesh mesh_parabolic(double lambda, std::size_t n_x, std::size_t n_t, double box);

// Zero set of the ambient membership residual over [-box, box]^3 by marching
// tetrahedra; vertices polished along grid edges to |residual| < 1e-8.
Mesh mesh_q_surface(double box, std::size_t n_cells);

// Tall-rectangle sheets.  extension widens the chart to the ambient annulus
// x < 1/d1; periods > 0 stacks reflected copies with the full turning-point
// period; clip drops faces outside the unit cylinder.
Mesh mesh_tall(double d, std::size_t n_x, std::size_t n_y, bool extension, int periods,
               bool clip_to_cylinder);

// Half-height of the full annular extension, lambda at the outer turning
// point 1/d1 (both endpoint singularities handled natively).
double lambda_full_extension(double d);

void write_csv_catenoid_profile(const CatenoidProfile& c, const std::string& path);
void write_csv_tall_profile(double d, std::size_t n, const std::string& path);
void write_csv_strip(const StripField& f, const std::string& path);

}  // namespace h2r
