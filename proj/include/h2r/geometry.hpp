#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace h2r {

using complexd = std::complex<double>;

// Conformal model of the hyperbolic plane a point is expressed in.
enum class Model { Disk, HalfPlane };

inline const char* model_name(Model m) {
    return m == Model::Disk ? "disk" : "halfplane";
}

// Margin below which points are treated as ideal (too close to the boundary
// of the model for the metric to be evaluated reliably).
inline constexpr double kBoundaryMargin = 1e-8;

// A point of H^2 in one of the two models.  Disk: |z| < 1.  HalfPlane: Im w > 0.
struct Point2H {
    double u = 0.0;
    double v = 0.0;
    Model model = Model::Disk;

    complexd z() const { return {u, v}; }

    static Point2H disk(complexd z) { return {z.real(), z.imag(), Model::Disk}; }
    static Point2H halfplane(complexd w) { return {w.real(), w.imag(), Model::HalfPlane}; }

    void validate() const {
        if (model == Model::Disk) {
            if (u * u + v * v >= 1.0)
                throw std::domain_error("Point2H: |z| >= 1 in disk model");
        } else {
            if (v <= 0.0)
                throw std::domain_error("Point2H: Im w <= 0 in half-plane model");
        }
    }
};

// A point of H^2 x R; (u, v) is the horizontal part in `model`, t the height.
struct Point3 {
    double u = 0.0;
    double v = 0.0;
    double t = 0.0;
    Model model = Model::Disk;

    Point2H horizontal() const { return {u, v, model}; }
};

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

// Euclidean cross product of coordinate triples (used to build metric normals).
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Diagonal product metric  g = diag(gh, gh, 1)  with conformal horizontal factor gh.
// Both models are conformal, so a single factor describes the horizontal block.
struct ConformalMetric {
    double gh = 1.0;  // coefficient multiplying du^2 and dv^2
    double gt = 1.0;  // coefficient multiplying dt^2 (always 1 for the product)

    double dot(const Vec3& a, const Vec3& b) const {
        return gh * (a[0] * b[0] + a[1] * b[1]) + gt * a[2] * b[2];
    }
    double norm2(const Vec3& a) const { return dot(a, a); }

    // Raise the index of a covector written in coordinates.
    Vec3 sharp(const Vec3& a) const { return {a[0] / gh, a[1] / gh, a[2] / gt}; }
};

// Christoffel symbols Gamma[k][i][j] of the product metric at a point.
using Christoffel = std::array<std::array<std::array<double, 3>, 3>, 3>;

// Full metric tensor plus connection coefficients at a point.
struct MetricData {
    std::array<std::array<double, 3>, 3> g{};
    Christoffel gamma{};
};

}  // namespace h2r
