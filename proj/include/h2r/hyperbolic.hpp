#pragma once

#include <cmath>
#include <complex>

#include "h2r/geometry.hpp"
#include "h2r/jet.hpp"

namespace h2r {

// Raw Moebius maps on complex numbers.  These extend continuously to the ideal
// boundary (|z| = 1, resp. Im w = 0), which the typed operations below reject;
// use these directly when a boundary symbol is genuinely wanted.
inline complexd mobius_disk_to_halfplane(complexd z) {
    return complexd(0.0, 1.0) * (1.0 - z) / (1.0 + z);
}
inline complexd mobius_halfplane_to_disk(complexd w) {
    return (complexd(0.0, 1.0) - w) / (complexd(0.0, 1.0) + w);
}

// Same maps threaded through second-order jets, for curvature computations of
// surfaces defined by composing charts.
inline CJet2 mobius_halfplane_to_disk(const CJet2& w) {
    const CJet2 i(Jet2(0.0), Jet2(1.0));
    return (i - w) / (i + w);
}
inline CJet2 mobius_disk_to_halfplane(const CJet2& z) {
    const CJet2 i(Jet2(0.0), Jet2(1.0));
    const CJet2 one(Jet2(1.0), Jet2(0.0));
    return i * (one - z) / (one + z);
}

inline Point2H disk_to_halfplane(const Point2H& p) {
    if (p.model != Model::Disk) throw std::domain_error("disk_to_halfplane: point not in disk model");
    p.validate();
    return Point2H::halfplane(mobius_disk_to_halfplane(p.z()));
}

inline Point2H halfplane_to_disk(const Point2H& p) {
    if (p.model != Model::HalfPlane)
        throw std::domain_error("halfplane_to_disk: point not in half-plane model");
    p.validate();
    return Point2H::disk(mobius_halfplane_to_disk(p.z()));
}

inline Point2H horizontal_dilation(const Point2H& p, double s) {
    if (p.model != Model::HalfPlane)
        throw std::domain_error("horizontal_dilation: point not in half-plane model");
    if (!(s > 0.0)) throw std::domain_error("horizontal_dilation: scale must be positive");
    p.validate();
    return Point2H::halfplane(s * p.z());
}

// Waist radius of the profile with first-integral value k, and the matching
// Euclidean distances in each model.
inline double waist_radius(double k) {
    if (!(k > 0.0)) throw std::domain_error("waist_radius: k must be positive");
    return std::sqrt(k + 1.0) - std::sqrt(k);
}

inline double mu0(double k) {
    if (!(k > 0.0)) throw std::domain_error("mu0: k must be positive");
    const double sk = std::sqrt(k), sk1 = std::sqrt(1.0 + k);
    return (1.0 + sk - sk1) / (1.0 - sk + sk1);
}

inline double mu1(double d) {
    if (!(d > 0.0 && d < 1.0)) throw std::domain_error("mu1: d must lie in (0,1)");
    const double sp = std::sqrt(1.0 + d), sm = std::sqrt(1.0 - d);
    return (sp - sm) / (sp + sm);
}

// Conformal factor of the horizontal metric at a point (coefficient of
// du^2 + dv^2).
inline double conformal_factor(const Point2H& p) {
    p.validate();
    if (p.model == Model::Disk) {
        const double q = 1.0 - p.u * p.u - p.v * p.v;
        if (q < kBoundaryMargin) throw std::domain_error("conformal_factor: too close to |z| = 1");
        return 4.0 / (q * q);
    }
    if (p.v < kBoundaryMargin) throw std::domain_error("conformal_factor: too close to y = 0");
    return 1.0 / (p.v * p.v);
}

inline ConformalMetric conformal_metric_at(const Point2H& p) {
    return {conformal_factor(p), 1.0};
}

// Full 3x3 metric and Christoffel symbols of the product metric at p.  The
// symbols come from the conformal-factor gradient in closed form: with
// horizontal metric e^{2phi}(du^2+dv^2),
//   G^u_{uu} = phi_u, G^u_{uv} = phi_v, G^u_{vv} = -phi_u,
//   G^v_{vv} = phi_v, G^v_{uv} = phi_u, G^v_{uu} = -phi_v,
// and every symbol touching the t slot vanishes.
inline MetricData metric_at(const Point3& p) {
    const Point2H h = p.horizontal();
    const double gh = conformal_factor(h);
    double phi_u, phi_v;
    if (p.model == Model::Disk) {
        const double q = 1.0 - p.u * p.u - p.v * p.v;
        phi_u = 2.0 * p.u / q;
        phi_v = 2.0 * p.v / q;
    } else {
        phi_u = 0.0;
        phi_v = -1.0 / p.v;
    }
    MetricData m;
    m.g[0][0] = m.g[1][1] = gh;
    m.g[2][2] = 1.0;
    auto& G = m.gamma;
    G[0][0][0] = phi_u;
    G[0][0][1] = G[0][1][0] = phi_v;
    G[0][1][1] = -phi_u;
    G[1][1][1] = phi_v;
    G[1][0][1] = G[1][1][0] = phi_u;
    G[1][0][0] = -phi_v;
    return m;
}

// Hyperbolic distance, computed in the half-plane model via
// arccosh(1 + |w1-w2|^2 / (2 Im w1 Im w2)).
inline double hyperbolic_distance(const Point2H& a, const Point2H& b) {
    const Point2H wa = a.model == Model::Disk ? disk_to_halfplane(a) : a;
    const Point2H wb = b.model == Model::Disk ? disk_to_halfplane(b) : b;
    wa.validate();
    wb.validate();
    const double d2 = std::norm(wa.z() - wb.z());
    return std::acosh(1.0 + d2 / (2.0 * wa.v * wb.v));
}

}  // namespace h2r
