#include "h2r/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "h2r/hyperbolic.hpp"

namespace h2r {

ExtrinsicReport fundamental_forms(const PatchJet& P) {
    const Point3 p{P.c[0].v, P.c[1].v, P.c[2].v, P.model};
    const MetricData md = metric_at(p);  // rejects near-boundary points
    const ConformalMetric g{md.g[0][0], 1.0};

    const Vec3 Xu{P.c[0].dx, P.c[1].dx, P.c[2].dx};
    const Vec3 Xv{P.c[0].dy, P.c[1].dy, P.c[2].dy};
    ExtrinsicReport rep;
    rep.E = g.dot(Xu, Xu);
    rep.F = g.dot(Xu, Xv);
    rep.G = g.dot(Xv, Xv);
    const double det = rep.E * rep.G - rep.F * rep.F;
    if (det < 1e-14) throw std::domain_error("fundamental_forms: degenerate immersion");

    // Index-raised coordinate cross product is g-orthogonal to the tangent
    // plane; the sign reproduces the normals used for the parabolic family.
    const Vec3 nraw = g.sharp(cross(Xu, Xv));
    const double nn = std::sqrt(g.norm2(nraw));
    if (nn < 1e-14) throw std::domain_error("fundamental_forms: degenerate normal");
    rep.nu = (-1.0 / nn) * nraw;

    // (nabla_A B)^k = d2X^k + Gamma^k_ij A^i B^j
    auto covariant = [&](const Vec3& A, const Vec3& B, const Vec3& d2) {
        Vec3 out = d2;
        for (int kk = 0; kk < 3; ++kk)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) out[kk] += md.gamma[kk][i][j] * A[i] * B[j];
        return out;
    };
    const Vec3 Xuu{P.c[0].dxx, P.c[1].dxx, P.c[2].dxx};
    const Vec3 Xuv{P.c[0].dxy, P.c[1].dxy, P.c[2].dxy};
    const Vec3 Xvv{P.c[0].dyy, P.c[1].dyy, P.c[2].dyy};
    const double l = g.dot(covariant(Xu, Xu, Xuu), rep.nu);
    const double m = g.dot(covariant(Xu, Xv, Xuv), rep.nu);
    const double n = g.dot(covariant(Xv, Xv, Xvv), rep.nu);

    rep.H = (rep.G * l - 2.0 * rep.F * m + rep.E * n) / (2.0 * det);
    const double s11 = (rep.G * l - rep.F * m) / det;
    const double s12 = (rep.G * m - rep.F * n) / det;
    const double s21 = (rep.E * m - rep.F * l) / det;
    const double s22 = (rep.E * n - rep.F * m) / det;
    rep.A2 = s11 * s11 + s22 * s22 + 2.0 * s12 * s21;

    // Ric of H^2 x R is -g_{H^2} horizontally, 0 vertically.
    rep.ric_nu = -g.gh * (rep.nu[0] * rep.nu[0] + rep.nu[1] * rep.nu[1]);
    return rep;
}

double ricci_normal(const PatchJet& P) {
    return fundamental_forms(P).ric_nu;
}

double conformality_defect(const PatchJet& P) {
    const ExtrinsicReport rep = fundamental_forms(P);
    return std::max(std::abs(rep.E - rep.G), std::abs(rep.F)) / std::max(rep.E, rep.G);
}

}  // namespace h2r
