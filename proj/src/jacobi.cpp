#include "h2r/jacobi.hpp"

#include <cmath>
#include <stdexcept>

#include "h2r/hyperbolic.hpp"

namespace h2r {

namespace {

void check_gauge_domain(Gauge g, double t) {
    if (g == Gauge::Psi) {
        if (!(t > 0.0 && t < M_PI))
            throw std::domain_error("jacobi: t outside (0, pi) in the sine gauge");
    } else {
        if (!(t > -M_PI / 2.0 && t < M_PI / 2.0))
            throw std::domain_error("jacobi: t outside (-pi/2, pi/2) in the cosine gauge");
    }
}

}  // namespace

Jet2 analytic_field_jet(JacobiField f, Gauge g, double x, double t) {
    check_gauge_domain(g, t);
    const Jet2 X = Jet2::var_x(x), T = Jet2::var_y(t);
    switch (f) {
        case JacobiField::Psi:
            return g == Gauge::Psi ? sin(T) : cos(T);
        case JacobiField::Utilde:
            return g == Gauge::Psi ? X * sin(T) : X * cos(T);
        case JacobiField::WCat:
            if (g == Gauge::Fhat) return 0.25 * (T * sin(T) - X * X * cos(T));
            return 0.125 * ((M_PI - 2.0 * T) * cos(T) - 2.0 * X * X * sin(T));
        case JacobiField::WTall:
            return -analytic_field_jet(JacobiField::WCat, g, x, t);
    }
    throw std::logic_error("analytic_field_jet: unknown field");
}

double analytic_field(JacobiField f, Gauge g, double x, double t) {
    return analytic_field_jet(f, g, x, t).v;
}

double jacobi_apply(JacobiField f, Gauge g, double x, double t) {
    const Jet2 u = analytic_field_jet(f, g, x, t);
    const double c = g == Gauge::Psi ? std::sin(t) : std::cos(t);
    return -c * c * (u.dxx + u.dyy + u.v);
}

double jacobi_apply(const StripField& u, std::size_t i, std::size_t j) {
    if (i == 0 || i >= u.nt)
        throw std::domain_error("jacobi_apply: row on the horizontal boundary");
    const std::size_t jl = j == 0 ? u.nx - 1 : j - 1;
    const std::size_t jr = j + 1 == u.nx ? 0 : j + 1;
    const double hx = u.dx(), ht = u.dt();
    const double uxx = (u.at(i, jr) - 2.0 * u.at(i, j) + u.at(i, jl)) / (hx * hx);
    const double utt = (u.at(i + 1, j) - 2.0 * u.at(i, j) + u.at(i - 1, j)) / (ht * ht);
    const double s = std::sin(u.t_of(i));
    return -s * s * (uxx + utt + u.at(i, j));
}

double series_a(int i, double x, double y, double s) {
    if (!(y > 0.0 && y < 1.0)) throw std::domain_error("series_a: y outside (0,1)");
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("series_a: s outside (0,1)");
    const double q = s * (y - 1.0) + 2.0;  // 2 - s + s y
    switch (i) {
        case 0:
            return (1.0 - y) / std::sqrt(s * (1.0 - y) * q);
        case 1: {
            const double num = -s * s * y * y * y + 3.0 * s * s * y * y - 3.0 * s * s * y +
                               s * s - 3.0 * s * y * y + 6.0 * s * y - 3.0 * s + y * y -
                               2.0 * y + 1.0;
            return num / (2.0 * q * std::sqrt(s * (1.0 - y) * q));
        }
        case 2: {
            const double ym = y - 1.0;
            const double den = 8.0 * q * q * std::sqrt(s * (1.0 - y) * q);
            const double n1 = -2.0 * std::pow(s, 4) * std::pow(ym, 5) +
                              2.0 * std::pow(s, 3) * (y - 5.0) * std::pow(ym, 4) +
                              s * s * (10.0 * y - 13.0) * std::pow(ym, 3);
            const double n2 = 2.0 * s * ym * (y * (x * x + 8.0 * y - 6.0) - 2.0) +
                              y * (4.0 * x * x + (5.0 - 3.0 * y) * y + 7.0) - 9.0;
            return (n1 + n2) / den;
        }
        default:
            throw std::domain_error("series_a: order must be 0, 1 or 2");
    }
}

double series_h(int i, double x, double y, double s) {
    if (!(y > 0.0 && y < 1.0)) throw std::domain_error("series_h: y outside (0,1)");
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("series_h: s outside (0,1)");
    const double q = s * (y - 1.0) + 2.0;
    switch (i) {
        case 0:
            return series_a(0, x, y, s);
        case 1:
            return std::pow(1.0 - y, 1.5) * (s * s * y - s * s + 3.0 * s - 1.0) /
                   (2.0 * std::sqrt(s) * std::pow(q, 1.5));
        case 2: {
            const double ym = y - 1.0;
            const double den = 8.0 * q * q * std::sqrt(s * (1.0 - y) * q);
            const double n1 = -2.0 * std::pow(s, 4) * std::pow(ym, 5) +
                              2.0 * std::pow(s, 3) * (y - 5.0) * std::pow(ym, 4) +
                              s * s * (10.0 * y - 17.0) * std::pow(ym, 3);
            const double n2 = 2.0 * s * ym * (-(x * x + 14.0) * y + 8.0 * y * y + 6.0) -
                              y * (4.0 * x * x + y * (3.0 * y - 5.0) + 9.0) + 7.0;
            return (n1 + n2) / den;
        }
        default:
            throw std::domain_error("series_h: order must be 0, 1 or 2");
    }
}

double second_order_integral(SeriesKind kind, double x, double y) {
    if (!(y > 0.0 && y < 1.0)) throw std::domain_error("second_order_integral: y outside (0,1)");
    const double v = 0.25 * (x * x * y / std::sqrt(1.0 - y * y) - std::acos(y));
    return kind == SeriesKind::Cat ? v : -v;
}

double jacobi_field_from_normal(const PatchJet& patch, const Vec3& velocity) {
    const ExtrinsicReport rep = fundamental_forms(patch);
    const Point3 p{patch.c[0].v, patch.c[1].v, patch.c[2].v, patch.model};
    const double gh = conformal_factor(p.horizontal());
    return gh * (rep.nu[0] * velocity[0] + rep.nu[1] * velocity[1]) + rep.nu[2] * velocity[2];
}

namespace {

struct MomentParts {
    double value;
    double trace;
};

MomentParts moment_at(const StripField& w, double r) {
    const std::size_t jlo = w.column_near(-r);
    const std::size_t jhi = w.column_near(r);
    if (jlo < 1 || jhi + 2 > w.nx || jhi <= jlo)
        throw std::domain_error("moment_residual: radius too close to the truncation edge");
    const double hx = w.dx(), ht = w.dt();

    double horizontal = 0.0;
    for (std::size_t j = jlo; j <= jhi; ++j) {
        const double f = w.at(w.nt, j) + w.at(0, j);
        const double weight = (j == jlo || j == jhi) ? 0.5 : 1.0;
        horizontal += weight * f;
    }
    horizontal *= hx;

    double lateral = 0.0, trace = 0.0;
    for (std::size_t i = 0; i <= w.nt; ++i) {
        const double s = std::sin(w.t_of(i));
        const double wxp = (w.at(i, jhi + 1) - w.at(i, jhi - 1)) / (2.0 * hx);
        const double wxm = (w.at(i, jlo + 1) - w.at(i, jlo - 1)) / (2.0 * hx);
        const double weight = (i == 0 || i == w.nt) ? 0.5 : 1.0;
        lateral += weight * s * (wxp - wxm);
        trace += weight * s * (std::abs(w.at(i, jhi)) + std::abs(w.at(i, jlo)));
    }
    lateral *= ht;
    trace *= ht;
    return {horizontal + lateral, trace};
}

}  // namespace

MomentReport moment_residual(const StripField& w, double r) {
    if (!(r > 0.0 && r <= w.X)) throw std::domain_error("moment_residual: r outside (0, X]");
    const MomentParts full = moment_at(w, r);
    const MomentParts half = moment_at(w, 0.5 * r);
    MomentReport rep;
    rep.value = full.value;
    rep.value_half = half.value;
    rep.lateral_trace = full.trace;
    rep.lateral_trace_half = half.trace;
    const bool values_stable = std::abs(rep.value - rep.value_half) < 1e-6;
    const bool trace_decays =
        rep.lateral_trace <= 0.6 * rep.lateral_trace_half + 1e-10 || rep.lateral_trace <= 1e-8;
    rep.converged = values_stable && trace_decays;
    return rep;
}

}  // namespace h2r
