#include "h2r/catenoid.hpp"

#include <cmath>
#include <stdexcept>

#include "h2r/hyperbolic.hpp"
#include "h2r/ode.hpp"
#include "h2r/quadrature.hpp"

namespace h2r {

namespace {

constexpr double kOdeTol = 1e-13;
constexpr double kDomainSlack = 1e-12;

std::array<double, 2> profile_rhs(double /*t*/, const std::array<double, 2>& y) {
    const double r = y[0], rp = y[1];
    return {rp, (4.0 * rp * rp + 1.0 - r * r * r * r) / (4.0 * r)};
}

double rsecond(double r, double rp) {
    return (4.0 * rp * rp + 1.0 - r * r * r * r) / (4.0 * r);
}

// 4k u^2 - (1-u^2)^2 = (u^2 - r0^2)(rmax^2 - u^2); positive on (r0, rmax).
double radicand(double k, double u) {
    const double q = 1.0 - u * u;
    return 4.0 * k * u * u - q * q;
}

}  // namespace

double first_integral(double r, double rprime) {
    if (!(r > 0.0)) throw std::domain_error("first_integral: r must be positive");
    const double q = (1.0 - r * r) / (2.0 * r);
    const double s = rprime / r;
    return q * q + s * s;
}

double t_of_r(double k, double r) {
    if (!(k > 0.0)) throw std::domain_error("t_of_r: k must be positive");
    const double r0 = std::sqrt(k + 1.0) - std::sqrt(k);
    const double rmax = std::sqrt(k + 1.0) + std::sqrt(k);
    if (r < r0 - kDomainSlack || r > 1.0 + kDomainSlack)
        throw std::domain_error("t_of_r: r outside [r0, 1]");
    if (r <= r0) return 0.0;
    const double c = std::min(r, 1.0) - r0;
    // u = r0 + c s^2 removes the inverse-square-root singularity at u = r0:
    // the integrand in s is smooth on [0, 1].
    auto f = [&](double s) {
        const double u = r0 + c * s * s;
        return 4.0 * std::sqrt(c) / (std::sqrt(u + r0) * std::sqrt(rmax * rmax - u * u));
    };
    const QuadResult q = integrate(f, 0.0, 1.0, 1e-13, 1e-13);
    if (!q.converged) throw std::runtime_error("t_of_r: quadrature did not converge");
    return q.value;
}

Jet2 t_of_r_jet(double k, const Jet2& r) {
    const double r0 = std::sqrt(k + 1.0) - std::sqrt(k);
    if (r.v < r0 + 1e-10) throw std::domain_error("t_of_r_jet: radius at or below the waist");
    const double rad = radicand(k, r.v);
    if (rad <= 0.0) throw std::domain_error("t_of_r_jet: radius at or beyond the bulge");
    const double t = t_of_r(k, r.v);
    const double dt = 2.0 / std::sqrt(rad);
    const double drad = 4.0 * r.v * (2.0 * k + 1.0 - r.v * r.v);
    const double ddt = -drad / (rad * std::sqrt(rad));
    return compose(r, t, dt, ddt);
}

double height(double k) {
    return 2.0 * t_of_r(k, 1.0);
}

double conformal_modulus(double k) {
    return std::exp(-std::sqrt(k) * height(k));
}

CatenoidProfile make_catenoid(double k) {
    if (!(k > 0.0)) throw std::domain_error("make_catenoid: k must be positive");
    CatenoidProfile c;
    c.k = k;
    c.r0 = std::sqrt(k + 1.0) - std::sqrt(k);
    c.rmax = std::sqrt(k + 1.0) + std::sqrt(k);
    c.height = height(k);
    c.period = 2.0 * c.height;
    c.modulus_estimate = std::exp(-std::sqrt(k) * c.height);
    return c;
}

std::array<double, 3> CatenoidProfile::eval(double t) const {
    double tau = std::fmod(t, period);
    if (tau < 0.0) tau += period;
    double sign = 1.0;
    if (tau > 0.5 * period) {
        tau = period - tau;
        sign = -1.0;
    }
    const auto y = integrate_ode<2>(profile_rhs, 0.0, std::array<double, 2>{r0, 0.0}, tau, kOdeTol);
    return {y[0], sign * y[1], rsecond(y[0], y[1])};
}

CatenoidProfile integrate_profile(double k, double t_max, std::size_t n_samples) {
    if (!(t_max > 0.0)) throw std::domain_error("integrate_profile: t_max must be positive");
    CatenoidProfile c = make_catenoid(k);
    if (n_samples == 0)
        n_samples = static_cast<std::size_t>(std::ceil(128.0 * t_max / c.period));
    if (n_samples < 64) n_samples = 64;

    c.samples.reserve(n_samples + 1);
    std::array<double, 2> y{c.r0, 0.0};
    double t = 0.0;
    c.samples.push_back({t, y[0], y[1]});
    double drift = 0.0;
    for (std::size_t j = 1; j <= n_samples; ++j) {
        const double tj = t_max * static_cast<double>(j) / static_cast<double>(n_samples);
        y = integrate_ode<2>(profile_rhs, t, y, tj, kOdeTol);
        t = tj;
        c.samples.push_back({t, y[0], y[1]});
        drift = std::max(drift, std::abs(first_integral(y[0], y[1]) - k));
    }
    c.max_first_integral_drift = drift;
    if (drift > 1e-9)
        throw std::runtime_error("integrate_profile: conserved-quantity drift exceeds 1e-9");
    return c;
}

std::vector<ProfileExtremum> profile_extremes(const CatenoidProfile& c) {
    std::vector<ProfileExtremum> out;
    for (std::size_t j = 1; j < c.samples.size(); ++j) {
        const double a = c.samples[j - 1].rprime;
        const double b = c.samples[j].rprime;
        if (a == 0.0 && c.samples[j - 1].t == 0.0) {
            out.push_back({0.0, c.samples[0].r, true});
            continue;
        }
        if (!(a < 0.0 && b >= 0.0) && !(a > 0.0 && b <= 0.0)) continue;
        double lo = c.samples[j - 1].t, hi = c.samples[j].t;
        for (int it = 0; it < 60 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double rp = c.eval(mid)[1];
            if ((a < 0.0) == (rp < 0.0))
                lo = mid;
            else
                hi = mid;
        }
        const double ts = 0.5 * (lo + hi);
        out.push_back({ts, c.eval(ts)[0], a < 0.0});
    }
    return out;
}

Point3 immerse_catenoid(const CatenoidProfile& c, double theta, double t) {
    const auto y = c.eval(t);
    if (y[0] >= 1.0 - kBoundaryMargin)
        throw std::domain_error("immerse_catenoid: point outside the open cylinder");
    const double ang = std::sqrt(c.k) * theta;
    return {y[0] * std::cos(ang), y[0] * std::sin(ang), t, Model::Disk};
}

Point3 immerse_catenoid(double k, double theta, double t) {
    return immerse_catenoid(make_catenoid(k), theta, t);
}

Point3 ambient_unduloid(const CatenoidProfile& c, double theta, double t) {
    const auto y = c.eval(t);
    const double ang = std::sqrt(c.k) * theta;
    return {y[0] * std::cos(ang), y[0] * std::sin(ang), t, Model::Disk};
}

Point3 ambient_unduloid(double k, double theta, double t) {
    return ambient_unduloid(make_catenoid(k), theta, t);
}

PatchJet catenoid_patch(const CatenoidProfile& c, double theta, double t) {
    const auto y = c.eval(t);
    Jet2 rj;
    rj.v = y[0];
    rj.dy = y[1];
    rj.dyy = y[2];
    const Jet2 ang = std::sqrt(c.k) * Jet2::var_x(theta);
    return {{rj * cos(ang), rj * sin(ang), Jet2::var_y(t)}, Model::Disk};
}

Point3 dilated_graph_phi(double k, double x, double y) {
    if (!(y > 0.0)) throw std::domain_error("dilated_graph_phi: y must be positive");
    const complexd w = mu0(k) * complexd(x, y);
    const double rho = std::abs(mobius_halfplane_to_disk(w));
    const double r0 = std::sqrt(k + 1.0) - std::sqrt(k);
    if (rho < r0 - kDomainSlack)
        throw std::domain_error("dilated_graph_phi: pulled-back radius below the waist");
    if (rho >= 1.0 - kBoundaryMargin)
        throw std::domain_error("dilated_graph_phi: pulled-back radius at the cylinder");
    return {x, y, t_of_r(k, std::max(rho, r0)), Model::HalfPlane};
}

}  // namespace h2r
