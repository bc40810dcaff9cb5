#include "h2r/tall.hpp"

#include <cmath>
#include <stdexcept>

#include "h2r/quadrature.hpp"

namespace h2r {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_d(double d, const char* who) {
    if (!(d > 0.0 && d < 1.0)) throw std::domain_error(std::string(who) + ": d outside (0,1)");
}

// d^2(1+x^2)^2 - (1-x^2)^2 = (1-d^2)(x^2-d1^2)(1/d1^2-x^2) * d1^2/d1^2 ... the
// factored form shows positivity exactly on (d1, 1/d1).
double radicand(double d, double x) {
    const double a = 1.0 + x * x;
    const double b = 1.0 - x * x;
    return d * d * a * a - b * b;
}

double lambda_integral(double d, double x, const char* who, double upper_limit) {
    check_d(d, who);
    const double e1 = d1(d);
    if (x < e1 - kDomainSlack || x > upper_limit + kDomainSlack)
        throw std::domain_error(std::string(who) + ": x outside the admissible interval");
    if (x <= e1) return 0.0;
    const double c = std::min(x, upper_limit) - e1;
    const double one_minus_d2 = 1.0 - d * d;
    const double inv_d1sq = 1.0 / (e1 * e1);
    auto f = [&](double s) {
        const double v = e1 + c * s * s;
        return 4.0 * std::sqrt(c) /
               (std::sqrt(v + e1) * std::sqrt(one_minus_d2 * (inv_d1sq - v * v)));
    };
    const QuadResult q = integrate(f, 0.0, 1.0, 1e-13, 1e-13);
    if (!q.converged && q.error > 1e-10)
        throw std::runtime_error(std::string(who) + ": quadrature did not converge");
    return q.value;
}

}  // namespace

double d1(double d) {
    check_d(d, "d1");
    return std::sqrt(1.0 - d) / std::sqrt(1.0 + d);
}

double lambda_quadrature(double d, double x) {
    return lambda_integral(d, x, "lambda_quadrature", 1.0);
}

double lambda_extended(double d, double x) {
    check_d(d, "lambda_extended");
    const double outer = 1.0 / d1(d);
    if (x >= outer - 1e-9)
        throw std::domain_error("lambda_extended: x at or beyond the outer turning point");
    return lambda_integral(d, x, "lambda_extended", outer);
}

double lambda_elliptic(double d, double x) {
    check_d(d, "lambda_elliptic");
    const double e1 = d1(d);
    if (x < e1 - kDomainSlack || x > 1.0 + kDomainSlack)
        throw std::domain_error("lambda_elliptic: x outside [d1, 1]");
    // lambda(d1) = 0 exactly; without the clamp, rounding in e1 * x can push
    // sin(phi) past the branch point and Im F picks up an O(sqrt(ulp)) sliver.
    if (x <= e1) return 0.0;
    const double arg = std::min(std::max(e1 * x, 0.0), 1.0);
    const double m = 1.0 / (e1 * e1 * e1 * e1);
    const complexd F = elliptic_F(std::asin(arg), m);
    return -2.0 / (1.0 - d) * F.imag();
}

double lambda_rho_derivative(double d, double rho) {
    check_d(d, "lambda_rho_derivative");
    const double q = d * std::cosh(rho);
    if (!(q > 1.0))
        throw std::domain_error("lambda_rho_derivative: rho at or below arccosh(1/d)");
    return 1.0 / std::sqrt(q * q - 1.0);
}

double height_tall(double d) {
    return 2.0 * lambda_quadrature(d, 1.0);
}

TallRectSpec make_tall(double d) {
    return {d, d1(d), height_tall(d)};
}

Point3 upsilon(double d, double x, double y, int sign) {
    check_d(d, "upsilon");
    const double e1 = d1(d);
    if (x <= e1) throw std::domain_error("upsilon: x at or below the turning point d1");
    if (!(y > -1.0 && y < 1.0)) throw std::domain_error("upsilon: y outside (-1,1)");
    if (sign != 1 && sign != -1) throw std::domain_error("upsilon: sign must be +-1");
    const double lam = x <= 1.0 ? lambda_quadrature(d, x) : lambda_extended(d, x);
    const double den = x * x * y * y + 1.0;
    return {(x - x * y * y) / den, ((x * x + 1.0) * y) / den, sign * lam, Model::Disk};
}

Jet2 lambda_jet(double d, const Jet2& x) {
    check_d(d, "lambda_jet");
    const double rad = radicand(d, x.v);
    if (rad <= 0.0) throw std::domain_error("lambda_jet: x outside the open interval (d1, 1/d1)");
    const double lam = x.v <= 1.0 ? lambda_quadrature(d, x.v) : lambda_extended(d, x.v);
    const double dl = 2.0 / std::sqrt(rad);
    const double drad = 4.0 * x.v * (d * d * (1.0 + x.v * x.v) + 1.0 - x.v * x.v);
    const double ddl = -drad / (rad * std::sqrt(rad));
    return compose(x, lam, dl, ddl);
}

PatchJet upsilon_patch(double d, double x, double y, int sign) {
    const Jet2 X = Jet2::var_x(x), Y = Jet2::var_y(y);
    const Jet2 den = X * X * Y * Y + 1.0;
    const Jet2 p1 = (X - X * Y * Y) / den;
    const Jet2 p2 = ((X * X + 1.0) * Y) / den;
    const Jet2 p3 = static_cast<double>(sign) * lambda_jet(d, X);
    return {{p1, p2, p3}, Model::Disk};
}

double slice_circle_residual(double x, double y) {
    if (x == 0.0) throw std::domain_error("slice_circle_residual: x must be nonzero");
    const double c = (x * x - 1.0) / (2.0 * x);
    const double den = x * x * y * y + 1.0;
    const double p1 = (x - x * y * y) / den;
    const double p2 = ((x * x + 1.0) * y) / den;
    return (p1 - c) * (p1 - c) + p2 * p2 - (c * c + 1.0);
}

complexd tall_regeneration_map(double d, complexd z) {
    const double e1 = d1(d);
    return (z - e1) / (1.0 - e1 * z);
}

complexd tall_regeneration_map_inverse(double d, complexd z) {
    const double e1 = d1(d);
    return (z + e1) / (1.0 + e1 * z);
}

}  // namespace h2r
