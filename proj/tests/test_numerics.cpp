#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "h2r/elliptic.hpp"
#include "h2r/jet.hpp"
#include "h2r/ode.hpp"
#include "h2r/quadrature.hpp"

using namespace h2r;

TEST_CASE("adaptive quadrature on smooth integrands") {
    auto r = integrate([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::fabs(r.value - M_PI) < 1e-13);
    CHECK(std::fabs(r.value - M_PI) <= r.error + 1e-15);

    auto s = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(std::fabs(s.value - 2.0) < 1e-13);

    auto osc = integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0);
    CHECK(std::fabs(osc.value - std::sin(40.0) / 40.0) < 1e-12);
}

TEST_CASE("tanh-sinh handles endpoint singularities via offsets") {
    // 1/sqrt(x) at the left end, using the cancellation-free offset da.
    auto a = integrate_tanh_sinh([](double, double da, double) { return 1.0 / std::sqrt(da); },
                                 0.0, 1.0);
    CHECK(std::fabs(a.value - 2.0) < 1e-12);

    // log singularity
    auto b = integrate_tanh_sinh([](double, double da, double) { return std::log(da); }, 0.0,
                                 1.0);
    CHECK(std::fabs(b.value + 1.0) < 1e-12);

    // both endpoints: 1/sqrt(1-x^2) over (-1, 1)
    auto c = integrate_tanh_sinh(
        [](double, double da, double db) { return 1.0 / std::sqrt(da * db); }, -1.0, 1.0);
    CHECK(std::fabs(c.value - M_PI) < 1e-11);
}

TEST_CASE("ODE integrator accuracy and reversibility") {
    auto exp_rhs = [](double, const std::array<double, 1>& y) {
        return std::array<double, 1>{y[0]};
    };
    const auto fwd = integrate_ode<1>(exp_rhs, 0.0, {1.0}, 1.0);
    CHECK(std::fabs(fwd[0] - std::exp(1.0)) < 1e-11);

    const auto back = integrate_ode<1>(exp_rhs, 1.0, {std::exp(1.0)}, 0.0);
    CHECK(std::fabs(back[0] - 1.0) < 1e-11);

    // long harmonic oscillation keeps its energy
    auto circ = [](double, const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], -y[0]};
    };
    const auto z = integrate_ode<2>(circ, 0.0, {1.0, 0.0}, 200.0);
    CHECK(std::fabs(z[0] * z[0] + z[1] * z[1] - 1.0) < 1e-9);
    CHECK(std::fabs(z[0] - std::cos(200.0)) < 1e-8);
}

TEST_CASE("second-order jets carry exact derivatives") {
    const double x = 0.3, y = 0.7;
    const Jet2 X = Jet2::var_x(x), Y = Jet2::var_y(y);
    const Jet2 f = exp(X) * sin(Y) + X * X * Y;
    CHECK(f.v == doctest::Approx(std::exp(x) * std::sin(y) + x * x * y).epsilon(1e-14));
    CHECK(f.dx == doctest::Approx(std::exp(x) * std::sin(y) + 2 * x * y).epsilon(1e-14));
    CHECK(f.dy == doctest::Approx(std::exp(x) * std::cos(y) + x * x).epsilon(1e-14));
    CHECK(f.dxx == doctest::Approx(std::exp(x) * std::sin(y) + 2 * y).epsilon(1e-14));
    CHECK(f.dxy == doctest::Approx(std::exp(x) * std::cos(y) + 2 * x).epsilon(1e-14));
    CHECK(f.dyy == doctest::Approx(-std::exp(x) * std::sin(y)).epsilon(1e-14));

    // composition: sqrt undoes square
    const Jet2 g = sqrt(f * f);
    CHECK(g.dx == doctest::Approx(f.dx).epsilon(1e-12));
    CHECK(g.dyy == doctest::Approx(f.dyy).epsilon(1e-10));

    // inverse trig chain
    const Jet2 h = acos(Y);
    CHECK(h.dy == doctest::Approx(-1.0 / std::sqrt(1.0 - y * y)).epsilon(1e-13));
    CHECK(h.dyy == doctest::Approx(-y / std::pow(1.0 - y * y, 1.5)).epsilon(1e-13));
}

TEST_CASE("complex jets multiply like complex numbers") {
    const CJet2 z(Jet2::var_x(0.4), Jet2::var_y(-0.2));
    const CJet2 w = z * z * z;
    const std::complex<double> zc(0.4, -0.2);
    const std::complex<double> wc = zc * zc * zc;
    CHECK(w.re.v == doctest::Approx(wc.real()).epsilon(1e-14));
    CHECK(w.im.v == doctest::Approx(wc.imag()).epsilon(1e-14));
    // d/dx (z^3) = 3z^2
    const std::complex<double> d = 3.0 * zc * zc;
    CHECK(w.re.dx == doctest::Approx(d.real()).epsilon(1e-13));
    CHECK(w.im.dx == doctest::Approx(d.imag()).epsilon(1e-13));
    // d/dy multiplies by i
    CHECK(w.re.dy == doctest::Approx(-d.imag()).epsilon(1e-13));
    CHECK(w.im.dy == doctest::Approx(d.real()).epsilon(1e-13));
}

TEST_CASE("Carlson form reproduces Legendre elliptic integrals") {
    const complexd rf = carlson_rf(complexd(0.0), complexd(1.0), complexd(2.0));
    CHECK(std::fabs(rf.real() - 1.3110287771460599) < 1e-13);
    CHECK(std::fabs(rf.imag()) < 1e-15);

    const complexd k_half = elliptic_F(M_PI / 2.0, 0.5);
    CHECK(std::fabs(k_half.real() - 1.8540746773013719) < 1e-13);

    // incomplete case against direct quadrature
    const double phi = 0.3, m = 0.7;
    const auto q = integrate(
        [m](double th) { return 1.0 / std::sqrt(1.0 - m * std::sin(th) * std::sin(th)); }, 0.0,
        phi);
    CHECK(std::fabs(elliptic_F(phi, m).real() - q.value) < 1e-12);

    CHECK_THROWS_AS(elliptic_F(-0.1, 0.5), std::domain_error);
}
