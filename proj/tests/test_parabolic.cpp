#include <doctest.h>

#include <cmath>

#include "h2r/curvature.hpp"
#include "h2r/hyperbolic.hpp"
#include "h2r/parabolic.hpp"

using namespace h2r;

TEST_CASE("chart domains are enforced") {
    CHECK_THROWS_AS(psi(0.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(psi(1.0, 0.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(psi(1.0, 0.0, M_PI), std::domain_error);
    CHECK_THROWS_AS(fhat(0.0, 1.6), std::domain_error);
    CHECK_NOTHROW(psi(2.0, -3.0, 1.5));
}

TEST_CASE("the two gauges describe the same surface shifted by pi/2") {
    for (double x : {-1.2, 0.0, 0.8})
        for (double t : {-1.2, 0.0, 1.1}) {
            const Point3 a = fhat(x, t);
            const Point3 b = psi(1.0, x, t + M_PI / 2.0);
            CHECK(a.u == doctest::Approx(b.u).epsilon(1e-15));
            CHECK(a.v == doctest::Approx(b.v).epsilon(1e-15));
            CHECK(b.t - a.t == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
        }
}

TEST_CASE("standard copy satisfies the quartic membership residual") {
    // The quartic carries cosine-gauge heights: mapped cosine-gauge points lie
    // on it as they stand.
    for (double x : {-2.0, -1.0, 0.0, 0.4, 1.7})
        for (double t : {-1.2, -0.4, 0.0, 0.7, 1.3}) {
            const Point3 p = fhat(x, t);
            const complexd z = mobius_halfplane_to_disk(complexd(p.u, p.v));
            CHECK(std::fabs(q_residual({z.real(), z.imag(), p.t, Model::Disk})) < 1e-13);
        }
    // Sine-gauge points on the same copy sit half a turn higher.
    for (double x : {-2.0, -0.3, 0.0, 1.7})
        for (double t : {0.4, 1.0, 2.0, 3.0}) {
            const Point3 p = psi(1.0, x, t);
            const complexd z = mobius_halfplane_to_disk(complexd(p.u, p.v));
            CHECK(std::fabs(q_residual({z.real(), z.imag(), p.t - M_PI / 2.0, Model::Disk})) <
                  1e-13);
        }
    // analytic spot value on the axis: z = (1 - cos t)/(1 + cos t) real
    const double t0 = 0.9;
    const double zr = (1.0 - std::cos(t0)) / (1.0 + std::cos(t0));
    CHECK(std::fabs(q_residual({zr, 0.0, t0, Model::Disk})) < 1e-15);
    // a generic off-surface point does not vanish
    CHECK(std::fabs(q_residual({0.2, 0.1, 1.0, Model::Disk})) > 1e-3);
}

TEST_CASE("sine gauge is conformal with the known first form") {
    for (double lambda : {0.5, 1.0, 2.0})
        for (double t : {0.3, 1.5, 2.7}) {
            const auto r = fundamental_forms(psi_patch(lambda, 0.7, t));
            const double st = std::sin(t);
            CHECK(r.E == doctest::Approx(1.0 / (st * st)).epsilon(1e-12));
            CHECK(r.G == doctest::Approx(1.0 / (st * st)).epsilon(1e-12));
            CHECK(r.F == doctest::Approx(0.0));
            CHECK(std::fabs(r.H) < 1e-12);
            CHECK(r.A2 == doctest::Approx(2.0 * st * st).epsilon(1e-11));
            CHECK(r.ric_nu == doctest::Approx(-st * st).epsilon(1e-11));
        }
}

TEST_CASE("normal and curvature of the limit graph chart") {
    for (double y : {0.2, 0.5, 0.8}) {
        const auto r = fundamental_forms(graph_phi0_patch(0.9, y));
        CHECK(r.nu[0] == doctest::Approx(0.0));
        CHECK(r.nu[1] == doctest::Approx(-y * y).epsilon(1e-12));
        CHECK(r.nu[2] == doctest::Approx(-std::sqrt(1.0 - y * y)).epsilon(1e-12));
        CHECK(std::fabs(r.H) < 1e-12);
        CHECK(r.A2 == doctest::Approx(2.0 * y * y).epsilon(1e-11));
        CHECK(r.ric_nu == doctest::Approx(-y * y).epsilon(1e-11));
        // stability-operator potential |A|^2 + Ric(nu,nu) = y^2
        CHECK(r.A2 + r.ric_nu == doctest::Approx(y * y).epsilon(1e-10));
    }
}

TEST_CASE("cosine-gauge chart carries the same geometry with flipped orientation") {
    for (double t : {0.3, 0.9, 1.3}) {
        const auto r = fundamental_forms(fhat_patch(1.0, 0.4, t));
        const double ct = std::cos(t);
        CHECK(std::fabs(r.H) < 1e-12);
        CHECK(r.A2 == doctest::Approx(2.0 * ct * ct).epsilon(1e-11));
        // chart orientation flips the engine normal relative to the graph chart
        CHECK(r.nu[0] == doctest::Approx(0.0));
        CHECK(r.nu[1] == doctest::Approx(ct * ct).epsilon(1e-12));
        CHECK(r.nu[2] == doctest::Approx(std::sin(t)).epsilon(1e-12));
        // unit in the product metric: gh nu_1^2 + nu_2^2 = 1 at y = cos t
        const double gh = 1.0 / (ct * ct);
        CHECK(gh * r.nu[1] * r.nu[1] + r.nu[2] * r.nu[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
}
