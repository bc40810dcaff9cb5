#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "h2r/bvp.hpp"
#include "h2r/jacobi.hpp"

using namespace h2r;

TEST_CASE("mode multiplier closed forms and endpoints") {
    // At xi = 1 the mode equation degenerates to v'' = 0: straight lines.
    for (double t : {0.0, 0.3, 1.0, 2.2, M_PI}) {
        CHECK(multiplier_v(1.0, t, Side::Plus) == doctest::Approx(t / M_PI).epsilon(1e-14));
        CHECK(multiplier_v(1.0, t, Side::Minus) ==
              doctest::Approx((M_PI - t) / M_PI).epsilon(1e-14));
    }
    for (double xi : {0.3, 0.9, 1.0, 1.7, 12.0}) {
        CHECK(std::fabs(multiplier_v(xi, 0.0, Side::Plus)) < 1e-14);
        CHECK(multiplier_v(xi, M_PI, Side::Plus) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(multiplier_v(xi, 0.0, Side::Minus) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::fabs(multiplier_v(xi, M_PI, Side::Minus)) < 1e-14);
    }
    CHECK_THROWS_AS(multiplier_v(0.0, 1.0, Side::Plus), std::domain_error);
    CHECK_THROWS_AS(multiplier_v(1.0, -0.1, Side::Plus), std::domain_error);
    CHECK_THROWS_AS(multiplier_v(1.0, M_PI + 0.1, Side::Minus), std::domain_error);
}

TEST_CASE("mode multiplier satisfies its ODE and crosses the series window smoothly") {
    // Central differences of v against (xi^2 - 1) v.
    const double h = 1e-4;
    for (double xi : {0.05, 0.6, 1.0 - 1e-8, 1.0, 1.0 + 1e-8, 1.4, 25.0}) {
        for (double t : {0.7, 1.9, 2.9}) {
            const double vm = multiplier_v(xi, t - h, Side::Plus);
            const double v0 = multiplier_v(xi, t, Side::Plus);
            const double vp = multiplier_v(xi, t + h, Side::Plus);
            const double second = (vp - 2.0 * v0 + vm) / (h * h);
            const double target = (xi * xi - 1.0) * v0;
            CHECK(std::fabs(second - target) < 1e-4 * (1.0 + std::fabs(target)));
        }
    }
    // Values on either side of the |1 - xi^2| = 1e-6 switch agree closely.
    for (double t : {0.4, 1.3, 2.8}) {
        const double inside = multiplier_v(std::sqrt(1.0 - 8e-7), t, Side::Plus);
        const double outside = multiplier_v(std::sqrt(1.0 - 1.2e-6), t, Side::Plus);
        CHECK(std::fabs(inside - outside) < 1e-6);
        const double inside_h = multiplier_v(std::sqrt(1.0 + 8e-7), t, Side::Minus);
        const double outside_h = multiplier_v(std::sqrt(1.0 + 1.2e-6), t, Side::Minus);
        CHECK(std::fabs(inside_h - outside_h) < 1e-6);
    }
}

TEST_CASE("interval Green function: closed value at xi = 1, symmetry, kink slope") {
    CHECK(green_hat(1.0, 0.5, 2.0) == doctest::Approx(0.5 * (M_PI - 2.0) / M_PI).epsilon(1e-14));
    for (double xi : {0.4, 1.0, 2.7}) {
        CHECK(green_hat(xi, 0.8, 2.1) == doctest::Approx(green_hat(xi, 2.1, 0.8)).epsilon(1e-14));
        CHECK(std::fabs(green_hat(xi, 1.3, 0.0)) < 1e-15);
        CHECK(std::fabs(green_hat(xi, 1.3, M_PI)) < 1e-15);
        // The derivative in t jumps by -1 across t = t'.
        const double tp = 1.7, h = 1e-5;
        const double right = (green_hat(xi, tp + h, tp) - green_hat(xi, tp, tp)) / h;
        const double left = (green_hat(xi, tp, tp) - green_hat(xi, tp - h, tp)) / h;
        CHECK(right - left == doctest::Approx(-1.0).epsilon(1e-3));
    }
    CHECK_THROWS_AS(green_hat(0.0, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(green_hat(1.0, -0.2, 2.0), std::domain_error);
}

TEST_CASE("boundary trace bookkeeping and admissibility") {
    const double X = 8.0;
    const std::size_t nx = 64;
    BoundaryData bd = BoundaryData::from_samples(X, std::vector<double>(nx, 1.0),
                                                 std::vector<double>(nx, 0.0));
    CHECK(bd.mean_plus == doctest::Approx(2.0 * X).epsilon(1e-13));
    CHECK(bd.mean_minus == 0.0);

    CHECK_THROWS_AS(BoundaryData::from_samples(X, std::vector<double>(nx, 0.0),
                                               std::vector<double>(nx - 1, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(
        BoundaryData::from_samples(-1.0, std::vector<double>(nx, 0.0), std::vector<double>(nx, 0.0)),
        std::domain_error);

    // Nonzero mean hits the xi = 0 double pole and is rejected outright.
    std::vector<double> gauss(nx), zero(nx, 0.0);
    for (std::size_t j = 0; j < nx; ++j) {
        const double x = -X + 2.0 * X * static_cast<double>(j) / nx;
        gauss[j] = std::exp(-x * x);
    }
    CHECK_THROWS_AS(solve_dirichlet(BoundaryData::from_samples(X, gauss, zero), 32),
                    std::domain_error);

    CHECK_THROWS_AS(solve_dirichlet(BoundaryData::from_samples(X, std::vector<double>(100, 0.0),
                                                               std::vector<double>(100, 0.0)),
                                    32),
                    std::domain_error);
}

TEST_CASE("single-mode boundary data reproduces the product solution exactly") {
    // Pure grid modes transform to single Fourier bins, so the solver output
    // must equal phi(x) times the mode multiplier to rounding.
    const double X = 6.0;
    const std::size_t nx = 64, nt = 48;
    std::vector<double> plus(nx), minus(nx);
    const double xi3 = 3.0 * M_PI / X, xi5 = 5.0 * M_PI / X;
    for (std::size_t j = 0; j < nx; ++j) {
        const double x = -X + 2.0 * X * static_cast<double>(j) / nx;
        plus[j] = std::sin(xi3 * x);
        minus[j] = std::cos(xi5 * x);
    }
    const BoundaryData bd = BoundaryData::from_samples(X, plus, minus);
    const StripField u = solve_dirichlet(bd, nt);

    double worst = 0.0;
    for (std::size_t i = 0; i <= nt; ++i) {
        const double t = u.t_of(i);
        const double vp = multiplier_v(xi3, t, Side::Plus);
        const double vm = multiplier_v(xi5, t, Side::Minus);
        for (std::size_t j = 0; j < nx; ++j)
            worst = std::max(worst, std::fabs(u.at(i, j) - (plus[j] * vp + minus[j] * vm)));
    }
    CHECK(worst < 1e-11);

    // The cosine trace is O(1) at the cut, which the solver must flag.
    bool flagged = false;
    for (const auto& w : u.warnings) flagged = flagged || w.find("truncation") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("prescribed traces are reproduced on the boundary rows") {
    const double X = 12.0;
    const std::size_t nx = 128, nt = 64;
    const auto plus = boundary_preset("mexican_hat", X, nx, 1.0);
    const auto minus = boundary_preset("gaussian_derivative", X, nx, -0.7);
    const StripField u = solve_dirichlet(BoundaryData::from_samples(X, plus, minus), nt);
    CHECK(u.warnings.empty());
    double worst = 0.0;
    for (std::size_t j = 0; j < nx; ++j) {
        worst = std::max(worst, std::fabs(u.at(nt, j) - plus[j]));
        worst = std::max(worst, std::fabs(u.at(0, j) - minus[j]));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("odd boundary data produces an odd field") {
    const double X = 8.0;
    const std::size_t nx = 64, nt = 32;
    const auto odd = boundary_preset("gaussian_derivative", X, nx, 1.0);
    const StripField u = solve_dirichlet(BoundaryData::from_samples(X, odd, odd), nt);
    double worst = 0.0;
    for (std::size_t i = 0; i <= nt; ++i) {
        worst = std::max(worst, std::fabs(u.at(i, 0)));
        for (std::size_t j = 1; j < nx; ++j)
            worst = std::max(worst, std::fabs(u.at(i, j) + u.at(i, nx - j)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("solver is linear in the boundary data") {
    const double X = 8.0;
    const std::size_t nx = 64, nt = 32;
    const auto f = boundary_preset("gaussian_derivative", X, nx, 1.0);
    const auto g = boundary_preset("mexican_hat", X, nx, 1.0);
    const double a = 1.3, b = -0.7;
    std::vector<double> mixed_p(nx), mixed_m(nx), zero(nx, 0.0);
    for (std::size_t j = 0; j < nx; ++j) {
        mixed_p[j] = a * f[j];
        mixed_m[j] = b * g[j];
    }
    const StripField uf = solve_dirichlet(BoundaryData::from_samples(X, f, zero), nt);
    const StripField ug = solve_dirichlet(BoundaryData::from_samples(X, zero, g), nt);
    const StripField um = solve_dirichlet(BoundaryData::from_samples(X, mixed_p, mixed_m), nt);
    double scale = 0.0, worst = 0.0;
    for (double v : um.values) scale = std::max(scale, std::fabs(v));
    for (std::size_t q = 0; q < um.values.size(); ++q)
        worst = std::max(worst, std::fabs(um.values[q] - a * uf.values[q] - b * ug.values[q]));
    CHECK(worst < 1e-11 * std::max(1.0, scale));
}

namespace {

double mms_error(std::size_t nx, std::size_t nt) {
    const double X = 20.0;
    const StripField u = solve_inhomogeneous(source_preset("mms", X, nx, nt));
    double err = 0.0;
    for (std::size_t i = 0; i <= nt; ++i) {
        const double t = u.t_of(i);
        for (std::size_t j = 0; j < nx; ++j) {
            const double x = u.x_of(j);
            const double exact = x * std::exp(-x * x) * std::sin(2.0 * t);
            err = std::max(err, std::fabs(u.at(i, j) - exact));
        }
    }
    return err;
}

}  // namespace

TEST_CASE("manufactured source recovers its field at second order") {
    const double coarse = mms_error(256, 64);
    const double fine = mms_error(512, 128);
    CHECK(fine == doctest::Approx(6.356e-4).epsilon(0.05));
    CHECK(coarse / fine > 3.5);
    CHECK(coarse / fine < 4.5);
}

TEST_CASE("source admissibility gates") {
    const double X = 8.0;
    const std::size_t nx = 64, nt = 32;
    SourceData bad;
    bad.X = X;
    bad.nx = nx;
    bad.nt = nt;
    bad.ftilde.assign((nt + 1) * nx, 1.0);  // does not vanish on the boundary rows
    CHECK_THROWS_AS(solve_inhomogeneous(bad), std::domain_error);

    SourceData meanful;
    meanful.X = X;
    meanful.nx = nx;
    meanful.nt = nt;
    meanful.ftilde.assign((nt + 1) * nx, 0.0);
    for (std::size_t i = 0; i <= nt; ++i) {
        const double t = M_PI * static_cast<double>(i) / nt;
        for (std::size_t j = 0; j < nx; ++j) {
            const double x = -X + 2.0 * X * static_cast<double>(j) / nx;
            meanful.ftilde[i * nx + j] = std::exp(-x * x) * std::sin(t);
        }
    }
    CHECK_THROWS_AS(solve_inhomogeneous(meanful), std::domain_error);

    SourceData short_array;
    short_array.X = X;
    short_array.nx = nx;
    short_array.nt = nt;
    short_array.ftilde.assign(nt * nx, 0.0);
    CHECK_THROWS_AS(solve_inhomogeneous(short_array), std::domain_error);
}

TEST_CASE("truncated moment vanishes for decaying data and flags bounded traces") {
    const double X = 20.0;
    const std::size_t nx = 256, nt = 64;
    const BoundaryData bd =
        BoundaryData::from_samples(X, boundary_preset("gaussian_derivative", X, nx, 1.0),
                                   boundary_preset("gaussian_derivative", X, nx, -0.5));
    const MomentPipelineReport rep = moment_check_pipeline(bd, nt);
    CHECK(std::fabs(rep.edge.value) < 1e-10);
    CHECK(rep.edge.converged);
    CHECK(rep.moments.size() == 4);
    CHECK(rep.moments.back().second == rep.edge.value);
    CHECK(rep.moments.back().first == doctest::Approx(X - 2.0));

    // A bounded, non-decaying field keeps the moment at zero yet must fail
    // the convergence flag through its lateral trace.
    StripField w(X, nx, nt);
    for (std::size_t i = 0; i <= nt; ++i)
        for (std::size_t j = 0; j < nx; ++j) w.at(i, j) = std::sin(w.t_of(i));
    const MomentReport flat = moment_residual(w, X - 2.0);
    CHECK(std::fabs(flat.value) < 1e-12);
    CHECK(flat.lateral_trace > 1.0);
    CHECK_FALSE(flat.converged);

    CHECK_THROWS_AS(moment_residual(w, X + 1.0), std::domain_error);
    CHECK_THROWS_AS(moment_residual(w, X), std::domain_error);  // stencil needs jhi + 1
}
