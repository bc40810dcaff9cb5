#include "h2r/bvp.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>

namespace h2r {

namespace {

constexpr double kSeriesWindow = 1e-6;   // |1 - xi^2| below this: series forms
constexpr double kMeanTolerance = 1e-10;  // zero-mode admissibility, relative

// sin(sqrt(eps) z)/sqrt(eps) continued through eps = 0 (becomes sinh for
// eps < 0); valid for |eps| z^2 small, here |eps| < 1e-6 and z <= pi.
double s_series(double eps, double z) {
    const double z2 = z * z;
    return z * (1.0 - eps * z2 / 6.0 * (1.0 - eps * z2 / 20.0 * (1.0 - eps * z2 / 42.0)));
}

bool power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

// RAII wrapper for one FFTW r2c/c2r plan pair of fixed length.
struct FourierWorkspace {
    std::size_t n;
    double* real;
    fftw_complex* spec;
    fftw_plan fwd;
    fftw_plan inv;

    explicit FourierWorkspace(std::size_t n_) : n(n_) {
        real = fftw_alloc_real(n);
        spec = fftw_alloc_complex(n / 2 + 1);
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec, FFTW_ESTIMATE);
        inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real, FFTW_ESTIMATE);
    }
    ~FourierWorkspace() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
        fftw_free(real);
        fftw_free(spec);
    }
    FourierWorkspace(const FourierWorkspace&) = delete;
    FourierWorkspace& operator=(const FourierWorkspace&) = delete;

    std::vector<std::complex<double>> forward(const std::vector<double>& in) {
        std::copy(in.begin(), in.end(), real);
        fftw_execute(fwd);
        std::vector<std::complex<double>> out(n / 2 + 1);
        for (std::size_t m = 0; m < out.size(); ++m) out[m] = {spec[m][0], spec[m][1]};
        return out;
    }
    // Inverse transform including the 1/n normalization.
    void inverse(const std::vector<std::complex<double>>& in, double* out_row) {
        for (std::size_t m = 0; m < in.size(); ++m) {
            spec[m][0] = in[m].real();
            spec[m][1] = in[m].imag();
        }
        fftw_execute(inv);
        const double scale = 1.0 / static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) out_row[j] = real[j] * scale;
    }
};

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

double multiplier_v(double xi, double t, Side side) {
    if (xi == 0.0) throw std::domain_error("multiplier_v: xi = 0 is the double pole");
    if (!(t >= 0.0 && t <= M_PI)) throw std::domain_error("multiplier_v: t outside [0, pi]");
    const double tt = side == Side::Plus ? t : M_PI - t;
    const double eps = 1.0 - xi * xi;
    if (std::abs(eps) < kSeriesWindow) return s_series(eps, tt) / s_series(eps, M_PI);
    if (eps > 0.0) {
        const double mu = std::sqrt(eps);
        return std::sin(mu * tt) / std::sin(mu * M_PI);
    }
    const double om = std::sqrt(-eps);
    // sinh(om tt)/sinh(om pi) without overflow.
    return std::exp(om * (tt - M_PI)) * (1.0 - std::exp(-2.0 * om * tt)) /
           (1.0 - std::exp(-2.0 * om * M_PI));
}

double green_hat(double xi, double t, double tp) {
    if (xi == 0.0) throw std::domain_error("green_hat: xi = 0 is the double pole");
    if (!(t >= 0.0 && t <= M_PI && tp >= 0.0 && tp <= M_PI))
        throw std::domain_error("green_hat: arguments outside [0, pi]");
    const double tlo = std::min(t, tp);
    const double thi = std::max(t, tp);
    const double eps = 1.0 - xi * xi;
    if (std::abs(eps) < kSeriesWindow)
        return s_series(eps, tlo) * s_series(eps, M_PI - thi) / s_series(eps, M_PI);
    if (eps > 0.0) {
        const double mu = std::sqrt(eps);
        return std::sin(mu * tlo) * std::sin(mu * (M_PI - thi)) / (mu * std::sin(mu * M_PI));
    }
    const double om = std::sqrt(-eps);
    return (0.5 / om) * std::exp(-om * (thi - tlo)) * (1.0 - std::exp(-2.0 * om * tlo)) *
           (1.0 - std::exp(-2.0 * om * (M_PI - thi))) / (1.0 - std::exp(-2.0 * om * M_PI));
}

BoundaryData BoundaryData::from_samples(double X, std::vector<double> plus,
                                        std::vector<double> minus) {
    if (!(X > 0.0)) throw std::domain_error("BoundaryData: X must be positive");
    if (plus.size() != minus.size() || plus.empty())
        throw std::domain_error("BoundaryData: trace sample sizes differ or empty");
    BoundaryData bd;
    bd.X = X;
    bd.nx = plus.size();
    bd.phi_plus = std::move(plus);
    bd.phi_minus = std::move(minus);
    const double dx = 2.0 * X / static_cast<double>(bd.nx);
    for (double v : bd.phi_plus) bd.mean_plus += v;
    for (double v : bd.phi_minus) bd.mean_minus += v;
    bd.mean_plus *= dx;
    bd.mean_minus *= dx;
    return bd;
}

StripField solve_dirichlet(const BoundaryData& bd, std::size_t nt) {
    if (!power_of_two(bd.nx)) throw std::domain_error("solve_dirichlet: nx must be a power of two");
    StripField u(bd.X, bd.nx, nt);

    const double amax = std::max({1.0, max_abs(bd.phi_plus), max_abs(bd.phi_minus)});
    if (std::abs(bd.mean_plus) > kMeanTolerance * amax ||
        std::abs(bd.mean_minus) > kMeanTolerance * amax)
        throw std::domain_error(
            "solve_dirichlet: boundary data has nonzero mean (xi = 0 double pole)");
    if (std::abs(bd.phi_plus.front()) > 1e-8 * amax || std::abs(bd.phi_minus.front()) > 1e-8 * amax)
        u.warnings.push_back("boundary data not decayed at the truncation edge");

    FourierWorkspace ws(bd.nx);
    const auto ph_plus = ws.forward(bd.phi_plus);
    const auto ph_minus = ws.forward(bd.phi_minus);
    const std::size_t nmodes = bd.nx / 2 + 1;
    std::vector<std::complex<double>> row(nmodes);
    for (std::size_t i = 0; i <= nt; ++i) {
        const double t = u.t_of(i);
        row[0] = 0.0;  // zero mode removed; admissible data has negligible mean
        for (std::size_t m = 1; m < nmodes; ++m) {
            const double xi = M_PI * static_cast<double>(m) / bd.X;
            row[m] = ph_plus[m] * multiplier_v(xi, t, Side::Plus) +
                     ph_minus[m] * multiplier_v(xi, t, Side::Minus);
        }
        ws.inverse(row, &u.at(i, 0));
    }
    return u;
}

StripField solve_inhomogeneous(const SourceData& src) {
    if (!power_of_two(src.nx))
        throw std::domain_error("solve_inhomogeneous: nx must be a power of two");
    if (src.ftilde.size() != (src.nt + 1) * src.nx)
        throw std::domain_error("solve_inhomogeneous: sample array size mismatch");
    StripField u(src.X, src.nx, src.nt);

    double amax = 1.0;
    for (double v : src.ftilde) amax = std::max(amax, std::abs(v));
    for (std::size_t j = 0; j < src.nx; ++j)
        if (std::abs(src.at(0, j)) > 1e-10 * amax || std::abs(src.at(src.nt, j)) > 1e-10 * amax)
            throw std::domain_error("solve_inhomogeneous: source does not vanish at t = 0, pi");

    // Transform each t-row, then integrate the Green function against each
    // mode column by trapezoid in t'.
    FourierWorkspace ws(src.nx);
    const std::size_t nmodes = src.nx / 2 + 1;
    std::vector<std::vector<std::complex<double>>> fhat(src.nt + 1);
    for (std::size_t i = 0; i <= src.nt; ++i) {
        std::vector<double> rowvals(src.ftilde.begin() + i * src.nx,
                                    src.ftilde.begin() + (i + 1) * src.nx);
        fhat[i] = ws.forward(rowvals);
    }
    double zero_mode = 0.0;
    for (std::size_t i = 0; i <= src.nt; ++i) zero_mode = std::max(zero_mode, std::abs(fhat[i][0]));
    if (zero_mode > 1e-10 * amax * static_cast<double>(src.nx))
        throw std::domain_error("solve_inhomogeneous: source has a nonzero x-mean mode (xi = 0)");

    const double ht = u.dt();
    std::vector<std::complex<double>> row(nmodes);
    std::vector<std::complex<double>> uhat((src.nt + 1) * nmodes);
    for (std::size_t m = 1; m < nmodes; ++m) {
        const double xi = M_PI * static_cast<double>(m) / src.X;
        for (std::size_t i = 0; i <= src.nt; ++i) {
            std::complex<double> acc = 0.0;
            const double t = u.t_of(i);
            for (std::size_t j = 1; j < src.nt; ++j)
                acc += green_hat(xi, t, u.t_of(j)) * fhat[j][m];
            uhat[i * nmodes + m] = acc * ht;
        }
    }
    for (std::size_t i = 0; i <= src.nt; ++i) {
        for (std::size_t m = 0; m < nmodes; ++m) row[m] = uhat[i * nmodes + m];
        ws.inverse(row, &u.at(i, 0));
    }
    return u;
}

MomentPipelineReport moment_check_pipeline(const BoundaryData& bd, std::size_t nt) {
    MomentPipelineReport rep;
    rep.field = solve_dirichlet(bd, nt);
    for (double frac : {0.25, 0.5, 0.75}) {
        const double r = frac * bd.X;
        rep.moments.emplace_back(r, moment_residual(rep.field, r).value);
    }
    rep.edge = moment_residual(rep.field, bd.X - 2.0);
    rep.moments.emplace_back(bd.X - 2.0, rep.edge.value);
    return rep;
}

std::vector<double> boundary_preset(const std::string& name, double X, std::size_t nx,
                                    double scale) {
    std::vector<double> out(nx, 0.0);
    auto xs = [&](std::size_t j) { return -X + 2.0 * X * static_cast<double>(j) / nx; };
    if (name == "none") return out;
    if (name == "gaussian_derivative") {
        for (std::size_t j = 0; j < nx; ++j) {
            const double x = xs(j);
            out[j] = scale * x * std::exp(-x * x);
        }
        return out;
    }
    if (name == "mexican_hat") {
        for (std::size_t j = 0; j < nx; ++j) {
            const double x = xs(j);
            out[j] = scale * (1.0 - 2.0 * x * x) * std::exp(-x * x);
        }
        return out;
    }
    if (name == "bump_pair") {
        auto bump = [](double x, double c, double w) {
            const double z = (x - c) / w;
            return std::abs(z) < 1.0 ? std::exp(-1.0 / (1.0 - z * z)) : 0.0;
        };
        double mean = 0.0;
        for (std::size_t j = 0; j < nx; ++j) {
            const double x = xs(j);
            out[j] = scale * (bump(x, 1.5, 2.0) - bump(x, -2.5, 2.0));
            mean += out[j];
        }
        mean /= static_cast<double>(nx);
        for (double& v : out) v -= mean;
        return out;
    }
    throw std::domain_error("boundary_preset: unknown preset '" + name + "'");
}

SourceData source_preset(const std::string& name, double X, std::size_t nx, std::size_t nt,
                         double scale) {
    if (name != "mms") throw std::domain_error("source_preset: unknown preset '" + name + "'");
    SourceData src;
    src.X = X;
    src.nx = nx;
    src.nt = nt;
    src.ftilde.assign((nt + 1) * nx, 0.0);
    for (std::size_t i = 0; i <= nt; ++i) {
        const double t = M_PI * static_cast<double>(i) / nt;
        for (std::size_t j = 0; j < nx; ++j) {
            const double x = -X + 2.0 * X * static_cast<double>(j) / nx;
            src.ftilde[i * nx + j] =
                scale * x * (9.0 - 4.0 * x * x) * std::exp(-x * x) * std::sin(2.0 * t);
        }
    }
    return src;
}

}  // namespace h2r
