#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2r {

// Scalar field on the truncated strip [-X, X] x [0, pi].  Columns are
// x_j = -X + j 2X/nx, j = 0..nx-1 (periodic continuation: x = +X wraps to
// column 0); rows are t_i = i pi/nt, i = 0..nt, so both boundary traces are
// stored rows.
struct StripField {
    double X = 0.0;
    std::size_t nx = 0, nt = 0;
    std::vector<double> values;  // (nt+1) rows x nx columns, row-major
    std::vector<std::string> warnings;

    StripField() = default;
    StripField(double X_, std::size_t nx_, std::size_t nt_)
        : X(X_), nx(nx_), nt(nt_), values((nt_ + 1) * nx_, 0.0) {
        if (!(X_ > 0.0)) throw std::domain_error("StripField: X must be positive");
        if (nx_ < 16 || nt_ < 16) throw std::domain_error("StripField: grid below 16x16");
    }

    double dx() const { return 2.0 * X / static_cast<double>(nx); }
    double dt() const { return M_PI / static_cast<double>(nt); }
    double x_of(std::size_t j) const { return -X + dx() * static_cast<double>(j); }
    double t_of(std::size_t i) const { return dt() * static_cast<double>(i); }
    double& at(std::size_t i, std::size_t j) { return values[i * nx + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * nx + j]; }

    std::size_t column_near(double x) const {
        double j = (x + X) / dx();
        if (j < 0.0) j = 0.0;
        const auto jj = static_cast<std::size_t>(j + 0.5);
        return jj >= nx ? nx - 1 : jj;
    }
};

}  // namespace h2r
