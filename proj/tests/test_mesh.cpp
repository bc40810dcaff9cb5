#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "h2r/mesh.hpp"
#include "h2r/parabolic.hpp"

using namespace h2r;

namespace {

double radius2(const std::array<double, 3>& v) {
    return v[0] * v[0] + v[1] * v[1];
}

struct TempPath {
    std::string path;
    explicit TempPath(const char* name) : path(std::string("/tmp/h2r_test_") + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("membership isosurface vertices sit on the zero set") {
    const Mesh m = mesh_q_surface(2.0, 24);
    REQUIRE(!m.vertices.empty());
    REQUIRE(!m.faces.empty());
    double worst = 0.0;
    for (const auto& v : m.vertices) {
        worst = std::max(worst, std::fabs(q_residual({v[0], v[1], v[2], Model::Disk})));
        CHECK(std::fabs(v[0]) <= 2.0 + 1e-12);
        CHECK(std::fabs(v[1]) <= 2.0 + 1e-12);
        CHECK(std::fabs(v[2]) <= 2.0 + 1e-12);
    }
    CHECK(worst < 1e-8);
    for (const auto& f : m.faces) {
        CHECK(f[0] < m.vertices.size());
        CHECK(f[1] < m.vertices.size());
        CHECK(f[2] < m.vertices.size());
    }
    CHECK_THROWS_AS(mesh_q_surface(-1.0, 24), std::domain_error);
    CHECK_THROWS_AS(mesh_q_surface(2.0, 2), std::domain_error);
}

TEST_CASE("catenoid piece stays inside the unit cylinder") {
    const CatenoidProfile c = make_catenoid(1.0);
    const Mesh m = mesh_catenoid(c, 24, 16);
    REQUIRE(m.vertices.size() == std::size_t(25 * 17));
    REQUIRE(m.faces.size() == std::size_t(24 * 16 * 2));
    for (const auto& v : m.vertices) {
        CHECK(radius2(v) < 1.0);
        CHECK(std::fabs(v[2]) < c.height / 2.0 + 1e-12);
    }
}

TEST_CASE("swept oscillating surface leaves the cylinder unless clipped") {
    const CatenoidProfile c = integrate_profile(1.0, 2.0 * make_catenoid(1.0).period);
    const Mesh open_mesh = mesh_unduloid(c, 24, 64, 1.5, false);
    bool outside = false;
    for (const auto& v : open_mesh.vertices) outside = outside || radius2(v) >= 1.0;
    CHECK(outside);

    const Mesh clipped = mesh_unduloid(c, 24, 64, 1.5, true);
    for (const auto& f : clipped.faces)
        for (std::size_t q = 0; q < 3; ++q) CHECK(radius2(clipped.vertices[f[q]]) < 1.0);
    CHECK(clipped.faces.size() < open_mesh.faces.size());
}

TEST_CASE("parabolic sheet maps into the disk and onto the shifted zero set") {
    const Mesh m = mesh_parabolic(1.0, 32, 24, 3.0);
    REQUIRE(!m.vertices.empty());
    for (const auto& v : m.vertices) CHECK(radius2(v) < 1.0);
    // Vertices carry sine-gauge heights; the quartic reads cosine-gauge ones.
    double worst = 0.0;
    for (const auto& v : m.vertices)
        worst = std::max(worst,
                         std::fabs(q_residual({v[0], v[1], v[2] - M_PI / 2.0, Model::Disk})));
    CHECK(worst < 1e-12);
}

TEST_CASE("tall sheets: seam closure and clipping") {
    const Mesh m = mesh_tall(0.5, 24, 16, false, 0, true);
    REQUIRE(!m.vertices.empty());
    for (const auto& f : m.faces)
        for (std::size_t q = 0; q < 3; ++q) CHECK(radius2(m.vertices[f[q]]) < 1.0);

    // Two sheets meet at the turning point: matching extreme heights.
    double tmax = 0.0;
    for (const auto& v : m.vertices) tmax = std::max(tmax, v[2]);
    const double lam_top = lambda_quadrature(0.5, 1.0);
    CHECK(tmax == doctest::Approx(lam_top).epsilon(1e-6));

    const Mesh ext = mesh_tall(0.5, 24, 16, true, 1, true);
    CHECK(ext.vertices.size() > m.vertices.size());
    double ext_top = 0.0;
    for (const auto& v : ext.vertices) ext_top = std::max(ext_top, v[2]);
    CHECK(ext_top > 2.0 * lambda_full_extension(0.5) - 1e-9);
}

TEST_CASE("obj writer emits counts and 1-based faces") {
    Mesh m;
    m.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.5}};
    m.faces = {{0, 1, 2}};
    TempPath tmp("tri.obj");
    write_obj(m, tmp.path);
    std::ifstream in(tmp.path);
    REQUIRE(in.good());
    std::string line;
    std::size_t nv = 0, nf = 0;
    std::string face_line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) ++nv;
        if (line.rfind("f ", 0) == 0) {
            ++nf;
            face_line = line;
        }
    }
    CHECK(nv == 3);
    CHECK(nf == 1);
    CHECK(face_line == "f 1 2 3");
}

TEST_CASE("csv writers round-trip headers and sample counts") {
    {
        TempPath tmp("profile.csv");
        write_csv_catenoid_profile(integrate_profile(1.0, make_catenoid(1.0).period), tmp.path);
        std::ifstream in(tmp.path);
        REQUIRE(in.good());
        std::string header;
        std::getline(in, header);
        CHECK(header == "t,r,rprime,first_integral_residual");
        std::size_t rows = 0;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) ++rows;
        CHECK(rows > 10);
    }
    {
        TempPath tmp("tall.csv");
        write_csv_tall_profile(0.5, 40, tmp.path);
        std::ifstream in(tmp.path);
        REQUIRE(in.good());
        std::string header;
        std::getline(in, header);
        CHECK(header == "x,lambda");
    }
    {
        TempPath tmp("strip.csv");
        StripField f(2.0, 16, 16);
        f.at(3, 4) = 1.25;
        write_csv_strip(f, tmp.path);
        std::ifstream in(tmp.path);
        REQUIRE(in.good());
        std::string header;
        std::getline(in, header);
        CHECK(header == "x,t,value");
        std::size_t rows = 0;
        std::string line;
        bool found = false;
        while (std::getline(in, line)) {
            if (!line.empty()) ++rows;
            found = found || line.find("1.25") != std::string::npos;
        }
        CHECK(rows == 17 * 16);
        CHECK(found);
    }
}
