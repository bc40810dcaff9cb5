#include "h2r/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "h2r/hyperbolic.hpp"
#include "h2r/parabolic.hpp"
#include "h2r/quadrature.hpp"

namespace h2r {

namespace {

struct FileCloser {
    std::FILE* f;
    ~FileCloser() {
        if (f) std::fclose(f);
    }
};

std::FILE* open_or_throw(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

bool inside_cylinder(const std::array<double, 3>& v) {
    return v[0] * v[0] + v[1] * v[1] < 1.0;
}

// Quad grid -> triangle faces over vertex ids laid out row-major
// (n_rows x n_cols), optionally dropping faces with a vertex outside the
// cylinder.
void emit_grid_faces(Mesh& m, std::size_t base, std::size_t n_rows, std::size_t n_cols,
                     bool clip) {
    for (std::size_t i = 0; i + 1 < n_rows; ++i) {
        for (std::size_t j = 0; j + 1 < n_cols; ++j) {
            const std::size_t a = base + i * n_cols + j;
            const std::size_t b = a + 1;
            const std::size_t c = a + n_cols;
            const std::size_t d = c + 1;
            if (clip) {
                if (!inside_cylinder(m.vertices[a]) || !inside_cylinder(m.vertices[b]) ||
                    !inside_cylinder(m.vertices[c]) || !inside_cylinder(m.vertices[d]))
                    continue;
            }
            m.faces.push_back({a, b, d});
            m.faces.push_back({a, d, c});
        }
    }
}

}  // namespace

void write_obj(const Mesh& mesh, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    FileCloser guard{f};
    for (const auto& v : mesh.vertices)
        std::fprintf(f, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    for (const auto& face : mesh.faces)
        std::fprintf(f, "f %zu %zu %zu\n", face[0] + 1, face[1] + 1, face[2] + 1);
}

Mesh mesh_unduloid(const CatenoidProfile& c, std::size_t n_angle, std::size_t n_t,
                   double periods, bool clip_to_cylinder) {
    if (n_angle < 3 || n_t < 2) throw std::domain_error("mesh_unduloid: grid too coarse");
    if (!(periods > 0.0)) throw std::domain_error("mesh_unduloid: periods must be positive");
    Mesh m;
    const double t_span = periods * c.period;
    const double t_lo = -t_span / 2.0;
    // theta covers one closed turn of the immersion: sqrt(k) theta in [0, 2pi].
    const double theta_max = 2.0 * M_PI / std::sqrt(c.k);
    for (std::size_t i = 0; i <= n_t; ++i) {
        const double t = t_lo + t_span * static_cast<double>(i) / static_cast<double>(n_t);
        for (std::size_t j = 0; j <= n_angle; ++j) {
            const double theta = theta_max * static_cast<double>(j) / static_cast<double>(n_angle);
            const Point3 p = ambient_unduloid(c, theta, t);
            m.vertices.push_back({p.u, p.v, p.t});
        }
    }
    emit_grid_faces(m, 0, n_t + 1, n_angle + 1, clip_to_cylinder);
    return m;
}

Mesh mesh_catenoid(const CatenoidProfile& c, std::size_t n_angle, std::size_t n_t) {
    if (n_angle < 3 || n_t < 2) throw std::domain_error("mesh_catenoid: grid too coarse");
    Mesh m;
    // Keep strictly inside the cylinder; r -> 1 with slope 1 at |t| = h/2, so
    // the t margin converts one-for-one into rim clearance and has to clear
    // the immersion guard with room to spare.
    const double t_half = c.height / 2.0 * (1.0 - 1e-7);
    const double theta_max = 2.0 * M_PI / std::sqrt(c.k);
    for (std::size_t i = 0; i <= n_t; ++i) {
        const double t = -t_half + 2.0 * t_half * static_cast<double>(i) / static_cast<double>(n_t);
        for (std::size_t j = 0; j <= n_angle; ++j) {
            const double theta = theta_max * static_cast<double>(j) / static_cast<double>(n_angle);
            const Point3 p = immerse_catenoid(c, theta, t);
            m.vertices.push_back({p.u, p.v, p.t});
        }
    }
    emit_grid_faces(m, 0, n_t + 1, n_angle + 1, false);
    return m;
}

Mesh mesh_parabolic(double lambda, std::size_t n_x, std::size_t n_t, double box) {
    if (n_x < 2 || n_t < 2) throw std::domain_error("mesh_parabolic: grid too coarse");
    if (!(box > 0.0)) throw std::domain_error("mesh_parabolic: box must be positive");
    Mesh m;
    const double t_margin = 1e-3;
    for (std::size_t i = 0; i <= n_t; ++i) {
        const double t =
            t_margin + (M_PI - 2.0 * t_margin) * static_cast<double>(i) / static_cast<double>(n_t);
        for (std::size_t j = 0; j <= n_x; ++j) {
            const double x = -box + 2.0 * box * static_cast<double>(j) / static_cast<double>(n_x);
            const Point3 p = psi(lambda, x, t);  // half-plane model
            const complexd z = mobius_halfplane_to_disk(complexd(p.u, p.v));
            m.vertices.push_back({z.real(), z.imag(), p.t});
        }
    }
    emit_grid_faces(m, 0, n_t + 1, n_x + 1, false);
    return m;
}

namespace {

// Marching tetrahedra over the cube decomposition sharing the main diagonal.
// Cube corner bit order: (x, y, t) offsets 0/1.
constexpr int kCorner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                               {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
constexpr int kTets[6][4] = {{0, 5, 1, 6}, {0, 1, 2, 6}, {0, 2, 3, 6},
                             {0, 3, 7, 6}, {0, 7, 4, 6}, {0, 4, 5, 6}};

struct QGrid {
    double box = 0.0;
    std::size_t n = 0;
    std::vector<double> res;  // (n+1)^3 residuals

    double coord(std::size_t i) const {
        return -box + 2.0 * box * static_cast<double>(i) / static_cast<double>(n);
    }
    std::size_t id(std::size_t ix, std::size_t iy, std::size_t it) const {
        return (ix * (n + 1) + iy) * (n + 1) + it;
    }
};

double q_at(double x, double y, double t) {
    return q_residual(Point3{x, y, t, Model::Disk});
}

// Zero crossing on the segment between two lattice points with opposite
// residual signs: linear seed, then bisection until |residual| < 1e-8.
std::array<double, 3> polish_edge(const std::array<double, 3>& pa, double va,
                                  const std::array<double, 3>& pb, double vb) {
    double lo = 0.0, hi = 1.0, flo = va;
    auto eval = [&](double s) {
        return q_at(pa[0] + s * (pb[0] - pa[0]), pa[1] + s * (pb[1] - pa[1]),
                    pa[2] + s * (pb[2] - pa[2]));
    };
    double s = va / (va - vb);
    for (int iter = 0; iter < 80; ++iter) {
        const double fs = eval(s);
        if (std::fabs(fs) < 1e-8) break;
        if ((fs > 0.0) == (flo > 0.0)) {
            lo = s;
            flo = fs;
        } else {
            hi = s;
        }
        s = 0.5 * (lo + hi);
    }
    return {pa[0] + s * (pb[0] - pa[0]), pa[1] + s * (pb[1] - pa[1]),
            pa[2] + s * (pb[2] - pa[2])};
}

}  // namespace

Mesh mesh_q_surface(double box, std::size_t n_cells) {
    if (!(box > 0.0)) throw std::domain_error("mesh_q_surface: box must be positive");
    if (n_cells < 4) throw std::domain_error("mesh_q_surface: grid too coarse");
    QGrid grid{box, n_cells, {}};
    const std::size_t np = n_cells + 1;
    grid.res.resize(np * np * np);
    for (std::size_t ix = 0; ix < np; ++ix)
        for (std::size_t iy = 0; iy < np; ++iy)
            for (std::size_t it = 0; it < np; ++it)
                grid.res[grid.id(ix, iy, it)] =
                    q_at(grid.coord(ix), grid.coord(iy), grid.coord(it));

    Mesh m;
    std::unordered_map<std::uint64_t, std::size_t> edge_vertex;
    auto vertex_on_edge = [&](std::size_t ida, std::size_t idb,
                              const std::array<double, 3>& pa, double va,
                              const std::array<double, 3>& pb, double vb) {
        const std::uint64_t key =
            ida < idb ? (static_cast<std::uint64_t>(ida) << 32 | idb)
                      : (static_cast<std::uint64_t>(idb) << 32 | ida);
        auto it = edge_vertex.find(key);
        if (it != edge_vertex.end()) return it->second;
        m.vertices.push_back(polish_edge(pa, va, pb, vb));
        edge_vertex.emplace(key, m.vertices.size() - 1);
        return m.vertices.size() - 1;
    };

    std::size_t corner_id[8];
    std::array<double, 3> corner_p[8];
    double corner_v[8];
    for (std::size_t ix = 0; ix < n_cells; ++ix) {
        for (std::size_t iy = 0; iy < n_cells; ++iy) {
            for (std::size_t it = 0; it < n_cells; ++it) {
                for (int c = 0; c < 8; ++c) {
                    const std::size_t jx = ix + static_cast<std::size_t>(kCorner[c][0]);
                    const std::size_t jy = iy + static_cast<std::size_t>(kCorner[c][1]);
                    const std::size_t jt = it + static_cast<std::size_t>(kCorner[c][2]);
                    corner_id[c] = grid.id(jx, jy, jt);
                    corner_p[c] = {grid.coord(jx), grid.coord(jy), grid.coord(jt)};
                    corner_v[c] = grid.res[corner_id[c]];
                }
                for (const auto& tet : kTets) {
                    int neg[4], pos[4], nn = 0, npos = 0;
                    for (int v = 0; v < 4; ++v) {
                        if (corner_v[tet[v]] < 0.0)
                            neg[nn++] = tet[v];
                        else
                            pos[npos++] = tet[v];
                    }
                    auto edge = [&](int a, int b) {
                        return vertex_on_edge(corner_id[a], corner_id[b], corner_p[a],
                                              corner_v[a], corner_p[b], corner_v[b]);
                    };
                    if (nn == 1) {
                        m.faces.push_back({edge(neg[0], pos[0]), edge(neg[0], pos[1]),
                                           edge(neg[0], pos[2])});
                    } else if (nn == 3) {
                        m.faces.push_back({edge(pos[0], neg[0]), edge(pos[0], neg[1]),
                                           edge(pos[0], neg[2])});
                    } else if (nn == 2) {
                        const std::size_t v00 = edge(neg[0], pos[0]);
                        const std::size_t v01 = edge(neg[0], pos[1]);
                        const std::size_t v10 = edge(neg[1], pos[0]);
                        const std::size_t v11 = edge(neg[1], pos[1]);
                        m.faces.push_back({v00, v01, v11});
                        m.faces.push_back({v00, v11, v10});
                    }
                }
            }
        }
    }
    return m;
}

double lambda_full_extension(double d) {
    if (!(d > 0.0 && d < 1.0)) throw std::domain_error("lambda_full_extension: d in (0,1)");
    const double a = d1(d);
    const double b = 1.0 / a;
    const double c2 = 1.0 - d * d;
    // Radicand factored as (1-d^2)(v - d1)(v + d1)(1/d1 - v)(1/d1 + v); the
    // offsets da = v - a, db = b - v arrive cancellation-free from the rule.
    auto f = [&](double v, double da, double db) {
        return 2.0 / std::sqrt(c2 * da * (v + a) * db * (b + v));
    };
    return integrate_tanh_sinh(f, a, b).value;
}

Mesh mesh_tall(double d, std::size_t n_x, std::size_t n_y, bool extension, int periods,
               bool clip_to_cylinder) {
    if (n_x < 2 || n_y < 2) throw std::domain_error("mesh_tall: grid too coarse");
    const TallRectSpec spec = make_tall(d);
    Mesh m;
    const double y_max = 1.0 - 1e-6;
    const double x_lo = spec.d1 + (extension ? 1e-6 : 1e-9);
    const double x_hi = extension ? (1.0 / spec.d1) * (1.0 - 1e-4) : 1.0;

    // Precompute lambda along the x grid (shared by every sheet copy).
    std::vector<double> xs(n_x + 1), lam(n_x + 1);
    for (std::size_t j = 0; j <= n_x; ++j) {
        xs[j] = x_lo + (x_hi - x_lo) * static_cast<double>(j) / static_cast<double>(n_x);
        lam[j] = xs[j] <= 1.0 ? lambda_quadrature(d, xs[j]) : lambda_extended(d, xs[j]);
    }

    const double lambda_top = lambda_full_extension(d);
    const int copies = periods > 0 ? periods : 0;
    // sheet sign s and vertical shift: the ambient periodic surface repeats
    // with period 2*lambda_top after reflecting across the turning plane.
    for (int copy = -copies; copy <= copies; ++copy) {
        for (int s = -1; s <= 1; s += 2) {
            const std::size_t base = m.vertices.size();
            for (std::size_t i = 0; i <= n_y; ++i) {
                const double y =
                    -y_max + 2.0 * y_max * static_cast<double>(i) / static_cast<double>(n_y);
                for (std::size_t j = 0; j <= n_x; ++j) {
                    const double x = xs[j];
                    const double den = x * x * y * y + 1.0;
                    const double px = (x - x * y * y) / den;
                    const double py = (x * x + 1.0) * y / den;
                    const double t = 2.0 * lambda_top * static_cast<double>(copy) +
                                     static_cast<double>(s) * lam[j];
                    m.vertices.push_back({px, py, t});
                }
            }
            emit_grid_faces(m, base, n_y + 1, n_x + 1, clip_to_cylinder);
        }
    }
    return m;
}

void write_csv_catenoid_profile(const CatenoidProfile& c, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    FileCloser guard{f};
    std::fprintf(f, "t,r,rprime,first_integral_residual\n");
    for (const auto& s : c.samples)
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", s.t, s.r, s.rprime,
                     first_integral(s.r, s.rprime) - c.k);
}

void write_csv_tall_profile(double d, std::size_t n, const std::string& path) {
    if (n < 2) throw std::domain_error("write_csv_tall_profile: need at least 2 samples");
    const TallRectSpec spec = make_tall(d);
    std::FILE* f = open_or_throw(path);
    FileCloser guard{f};
    std::fprintf(f, "x,lambda\n");
    for (std::size_t j = 0; j <= n; ++j) {
        const double x =
            spec.d1 + (1.0 - spec.d1) * static_cast<double>(j) / static_cast<double>(n);
        std::fprintf(f, "%.17g,%.17g\n", x, lambda_quadrature(d, x));
    }
}

void write_csv_strip(const StripField& field, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    FileCloser guard{f};
    std::fprintf(f, "x,t,value\n");
    for (std::size_t i = 0; i <= field.nt; ++i)
        for (std::size_t j = 0; j < field.nx; ++j)
            std::fprintf(f, "%.17g,%.17g,%.17g\n", field.x_of(j), field.t_of(i),
                         field.at(i, j));
}

}  // namespace h2r
