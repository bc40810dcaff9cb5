#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "h2r/bvp.hpp"
#include "h2r/catenoid.hpp"
#include "h2r/jacobi.hpp"
#include "h2r/mesh.hpp"
#include "h2r/tall.hpp"
#include "h2r/verify.hpp"

namespace {

using nlohmann::json;

double tol_scale_from_env() {
    const char* s = std::getenv("H2R_TOL");
    if (!s) return 1.0;
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || !(v > 0.0)) return 1.0;
    return v;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::printf("%s\n", j.dump(2).c_str());
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
    f << j.dump(2) << "\n";
}

json height_entry_catenoid(double k) {
    return json{{"k", k}, {"height", h2r::height(k)}, {"modulus", h2r::conformal_modulus(k)}};
}

json height_entry_tall(double d) {
    const double h = h2r::height_tall(d);
    return json{{"d", d}, {"height", h}, {"above_pi", h > M_PI}};
}

int run(int argc, char** argv) {
    CLI::App app{"minimal surfaces in H^2 x R: catenoid family, parabolic catenoid, "
                 "tall rectangles, and the strip Jacobi problem"};
    app.require_subcommand(1);

    // profile
    auto* profile = app.add_subcommand("profile", "sample a generating profile to CSV");
    std::string p_family = "catenoid", p_out = "profile.csv";
    double p_k = 1.0, p_d = 0.5, p_tmax = 0.0;
    std::size_t p_samples = 0;
    profile->add_option("--family", p_family)->check(CLI::IsMember({"catenoid", "tall"}));
    profile->add_option("--k", p_k, "first-integral value (catenoid)");
    profile->add_option("--d", p_d, "tall-rectangle parameter in (0,1)");
    profile->add_option("--t-max", p_tmax, "integration span (catenoid; default one period)");
    profile->add_option("--samples", p_samples, "sample count (0 picks a default)");
    profile->add_option("--out", p_out);

    // height
    auto* height_cmd = app.add_subcommand("height", "height (and modulus) of one family member");
    std::string h_family = "catenoid", h_out;
    double h_k = 1.0, h_d = 0.5;
    std::vector<double> h_sweep;
    height_cmd->add_option("--family", h_family)->check(CLI::IsMember({"catenoid", "tall"}));
    height_cmd->add_option("--k", h_k);
    height_cmd->add_option("--d", h_d);
    height_cmd->add_option("--sweep", h_sweep, "lo hi n: tabulate over a parameter range")
        ->expected(3);
    height_cmd->add_option("--out", h_out, "write JSON here instead of stdout");

    // mesh
    auto* mesh_cmd = app.add_subcommand("mesh", "export a surface mesh as OBJ");
    std::string m_family = "catenoid", m_out = "mesh.obj";
    double m_k = 1.0, m_d = 0.5, m_lambda = 1.0, m_box = 2.0, m_periods = 2.0;
    std::vector<std::size_t> m_grid{96, 96};
    bool m_extension = false, m_noclip = false;
    mesh_cmd->add_option("--family", m_family)
        ->check(CLI::IsMember({"catenoid", "unduloid", "parabolic", "q", "tall"}));
    mesh_cmd->add_option("--k", m_k);
    mesh_cmd->add_option("--d", m_d);
    mesh_cmd->add_option("--lambda", m_lambda);
    mesh_cmd->add_option("--box", m_box, "half-width of the sampling box");
    mesh_cmd->add_option("--periods", m_periods, "vertical periods (unduloid/tall)");
    mesh_cmd->add_option("--grid", m_grid, "grid resolution (two values)")->expected(2);
    mesh_cmd->add_flag("--extension", m_extension, "tall: widen to the annular extension");
    mesh_cmd->add_flag("--no-clip", m_noclip, "keep faces outside the unit cylinder");
    mesh_cmd->add_option("--out", m_out);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string v_suite = "all", v_out;
    std::uint64_t v_seed = 20260822;
    verify_cmd->add_option("--suite", v_suite)
        ->check(CLI::IsMember({"all", "geometry", "jacobi", "bvp"}));
    verify_cmd->add_option("--seed", v_seed);
    verify_cmd->add_option("--out", v_out, "write the JSON report here");

    // jacobi
    auto* jacobi_cmd = app.add_subcommand("jacobi", "sample a closed-form Jacobi field");
    std::string j_field = "wcat", j_gauge = "psi", j_out;
    double j_X = 6.0;
    std::vector<std::size_t> j_grid{256, 128};
    jacobi_cmd->add_option("--field", j_field)
        ->check(CLI::IsMember({"psi", "utilde", "wcat", "wtall"}));
    jacobi_cmd->add_option("--gauge", j_gauge)->check(CLI::IsMember({"psi", "fhat"}));
    jacobi_cmd->add_option("--X", j_X, "strip half-width");
    jacobi_cmd->add_option("--grid", j_grid, "nx nt")->expected(2);
    jacobi_cmd->add_option("--out", j_out, "field CSV path");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "strip Dirichlet / source problem from a job file");
    std::string s_job, s_out = "solution";
    solve_cmd->add_option("--job", s_job, "job description JSON")->required();
    solve_cmd->add_option("--out", s_out, "output prefix");

    CLI11_PARSE(app, argc, argv);

    if (profile->parsed()) {
        if (p_family == "catenoid") {
            const double tmax = p_tmax > 0.0 ? p_tmax : 2.0 * h2r::height(p_k);
            h2r::write_csv_catenoid_profile(h2r::integrate_profile(p_k, tmax, p_samples), p_out);
        } else {
            h2r::write_csv_tall_profile(p_d, p_samples == 0 ? 256 : p_samples, p_out);
        }
        std::printf("wrote %s\n", p_out.c_str());
        return 0;
    }

    if (height_cmd->parsed()) {
        json out;
        if (h_sweep.empty()) {
            out = h_family == "catenoid" ? height_entry_catenoid(h_k) : height_entry_tall(h_d);
            out["family"] = h_family;
        } else {
            const double lo = h_sweep[0], hi = h_sweep[1];
            const auto n = static_cast<std::size_t>(h_sweep[2]);
            if (!(n >= 2 && lo > 0.0 && hi > lo))
                throw std::domain_error("height: sweep wants 0 < lo < hi and n >= 2");
            json rows = json::array();
            bool mono = true;
            double prev = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double f = static_cast<double>(i) / static_cast<double>(n - 1);
                double h;
                if (h_family == "catenoid") {
                    // geometric spacing matches the scale invariance of k
                    const double k = lo * std::pow(hi / lo, f);
                    h = h2r::height(k);
                    rows.push_back(height_entry_catenoid(k));
                    if (i > 0 && !(h < prev)) mono = false;
                } else {
                    const double d = lo + (hi - lo) * f;
                    h = h2r::height_tall(d);
                    rows.push_back(height_entry_tall(d));
                    if (i > 0 && !(h > prev)) mono = false;
                }
                prev = h;
            }
            out["family"] = h_family;
            out["rows"] = rows;
            out[h_family == "catenoid" ? "strictly_decreasing" : "strictly_increasing"] = mono;
        }
        emit(out, h_out);
        return 0;
    }

    if (mesh_cmd->parsed()) {
        h2r::Mesh mesh;
        if (m_family == "catenoid") {
            mesh = h2r::mesh_catenoid(h2r::make_catenoid(m_k), m_grid[0], m_grid[1]);
        } else if (m_family == "unduloid") {
            mesh = h2r::mesh_unduloid(h2r::make_catenoid(m_k), m_grid[0], m_grid[1], m_periods,
                                      !m_noclip);
        } else if (m_family == "parabolic") {
            mesh = h2r::mesh_parabolic(m_lambda, m_grid[0], m_grid[1], m_box);
        } else if (m_family == "q") {
            mesh = h2r::mesh_q_surface(m_box, m_grid[0]);
        } else {
            mesh = h2r::mesh_tall(m_d, m_grid[0], m_grid[1], m_extension,
                                  static_cast<int>(m_periods), !m_noclip);
        }
        h2r::write_obj(mesh, m_out);
        std::printf("wrote %s: %zu vertices, %zu faces\n", m_out.c_str(), mesh.vertices.size(),
                    mesh.faces.size());
        return 0;
    }

    if (verify_cmd->parsed()) {
        const double ts = tol_scale_from_env();
        std::vector<h2r::SuiteReport> reports;
        if (v_suite == "all" || v_suite == "geometry")
            reports.push_back(h2r::run_geometry_suite(v_seed, ts));
        if (v_suite == "all" || v_suite == "jacobi")
            reports.push_back(h2r::run_jacobi_suite(v_seed, ts));
        if (v_suite == "all" || v_suite == "bvp")
            reports.push_back(h2r::run_bvp_suite(v_seed, ts));
        const std::string text = h2r::report_json(reports);
        if (v_out.empty()) {
            std::printf("%s\n", text.c_str());
        } else {
            std::ofstream f(v_out);
            if (!f) throw std::runtime_error("cannot open for writing: " + v_out);
            f << text << "\n";
            std::printf("wrote %s\n", v_out.c_str());
        }
        for (const auto& r : reports)
            if (!r.all_passed()) return 1;
        return 0;
    }

    if (jacobi_cmd->parsed()) {
        const std::map<std::string, h2r::JacobiField> fields{
            {"psi", h2r::JacobiField::Psi},
            {"utilde", h2r::JacobiField::Utilde},
            {"wcat", h2r::JacobiField::WCat},
            {"wtall", h2r::JacobiField::WTall}};
        const h2r::JacobiField field = fields.at(j_field);
        const h2r::Gauge gauge = j_gauge == "psi" ? h2r::Gauge::Psi : h2r::Gauge::Fhat;

        // Sample in the sine gauge strip; the cosine gauge shifts rows by -pi/2.
        // Boundary rows sit on the edge of the open gauge domain; an ulp-level
        // clamp lands on the closed forms' continuous limits.
        h2r::StripField w(j_X, j_grid[0], j_grid[1]);
        const double shift = gauge == h2r::Gauge::Psi ? 0.0 : M_PI / 2.0;
        const double lo = std::nextafter(0.0 - shift, 1.0);
        const double hi = std::nextafter(M_PI - shift, -1.0);
        for (std::size_t i = 0; i <= w.nt; ++i)
            for (std::size_t j = 0; j < w.nx; ++j)
                w.at(i, j) = h2r::analytic_field(field, gauge, w.x_of(j),
                                                 std::clamp(w.t_of(i) - shift, lo, hi));
        // The x stencil wraps periodically and most of these fields grow with
        // x, so the seam columns are excluded from the kernel residual.
        double resid = 0.0;
        for (std::size_t i = 1; i < w.nt; ++i)
            for (std::size_t j = 1; j + 1 < w.nx; ++j)
                resid = std::max(resid, std::fabs(h2r::jacobi_apply(w, i, j)));
        if (!j_out.empty()) h2r::write_csv_strip(w, j_out);
        json out{{"field", j_field},
                 {"gauge", j_gauge},
                 {"X", j_X},
                 {"nx", j_grid[0]},
                 {"nt", j_grid[1]},
                 {"max_discrete_residual", resid}};
        if (!j_out.empty()) out["csv"] = j_out;
        emit(out, "");
        return 0;
    }

    // solve
    std::ifstream jf(s_job);
    if (!jf) throw std::runtime_error("cannot read job file: " + s_job);
    json job = json::parse(jf);

    const double X = job.value("X", 20.0);
    const std::size_t nx = job.value("nx", std::size_t{1024});
    const std::size_t nt = job.value("nt", std::size_t{256});

    bool have_field = false;
    h2r::StripField u;
    json report{{"X", X}, {"nx", nx}, {"nt", nt}};

    if (job.contains("boundary")) {
        const json& b = job.at("boundary");
        std::vector<double> plus, minus;
        const std::string kind = b.value("kind", "preset");
        if (kind == "preset") {
            plus = h2r::boundary_preset(b.value("plus", "none"), X, nx, b.value("scale_plus", 1.0));
            minus =
                h2r::boundary_preset(b.value("minus", "none"), X, nx, b.value("scale_minus", 1.0));
        } else if (kind == "samples") {
            plus = b.at("plus").get<std::vector<double>>();
            minus = b.at("minus").get<std::vector<double>>();
        } else {
            throw std::domain_error("boundary.kind must be preset or samples");
        }
        const auto pipe =
            h2r::moment_check_pipeline(h2r::BoundaryData::from_samples(X, plus, minus), nt);
        u = pipe.field;
        have_field = true;
        json moments = json::array();
        for (const auto& rm : pipe.moments)
            moments.push_back(json{{"r", rm.first}, {"moment", rm.second}});
        report["moments"] = moments;
        report["edge"] = json{{"moment", pipe.edge.value},
                              {"lateral_trace", pipe.edge.lateral_trace},
                              {"converged", pipe.edge.converged}};
    }

    if (job.contains("source")) {
        const json& s = job.at("source");
        h2r::SourceData src;
        const std::string kind = s.value("kind", "preset");
        if (kind == "preset") {
            src = h2r::source_preset(s.value("name", "mms"), X, nx, nt, s.value("scale", 1.0));
        } else if (kind == "samples") {
            src.X = X;
            src.nx = nx;
            src.nt = nt;
            src.ftilde = s.at("ftilde").get<std::vector<double>>();
            if (src.ftilde.size() != (nt + 1) * nx)
                throw std::domain_error("source.ftilde must hold (nt+1)*nx row-major samples");
        } else {
            throw std::domain_error("source.kind must be preset or samples");
        }
        const h2r::StripField up = h2r::solve_inhomogeneous(src);
        if (have_field) {
            for (std::size_t i = 0; i < u.values.size(); ++i) u.values[i] += up.values[i];
            for (const auto& wmsg : up.warnings) u.warnings.push_back(wmsg);
        } else {
            u = up;
            have_field = true;
        }
    }

    if (!have_field) throw std::domain_error("job has neither boundary nor source");

    double lo = u.values[0], hi = u.values[0];
    for (double v : u.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    report["min"] = lo;
    report["max"] = hi;
    report["warnings"] = u.warnings;

    const std::string field_path = s_out + "_field.csv";
    const std::string report_path = s_out + "_report.json";
    h2r::write_csv_strip(u, field_path);
    emit(report, report_path);
    std::printf("wrote %s and %s\n", field_path.c_str(), report_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::printf("%s\n", json{{"error", e.what()}}.dump().c_str());
        return 2;
    }
}
