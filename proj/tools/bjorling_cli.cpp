// Command-line front end for the bjorling shared library.  Talks to the
// core exclusively through the C API in bjorling.h.
//
// Subcommands:
//   surface  sample a surface into an OBJ or PLY mesh
//   curve    sample a generator/dual curve into CSV
//   verify   run the verification battery, exit nonzero on failure
//   compare  two-path branch-discrepancy table for a generator curve
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bjorling.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct SurfaceDeleter {
    void operator()(bj_surface* s) const { bj_surface_destroy(s); }
};
struct MeshDeleter {
    void operator()(bj_mesh* m) const { bj_mesh_destroy(m); }
};
struct CurveDeleter {
    void operator()(bj_curve* c) const { bj_curve_destroy(c); }
};

using SurfacePtr = std::unique_ptr<bj_surface, SurfaceDeleter>;
using MeshPtr = std::unique_ptr<bj_mesh, MeshDeleter>;
using CurvePtr = std::unique_ptr<bj_curve, CurveDeleter>;

void report_error(const char* action, bj_status status) {
    std::fprintf(stderr, "error: %s: %s (%s)\n", action,
                 bj_last_error_message(), bj_status_name(status));
}

bool parse_grid(const std::string& text, bj_grid* grid) {
    double u0, u1, v0, v1;
    int nu, nv;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf,%d,%d", &u0, &u1, &v0, &v1,
                    &nu, &nv) != 6) {
        return false;
    }
    *grid = {u0, u1, v0, v1, nu, nv};
    return true;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct SurfaceArgs {
    std::string name;
    double a = 2.0;
    double b = 1.0;
    bool conjugate = false;
    bool naive = false;
};

void add_surface_options(CLI::App* cmd, SurfaceArgs* args) {
    cmd->add_option("name", args->name, "surface name")->required();
    cmd->add_option("--a", args->a, "first semi-axis (default 2)");
    cmd->add_option("--b", args->b, "second semi-axis (default 1)");
    cmd->add_flag("--conjugate", args->conjugate,
                  "evaluate the conjugate surface");
    cmd->add_flag("--naive", args->naive,
                  "use the path-quadrature form (reproduces the broken "
                  "figures)");
}

SurfacePtr open_surface(const SurfaceArgs& args, int* exit_code) {
    bj_surface* raw = nullptr;
    const bj_status st = bj_surface_create(args.name.c_str(), args.a, args.b,
                                           args.conjugate ? 1 : 0,
                                           args.naive ? 1 : 0, &raw);
    if (st != BJ_OK) {
        report_error("creating surface", st);
        *exit_code = kExitUsage;
        return nullptr;
    }
    return SurfacePtr(raw);
}

int run_surface(const SurfaceArgs& args, const std::string& grid_text,
                int resolution, bool quality, double step,
                const std::string& out) {
    int code = kExitOk;
    SurfacePtr surface = open_surface(args, &code);
    if (!surface) return code;

    bj_grid grid;
    if (grid_text.empty()) {
        bj_surface_recommended_grid(surface.get(), resolution, resolution,
                                    &grid);
    } else if (!parse_grid(grid_text, &grid)) {
        std::fprintf(stderr,
                     "error: --grid expects u0,u1,v0,v1,nu,nv\n");
        return kExitUsage;
    }

    bj_mesh* raw_mesh = nullptr;
    bj_status st = bj_surface_sample_grid(surface.get(), &grid,
                                          quality ? 1 : 0, step, &raw_mesh);
    if (st != BJ_OK) {
        report_error("sampling grid", st);
        return st == BJ_ERR_DOMAIN ? kExitUsage : kExitFailure;
    }
    MeshPtr mesh(raw_mesh);

    if (ends_with(out, ".obj")) {
        st = bj_mesh_export_obj(mesh.get(), out.c_str());
    } else if (ends_with(out, ".ply")) {
        st = bj_mesh_export_ply(mesh.get(), out.c_str());
    } else {
        std::fprintf(stderr, "error: --out must end in .obj or .ply\n");
        return kExitUsage;
    }
    if (st != BJ_OK) {
        report_error("writing mesh", st);
        return kExitFailure;
    }
    std::printf("%s: %lld vertices, %lld quads, %lld masked -> %s\n",
                bj_surface_name(surface.get()),
                static_cast<long long>(bj_mesh_vertex_count(mesh.get())),
                static_cast<long long>(bj_mesh_quad_count(mesh.get())),
                static_cast<long long>(bj_mesh_masked_count(mesh.get())),
                out.c_str());
    return kExitOk;
}

int run_curve(const SurfaceArgs& args, const std::string& axis_name,
              const std::string& range_text, int n, const std::string& out) {
    int code = kExitOk;
    SurfacePtr surface = open_surface(args, &code);
    if (!surface) return code;

    bj_axis axis;
    if (axis_name == "real") {
        axis = BJ_AXIS_REAL;
    } else if (axis_name == "imaginary") {
        axis = BJ_AXIS_IMAGINARY;
    } else {
        std::fprintf(stderr, "error: --axis must be real or imaginary\n");
        return kExitUsage;
    }
    double t0, t1;
    if (std::sscanf(range_text.c_str(), "%lf,%lf", &t0, &t1) != 2) {
        std::fprintf(stderr, "error: --range expects t0,t1\n");
        return kExitUsage;
    }

    bj_curve* raw = nullptr;
    bj_status st =
        bj_surface_sample_curve(surface.get(), axis, t0, t1, n, &raw);
    if (st != BJ_OK) {
        report_error("sampling curve", st);
        return st == BJ_ERR_DOMAIN ? kExitUsage : kExitFailure;
    }
    CurvePtr curve(raw);
    if (!ends_with(out, ".csv")) {
        std::fprintf(stderr, "error: --out must end in .csv\n");
        return kExitUsage;
    }
    st = bj_curve_export_csv(curve.get(), out.c_str());
    if (st != BJ_OK) {
        report_error("writing curve", st);
        return kExitFailure;
    }
    std::printf("%s: %lld samples -> %s\n", bj_surface_name(surface.get()),
                static_cast<long long>(bj_curve_point_count(curve.get())),
                out.c_str());
    return kExitOk;
}

int run_verify(const SurfaceArgs& args, const std::string& grid_text,
               int resolution, double step, double tol, bool machine) {
    int code = kExitOk;
    SurfacePtr surface = open_surface(args, &code);
    if (!surface) return code;

    bj_grid grid;
    if (grid_text.empty()) {
        bj_surface_recommended_grid(surface.get(), resolution, resolution,
                                    &grid);
    } else if (!parse_grid(grid_text, &grid)) {
        std::fprintf(stderr, "error: --grid expects u0,u1,v0,v1,nu,nv\n");
        return kExitUsage;
    }

    bj_verify_report report;
    const bj_status st =
        bj_surface_verify(surface.get(), &grid, step, &report);
    if (st != BJ_OK) {
        report_error("verifying surface", st);
        return kExitFailure;
    }
    std::vector<char> buf(bj_verify_report_format(&report, machine ? 1 : 0,
                                                  nullptr, 0) +
                          1);
    bj_verify_report_format(&report, machine ? 1 : 0, buf.data(), buf.size());
    std::fputs(buf.data(), stdout);
    if (bj_verify_report_passes(&report, tol) != 0) {
        std::printf("verdict: PASS (|H| <= %g, no sharp edge)\n", tol);
        return kExitOk;
    }
    std::printf("verdict: FAIL (|H| tolerance %g or sharp-edge threshold "
                "exceeded)\n",
                tol);
    return kExitFailure;
}

int run_compare(const std::string& curve, double a, double b,
                const std::string& endpoint_text) {
    double ex = std::nan("");
    double ey = std::nan("");
    if (!endpoint_text.empty() &&
        std::sscanf(endpoint_text.c_str(), "%lf,%lf", &ex, &ey) != 2) {
        std::fprintf(stderr, "error: --endpoint expects x,y\n");
        return kExitUsage;
    }
    double dre = 0.0, dim = 0.0;
    const bj_status st =
        bj_branch_discrepancy(curve.c_str(), a, b, ex, ey, &dre, &dim);
    if (st != BJ_OK) {
        report_error("comparing paths", st);
        return st == BJ_ERR_DOMAIN ? kExitUsage : kExitFailure;
    }
    std::printf("curve      delta_re               delta_im\n");
    std::printf("%-10s %.17g  %.17g\n", curve.c_str(), dre, dim);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal surfaces of conic generator curves: sampling, "
                 "verification and export"};
    app.require_subcommand(1);

    SurfaceArgs sargs;
    std::string grid_text;
    std::string out;
    int resolution = 64;
    bool quality = false;
    double step = 1e-4;

    CLI::App* surface = app.add_subcommand("surface", "sample a surface mesh");
    add_surface_options(surface, &sargs);
    surface->add_option("--grid", grid_text, "u0,u1,v0,v1,nu,nv");
    surface->add_option("--n", resolution,
                        "resolution for the recommended domain (default 64)");
    surface->add_flag("--quality", quality,
                      "attach per-vertex |H| as a quality channel");
    surface->add_option("--step", step, "finite-difference step");
    surface->add_option("--out", out, "output file (.obj or .ply)")
        ->required();

    SurfaceArgs cargs;
    std::string axis_name;
    std::string range_text;
    std::string curve_out;
    int samples = 200;
    CLI::App* curve = app.add_subcommand("curve", "sample an axis curve");
    add_surface_options(curve, &cargs);
    curve->add_option("--axis", axis_name, "real | imaginary")->required();
    curve->add_option("--range", range_text, "t0,t1")->required();
    curve->add_option("--n", samples, "sample count (default 200)");
    curve->add_option("--out", curve_out, "output file (.csv)")->required();

    SurfaceArgs vargs;
    std::string vgrid_text;
    int vresolution = 64;
    double vstep = 1e-4;
    double tol = 1e-3;
    bool machine = false;
    CLI::App* verify =
        app.add_subcommand("verify", "verify minimality and geodesy");
    add_surface_options(verify, &vargs);
    verify->add_option("--grid", vgrid_text, "u0,u1,v0,v1,nu,nv");
    verify->add_option("--n", vresolution,
                       "resolution for the recommended domain (default 64)");
    verify->add_option("--step", vstep, "finite-difference step");
    verify->add_option("--tol", tol, "max |H| tolerance (default 1e-3)");
    verify->add_flag("--machine", machine, "key=value output");

    std::string compare_curve;
    double ca = 2.0, cb = 1.0;
    std::string endpoint_text;
    CLI::App* compare = app.add_subcommand(
        "compare", "two-path branch discrepancy of a generator curve");
    compare->add_option("name", compare_curve, "parabola | ellipse")
        ->required();
    compare->add_option("--a", ca, "first semi-axis (default 2)");
    compare->add_option("--b", cb, "second semi-axis (default 1)");
    compare->add_option("--endpoint", endpoint_text,
                        "x,y endpoint (default: above the first branch "
                        "point)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (surface->parsed()) {
        return run_surface(sargs, grid_text, resolution, quality, step, out);
    }
    if (curve->parsed()) {
        return run_curve(cargs, axis_name, range_text, samples, curve_out);
    }
    if (verify->parsed()) {
        return run_verify(vargs, vgrid_text, vresolution, vstep, tol, machine);
    }
    if (compare->parsed()) {
        return run_compare(compare_curve, ca, cb, endpoint_text);
    }
    return kExitUsage;
}
