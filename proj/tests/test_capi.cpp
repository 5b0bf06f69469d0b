#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "bjorling.h"

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("c api: surface lifecycle and evaluation") {
    bj_surface* s = nullptr;
    REQUIRE(bj_surface_create("elliptical-catenoid", 2.0, 1.0, 0, 0, &s) ==
            BJ_OK);
    REQUIRE(s != nullptr);
    CHECK(std::strcmp(bj_surface_name(s), "elliptical-catenoid") == 0);

    double p[3] = {0, 0, 0};
    CHECK(bj_surface_evaluate(s, 0.0, 0.0, p) == BJ_OK);
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(std::abs(p[1]) < 1e-15);
    CHECK(std::abs(p[2]) < 1e-15);

    bj_grid grid;
    CHECK(bj_surface_recommended_grid(s, 16, 16, &grid) == BJ_OK);
    CHECK(grid.nu == 16);
    CHECK(grid.u_min < grid.u_max);

    // The recommended domain stops at 0.9 K'; the pole row sits at
    // v_max / 0.9 and evaluation there reports pole proximity.
    const double pole_v = grid.v_max / 0.9;
    CHECK(bj_surface_evaluate(s, 0.0, pole_v, p) == BJ_ERR_POLE_PROXIMITY);
    CHECK(std::strlen(bj_last_error_message()) > 0);
    bj_surface_destroy(s);
}

TEST_CASE("c api: error reporting") {
    bj_surface* s = nullptr;
    CHECK(bj_surface_create("moebius", 0, 0, 0, 0, &s) == BJ_ERR_DOMAIN);
    CHECK(s == nullptr);
    CHECK(std::strlen(bj_last_error_message()) > 0);
    CHECK(bj_surface_create(nullptr, 0, 0, 0, 0, &s) ==
          BJ_ERR_INVALID_ARGUMENT);
    CHECK(std::strcmp(bj_status_name(BJ_ERR_POLE_PROXIMITY),
                      "pole proximity") == 0);
}

TEST_CASE("c api: mesh sampling and export") {
    bj_surface* s = nullptr;
    REQUIRE(bj_surface_create("catenoid", 0, 0, 0, 0, &s) == BJ_OK);
    bj_grid grid;
    bj_surface_recommended_grid(s, 12, 12, &grid);
    bj_mesh* mesh = nullptr;
    REQUIRE(bj_surface_sample_grid(s, &grid, 1, 1e-4, &mesh) == BJ_OK);
    CHECK(bj_mesh_vertex_count(mesh) == 144);
    CHECK(bj_mesh_quad_count(mesh) == 121);
    CHECK(bj_mesh_masked_count(mesh) == 0);

    double v[3];
    CHECK(bj_mesh_vertex(mesh, 0, v) == BJ_OK);
    CHECK(bj_mesh_vertex(mesh, 144, v) == BJ_ERR_INVALID_ARGUMENT);
    int64_t q[4];
    CHECK(bj_mesh_quad(mesh, 0, q) == BJ_OK);
    CHECK(q[0] >= 0);

    const auto obj_path = temp_file("bj_capi_cat.obj");
    const auto ply_path = temp_file("bj_capi_cat.ply");
    CHECK(bj_mesh_export_obj(mesh, obj_path.string().c_str()) == BJ_OK);
    CHECK(bj_mesh_export_ply(mesh, ply_path.string().c_str()) == BJ_OK);
    CHECK(slurp(ply_path).find("property float quality") != std::string::npos);
    CHECK(bj_mesh_export_obj(mesh, "/nonexistent-dir/x.obj") == BJ_ERR_IO);

    bj_mesh_destroy(mesh);
    bj_surface_destroy(s);
}

TEST_CASE("c api: curve sampling and csv export") {
    bj_surface* s = nullptr;
    REQUIRE(bj_surface_create("catalan", 0, 0, 0, 0, &s) == BJ_OK);
    bj_curve* curve = nullptr;
    REQUIRE(bj_surface_sample_curve(s, BJ_AXIS_IMAGINARY, 0.0, 3.0, 50,
                                    &curve) == BJ_OK);
    CHECK(bj_curve_point_count(curve) == 50);
    double t, p[3];
    CHECK(bj_curve_point(curve, 0, &t, p) == BJ_OK);
    CHECK(t == 0.0);
    const auto csv_path = temp_file("bj_capi_dual.csv");
    CHECK(bj_curve_export_csv(curve, csv_path.string().c_str()) == BJ_OK);
    CHECK(slurp(csv_path).rfind("t,x,y,z\n", 0) == 0);
    bj_curve_destroy(curve);
    bj_surface_destroy(s);
}

TEST_CASE("c api: verification battery and report formatting") {
    bj_surface* s = nullptr;
    REQUIRE(bj_surface_create("catalan", 0, 0, 0, 0, &s) == BJ_OK);
    bj_grid grid;
    bj_surface_recommended_grid(s, 32, 32, &grid);
    bj_verify_report rep;
    REQUIRE(bj_surface_verify(s, &grid, 1e-4, &rep) == BJ_OK);
    CHECK(rep.max_mean_curvature < 1e-3);
    CHECK(rep.grid_samples == 32 * 32);
    CHECK(bj_verify_report_passes(&rep, 1e-3) == 1);
    CHECK(bj_verify_report_passes(&rep, 1e-12) == 0);

    const size_t need = bj_verify_report_format(&rep, 1, nullptr, 0);
    CHECK(need > 0);
    std::vector<char> buf(need + 1);
    CHECK(bj_verify_report_format(&rep, 1, buf.data(), buf.size()) == need);
    CHECK(std::string(buf.data()).find("max_mean_curvature=") !=
          std::string::npos);
    bj_surface_destroy(s);
}

TEST_CASE("c api: branch discrepancy with default endpoint") {
    double dre = 0.0, dim = 0.0;
    REQUIRE(bj_branch_discrepancy("parabola", 0, 0, std::nan(""), std::nan(""),
                                  &dre, &dim) == BJ_OK);
    CHECK(std::abs(dim) < 1e-8);
    CHECK(std::abs(dre) > 0.1);
    CHECK(bj_branch_discrepancy("circle", 0, 0, std::nan(""), std::nan(""),
                                &dre, &dim) == BJ_ERR_DOMAIN);
}
