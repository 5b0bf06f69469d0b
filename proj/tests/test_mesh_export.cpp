#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "bjorling/export.hpp"
#include "bjorling/mesh.hpp"
#include "bjorling/verify.hpp"

using bjorling::Complex;
using bjorling::GridSpec;
using bjorling::Mesh;
using bjorling::SurfaceModel;
using bjorling::Vec3;

namespace {

SurfaceModel plane_fixture() {
    SurfaceModel s;
    s.name = "plane";
    s.evaluate = [](Complex u) {
        return Vec3{u.real(), u.imag(), 0.0};
    };
    s.recommended_domain = {0.0, 1.0, 0.0, 1.0};
    return s;
}

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

TEST_CASE("sample_grid: plane 2x2, invalid specs") {
    const Mesh mesh =
        bjorling::sample_grid(plane_fixture(), {0.0, 1.0, 0.0, 1.0, 2, 2});
    CHECK(mesh.vertices.size() == 4);
    CHECK(mesh.quads.size() == 1);
    CHECK(mesh.masked_count() == 0);

    CHECK_THROWS_AS(
        bjorling::sample_grid(plane_fixture(), {1.0, 0.0, 0.0, 1.0, 2, 2}),
        bjorling::DomainError);
    CHECK_THROWS_AS(
        bjorling::sample_grid(plane_fixture(), {0.0, 1.0, 0.0, 1.0, 1, 2}),
        bjorling::DomainError);

    SurfaceModel all_poles;
    all_poles.name = "all-poles";
    all_poles.evaluate = [](Complex z) -> Vec3 {
        throw bjorling::PoleProximityError("always", z);
    };
    CHECK_THROWS_AS(
        bjorling::sample_grid(all_poles, {0.0, 1.0, 0.0, 1.0, 2, 2}),
        bjorling::EmptyMeshError);
}

TEST_CASE("sample_grid: recommended elliptical-catenoid domain is pole-free") {
    const SurfaceModel s = bjorling::make_elliptical_catenoid(2.0, 1.0);
    const Mesh mesh =
        bjorling::sample_grid(s, bjorling::recommended_grid(s, 64, 64));
    CHECK(mesh.vertices.size() == 64 * 64);
    CHECK(mesh.masked_count() == 0);
    CHECK(mesh.quads.size() == 63 * 63);
}

TEST_CASE("sample_grid: pole-straddling grid masks nodes but still meshes") {
    const SurfaceModel s = bjorling::make_elliptical_catenoid(2.0, 1.0);
    const bjorling::Modulus& m = *s.params.modulus;
    // 5x5 grid centered on the pole at i K': the middle node is masked.
    const GridSpec grid{-m.K(), m.K(), 0.0, 2.0 * m.Kprime(), 5, 5};
    const Mesh mesh = bjorling::sample_grid(s, grid);
    CHECK(mesh.masked_count() == 1);
    CHECK(mesh.node_index(2, 2) == -1);
    CHECK(mesh.vertices.size() == 24);
    // Mask soundness: quads reference four distinct valid vertices.
    CHECK(mesh.quads.size() == 12);
    for (const auto& q : mesh.quads) {
        for (const std::int64_t v : q) {
            CHECK(v >= 0);
            CHECK(v < static_cast<std::int64_t>(mesh.vertices.size()));
        }
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                CHECK(q[i] != q[j]);
            }
        }
    }
}

TEST_CASE("surface evaluation is safe to run concurrently") {
    const SurfaceModel s = bjorling::make_elliptical_catenoid(2.0, 1.0);
    const GridSpec grid = bjorling::recommended_grid(s, 24, 24);
    const Mesh serial = bjorling::sample_grid(s, grid);

    std::vector<std::future<Vec3>> futures;
    for (int j = 0; j < grid.nv; ++j) {
        for (int i = 0; i < grid.nu; ++i) {
            const Complex z(grid.u_at(i), grid.v_at(j));
            futures.push_back(std::async(std::launch::async, [&s, z] {
                return s.evaluate(z);
            }));
        }
    }
    for (std::size_t n = 0; n < futures.size(); ++n) {
        const Vec3 p = futures[n].get();
        const Vec3 q = serial.vertices[n];
        CHECK(p[0] == q[0]);
        CHECK(p[1] == q[1]);
        CHECK(p[2] == q[2]);
    }
}

TEST_CASE("sample_curve: endpoints and parabola generator samples") {
    const SurfaceModel catalan = bjorling::make_catalan();
    const bjorling::CurveSamples c = bjorling::sample_curve(
        catalan, bjorling::CurveAxis::real, -1.0, 1.0, 3);
    REQUIRE(c.points.size() == 3);
    CHECK(c.points[0].t == -1.0);
    CHECK(c.points[1].t == 0.0);
    CHECK(c.points[2].t == 1.0);
    for (const auto& p : c.points) {
        CHECK(p.p[0] == doctest::Approx(2.0 * std::sinh(p.t)));
        CHECK(p.p[1] == doctest::Approx(std::sinh(p.t) * std::sinh(p.t)));
        CHECK(p.p[2] == 0.0);
    }

    const bjorling::CurveSamples two = bjorling::sample_curve(
        catalan, bjorling::CurveAxis::imaginary, 0.25, 0.75, 2);
    REQUIRE(two.points.size() == 2);
    CHECK(two.points.front().t == 0.25);
    CHECK(two.points.back().t == 0.75);

    // Imaginary axis of the circle surface samples a catenary.
    const bjorling::CurveSamples dual = bjorling::sample_curve(
        bjorling::make_catenoid(), bjorling::CurveAxis::imaginary, -1.0, 1.0,
        21);
    for (const auto& p : dual.points) {
        CHECK(std::abs(std::hypot(p.p[0], p.p[1]) - std::cosh(p.t)) < 1e-8);
    }

    CHECK_THROWS_AS(bjorling::sample_curve(catalan, bjorling::CurveAxis::real,
                                           0.0, 1.0, 1),
                    bjorling::DomainError);
}

TEST_CASE("export_obj: layout, precision round-trip, determinism") {
    const Mesh mesh =
        bjorling::sample_grid(plane_fixture(), {0.0, 1.0, 0.0, 1.0, 2, 2});
    const auto path = temp_file("bj_test_plane.obj");
    bjorling::export_obj(mesh, path.string());
    const std::string text = slurp(path);

    int v_lines = 0, f_lines = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("v ", 0) == 0) ++v_lines;
        if (line.rfind("f ", 0) == 0) ++f_lines;
    }
    CHECK(v_lines == 4);
    CHECK(f_lines == 1);

    // Round-trip: parsed coordinates equal the source exactly.
    std::istringstream parse(text);
    std::size_t vi = 0;
    while (std::getline(parse, line)) {
        if (line.rfind("v ", 0) != 0) continue;
        double x, y, z;
        REQUIRE(std::sscanf(line.c_str(), "v %lf %lf %lf", &x, &y, &z) == 3);
        CHECK(x == mesh.vertices[vi][0]);
        CHECK(y == mesh.vertices[vi][1]);
        CHECK(z == mesh.vertices[vi][2]);
        ++vi;
    }
    CHECK(vi == mesh.vertices.size());

    bjorling::export_obj(mesh, temp_file("bj_test_plane2.obj").string());
    CHECK(slurp(temp_file("bj_test_plane2.obj")) == text);

    CHECK_THROWS_AS(
        bjorling::export_obj(mesh, "/nonexistent-dir/mesh.obj"),
        bjorling::IoError);
}

TEST_CASE("export_ply: header counts and quality channel") {
    const SurfaceModel s = bjorling::make_catenoid();
    const GridSpec grid = bjorling::recommended_grid(s, 9, 9);
    Mesh mesh = bjorling::sample_grid(s, grid);
    bjorling::attach_mean_curvature(mesh, s, grid);
    const auto path = temp_file("bj_test_cat.ply");
    bjorling::export_ply(mesh, path.string());
    const std::string text = slurp(path);
    CHECK(text.rfind("ply\nformat ascii 1.0\n", 0) == 0);
    CHECK(text.find("element vertex 81\n") != std::string::npos);
    CHECK(text.find("element face 64\n") != std::string::npos);
    CHECK(text.find("property float quality\n") != std::string::npos);
}

TEST_CASE("export_csv: header and full-precision samples") {
    const SurfaceModel catalan = bjorling::make_catalan();
    const bjorling::CurveSamples c = bjorling::sample_curve(
        catalan, bjorling::CurveAxis::imaginary, 0.0, 3.0, 7);
    const auto path = temp_file("bj_test_dual.csv");
    bjorling::export_csv(c, path.string());
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "t,x,y,z");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        double t, x, y, z;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &x, &y, &z) ==
                4);
        CHECK(t == c.points[rows].t);
        CHECK(x == c.points[rows].p[0]);
        CHECK(y == c.points[rows].p[1]);
        CHECK(z == c.points[rows].p[2]);
        ++rows;
    }
    CHECK(rows == 7);
}
