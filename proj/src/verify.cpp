#include "bjorling/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace bjorling {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct FirstOrder {
    Vec3 xu;
    Vec3 xv;
};

FirstOrder first_partials(const SurfaceModel& s, Complex u, double h) {
    const Vec3 pu1 = s.evaluate(u + Complex(h, 0.0));
    const Vec3 pu0 = s.evaluate(u - Complex(h, 0.0));
    const Vec3 pv1 = s.evaluate(u + Complex(0.0, h));
    const Vec3 pv0 = s.evaluate(u - Complex(0.0, h));
    return {scale(sub(pu1, pu0), 0.5 / h), scale(sub(pv1, pv0), 0.5 / h)};
}

} // namespace

FundamentalForms fundamental_forms(const SurfaceModel& surface, Complex u,
                                   double step) {
    if (!(step > 0.0)) throw DomainError("fundamental_forms: step must be > 0");
    const double h = step;
    const Vec3 c = surface.evaluate(u);
    const Vec3 pu1 = surface.evaluate(u + Complex(h, 0.0));
    const Vec3 pu0 = surface.evaluate(u - Complex(h, 0.0));
    const Vec3 pv1 = surface.evaluate(u + Complex(0.0, h));
    const Vec3 pv0 = surface.evaluate(u - Complex(0.0, h));
    const Vec3 ppp = surface.evaluate(u + Complex(h, h));
    const Vec3 ppm = surface.evaluate(u + Complex(h, -h));
    const Vec3 pmp = surface.evaluate(u + Complex(-h, h));
    const Vec3 pmm = surface.evaluate(u + Complex(-h, -h));

    const Vec3 xu = scale(sub(pu1, pu0), 0.5 / h);
    const Vec3 xv = scale(sub(pv1, pv0), 0.5 / h);
    const Vec3 xuu = scale(sub(sub(pu1, scale(c, 2.0)), scale(pu0, -1.0)),
                           1.0 / (h * h));
    const Vec3 xvv = scale(sub(sub(pv1, scale(c, 2.0)), scale(pv0, -1.0)),
                           1.0 / (h * h));
    const Vec3 xuv = scale(sub(sub(ppp, ppm), sub(pmp, pmm)),
                           0.25 / (h * h));

    const double E = dot(xu, xu);
    const double F = dot(xu, xv);
    const double G = dot(xv, xv);
    const double det = E * G - F * F;
    if (det < 1e-14) {
        throw DegenerateImmersionError(
            "fundamental_forms: immersion degenerate (EG - F^2 ~ 0)");
    }
    Vec3 n = cross(xu, xv);
    n = scale(n, 1.0 / norm(n));
    return {E, F, G, dot(xuu, n), dot(xuv, n), dot(xvv, n), u, step};
}

double mean_curvature(const SurfaceModel& surface, Complex u, double step) {
    const FundamentalForms f = fundamental_forms(surface, u, step);
    return (f.E * f.N - 2.0 * f.F * f.M + f.G * f.L) /
           (2.0 * (f.E * f.G - f.F * f.F));
}

double geodesic_curvature(const SurfaceModel& surface, CurveAxis axis,
                          double t, double step) {
    const auto at = [&](double s) {
        return axis == CurveAxis::real ? Complex(s, 0.0) : Complex(0.0, s);
    };
    const Vec3 p0 = surface.evaluate(at(t - step));
    const Vec3 p1 = surface.evaluate(at(t));
    const Vec3 p2 = surface.evaluate(at(t + step));
    const Vec3 vel = scale(sub(p2, p0), 0.5 / step);
    const Vec3 acc = scale(sub(sub(p2, scale(p1, 2.0)), scale(p0, -1.0)),
                           1.0 / (step * step));
    const double speed2 = dot(vel, vel);
    if (speed2 < 1e-14) {
        throw DegenerateImmersionError(
            "geodesic_curvature: curve not immersed at this parameter");
    }
    const FirstOrder d = first_partials(surface, at(t), step);
    Vec3 n = cross(d.xu, d.xv);
    const double nn = norm(n);
    if (nn < 1e-14) {
        throw DegenerateImmersionError(
            "geodesic_curvature: surface normal degenerate");
    }
    n = scale(n, 1.0 / nn);
    const Vec3 tangent = scale(vel, 1.0 / std::sqrt(speed2));
    const Vec3 side = cross(n, tangent);
    return std::abs(dot(acc, side)) / speed2;
}

double max_axis_geodesic_curvature(const SurfaceModel& surface, CurveAxis axis,
                                   double lo, double hi, int n, double step) {
    const double margin = 0.05 * (hi - lo);
    const Complex dt = axis == CurveAxis::real ? Complex(step, 0.0)
                                               : Complex(0.0, step);
    std::vector<double> ts, speeds;
    for (int i = 0; i < n; ++i) {
        const double t = lo + margin + (hi - lo - 2 * margin) * i / (n - 1.0);
        const Complex z =
            axis == CurveAxis::real ? Complex(t, 0.0) : Complex(0.0, t);
        try {
            const Vec3 p0 = surface.evaluate(z - dt);
            const Vec3 p1 = surface.evaluate(z + dt);
            ts.push_back(t);
            speeds.push_back(norm(scale(sub(p1, p0), 0.5 / step)));
        } catch (const Error&) {
        }
    }
    const double vmax =
        speeds.empty() ? 0.0
                       : *std::max_element(speeds.begin(), speeds.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (speeds[i] < 0.05 * vmax) continue;
        try {
            worst =
                std::max(worst, geodesic_curvature(surface, axis, ts[i], step));
        } catch (const Error&) {
        }
    }
    return worst;
}

double conjugate_isometry_residual(const SurfaceModel& primary,
                                   const SurfaceModel& conjugate, Rect region,
                                   double step, int nu, int nv) {
    double worst = 0.0;
    for (int j = 0; j < nv; ++j) {
        for (int i = 0; i < nu; ++i) {
            const Complex u(
                region.u_min + (region.u_max - region.u_min) * i / (nu - 1.0),
                region.v_min + (region.v_max - region.v_min) * j / (nv - 1.0));
            try {
                const FirstOrder a = first_partials(primary, u, step);
                const FirstOrder b = first_partials(conjugate, u, step);
                const double ea = dot(a.xu, a.xu), fa = dot(a.xu, a.xv),
                             ga = dot(a.xv, a.xv);
                const double eb = dot(b.xu, b.xu), fb = dot(b.xu, b.xv),
                             gb = dot(b.xv, b.xv);
                const double local = 0.5 * (ea + ga);
                if (local < 1e-14) continue;
                const double r = (std::abs(ea - eb) + std::abs(fa - fb) +
                                  std::abs(ga - gb)) /
                                 local;
                worst = std::max(worst, r);
            } catch (const Error&) {
            }
        }
    }
    return worst;
}

Discrepancy branch_discrepancy(const PlaneCurveSpec& curve, Complex endpoint,
                               std::span<const Complex> path_a,
                               std::span<const Complex> path_b) {
    if (path_a.empty() || path_b.empty() ||
        std::abs(path_a.back() - endpoint) > 1e-12 ||
        std::abs(path_b.back() - endpoint) > 1e-12) {
        throw DomainError("branch_discrepancy: paths must end at the endpoint");
    }
    const Complex ia = bjorling_path_integral(curve, path_a);
    const Complex ib = bjorling_path_integral(curve, path_b);
    const Complex d = ia - ib;
    return {d.real(), d.imag()};
}

Complex default_discrepancy_endpoint(const std::string& curve_name, double a,
                                     double b) {
    if (curve_name == "parabola") return {0.0, 2.0};
    if (curve_name == "ellipse") {
        const double e = ellipse_eccentricity(a, b);
        return {1.5707963267948966, std::acosh(1.0 / e) + 0.6};
    }
    throw DomainError("no canonical branch comparison for curve " + curve_name);
}

Discrepancy branch_discrepancy_canonical(const std::string& curve_name,
                                         double a, double b,
                                         Complex endpoint) {
    PlaneCurveSpec curve;
    double branch_x = 0.0;
    double detour = 0.0;
    if (curve_name == "parabola") {
        curve = parabola_curve();
        branch_x = 0.0;
        detour = 1.0;
    } else if (curve_name == "ellipse") {
        curve = ellipse_curve(a, b);
        branch_x = 1.5707963267948966;
        detour = 0.8;
    } else {
        throw DomainError("no canonical branch comparison for curve " +
                          curve_name);
    }
    const double ye = endpoint.imag();
    const std::array<Complex, 4> left{Complex(0.0, 0.0),
                                      Complex(branch_x - detour, 0.0),
                                      Complex(branch_x - detour, ye), endpoint};
    const std::array<Complex, 4> right{Complex(0.0, 0.0),
                                       Complex(branch_x + detour, 0.0),
                                       Complex(branch_x + detour, ye),
                                       endpoint};
    return branch_discrepancy(curve, endpoint, left, right);
}

namespace {

// Facet normal of cell (i,j) from the diagonal cross product, or nothing
// when the cell is incomplete or degenerate.
std::optional<Vec3> cell_normal(const Mesh& mesh, int i, int j) {
    const std::int64_t v00 = mesh.node_index(i, j);
    const std::int64_t v10 = mesh.node_index(i + 1, j);
    const std::int64_t v11 = mesh.node_index(i + 1, j + 1);
    const std::int64_t v01 = mesh.node_index(i, j + 1);
    if (v00 < 0 || v10 < 0 || v11 < 0 || v01 < 0) return std::nullopt;
    const Vec3 d1 = sub(mesh.vertices[static_cast<std::size_t>(v11)],
                        mesh.vertices[static_cast<std::size_t>(v00)]);
    const Vec3 d2 = sub(mesh.vertices[static_cast<std::size_t>(v01)],
                        mesh.vertices[static_cast<std::size_t>(v10)]);
    Vec3 n = cross(d1, d2);
    const double len = norm(n);
    if (len < 1e-300) return std::nullopt;
    return scale(n, 1.0 / len);
}

} // namespace

double max_adjacent_normal_angle_deg(const Mesh& mesh) {
    const int cu = mesh.nu - 1;
    const int cv = mesh.nv - 1;
    std::vector<std::optional<Vec3>> normals(
        static_cast<std::size_t>(cu) * static_cast<std::size_t>(cv));
    for (int j = 0; j < cv; ++j) {
        for (int i = 0; i < cu; ++i) {
            normals[static_cast<std::size_t>(j) * cu + i] =
                cell_normal(mesh, i, j);
        }
    }
    double worst = 0.0;
    const auto angle = [](const Vec3& a, const Vec3& b) {
        const double c = std::clamp(dot(a, b), -1.0, 1.0);
        return std::acos(c) * 180.0 / 3.14159265358979323846;
    };
    for (int j = 0; j < cv; ++j) {
        for (int i = 0; i < cu; ++i) {
            const auto& n0 = normals[static_cast<std::size_t>(j) * cu + i];
            if (!n0) continue;
            if (i + 1 < cu) {
                const auto& nr = normals[static_cast<std::size_t>(j) * cu + i + 1];
                if (nr) worst = std::max(worst, angle(*n0, *nr));
            }
            if (j + 1 < cv) {
                const auto& nt =
                    normals[(static_cast<std::size_t>(j) + 1) * cu + i];
                if (nt) worst = std::max(worst, angle(*n0, *nt));
            }
        }
    }
    return worst;
}

void attach_mean_curvature(Mesh& mesh, const SurfaceModel& surface,
                           const GridSpec& grid, double step) {
    mesh.quality.assign(mesh.vertices.size(), 0.0);
    for (int j = 0; j < grid.nv; ++j) {
        for (int i = 0; i < grid.nu; ++i) {
            const std::int64_t v = mesh.node_index(i, j);
            if (v < 0) continue;
            try {
                const double h = mean_curvature(
                    surface, Complex(grid.u_at(i), grid.v_at(j)), step);
                mesh.quality[static_cast<std::size_t>(v)] = std::abs(h);
            } catch (const Error&) {
            }
        }
    }
}

bool VerificationReport::sharp_edge() const {
    return std::min(max_normal_angle_deg, refined_normal_angle_deg) >
           kSharpEdgeDegrees;
}

bool VerificationReport::passes(double h_tol) const {
    return max_mean_curvature <= h_tol && !sharp_edge();
}

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

} // namespace

std::string VerificationReport::to_text() const {
    std::string out;
    out += "surface: " + surface + "\n";
    out += "max |H| over interior grid: " + fmt("%.6e", max_mean_curvature) +
           "  (" + std::to_string(curvature_samples) + " samples)\n";
    out += "max |kappa_g|, real axis:   " +
           fmt("%.6e", max_geodesic_curvature_real) + "\n";
    out += "max |kappa_g|, imag axis:   " +
           fmt("%.6e", max_geodesic_curvature_imag) + "\n";
    out += "conjugate isometry residual: " + fmt("%.6e", conjugate_isometry) +
           "\n";
    out += "max adjacent normal angle:  " + fmt("%.4f", max_normal_angle_deg) +
           " deg (" + fmt("%.4f", refined_normal_angle_deg) +
           " deg after refinement)\n";
    out += "grid samples: " + std::to_string(grid_samples) +
           ", masked: " + std::to_string(masked_samples) + "\n";
    return out;
}

std::string VerificationReport::to_key_value() const {
    std::string out;
    out += "surface=" + surface + "\n";
    out += "max_mean_curvature=" + fmt("%.17g", max_mean_curvature) + "\n";
    out += "max_geodesic_curvature_real=" +
           fmt("%.17g", max_geodesic_curvature_real) + "\n";
    out += "max_geodesic_curvature_imag=" +
           fmt("%.17g", max_geodesic_curvature_imag) + "\n";
    out += "conjugate_isometry_residual=" + fmt("%.17g", conjugate_isometry) +
           "\n";
    out += "max_normal_angle_deg=" + fmt("%.17g", max_normal_angle_deg) + "\n";
    out += "refined_normal_angle_deg=" + fmt("%.17g", refined_normal_angle_deg) +
           "\n";
    out += "grid_samples=" + std::to_string(grid_samples) + "\n";
    out += "masked_samples=" + std::to_string(masked_samples) + "\n";
    out += "curvature_samples=" + std::to_string(curvature_samples) + "\n";
    return out;
}

VerificationReport verify_surface(const SurfaceModel& surface,
                                  const GridSpec& grid, double step) {
    VerificationReport rep;
    rep.surface = surface.name;

    const Mesh mesh = sample_grid(surface, grid);
    rep.grid_samples =
        static_cast<std::size_t>(grid.nu) * static_cast<std::size_t>(grid.nv);
    rep.masked_samples = mesh.masked_count();
    rep.max_normal_angle_deg = max_adjacent_normal_angle_deg(mesh);
    GridSpec refined = grid;
    refined.nu = 2 * grid.nu - 1;
    refined.nv = 2 * grid.nv - 1;
    rep.refined_normal_angle_deg =
        max_adjacent_normal_angle_deg(sample_grid(surface, refined));

    // |H| over a 20x20 strictly interior sub-grid.
    constexpr int kCurv = 20;
    for (int j = 1; j <= kCurv; ++j) {
        for (int i = 1; i <= kCurv; ++i) {
            const Complex u(
                grid.u_min + (grid.u_max - grid.u_min) * i / (kCurv + 1.0),
                grid.v_min + (grid.v_max - grid.v_min) * j / (kCurv + 1.0));
            try {
                const double h = std::abs(mean_curvature(surface, u, step));
                rep.max_mean_curvature = std::max(rep.max_mean_curvature, h);
                ++rep.curvature_samples;
            } catch (const Error&) {
            }
        }
    }

    rep.max_geodesic_curvature_real = max_axis_geodesic_curvature(
        surface, CurveAxis::real, grid.u_min, grid.u_max, 25, step);
    rep.max_geodesic_curvature_imag = max_axis_geodesic_curvature(
        surface, CurveAxis::imaginary, grid.v_min, grid.v_max, 25, step);

    if (surface.conjugate_factory) {
        const SurfaceModel partner = surface.conjugate_factory();
        const double cu = 0.5 * (grid.u_min + grid.u_max);
        const double cv = 0.5 * (grid.v_min + grid.v_max);
        const double hu = 0.3 * (grid.u_max - grid.u_min);
        const double hv = 0.3 * (grid.v_max - grid.v_min);
        rep.conjugate_isometry = conjugate_isometry_residual(
            surface, partner, {cu - hu, cu + hu, cv - hv, cv + hv}, step);
    }
    return rep;
}

} // namespace bjorling
