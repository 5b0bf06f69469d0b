#include "bjorling.h"

#include <cmath>
#include <cstring>
#include <string>

#include "bjorling/export.hpp"
#include "bjorling/mesh.hpp"
#include "bjorling/surfaces.hpp"
#include "bjorling/verify.hpp"

struct bj_surface {
    bjorling::SurfaceModel model;
};

struct bj_mesh {
    bjorling::Mesh mesh;
};

struct bj_curve {
    bjorling::CurveSamples samples;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs fn, translating the C++ error hierarchy into status codes.
template <typename Fn>
bj_status guarded(Fn&& fn) {
    try {
        fn();
        return BJ_OK;
    } catch (const bjorling::PoleProximityError& e) {
        set_error(e.what());
        return BJ_ERR_POLE_PROXIMITY;
    } catch (const bjorling::BranchProximityError& e) {
        set_error(e.what());
        return BJ_ERR_BRANCH_PROXIMITY;
    } catch (const bjorling::QuadratureError& e) {
        set_error(e.what());
        return BJ_ERR_QUADRATURE;
    } catch (const bjorling::DegenerateImmersionError& e) {
        set_error(e.what());
        return BJ_ERR_DEGENERATE_IMMERSION;
    } catch (const bjorling::EmptyMeshError& e) {
        set_error(e.what());
        return BJ_ERR_EMPTY_MESH;
    } catch (const bjorling::IoError& e) {
        set_error(e.what());
        return BJ_ERR_IO;
    } catch (const bjorling::DomainError& e) {
        set_error(e.what());
        return BJ_ERR_DOMAIN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return BJ_ERR_INVALID_ARGUMENT;
    }
}

bjorling::GridSpec to_grid(const bj_grid& g) {
    return {g.u_min, g.u_max, g.v_min, g.v_max, g.nu, g.nv};
}

} // namespace

extern "C" {

const char* bj_status_name(bj_status status) {
    switch (status) {
        case BJ_OK: return "ok";
        case BJ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BJ_ERR_DOMAIN: return "domain error";
        case BJ_ERR_POLE_PROXIMITY: return "pole proximity";
        case BJ_ERR_BRANCH_PROXIMITY: return "branch proximity";
        case BJ_ERR_QUADRATURE: return "quadrature failure";
        case BJ_ERR_DEGENERATE_IMMERSION: return "degenerate immersion";
        case BJ_ERR_EMPTY_MESH: return "empty mesh";
        case BJ_ERR_IO: return "io error";
    }
    return "unknown";
}

const char* bj_last_error_message(void) { return g_last_error.c_str(); }

bj_status bj_surface_create(const char* name, double a, double b,
                            int conjugate, int naive, bj_surface** out) {
    if (name == nullptr || out == nullptr) {
        set_error("bj_surface_create: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto* s = new bj_surface{
            bjorling::make_surface(name, a, b, conjugate != 0, naive != 0)};
        *out = s;
    });
}

void bj_surface_destroy(bj_surface* surface) { delete surface; }

const char* bj_surface_name(const bj_surface* surface) {
    return surface ? surface->model.name.c_str() : "";
}

bj_status bj_surface_recommended_grid(const bj_surface* surface, int32_t nu,
                                      int32_t nv, bj_grid* out) {
    if (surface == nullptr || out == nullptr) {
        set_error("bj_surface_recommended_grid: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    const bjorling::Rect& r = surface->model.recommended_domain;
    *out = {r.u_min, r.u_max, r.v_min, r.v_max, nu, nv};
    return BJ_OK;
}

bj_status bj_surface_evaluate(const bj_surface* surface, double u_re,
                              double u_im, double out_xyz[3]) {
    if (surface == nullptr || out_xyz == nullptr) {
        set_error("bj_surface_evaluate: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const bjorling::Vec3 p =
            surface->model.evaluate(bjorling::Complex(u_re, u_im));
        out_xyz[0] = p[0];
        out_xyz[1] = p[1];
        out_xyz[2] = p[2];
    });
}

bj_status bj_surface_sample_grid(const bj_surface* surface,
                                 const bj_grid* grid, int with_quality,
                                 double quality_step, bj_mesh** out) {
    if (surface == nullptr || grid == nullptr || out == nullptr) {
        set_error("bj_surface_sample_grid: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        const bjorling::GridSpec g = to_grid(*grid);
        auto* m = new bj_mesh{bjorling::sample_grid(surface->model, g)};
        if (with_quality != 0) {
            bjorling::attach_mean_curvature(m->mesh, surface->model, g,
                                            quality_step > 0.0
                                                ? quality_step
                                                : bjorling::kVerifyStep);
        }
        *out = m;
    });
}

void bj_mesh_destroy(bj_mesh* mesh) { delete mesh; }

int64_t bj_mesh_vertex_count(const bj_mesh* mesh) {
    return mesh ? static_cast<int64_t>(mesh->mesh.vertices.size()) : 0;
}

int64_t bj_mesh_quad_count(const bj_mesh* mesh) {
    return mesh ? static_cast<int64_t>(mesh->mesh.quads.size()) : 0;
}

int64_t bj_mesh_masked_count(const bj_mesh* mesh) {
    return mesh ? static_cast<int64_t>(mesh->mesh.masked_count()) : 0;
}

bj_status bj_mesh_vertex(const bj_mesh* mesh, int64_t index,
                         double out_xyz[3]) {
    if (mesh == nullptr || out_xyz == nullptr || index < 0 ||
        index >= bj_mesh_vertex_count(mesh)) {
        set_error("bj_mesh_vertex: bad handle or index");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    const bjorling::Vec3& v =
        mesh->mesh.vertices[static_cast<std::size_t>(index)];
    out_xyz[0] = v[0];
    out_xyz[1] = v[1];
    out_xyz[2] = v[2];
    return BJ_OK;
}

bj_status bj_mesh_quad(const bj_mesh* mesh, int64_t index,
                       int64_t out_indices[4]) {
    if (mesh == nullptr || out_indices == nullptr || index < 0 ||
        index >= bj_mesh_quad_count(mesh)) {
        set_error("bj_mesh_quad: bad handle or index");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    const auto& q = mesh->mesh.quads[static_cast<std::size_t>(index)];
    for (int i = 0; i < 4; ++i) out_indices[i] = q[i];
    return BJ_OK;
}

bj_status bj_mesh_export_obj(const bj_mesh* mesh, const char* path) {
    if (mesh == nullptr || path == nullptr) {
        set_error("bj_mesh_export_obj: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { bjorling::export_obj(mesh->mesh, path); });
}

bj_status bj_mesh_export_ply(const bj_mesh* mesh, const char* path) {
    if (mesh == nullptr || path == nullptr) {
        set_error("bj_mesh_export_ply: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { bjorling::export_ply(mesh->mesh, path); });
}

bj_status bj_surface_sample_curve(const bj_surface* surface, bj_axis axis,
                                  double t_min, double t_max, int32_t n,
                                  bj_curve** out) {
    if (surface == nullptr || out == nullptr) {
        set_error("bj_surface_sample_curve: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto* c = new bj_curve{bjorling::sample_curve(
            surface->model,
            axis == BJ_AXIS_REAL ? bjorling::CurveAxis::real
                                 : bjorling::CurveAxis::imaginary,
            t_min, t_max, n)};
        *out = c;
    });
}

void bj_curve_destroy(bj_curve* curve) { delete curve; }

int64_t bj_curve_point_count(const bj_curve* curve) {
    return curve ? static_cast<int64_t>(curve->samples.points.size()) : 0;
}

bj_status bj_curve_point(const bj_curve* curve, int64_t index, double* out_t,
                         double out_xyz[3]) {
    if (curve == nullptr || out_t == nullptr || out_xyz == nullptr ||
        index < 0 || index >= bj_curve_point_count(curve)) {
        set_error("bj_curve_point: bad handle or index");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    const bjorling::CurveSample& s =
        curve->samples.points[static_cast<std::size_t>(index)];
    *out_t = s.t;
    out_xyz[0] = s.p[0];
    out_xyz[1] = s.p[1];
    out_xyz[2] = s.p[2];
    return BJ_OK;
}

bj_status bj_curve_export_csv(const bj_curve* curve, const char* path) {
    if (curve == nullptr || path == nullptr) {
        set_error("bj_curve_export_csv: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { bjorling::export_csv(curve->samples, path); });
}

bj_status bj_surface_verify(const bj_surface* surface, const bj_grid* grid,
                            double step, bj_verify_report* out) {
    if (surface == nullptr || grid == nullptr || out == nullptr) {
        set_error("bj_surface_verify: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const bjorling::VerificationReport rep = bjorling::verify_surface(
            surface->model, to_grid(*grid),
            step > 0.0 ? step : bjorling::kVerifyStep);
        *out = bj_verify_report{};
        std::strncpy(out->surface, rep.surface.c_str(),
                     sizeof out->surface - 1);
        out->max_mean_curvature = rep.max_mean_curvature;
        out->max_geodesic_curvature_real = rep.max_geodesic_curvature_real;
        out->max_geodesic_curvature_imag = rep.max_geodesic_curvature_imag;
        out->conjugate_isometry_residual = rep.conjugate_isometry;
        out->max_normal_angle_deg = rep.max_normal_angle_deg;
        out->refined_normal_angle_deg = rep.refined_normal_angle_deg;
        out->grid_samples = static_cast<int64_t>(rep.grid_samples);
        out->masked_samples = static_cast<int64_t>(rep.masked_samples);
        out->curvature_samples = static_cast<int64_t>(rep.curvature_samples);
    });
}

size_t bj_verify_report_format(const bj_verify_report* report,
                               int machine_format, char* buf, size_t cap) {
    if (report == nullptr) return 0;
    bjorling::VerificationReport rep;
    rep.surface = report->surface;
    rep.max_mean_curvature = report->max_mean_curvature;
    rep.max_geodesic_curvature_real = report->max_geodesic_curvature_real;
    rep.max_geodesic_curvature_imag = report->max_geodesic_curvature_imag;
    rep.conjugate_isometry = report->conjugate_isometry_residual;
    rep.max_normal_angle_deg = report->max_normal_angle_deg;
    rep.refined_normal_angle_deg = report->refined_normal_angle_deg;
    rep.grid_samples = static_cast<std::size_t>(report->grid_samples);
    rep.masked_samples = static_cast<std::size_t>(report->masked_samples);
    rep.curvature_samples = static_cast<std::size_t>(report->curvature_samples);
    const std::string text =
        machine_format != 0 ? rep.to_key_value() : rep.to_text();
    if (buf != nullptr && cap > 0) {
        const size_t n = text.size() < cap - 1 ? text.size() : cap - 1;
        std::memcpy(buf, text.data(), n);
        buf[n] = '\0';
    }
    return text.size();
}

int bj_verify_report_passes(const bj_verify_report* report, double h_tol) {
    if (report == nullptr) return 0;
    const double stable_angle = report->max_normal_angle_deg <
                                        report->refined_normal_angle_deg
                                    ? report->max_normal_angle_deg
                                    : report->refined_normal_angle_deg;
    return report->max_mean_curvature <= h_tol &&
                   stable_angle <= bjorling::kSharpEdgeDegrees
               ? 1
               : 0;
}

bj_status bj_branch_discrepancy(const char* curve, double a, double b,
                                double end_re, double end_im,
                                double* delta_re, double* delta_im) {
    if (curve == nullptr || delta_re == nullptr || delta_im == nullptr) {
        set_error("bj_branch_discrepancy: null argument");
        return BJ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        bjorling::Complex endpoint(end_re, end_im);
        if (std::isnan(end_re) || std::isnan(end_im)) {
            endpoint = bjorling::default_discrepancy_endpoint(curve, a, b);
        }
        const bjorling::Discrepancy d =
            bjorling::branch_discrepancy_canonical(curve, a, b, endpoint);
        *delta_re = d.delta_re;
        *delta_im = d.delta_im;
    });
}

} // extern "C"
