/* C API for the bjorling shared library: Jacobi-elliptic minimal
 * surfaces, grid sampling, geometry verification and mesh export.
 *
 * All objects are opaque handles created and destroyed through this
 * interface.  Functions report failure through bj_status; a
 * human-readable message for the most recent failure on the calling
 * thread is available from bj_last_error_message().
 */
#ifndef BJORLING_H
#define BJORLING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BJ_BUILD_SHARED)
#define BJ_API __declspec(dllexport)
#else
#define BJ_API __declspec(dllimport)
#endif
#elif defined(__GNUC__) || defined(__clang__)
#define BJ_API __attribute__((visibility("default")))
#else
#define BJ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bj_status {
    BJ_OK = 0,
    BJ_ERR_INVALID_ARGUMENT = 1,
    BJ_ERR_DOMAIN = 2,
    BJ_ERR_POLE_PROXIMITY = 3,
    BJ_ERR_BRANCH_PROXIMITY = 4,
    BJ_ERR_QUADRATURE = 5,
    BJ_ERR_DEGENERATE_IMMERSION = 6,
    BJ_ERR_EMPTY_MESH = 7,
    BJ_ERR_IO = 8
} bj_status;

typedef struct bj_surface bj_surface;
typedef struct bj_mesh bj_mesh;
typedef struct bj_curve bj_curve;

typedef enum bj_axis { BJ_AXIS_REAL = 0, BJ_AXIS_IMAGINARY = 1 } bj_axis;

/* Parameter rectangle z = u + iv with sample counts. */
typedef struct bj_grid {
    double u_min, u_max;
    double v_min, v_max;
    int32_t nu, nv;
} bj_grid;

typedef struct bj_verify_report {
    char surface[64];
    double max_mean_curvature;
    double max_geodesic_curvature_real;
    double max_geodesic_curvature_imag;
    double conjugate_isometry_residual;
    double max_normal_angle_deg;
    /* same statistic on a once-refined grid; a genuine sharp edge keeps
     * both above the 10-degree threshold, truncation angles halve */
    double refined_normal_angle_deg;
    int64_t grid_samples;
    int64_t masked_samples;
    int64_t curvature_samples;
} bj_verify_report;

BJ_API const char* bj_status_name(bj_status status);

/* Message for the most recent error on this thread ("" if none). */
BJ_API const char* bj_last_error_message(void);

/* Surfaces.  Names: catalan, elliptical-catenoid, elliptical-helicoid,
 * hyperbola, catenoid, helicoid.  a/b are the conic semi-axes (ignored
 * by catalan/catenoid); conjugate flips to the conjugate surface; naive
 * selects the path-quadrature form where one exists. */
BJ_API bj_status bj_surface_create(const char* name, double a, double b,
                                   int conjugate, int naive,
                                   bj_surface** out);
BJ_API void bj_surface_destroy(bj_surface* surface);
BJ_API const char* bj_surface_name(const bj_surface* surface);

/* Fills a grid covering the surface's recommended parameter domain. */
BJ_API bj_status bj_surface_recommended_grid(const bj_surface* surface,
                                             int32_t nu, int32_t nv,
                                             bj_grid* out);

/* Evaluates the immersion at u_re + i u_im. */
BJ_API bj_status bj_surface_evaluate(const bj_surface* surface, double u_re,
                                     double u_im, double out_xyz[3]);

/* Samples the surface over a grid into a masked quad mesh.  When
 * with_quality is nonzero, per-vertex |H| (finite differences with
 * quality_step) is attached as the mesh quality channel. */
BJ_API bj_status bj_surface_sample_grid(const bj_surface* surface,
                                        const bj_grid* grid, int with_quality,
                                        double quality_step, bj_mesh** out);

BJ_API void bj_mesh_destroy(bj_mesh* mesh);
BJ_API int64_t bj_mesh_vertex_count(const bj_mesh* mesh);
BJ_API int64_t bj_mesh_quad_count(const bj_mesh* mesh);
BJ_API int64_t bj_mesh_masked_count(const bj_mesh* mesh);
BJ_API bj_status bj_mesh_vertex(const bj_mesh* mesh, int64_t index,
                                double out_xyz[3]);
BJ_API bj_status bj_mesh_quad(const bj_mesh* mesh, int64_t index,
                              int64_t out_indices[4]);
BJ_API bj_status bj_mesh_export_obj(const bj_mesh* mesh, const char* path);
BJ_API bj_status bj_mesh_export_ply(const bj_mesh* mesh, const char* path);

/* Samples the generator (real axis) or dual (imaginary axis) curve. */
BJ_API bj_status bj_surface_sample_curve(const bj_surface* surface,
                                         bj_axis axis, double t_min,
                                         double t_max, int32_t n,
                                         bj_curve** out);
BJ_API void bj_curve_destroy(bj_curve* curve);
BJ_API int64_t bj_curve_point_count(const bj_curve* curve);
BJ_API bj_status bj_curve_point(const bj_curve* curve, int64_t index,
                                double* out_t, double out_xyz[3]);
BJ_API bj_status bj_curve_export_csv(const bj_curve* curve, const char* path);

/* Runs the verification battery (mean curvature, geodesic curvature of
 * the axis curves, conjugate isometry, sharp-edge statistic). */
BJ_API bj_status bj_surface_verify(const bj_surface* surface,
                                   const bj_grid* grid, double step,
                                   bj_verify_report* out);

/* Formats a report; machine_format selects key=value lines.  Returns the
 * full length (snprintf semantics). */
BJ_API size_t bj_verify_report_format(const bj_verify_report* report,
                                      int machine_format, char* buf,
                                      size_t cap);

/* Nonzero when the report is within tolerance: max |H| <= h_tol and no
 * sharp edge. */
BJ_API int bj_verify_report_passes(const bj_verify_report* report,
                                   double h_tol);

/* Integrates the arc-length density of the named generator curve
 * ("parabola" or "ellipse") along canonical paths passing left and right
 * of a branch point, to the same endpoint.  Reports the two-path
 * difference; pass (nan, nan) as the endpoint for the built-in default. */
BJ_API bj_status bj_branch_discrepancy(const char* curve, double a, double b,
                                       double end_re, double end_im,
                                       double* delta_re, double* delta_im);

#ifdef __cplusplus
}
#endif

#endif /* BJORLING_H */
