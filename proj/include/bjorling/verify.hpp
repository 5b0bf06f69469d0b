#ifndef BJORLING_VERIFY_HPP
#define BJORLING_VERIFY_HPP

#include <span>
#include <string>

#include "bjorling/curves.hpp"
#include "bjorling/mesh.hpp"
#include "bjorling/surfaces.hpp"

namespace bjorling {

/// Default finite-difference step in parameter units.
inline constexpr double kVerifyStep = 1e-4;

/// Adjacent-facet normal angle above which a mesh is flagged as carrying
/// a sharp edge (degrees).
inline constexpr double kSharpEdgeDegrees = 10.0;

/// First and second fundamental form coefficients at one parameter
/// point, estimated by central differences with the given step.
struct FundamentalForms {
    double E, F, G; // first form
    double L, M, N; // second form
    Complex at;
    double step;
};

/// Central-difference fundamental forms.  Throws
/// DegenerateImmersionError when EG - F^2 < 1e-14.
FundamentalForms fundamental_forms(const SurfaceModel& surface, Complex u,
                                   double step = kVerifyStep);

/// Mean curvature H = (EN - 2FM + GL) / (2 (EG - F^2)).  The sign is not
/// normalized; compare |H|.
double mean_curvature(const SurfaceModel& surface, Complex u,
                      double step = kVerifyStep);

/// In-surface (tangential, transverse) component of the acceleration of
/// the real- or imaginary-axis parameter curve, per unit speed squared.
/// Near zero certifies the curve as a geodesic.
double geodesic_curvature(const SurfaceModel& surface, CurveAxis axis,
                          double t, double step = kVerifyStep);

/// Largest geodesic curvature along an axis curve over [lo, hi], sampled
/// at n points.  Points where the curve is nearly stationary (cycloid
/// cusps, branch points of the immersion) are skipped via a relative
/// speed floor, as are points the surface cannot evaluate.
double max_axis_geodesic_curvature(const SurfaceModel& surface, CurveAxis axis,
                                   double lo, double hi, int n = 25,
                                   double step = kVerifyStep);

/// Max over a grid of the first-fundamental-form mismatch between a
/// surface and its conjugate, relative to the local metric scale.
double conjugate_isometry_residual(const SurfaceModel& primary,
                                   const SurfaceModel& conjugate, Rect region,
                                   double step = kVerifyStep, int nu = 15,
                                   int nv = 15);

/// Difference of two path integrals of the curve speed (A minus B).
struct Discrepancy {
    double delta_re;
    double delta_im;
};

/// Integrates curve.speed along both paths to the same endpoint and
/// returns the difference.  Across a branch cut the real parts disagree
/// while the imaginary parts match.
Discrepancy branch_discrepancy(const PlaneCurveSpec& curve, Complex endpoint,
                               std::span<const Complex> path_a,
                               std::span<const Complex> path_b);

/// Canonical two-path comparison for the built-in curves ("parabola" or
/// "ellipse"): detour paths passing left and right of the first branch
/// point above the real axis.  Default endpoint: 2i for the parabola,
/// pi/2 + i(acosh(1/e) + 0.6) for the ellipse.
Discrepancy branch_discrepancy_canonical(const std::string& curve_name,
                                         double a, double b,
                                         Complex endpoint);
Complex default_discrepancy_endpoint(const std::string& curve_name, double a,
                                     double b);

/// Largest angle (degrees) between normals of grid-adjacent quads.
double max_adjacent_normal_angle_deg(const Mesh& mesh);

/// Attaches per-vertex |H| as the mesh quality channel.  Nodes where the
/// estimate fails get 0.
void attach_mean_curvature(Mesh& mesh, const SurfaceModel& surface,
                           const GridSpec& grid, double step = kVerifyStep);

/// Aggregate verification result for one surface.
struct VerificationReport {
    std::string surface;
    double max_mean_curvature = 0.0;
    double max_geodesic_curvature_real = 0.0;
    double max_geodesic_curvature_imag = 0.0;
    double conjugate_isometry = 0.0;
    double max_normal_angle_deg = 0.0;
    // Same statistic on a once-refined grid.  Truncation angles of a
    // smooth surface halve under refinement; a genuine edge persists.
    double refined_normal_angle_deg = 0.0;
    std::size_t grid_samples = 0;
    std::size_t masked_samples = 0;
    std::size_t curvature_samples = 0;

    /// True when the sharp-edge angle survives grid refinement.
    bool sharp_edge() const;
    bool passes(double h_tol) const;
    std::string to_text() const;
    std::string to_key_value() const;
};

/// Runs the full check battery: |H| over a 20x20 interior grid, geodesic
/// curvature along both parameter axes, conjugate isometry residual and
/// the sharp-edge statistic of the sampled mesh.
VerificationReport verify_surface(const SurfaceModel& surface,
                                  const GridSpec& grid,
                                  double step = kVerifyStep);

} // namespace bjorling

#endif // BJORLING_VERIFY_HPP
