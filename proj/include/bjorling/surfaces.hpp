#ifndef BJORLING_SURFACES_HPP
#define BJORLING_SURFACES_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "bjorling/curves.hpp"
#include "bjorling/elliptic.hpp"

namespace bjorling {

using Vec3 = std::array<double, 3>;

/// Axis-aligned rectangle in parameter space (z = u + iv).
struct Rect {
    double u_min = 0.0;
    double u_max = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
};

/// A named, parameterized immersion of a parameter rectangle into R^3.
///
/// evaluate is the real or imaginary part (per `conjugate`) of a
/// holomorphic null immersion; it throws PoleProximityError,
/// BranchProximityError or QuadratureError for parameter values it
/// cannot handle.  Values are immutable and evaluate is pure, so
/// concurrent evaluation is safe.
struct SurfaceModel {
    std::string name;
    std::function<Vec3(Complex)> evaluate;
    bool conjugate = false;

    struct Params {
        double a = 0.0;
        double b = 0.0;
        std::optional<Modulus> modulus;
    };
    Params params;

    Rect recommended_domain{};
    std::string pole_set; // human-readable description of masked values

    /// Builds the conjugate partner (same immersion, other part).
    /// Empty for ad-hoc fixtures.
    std::function<SurfaceModel()> conjugate_factory;
};

/// Integral of curve.speed along a polyline, with a branch-point
/// clearance check (kBranchEpsilon) on every segment.
Complex bjorling_path_integral(const PlaneCurveSpec& curve,
                               std::span<const Complex> path,
                               double tol = 1e-10);

/// Direct numeric evaluation of the minimal surface through `curve`:
/// Re (x(z), y(z), i * path-integral of speed).  The integrand is
/// evaluated on its principal branch, so the result is deliberately
/// path-dependent across branch cuts.
Vec3 bjorling_numeric(const PlaneCurveSpec& curve, Complex z,
                      std::span<const Complex> path, bool conjugate = false);

/// Quadrature form of the elliptical catenoid:
/// Re (b cos z, a sin z, i a integral sqrt(1 - e^2 sin^2 u) du).
/// Exhibits the branch-cut artifact on grids that cross Re z = pi/2 + m pi.
Vec3 naive_elliptic_catenoid(Complex z, double a, double b,
                             std::span<const Complex> path,
                             bool conjugate = false);

/// Catalan's surface in the entire parameterization
/// (2 sinh w, sinh^2 w, i (w + sinh w cosh w)); real w traces the
/// parabola (2t, t^2), imaginary w a cycloid.
Vec3 catalan_surface(Complex w, bool conjugate);

/// Closed-form elliptical catenoid (conjugate: elliptical helicoid):
/// (b cn(u,e), a sn(u,e), i a eps(u,e)) with e = sqrt(a^2-b^2)/a.
Vec3 elliptic_catenoid(Complex u, double a, double b, bool conjugate);

/// Minimal surface through the hyperbola branch, with k = 1/e and
/// e = sqrt(a^2+b^2)/a:
/// (b dn(u/k,k), i a k sn(u/k,k), a integral_0^u cn^2(s/k,k) ds).
/// The hyperbola lies on the imaginary parameter axis.
Vec3 hyperbola_bjorling(Complex u, double a, double b, bool conjugate);

/// Restriction of a surface to the imaginary parameter axis; for
/// surfaces of symmetric curves this traces the dual planar geodesic.
Vec3 dual_curve(const SurfaceModel& surface, double t);

// Factories for the built-in surfaces.  a/b are ignored by the catalan
// and catenoid families.
SurfaceModel make_catalan(bool conjugate = false);
SurfaceModel make_elliptical_catenoid(double a, double b,
                                      bool conjugate = false);
SurfaceModel make_hyperbola_surface(double a, double b,
                                    bool conjugate = false);
SurfaceModel make_catenoid(bool conjugate = false);
SurfaceModel make_naive_elliptical_catenoid(double a, double b,
                                            bool conjugate = false);
SurfaceModel make_naive_parabola(bool conjugate = false);

/// Name-based registry used by the C API and the CLI.  Recognized
/// names: catalan, elliptical-catenoid, elliptical-helicoid, hyperbola,
/// catenoid, helicoid.  `naive` switches catalan / elliptical-catenoid
/// to the quadrature forms.  Throws DomainError for unknown names.
SurfaceModel make_surface(const std::string& name, double a, double b,
                          bool conjugate, bool naive);

} // namespace bjorling

#endif // BJORLING_SURFACES_HPP
