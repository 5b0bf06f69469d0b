#ifndef BJORLING_CURVES_HPP
#define BJORLING_CURVES_HPP

#include <functional>
#include <string>
#include <vector>

#include "bjorling/elliptic.hpp"

namespace bjorling {

/// Paths must keep this far away from every branch point of the speed.
inline constexpr double kBranchEpsilon = 1e-6;

enum class CurveKind { parabola, ellipse, circle, hyperbola, custom };

/// A planar analytic curve with its complex extension: component
/// evaluators x(z), y(z), the (principal-branch) arc-length density
/// speed(z) = sqrt(x'(z)^2 + y'(z)^2), and the branch points of the
/// speed inside a representative window around the origin.
///
/// For real z the components are real; the curve is traced on the real
/// axis.  Path integrals of speed start at basepoint (0 for all the
/// built-in curves).
struct PlaneCurveSpec {
    CurveKind kind = CurveKind::custom;
    std::string name;
    std::function<Complex(Complex)> x;
    std::function<Complex(Complex)> y;
    std::function<Complex(Complex)> speed;
    std::vector<Complex> branch_points;
    Complex basepoint{0.0, 0.0};
};

/// The parabola (2t, t^2); speed 2 sqrt(1+z^2) branches at +-i.
PlaneCurveSpec parabola_curve();

/// The ellipse (b cos t, a sin t) with semi-axes a > b > 0; speed
/// a sqrt(1 - e^2 sin^2 z) with eccentricity e = sqrt(a^2-b^2)/a.
PlaneCurveSpec ellipse_curve(double a, double b);

/// The unit circle (cos t, sin t); speed 1, no branch points.
PlaneCurveSpec circle_curve();

/// The hyperbola branch (b cosh t, a sinh t) with a, b > 0; speed
/// a sqrt(1 + e^2 sinh^2 z) with e = sqrt(a^2+b^2)/a.
PlaneCurveSpec hyperbola_curve(double a, double b);

/// Eccentricity of the ellipse with semi-axes a > b > 0.
double ellipse_eccentricity(double a, double b);

/// Eccentricity of the hyperbola with semi-axes a, b > 0 (always > 1).
double hyperbola_eccentricity(double a, double b);

} // namespace bjorling

#endif // BJORLING_CURVES_HPP
