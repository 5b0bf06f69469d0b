#include "bjorling/curves.hpp"

#include <cmath>

namespace bjorling {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kBranchWindow = 5; // lattice copies listed on each side

} // namespace

double ellipse_eccentricity(double a, double b) {
    if (!(a > b && b > 0.0)) {
        throw DomainError("ellipse requires semi-axes a > b > 0");
    }
    return std::sqrt((a - b) * (a + b)) / a;
}

double hyperbola_eccentricity(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) {
        throw DomainError("hyperbola requires semi-axes a, b > 0");
    }
    return std::sqrt(a * a + b * b) / a;
}

PlaneCurveSpec parabola_curve() {
    PlaneCurveSpec c;
    c.kind = CurveKind::parabola;
    c.name = "parabola";
    c.x = [](Complex z) { return 2.0 * z; };
    c.y = [](Complex z) { return z * z; };
    c.speed = [](Complex z) { return 2.0 * std::sqrt(1.0 + z * z); };
    c.branch_points = {Complex(0.0, 1.0), Complex(0.0, -1.0)};
    return c;
}

PlaneCurveSpec ellipse_curve(double a, double b) {
    const double e = ellipse_eccentricity(a, b);
    PlaneCurveSpec c;
    c.kind = CurveKind::ellipse;
    c.name = "ellipse";
    c.x = [b](Complex z) { return b * std::cos(z); };
    c.y = [a](Complex z) { return a * std::sin(z); };
    const double e2 = e * e;
    c.speed = [a, e2](Complex z) {
        const Complex s = std::sin(z);
        return a * std::sqrt(1.0 - e2 * s * s);
    };
    // sin z = +-1/e with 1/e > 1: z = pi/2 + m pi +- i acosh(1/e).
    const double y0 = std::acosh(1.0 / e);
    for (int m = -kBranchWindow; m <= kBranchWindow; ++m) {
        const double x0 = 0.5 * kPi + m * kPi;
        c.branch_points.emplace_back(x0, y0);
        c.branch_points.emplace_back(x0, -y0);
    }
    return c;
}

PlaneCurveSpec circle_curve() {
    PlaneCurveSpec c;
    c.kind = CurveKind::circle;
    c.name = "circle";
    c.x = [](Complex z) { return std::cos(z); };
    c.y = [](Complex z) { return std::sin(z); };
    c.speed = [](Complex) { return Complex(1.0); };
    return c;
}

PlaneCurveSpec hyperbola_curve(double a, double b) {
    const double e = hyperbola_eccentricity(a, b);
    PlaneCurveSpec c;
    c.kind = CurveKind::hyperbola;
    c.name = "hyperbola";
    c.x = [b](Complex z) { return b * std::cosh(z); };
    c.y = [a](Complex z) { return a * std::sinh(z); };
    const double e2 = e * e;
    c.speed = [a, e2](Complex z) {
        const Complex s = std::sinh(z);
        return a * std::sqrt(1.0 + e2 * s * s);
    };
    // sinh z = +-i/e with 1/e < 1: z = i (m pi +- asin(1/e)).
    const double y0 = std::asin(1.0 / e);
    for (int m = -kBranchWindow; m <= kBranchWindow; ++m) {
        c.branch_points.emplace_back(0.0, m * kPi + y0);
        c.branch_points.emplace_back(0.0, m * kPi - y0);
    }
    return c;
}

} // namespace bjorling
