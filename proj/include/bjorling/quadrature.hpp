#ifndef BJORLING_QUADRATURE_HPP
#define BJORLING_QUADRATURE_HPP

#include <functional>
#include <span>

#include "bjorling/elliptic.hpp"
#include "bjorling/errors.hpp"

namespace bjorling {

/// Default absolute tolerance for the path integrals.
inline constexpr double kQuadratureTol = 1e-10;

/// Adaptive Gauss-Kronrod (7-15) integral of f along the straight segment
/// from p to q.  Throws QuadratureError when the tolerance cannot be met.
Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex p,
                          Complex q, double tol = kQuadratureTol);

/// Integral of f along a polyline (consecutive straight segments).
/// Requires at least two points.
Complex integrate_polyline(const std::function<Complex(Complex)>& f,
                           std::span<const Complex> points,
                           double tol = kQuadratureTol);

/// Real-axis adaptive quadrature of f over [a, b].
double integrate_real(const std::function<double(double)>& f, double a,
                      double b, double tol = kQuadratureTol);

/// Distance from point w to the segment [p, q].
double segment_distance(Complex w, Complex p, Complex q);

} // namespace bjorling

#endif // BJORLING_QUADRATURE_HPP
