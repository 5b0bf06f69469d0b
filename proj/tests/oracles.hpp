// Independent reference implementations used only by tests: an ODE
// integrator for the Jacobi system and direct quadrature of the
// defining integrals.  These deliberately avoid the closed-form routes
// used by the library.
#ifndef BJORLING_TESTS_ORACLES_HPP
#define BJORLING_TESTS_ORACLES_HPP

#include <span>

#include "bjorling/elliptic.hpp"

namespace oracles {

using bjorling::Complex;

/// (sn, cn, dn)(z) by fixed-step RK4 on the defining first-order system
/// along the straight segment from 0 to z.
bjorling::JacobiTriple jacobi_by_ode(Complex z, const bjorling::Modulus& m,
                                     int steps = 6000);

/// Adaptive quadrature of dn^2 along the straight segment 0 -> z.
Complex epsilon_by_quadrature(Complex z, const bjorling::Modulus& m);

/// Adaptive quadrature of dn^2 along a polyline from 0.
Complex epsilon_by_quadrature_path(std::span<const Complex> path,
                                   const bjorling::Modulus& m);

/// Adaptive quadrature of cn^2 along the straight segment 0 -> z.
Complex cn_squared_by_quadrature(Complex z, const bjorling::Modulus& m);

/// K(k) by adaptive quadrature of the defining integral.
double complete_first_by_quadrature(double k);

/// E(k) by adaptive quadrature of the defining integral.
double complete_second_by_quadrature(double k);

/// Shortest distance from the straight segment 0 -> z to the pole
/// lattice of modulus m (infinite when k = 0).
double segment_pole_clearance(Complex z, const bjorling::Modulus& m);

} // namespace oracles

#endif // BJORLING_TESTS_ORACLES_HPP
