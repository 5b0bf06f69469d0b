#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "bjorling/quadrature.hpp"

namespace oracles {

namespace {

using State = std::array<Complex, 3>;

State rhs(const State& y, double k2, Complex dz) {
    return {dz * y[1] * y[2], -dz * y[0] * y[2], -k2 * dz * y[0] * y[1]};
}

State axpy(const State& y, const State& d, double s) {
    return {y[0] + s * d[0], y[1] + s * d[1], y[2] + s * d[2]};
}

} // namespace

bjorling::JacobiTriple jacobi_by_ode(Complex z, const bjorling::Modulus& m,
                                     int steps) {
    const double k2 = m.k() * m.k();
    const Complex dz = z / static_cast<double>(steps);
    State y{Complex(0.0), Complex(1.0), Complex(1.0)};
    for (int i = 0; i < steps; ++i) {
        const State k1 = rhs(y, k2, dz);
        const State k2s = rhs(axpy(y, k1, 0.5), k2, dz);
        const State k3 = rhs(axpy(y, k2s, 0.5), k2, dz);
        const State k4 = rhs(axpy(y, k3, 1.0), k2, dz);
        for (int c = 0; c < 3; ++c) {
            y[c] += (k1[c] + 2.0 * k2s[c] + 2.0 * k3[c] + k4[c]) / 6.0;
        }
    }
    return {y[0], y[1], y[2]};
}

Complex epsilon_by_quadrature(Complex z, const bjorling::Modulus& m) {
    return bjorling::integrate_segment(
        [&m](Complex u) {
            const bjorling::JacobiTriple t = bjorling::jacobi_complex(u, m);
            return t.dn * t.dn;
        },
        Complex(0.0), z, 1e-12);
}

Complex epsilon_by_quadrature_path(std::span<const Complex> path,
                                   const bjorling::Modulus& m) {
    return bjorling::integrate_polyline(
        [&m](Complex u) {
            const bjorling::JacobiTriple t = bjorling::jacobi_complex(u, m);
            return t.dn * t.dn;
        },
        path, 1e-12);
}

Complex cn_squared_by_quadrature(Complex z, const bjorling::Modulus& m) {
    return bjorling::integrate_segment(
        [&m](Complex u) {
            const bjorling::JacobiTriple t = bjorling::jacobi_complex(u, m);
            return t.cn * t.cn;
        },
        Complex(0.0), z, 1e-12);
}

double complete_first_by_quadrature(double k) {
    const double k2 = k * k;
    return bjorling::integrate_real(
        [k2](double t) {
            const double s = std::sin(t);
            return 1.0 / std::sqrt(1.0 - k2 * s * s);
        },
        0.0, 1.5707963267948966, 1e-13);
}

double complete_second_by_quadrature(double k) {
    const double k2 = k * k;
    return bjorling::integrate_real(
        [k2](double t) {
            const double s = std::sin(t);
            return std::sqrt(1.0 - k2 * s * s);
        },
        0.0, 1.5707963267948966, 1e-13);
}

double segment_pole_clearance(Complex z, const bjorling::Modulus& m) {
    if (m.k() == 0.0) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    const double K = m.K();
    const double Kp = m.Kprime();
    const int mu = static_cast<int>(std::ceil(std::abs(z.real()) / (2.0 * K))) + 1;
    const int nv = static_cast<int>(std::ceil(std::abs(z.imag()) / (2.0 * Kp))) + 1;
    for (int i = -mu; i <= mu; ++i) {
        for (int j = -nv; j <= nv; ++j) {
            const Complex pole(2.0 * K * i, Kp + 2.0 * Kp * j);
            best = std::min(best,
                            bjorling::segment_distance(pole, Complex(0.0), z));
        }
    }
    return best;
}

} // namespace oracles
