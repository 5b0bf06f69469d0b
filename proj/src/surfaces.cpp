#include "bjorling/surfaces.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "bjorling/quadrature.hpp"

namespace bjorling {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 take_part(const std::array<Complex, 3>& v, bool conjugate) {
    if (conjugate) return {v[0].imag(), v[1].imag(), v[2].imag()};
    return {v[0].real(), v[1].real(), v[2].real()};
}

void check_path(const PlaneCurveSpec& curve, Complex z,
                std::span<const Complex> path) {
    if (path.size() < 2) {
        throw DomainError("integration path needs at least two points");
    }
    if (std::abs(path.front() - curve.basepoint) > 1e-12) {
        throw DomainError("integration path must start at the curve basepoint");
    }
    if (std::abs(path.back() - z) > 1e-12) {
        throw DomainError("integration path must end at the evaluation point");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        for (const Complex& bp : curve.branch_points) {
            if (segment_distance(bp, path[i], path[i + 1]) <= kBranchEpsilon) {
                throw BranchProximityError(
                    "path passes within branch_epsilon of a branch point of "
                    "the integrand",
                    bp);
            }
        }
    }
}

std::array<Complex, 3> catalan_immersion(Complex w) {
    const Complex sh = std::sinh(w);
    const Complex ch = std::cosh(w);
    return {2.0 * sh, sh * sh, Complex(0.0, 1.0) * (w + sh * ch)};
}

std::array<Complex, 3> elliptic_catenoid_immersion(Complex u, double a,
                                                   double b,
                                                   const Modulus& m) {
    const JacobiTriple j = jacobi_complex(u, m);
    const Complex eps = jacobi_epsilon(u, m);
    return {b * j.cn, a * j.sn, Complex(0.0, 1.0) * a * eps};
}

std::array<Complex, 3> hyperbola_immersion(Complex u, double a, double b,
                                           const Modulus& m) {
    const double k = m.k();
    const Complex v = u / k;
    const JacobiTriple j = jacobi_complex(v, m);
    // integral_0^u cn^2(s/k) ds = k integral_0^{u/k} cn^2(t) dt
    const Complex third = a * k * integral_cn_squared(v, m);
    return {b * j.dn, Complex(0.0, 1.0) * a * k * j.sn, third};
}

std::array<Complex, 3> circle_immersion(Complex z) {
    return {std::cos(z), std::sin(z), Complex(0.0, 1.0) * z};
}

} // namespace

Complex bjorling_path_integral(const PlaneCurveSpec& curve,
                               std::span<const Complex> path, double tol) {
    check_path(curve, path.back(), path);
    return integrate_polyline(curve.speed, path, tol);
}

Vec3 bjorling_numeric(const PlaneCurveSpec& curve, Complex z,
                      std::span<const Complex> path, bool conjugate) {
    check_path(curve, z, path);
    const Complex integral = integrate_polyline(curve.speed, path, 1e-10);
    return take_part({curve.x(z), curve.y(z), Complex(0.0, 1.0) * integral},
                     conjugate);
}

Vec3 naive_elliptic_catenoid(Complex z, double a, double b,
                             std::span<const Complex> path, bool conjugate) {
    return bjorling_numeric(ellipse_curve(a, b), z, path, conjugate);
}

Vec3 catalan_surface(Complex w, bool conjugate) {
    return take_part(catalan_immersion(w), conjugate);
}

Vec3 elliptic_catenoid(Complex u, double a, double b, bool conjugate) {
    const Modulus m = Modulus::from_k(ellipse_eccentricity(a, b));
    return take_part(elliptic_catenoid_immersion(u, a, b, m), conjugate);
}

Vec3 hyperbola_bjorling(Complex u, double a, double b, bool conjugate) {
    const double e = hyperbola_eccentricity(a, b);
    const Modulus m = Modulus::from_k(1.0 / e);
    return take_part(hyperbola_immersion(u, a, b, m), conjugate);
}

Vec3 dual_curve(const SurfaceModel& surface, double t) {
    return surface.evaluate(Complex(0.0, t));
}

SurfaceModel make_catalan(bool conjugate) {
    SurfaceModel s;
    s.name = conjugate ? "catalan-conjugate" : "catalan";
    s.conjugate = conjugate;
    s.evaluate = [conjugate](Complex w) {
        return take_part(catalan_immersion(w), conjugate);
    };
    s.recommended_domain = {-2.0, 2.0, -kPi, kPi};
    s.pole_set = "none (entire immersion)";
    s.conjugate_factory = [conjugate]() { return make_catalan(!conjugate); };
    return s;
}

SurfaceModel make_elliptical_catenoid(double a, double b, bool conjugate) {
    const Modulus m = Modulus::from_k(ellipse_eccentricity(a, b));
    SurfaceModel s;
    s.name = conjugate ? "elliptical-helicoid" : "elliptical-catenoid";
    s.conjugate = conjugate;
    s.params = {a, b, m};
    s.evaluate = [a, b, m, conjugate](Complex u) {
        return take_part(elliptic_catenoid_immersion(u, a, b, m), conjugate);
    };
    s.recommended_domain = {-2.0 * m.K(), 2.0 * m.K(), -0.9 * m.Kprime(),
                            0.9 * m.Kprime()};
    s.pole_set = "lattice 2mK + (2n+1) i K' at modulus e";
    s.conjugate_factory = [a, b, conjugate]() {
        return make_elliptical_catenoid(a, b, !conjugate);
    };
    return s;
}

SurfaceModel make_hyperbola_surface(double a, double b, bool conjugate) {
    const double e = hyperbola_eccentricity(a, b);
    const Modulus m = Modulus::from_k(1.0 / e);
    const double k = m.k();
    SurfaceModel s;
    s.name = conjugate ? "hyperbola-conjugate" : "hyperbola";
    s.conjugate = conjugate;
    s.params = {a, b, m};
    s.evaluate = [a, b, m, conjugate](Complex u) {
        return take_part(hyperbola_immersion(u, a, b, m), conjugate);
    };
    s.recommended_domain = {-2.0 * k * m.K(), 2.0 * k * m.K(),
                            -0.9 * k * m.Kprime(), 0.9 * k * m.Kprime()};
    s.pole_set = "lattice k (2mK + (2n+1) i K') at modulus k = 1/e";
    s.conjugate_factory = [a, b, conjugate]() {
        return make_hyperbola_surface(a, b, !conjugate);
    };
    return s;
}

SurfaceModel make_catenoid(bool conjugate) {
    SurfaceModel s;
    s.name = conjugate ? "helicoid" : "catenoid";
    s.conjugate = conjugate;
    s.params = {1.0, 1.0, std::nullopt};
    s.evaluate = [conjugate](Complex z) {
        return take_part(circle_immersion(z), conjugate);
    };
    s.recommended_domain = {-kPi, kPi, -1.5, 1.5};
    s.pole_set = "none (entire immersion)";
    s.conjugate_factory = [conjugate]() { return make_catenoid(!conjugate); };
    return s;
}

SurfaceModel make_naive_elliptical_catenoid(double a, double b,
                                            bool conjugate) {
    const PlaneCurveSpec curve = ellipse_curve(a, b);
    SurfaceModel s;
    s.name = conjugate ? "naive-elliptical-catenoid-conjugate"
                       : "naive-elliptical-catenoid";
    s.conjugate = conjugate;
    s.params = {a, b, Modulus::from_k(ellipse_eccentricity(a, b))};
    s.evaluate = [curve, conjugate](Complex z) {
        const std::array<Complex, 2> path{curve.basepoint, z};
        return bjorling_numeric(curve, z, path, conjugate);
    };
    s.recommended_domain = {0.0, 2.0 * kPi, -1.2, 1.2};
    s.pole_set =
        "principal-branch cuts on Re z = pi/2 + m pi, |Im z| >= acosh(1/e)";
    s.conjugate_factory = [a, b, conjugate]() {
        return make_naive_elliptical_catenoid(a, b, !conjugate);
    };
    return s;
}

SurfaceModel make_naive_parabola(bool conjugate) {
    const PlaneCurveSpec curve = parabola_curve();
    SurfaceModel s;
    s.name = conjugate ? "naive-catalan-conjugate" : "naive-catalan";
    s.conjugate = conjugate;
    s.evaluate = [curve, conjugate](Complex z) {
        const std::array<Complex, 2> path{curve.basepoint, z};
        return bjorling_numeric(curve, z, path, conjugate);
    };
    s.recommended_domain = {-2.0, 2.0, -2.0, 2.0};
    s.pole_set = "principal-branch cuts on Re z = 0, |Im z| >= 1";
    s.conjugate_factory = [conjugate]() {
        return make_naive_parabola(!conjugate);
    };
    return s;
}

SurfaceModel make_surface(const std::string& name, double a, double b,
                          bool conjugate, bool naive) {
    if (name == "catalan") {
        return naive ? make_naive_parabola(conjugate) : make_catalan(conjugate);
    }
    if (name == "elliptical-catenoid") {
        return naive ? make_naive_elliptical_catenoid(a, b, conjugate)
                     : make_elliptical_catenoid(a, b, conjugate);
    }
    if (name == "elliptical-helicoid") {
        return naive ? make_naive_elliptical_catenoid(a, b, !conjugate)
                     : make_elliptical_catenoid(a, b, !conjugate);
    }
    if (name == "hyperbola") {
        if (naive) {
            throw DomainError(
                "hyperbola has no quadrature form; drop the naive flag");
        }
        return make_hyperbola_surface(a, b, conjugate);
    }
    if (name == "catenoid") {
        if (naive) {
            const PlaneCurveSpec curve = circle_curve();
            SurfaceModel s = make_catenoid(conjugate);
            s.name = conjugate ? "naive-helicoid" : "naive-catenoid";
            s.evaluate = [curve, conjugate](Complex z) {
                const std::array<Complex, 2> path{curve.basepoint, z};
                return bjorling_numeric(curve, z, path, conjugate);
            };
            return s;
        }
        return make_catenoid(conjugate);
    }
    if (name == "helicoid") {
        return make_surface("catenoid", a, b, !conjugate, naive);
    }
    throw DomainError("unknown surface name: " + name);
}

} // namespace bjorling
