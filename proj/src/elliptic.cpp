#include "bjorling/elliptic.hpp"

#include <cmath>
#include <limits>

namespace bjorling {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Arithmetic-geometric mean chain for modulus k (with kc = sqrt(1-k^2)
// passed explicitly to avoid re-deriving it from k).  The classical
// descending Landen scales: a_{n+1} = (a_n+b_n)/2, b_{n+1} = sqrt(a_n b_n),
// c_{n+1} = (a_n-b_n)/2, starting from (1, kc, k).
Modulus::AgmChain build_chain(double k, double kc) {
    Modulus::AgmChain ch;
    if (kc == 0.0) {
        // Modulus 1: AGM collapses to 0 and K diverges.
        ch.depth = 0;
        ch.a[0] = 1.0;
        ch.c[0] = 1.0;
        ch.big_k = std::numeric_limits<double>::infinity();
        return ch;
    }
    double a = 1.0;
    double b = kc;
    ch.a[0] = a;
    ch.c[0] = k;
    int n = 0;
    while (n + 1 < static_cast<int>(ch.a.size())) {
        const double an = 0.5 * (a + b);
        const double cn = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        ++n;
        ch.a[n] = a;
        ch.c[n] = cn;
        if (std::abs(cn) <= a * std::numeric_limits<double>::epsilon()) break;
    }
    ch.depth = n;
    ch.big_k = kPi / (2.0 * a);
    return ch;
}

// E/K from the chain: E = K (1 - sum 2^{n-1} c_n^2).
double second_kind_from_chain(const Modulus::AgmChain& ch) {
    double sum = 0.0;
    for (int n = ch.depth; n >= 0; --n) {
        sum += std::ldexp(ch.c[n] * ch.c[n], n - 1);
    }
    return ch.big_k * (1.0 - sum);
}

// Unwrapped amplitude from the chain, accurate for |u| <= K.  Walks the
// Gauss transformation downward: phi_{n-1} = (phi_n + asin((c_n/a_n) sin
// phi_n)) / 2 from phi_N = 2^N a_N u.
double am_from_chain(double u, const Modulus::AgmChain& ch) {
    double phi = std::ldexp(ch.a[ch.depth] * u, ch.depth);
    for (int n = ch.depth; n >= 1; --n) {
        double s = (ch.c[n] / ch.a[n]) * std::sin(phi);
        if (s > 1.0) s = 1.0;
        if (s < -1.0) s = -1.0;
        phi = 0.5 * (phi + std::asin(s));
    }
    return phi;
}

struct RealTriple {
    double sn;
    double cn;
    double dn;
};

// Range-reduced real-axis evaluation for modulus k with chain ch.
// Handles the trigonometric (k=0) and hyperbolic (k=1) degenerations;
// the latter is only reached internally as the complementary modulus of
// k = 0.
RealTriple real_triple(double u, double k, const Modulus::AgmChain& ch) {
    if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};
    if (k == 1.0) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }
    const double two_k = 2.0 * ch.big_k;
    const double q = std::nearbyint(u / two_k);
    const double ur = std::fma(-two_k, q, u); // |ur| <= K
    const double phi = am_from_chain(ur, ch);
    double sn = std::sin(phi);
    double cn = std::cos(phi);
    const double dn = std::sqrt((1.0 - k * sn) * (1.0 + k * sn));
    if (std::fmod(q, 2.0) != 0.0) {
        sn = -sn;
        cn = -cn;
    }
    return {sn, cn, dn};
}

// Shared epsilon-on-the-real-axis for an arbitrary (k, chain, E) triple,
// so the complex assembly can reuse it at the complementary modulus.
double eps_real_on_chain(double u, double k, const Modulus::AgmChain& ch,
                         double big_e) {
    if (k == 0.0) return u;
    if (k == 1.0) return std::tanh(u);
    const double two_k = 2.0 * ch.big_k;
    const double q = std::nearbyint(u / two_k);
    const double ur = std::fma(-two_k, q, u);
    const double phi = am_from_chain(ur, ch);
    return detail::incomplete_e(phi, k) + 2.0 * big_e * q;
}

} // namespace

Modulus Modulus::from_k(double k) {
    if (!(k >= 0.0) || k >= 1.0) {
        throw DomainError("elliptic modulus must satisfy 0 <= k < 1");
    }
    Modulus m;
    m.k_ = k;
    m.kprime_ = std::sqrt((1.0 - k) * (1.0 + k));
    m.chain_ = build_chain(k, m.kprime_);
    m.chain_prime_ = build_chain(m.kprime_, k);
    m.big_k_ = m.chain_.big_k;
    m.big_k_prime_ = m.chain_prime_.big_k;
    m.big_e_ = second_kind_from_chain(m.chain_);
    // E(1) = 1 exactly; the AGM series is indeterminate there.
    m.big_e_prime_ =
        (k == 0.0) ? 1.0 : second_kind_from_chain(m.chain_prime_);
    return m;
}

Modulus complete_integrals(double k) { return Modulus::from_k(k); }

JacobiTriple jacobi_real(double u, const Modulus& m) {
    if (!std::isfinite(u)) throw DomainError("jacobi_real: non-finite argument");
    const RealTriple t = real_triple(u, m.k(), m.chain());
    return {Complex(t.sn), Complex(t.cn), Complex(t.dn)};
}

double jacobi_am(double u, const Modulus& m) {
    if (!std::isfinite(u)) throw DomainError("jacobi_am: non-finite argument");
    if (m.k() == 0.0) return u;
    const double two_k = 2.0 * m.K();
    const double q = std::nearbyint(u / two_k);
    const double ur = std::fma(-two_k, q, u);
    return am_from_chain(ur, m.chain()) + kPi * q;
}

Complex nearest_pole(Complex z, const Modulus& m) {
    if (m.k() == 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    const double two_k = 2.0 * m.K();
    const double two_kp = 2.0 * m.Kprime();
    const double px = two_k * std::nearbyint(z.real() / two_k);
    const double py =
        m.Kprime() + two_kp * std::nearbyint((z.imag() - m.Kprime()) / two_kp);
    return {px, py};
}

double pole_distance(Complex z, const Modulus& m) {
    if (m.k() == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(z - nearest_pole(z, m));
}

namespace {

void require_pole_clearance(Complex z, const Modulus& m, const char* who) {
    const Complex pole = nearest_pole(z, m);
    if (std::abs(z - pole) <= kPoleEpsilon) {
        throw PoleProximityError(std::string(who) +
                                     ": argument within pole_epsilon of a pole",
                                 pole);
    }
}

} // namespace

JacobiTriple jacobi_complex(Complex z, const Modulus& m) {
    if (!is_finite(z)) throw DomainError("jacobi_complex: non-finite argument");
    if (m.k() == 0.0) return {std::sin(z), std::cos(z), Complex(1.0)};
    require_pole_clearance(z, m, "jacobi_complex");
    if (z.imag() == 0.0) return jacobi_real(z.real(), m);

    const RealTriple x = real_triple(z.real(), m.k(), m.chain());
    const RealTriple y =
        real_triple(z.imag(), m.kprime(), m.complementary_chain());
    const double kk = m.k() * m.k();
    const double den = y.cn * y.cn + kk * x.sn * x.sn * y.sn * y.sn;
    return {
        Complex(x.sn * y.dn / den, x.cn * x.dn * y.sn * y.cn / den),
        Complex(x.cn * y.cn / den, -x.sn * x.dn * y.sn * y.dn / den),
        Complex(x.dn * y.cn * y.dn / den, -kk * x.sn * x.cn * y.sn / den),
    };
}

namespace detail {

double carlson_rf(double x, double y, double z) {
    // Carlson (1995) duplication algorithm, double-precision tolerances.
    constexpr double kErrTol = 0.0025;
    constexpr double kThird = 1.0 / 3.0;
    constexpr double c1 = 1.0 / 24.0, c2 = 0.1, c3 = 3.0 / 44.0, c4 = 1.0 / 14.0;
    double xt = x, yt = y, zt = z;
    double ave, dx, dy, dz;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = kThird * (xt + yt + zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kErrTol);
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (c1 * e2 - c2 - c3 * e3) * e2 + c4 * e3) / std::sqrt(ave);
}

double carlson_rd(double x, double y, double z) {
    constexpr double kErrTol = 0.0015;
    constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0;
    constexpr double c4 = 3.0 / 26.0, c5 = 0.25 * c3, c6 = 1.5 * c4;
    double xt = x, yt = y, zt = z;
    double sum = 0.0, fac = 1.0;
    double ave, dx, dy, dz;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lam));
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = 0.2 * (xt + yt + 3.0 * zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kErrTol);
    const double ea = dx * dy;
    const double eb = dz * dz;
    const double ec = ea - eb;
    const double ed = ea - 6.0 * eb;
    const double ee = ed + ec + ec;
    return 3.0 * sum +
           fac *
               (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) +
                dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
               (ave * std::sqrt(ave));
}

double incomplete_e(double phi, double k) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double c2 = c * c;
    const double q = (1.0 - k * s) * (1.0 + k * s);
    return s * (carlson_rf(c2, q, 1.0) -
                (k * k) * s * s * carlson_rd(c2, q, 1.0) / 3.0);
}

double jacobi_epsilon_real(double u, const Modulus& m) {
    return eps_real_on_chain(u, m.k(), m.chain(), m.E());
}

} // namespace detail

namespace {

// Epsilon at x + iy for |y| <= K'/2, where cn(y,k') stays away from 0:
//   eps(x + iy) = eps(x) + eps(iy) - k^2 sn(x) sn(iy) sn(x+iy)
// with eps(iy) = i (y - eps_{k'}(y) + sn dn / cn at (y,k')).
Complex eps_strip(double x, double y, const Modulus& m) {
    const double epsx = detail::jacobi_epsilon_real(x, m);
    if (y == 0.0) return Complex(epsx);

    const RealTriple ry =
        real_triple(y, m.kprime(), m.complementary_chain());
    const double epsy = eps_real_on_chain(y, m.kprime(),
                                          m.complementary_chain(), m.Eprime());
    const Complex eps_iy(0.0, y - epsy + ry.sn * ry.dn / ry.cn);
    if (x == 0.0) return eps_iy;

    const RealTriple rx = real_triple(x, m.k(), m.chain());
    const double kk = m.k() * m.k();
    const double den = ry.cn * ry.cn + kk * rx.sn * rx.sn * ry.sn * ry.sn;
    const Complex snz(rx.sn * ry.dn / den,
                      rx.cn * rx.dn * ry.sn * ry.cn / den);
    const Complex sn_iy(0.0, ry.sn / ry.cn);
    return Complex(epsx) + eps_iy - kk * rx.sn * sn_iy * snz;
}

} // namespace

Complex jacobi_epsilon(Complex z, const Modulus& m) {
    if (!is_finite(z)) throw DomainError("jacobi_epsilon: non-finite argument");
    if (m.k() == 0.0) return z; // dn == 1
    require_pole_clearance(z, m, "jacobi_epsilon");

    const double kp = m.Kprime();
    const double ep = m.Eprime();
    // Reduce the imaginary part by the 2iK' quasi-period, increment 2i(K'-E').
    const double ny = std::nearbyint(z.imag() / (2.0 * kp));
    const double yr = std::fma(-2.0 * kp, ny, z.imag());
    const Complex shift(0.0, 2.0 * ny * (kp - ep));

    if (std::abs(yr) <= 0.5 * kp) {
        return eps_strip(z.real(), yr, m) + shift;
    }
    // Near the pole rows of the strip decomposition, route through the
    // half-lattice identity eps(w + i s K') = eps(w) + cn dn / sn (w)
    // + i s (K' - E'); w then lands back in the safe strip.
    const double sigma = (yr > 0.0) ? 1.0 : -1.0;
    const Complex w(z.real(), yr - sigma * kp);
    const JacobiTriple j = jacobi_complex(w, m);
    const Complex eps_w = eps_strip(w.real(), w.imag(), m);
    return eps_w + j.cn * j.dn / j.sn + Complex(0.0, sigma * (kp - ep)) + shift;
}

Complex integral_cn_squared(Complex z, const Modulus& m) {
    if (m.k() == 0.0) {
        throw DomainError(
            "integral_cn_squared: k = 0 degenerates; use z/2 + sin(2z)/4");
    }
    const double kp2 = m.kprime() * m.kprime();
    return (jacobi_epsilon(z, m) - kp2 * z) / (m.k() * m.k());
}

} // namespace bjorling
