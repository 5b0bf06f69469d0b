#ifndef BJORLING_ELLIPTIC_HPP
#define BJORLING_ELLIPTIC_HPP

#include <array>
#include <complex>
#include <cstddef>

#include "bjorling/errors.hpp"

namespace bjorling {

using Complex = std::complex<double>;

/// Minimum parameter-space distance kept from any pole of sn/cn/dn/epsilon.
/// Evaluation closer than this raises PoleProximityError.
inline constexpr double kPoleEpsilon = 1e-6;

/// Elliptic modulus k with its cached quarter-period data.
///
/// Holds k, k' = sqrt(1-k^2) and the complete integrals K(k), K(k'),
/// E(k), E(k'), all computed once by the arithmetic-geometric mean at
/// construction.  For k = 0 the complementary quarter period K' is
/// +infinity and E' = 1 (the trigonometric limit).
///
/// Immutable after construction; safe to share across threads.
class Modulus {
public:
    /// Builds the modulus from k.  Requires 0 <= k < 1.
    static Modulus from_k(double k);

    double k() const { return k_; }
    double kprime() const { return kprime_; }
    double K() const { return big_k_; }
    double Kprime() const { return big_k_prime_; }
    double E() const { return big_e_; }
    double Eprime() const { return big_e_prime_; }

    /// Landen/AGM scale chain for one modulus: a_n and c_n with c_N ~ 0.
    struct AgmChain {
        std::array<double, 32> a{};
        std::array<double, 32> c{};
        int depth = 0;
        double big_k = 0.0; // pi / (2 a_depth); +inf when the modulus is 1
    };

    const AgmChain& chain() const { return chain_; }
    const AgmChain& complementary_chain() const { return chain_prime_; }

private:
    Modulus() = default;

    double k_ = 0.0;
    double kprime_ = 1.0;
    double big_k_ = 0.0;
    double big_k_prime_ = 0.0;
    double big_e_ = 0.0;
    double big_e_prime_ = 0.0;
    AgmChain chain_;
    AgmChain chain_prime_;
};

/// Values of the three Jacobi elliptic functions at one point.
/// Components are real (zero imaginary part) for real arguments.
struct JacobiTriple {
    Complex sn;
    Complex cn;
    Complex dn;
};

/// Builds a Modulus, computing K and E by the AGM.  Throws DomainError
/// unless 0 <= k < 1.
Modulus complete_integrals(double k);

/// sn, cn, dn at real argument u.  Range-reduces by the 4K / 2K
/// periodicities before evaluating the descending Landen recursion.
JacobiTriple jacobi_real(double u, const Modulus& m);

/// Continuous (unwrapped) Jacobi amplitude: am(u + 2K) = am(u) + pi.
double jacobi_am(double u, const Modulus& m);

/// sn, cn, dn at complex argument z, assembled from the real-axis triple
/// at modulus k and the imaginary-axis triple at modulus k' (the standard
/// addition decomposition).  Throws PoleProximityError when z is within
/// kPoleEpsilon of the pole lattice i K' + 2mK + 2n i K'.
JacobiTriple jacobi_complex(Complex z, const Modulus& m);

/// Jacobi epsilon: the single-valued primitive of dn^2 from 0 to z.
/// Real z reduces to the incomplete second-kind integral E(am(z,k),k).
Complex jacobi_epsilon(Complex z, const Modulus& m);

/// Primitive of cn^2 from 0 to z, via (epsilon(z) - k'^2 z) / k^2.
/// Throws DomainError for k = 0 (use the cos closed form instead).
Complex integral_cn_squared(Complex z, const Modulus& m);

/// Nearest point of the sn/cn/dn/epsilon pole lattice, or an infinite
/// point when the modulus is 0 (no finite poles).
Complex nearest_pole(Complex z, const Modulus& m);

/// Distance from z to the nearest pole (infinity for k = 0).
double pole_distance(Complex z, const Modulus& m);

namespace detail {

/// Carlson symmetric elliptic integral R_F(x, y, z).
double carlson_rf(double x, double y, double z);

/// Carlson symmetric elliptic integral R_D(x, y, z).
double carlson_rd(double x, double y, double z);

/// Legendre incomplete integral of the second kind E(phi, k), |phi| <= pi/2.
double incomplete_e(double phi, double k);

/// Epsilon restricted to the real axis (exact 2E quasi-periodicity).
double jacobi_epsilon_real(double u, const Modulus& m);

} // namespace detail

} // namespace bjorling

#endif // BJORLING_ELLIPTIC_HPP
