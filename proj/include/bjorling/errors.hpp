#ifndef BJORLING_ERRORS_HPP
#define BJORLING_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace bjorling {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Evaluation point too close to a pole of a meromorphic function.
/// Carries the offending lattice point so callers can mask the sample.
class PoleProximityError : public Error {
public:
    PoleProximityError(const std::string& what, std::complex<double> pole)
        : Error(what), pole_(pole) {}
    std::complex<double> pole() const { return pole_; }

private:
    std::complex<double> pole_;
};

/// Integration path passes too close to a branch point of the integrand.
class BranchProximityError : public Error {
public:
    BranchProximityError(const std::string& what, std::complex<double> branch_point)
        : Error(what), branch_point_(branch_point) {}
    std::complex<double> branch_point() const { return branch_point_; }

private:
    std::complex<double> branch_point_;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& what) : Error(what) {}
};

/// First fundamental form is singular (EG - F^2 ~ 0) at the sample point.
class DegenerateImmersionError : public Error {
public:
    explicit DegenerateImmersionError(const std::string& what) : Error(what) {}
};

/// Grid sampling produced no valid vertex.
class EmptyMeshError : public Error {
public:
    explicit EmptyMeshError(const std::string& what) : Error(what) {}
};

/// Filesystem failure, with the destination path in the message.
class IoError : public Error {
public:
    IoError(const std::string& what, std::string path)
        : Error(what + ": " + path), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace bjorling

#endif // BJORLING_ERRORS_HPP
