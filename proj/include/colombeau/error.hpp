#pragma once

#include <stdexcept>
#include <string>

namespace colombeau {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A negative power or reciprocal met a base outside its declared sign interval.
class CertificateViolation : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before reaching tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double value, double estimate)
        : Error(what), value_(value), estimate_(estimate) {}

    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return estimate_; }

private:
    double value_;
    double estimate_;
};

/// The effective support of an integrand could not be bounded statically.
class UnboundedSupport : public Error {
public:
    using Error::Error;
};

/// The jump system admits no root passing the non-characteristic certificate.
class NoAdmissibleShock : public Error {
public:
    using Error::Error;
};

/// Finite-volume run aborted (non-positive density or NaN).
class SolverAbort : public Error {
public:
    SolverAbort(const std::string& what, long cell, double time)
        : Error(what), cell_(cell), time_(time) {}

    long cell() const noexcept { return cell_; }
    double time() const noexcept { return time_; }

private:
    long cell_;
    double time_;
};

/// Shock-speed measurement found no monotone jump to track.
class NoJumpFound : public Error {
public:
    using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace colombeau
