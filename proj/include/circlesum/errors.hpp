#pragma once

#include <stdexcept>
#include <string>

namespace circlesum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite data, parameters outside their domain, bad pairings.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The closed-disk zero test could not be decided: the boundary modulus sits
/// inside the tolerance band.
class BorderlineError : public Error {
public:
    BorderlineError(const std::string& what, double min_modulus)
        : Error(what), min_modulus_(min_modulus) {}
    double min_modulus() const noexcept { return min_modulus_; }

private:
    double min_modulus_;
};

/// A search over n = 1..n_max did not succeed.
class NotFoundError : public Error {
public:
    NotFoundError(const std::string& what, int n_max) : Error(what), n_max_(n_max) {}
    int n_max() const noexcept { return n_max_; }

private:
    int n_max_;
};

/// A mathematical precondition of the requested construction does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The requested order is below the zero-free threshold of the Taylor polynomial.
class RepresentTooSmall : public PreconditionError {
public:
    RepresentTooSmall(const std::string& what, int n0) : PreconditionError(what), n0_(n0) {}
    /// Smallest admissible order, or -1 when none was found within the search cap.
    int n0() const noexcept { return n0_; }

private:
    int n0_;
};

/// Numerical failure: wrong root count, collapsed separation, residual above tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

class RootCountError : public NumericalError {
public:
    RootCountError(const std::string& what, int expected, int found)
        : NumericalError(what), expected_(expected), found_(found) {}
    int expected() const noexcept { return expected_; }
    int found() const noexcept { return found_; }

private:
    int expected_;
    int found_;
};

class PoleProximityError : public Error {
public:
    using Error::Error;
};

}  // namespace circlesum
