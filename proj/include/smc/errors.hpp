#ifndef SMC_ERRORS_HPP
#define SMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smc {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caller passed malformed input (duplicate points, bad sizes, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// Operation requires a nonzero polynomial.
struct ZeroPolynomial : Error {
    using Error::Error;
};

/// Root clusters cannot be assigned multiplicities unambiguously at the
/// requested tolerance.
struct IllConditioned : Error {
    using Error::Error;
};

/// The Hermite interpolation system is numerically singular, which signals
/// violated preconditions (points not distinct or not in an open semicircle).
struct SingularSystem : Error {
    using Error::Error;
};

/// Roots of a lifted polynomial could not be matched into reciprocal pairs.
struct PairingFailure : Error {
    using Error::Error;
};

/// The polynomial is not even (f(-t) != f(t)).
struct NotEven : Error {
    using Error::Error;
};

/// Bisection bracket endpoints do not straddle a sign change.
struct BracketFailure : Error {
    using Error::Error;
};

/// No root found in the scanned interval.
struct NoRoot : Error {
    using Error::Error;
};

/// Cluster spread too large for the neighborliness threshold.
struct SpreadTooLarge : Error {
    using Error::Error;
};

/// Requested subset enumeration exceeds the configured cap.
struct CombinatorialExplosion : Error {
    using Error::Error;
};

/// The LP solver broke down numerically.
struct SolverFailure : Error {
    using Error::Error;
};

}  // namespace smc

#endif
