// errors.hpp -- exception types for invalid inputs and violated claims.
#pragma once

#include <stdexcept>

namespace gp {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's documented domain.
struct OutOfRange : Error { using Error::Error; };

// 2k = n: the inner edges coincide in pairs, the graph is not simple.
struct DegenerateParams : Error { using Error::Error; };

struct IndexOutOfRange : Error { using Error::Error; };
struct TooFewValues : Error { using Error::Error; };
struct NonpositiveEpsilon : Error { using Error::Error; };

// Jacobi sweep limit exhausted without reaching the off-diagonal threshold.
struct NoConvergence : Error { using Error::Error; };

// t0 * q^N (or m * t0 * q^N) does not fit in a signed 64-bit integer.
struct RangeOverflow : Error { using Error::Error; };

// Clustering needs n > q^2.
struct TooSmallN : Error { using Error::Error; };

struct EmptySet : Error { using Error::Error; };
struct InvalidVertex : Error { using Error::Error; };

// Exact subset enumeration refused: 2n above the supported cap.
struct TooLarge : Error { using Error::Error; };

// phi(m) + kappa(m) not divisible by 4; indicates a bug, not bad input.
struct NonIntegral : Error { using Error::Error; };

// A proven statement failed to check out numerically.  Distinct from the
// input errors above: the front end maps this to "claim failed", not
// "bad input".
struct ClaimViolated : Error { using Error::Error; };

}  // namespace gp
