#pragma once

#include <stdexcept>
#include <string>

namespace mps {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct NonPositiveRadius : Error { using Error::Error; };
struct NonStarShaped : Error { using Error::Error; };
struct TooFewNodes : Error { using Error::Error; };
struct DerivativeMismatch : Error { using Error::Error; };

// specfun
struct DomainError : Error { using Error::Error; };

// basis
struct ChargePointInside : Error { using Error::Error; };
struct ContinuationFailure : Error { using Error::Error; };
struct CoincidentPoint : Error { using Error::Error; };

// discretization / solver
struct DimensionMismatch : Error { using Error::Error; };
struct RankZero : Error { using Error::Error; };
struct IndefiniteInteriorNorm : Error { using Error::Error; };
struct NotConverged : Error { using Error::Error; };

// bounds
struct NotStarShaped : Error { using Error::Error; };
struct IndistinctNeighbor : Error { using Error::Error; };

// cli / config
struct ConfigError : Error { using Error::Error; };

}  // namespace mps
