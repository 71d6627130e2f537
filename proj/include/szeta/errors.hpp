#pragma once

#include <stdexcept>
#include <string>

namespace szeta {

// Error taxonomy used across the library. Everything derives from
// szeta::Error so callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleHit : Error { using Error::Error; };
struct PoleInsideDisk : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct WrongDeterminant : Error { using Error::Error; };

struct InvalidPsi : Error { using Error::Error; };
struct NoSuchSurface : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotMonotone : Error { using Error::Error; };

struct GroupMismatch : Error { using Error::Error; };
struct UnknownIrrep : Error { using Error::Error; };
struct ContextMismatch : Error { using Error::Error; };

struct NotClosed : Error { using Error::Error; };
struct InvalidTransition : Error { using Error::Error; };
struct InvalidSymbol : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct Mismatch : Error { using Error::Error; };

struct NotFree : Error { using Error::Error; };
struct OrderTooHigh : Error { using Error::Error; };
struct NotConvergent : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };

struct ContourTooClose : Error { using Error::Error; };
struct NoRealZero : Error { using Error::Error; };
struct EmptyAboveK : Error { using Error::Error; };

struct UsageError : Error { using Error::Error; };

} // namespace szeta
