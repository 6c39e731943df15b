#pragma once

#include <stdexcept>
#include <string>

namespace codeweights {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeError : Error { using Error::Error; };
struct DegreeTooLargeError : Error { using Error::Error; };
struct InvalidModulusError : Error { using Error::Error; };
struct ZeroInverseError : Error { using Error::Error; };
struct FieldMismatchError : Error { using Error::Error; };
struct ZeroArgumentError : Error { using Error::Error; };
struct PrimeMismatchError : Error { using Error::Error; };
struct OddExponentError : Error { using Error::Error; };
struct UnsupportedExponentError : Error { using Error::Error; };
struct FieldTooLargeError : Error { using Error::Error; };
struct NonRationalSumError : Error { using Error::Error; };
struct WorkBudgetExceededError : Error { using Error::Error; };
struct OutOfScopeError : Error { using Error::Error; };
struct BranchUnavailableError : Error { using Error::Error; };

}  // namespace codeweights
