#pragma once

#include <stdexcept>
#include <string>

namespace fforge {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input / structural errors.
struct NotATree : Error { using Error::Error; };
struct BadLabel : Error { using Error::Error; };
struct BadParam : Error { using Error::Error; };
struct NotALeaf : Error { using Error::Error; };
struct TooSmall : Error { using Error::Error; };
struct BadSequence : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

// Numerical failures.
struct ConvergenceFailure : Error { using Error::Error; };
struct StructureViolation : Error { using Error::Error; };
struct NoRoot : Error { using Error::Error; };
struct DegenerateEigenspace : Error { using Error::Error; };

}  // namespace fforge
