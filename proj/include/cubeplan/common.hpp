#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubeplan {

// Ceiling on enumerated objects (consistent ideals, arm states, complex
// vertices). Sizes grow exponentially with instance size, so every
// enumeration takes an explicit limit; callers can raise or lower it.
inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured ceiling.
struct GuardExceeded : Error {
  explicit GuardExceeded(std::uint64_t limit_)
      : Error("enumeration exceeds guard limit " + std::to_string(limit_)),
        limit(limit_) {}
  std::uint64_t limit;
};

struct InvalidPip : Error {
  using Error::Error;
};

struct InvalidIdeal : Error {
  using Error::Error;
};

struct InvalidComplex : Error {
  using Error::Error;
};

// A configuration word fails the arm invariants, or a move cannot be
// applied to the given configuration.
struct InvalidState : Error {
  using Error::Error;
};

struct InvalidArmSpec : Error {
  using Error::Error;
};

// Malformed JSON or DOT input.
struct ParseError : Error {
  using Error::Error;
};

// A structural guarantee that certified inputs are supposed to carry was
// found broken at run time; this always indicates a bug upstream.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace cubeplan
