#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace signpoly {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Raised before materializing a vertex set larger than the configured cap.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(std::uint64_t count, std::uint64_t cap)
      : Error("enumeration of " + std::to_string(count) + " sign permutations exceeds cap " +
              std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

/// The LP solver gave up (iteration cap). Distinct from "not a member".
class SolverFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments or input documents.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A matrix failed density-matrix validation.
class InvalidState : public Error {
 public:
  enum class Reason { NotSquare, NotHermitian, BadTrace, NotPsd };

  InvalidState(Reason reason, double magnitude)
      : Error(describe(reason, magnitude)), reason_(reason), magnitude_(magnitude) {}

  Reason reason() const noexcept { return reason_; }
  /// Size of the violation: ‖M − M†‖∞, |Tr M − 1|, or the most negative eigenvalue.
  double magnitude() const noexcept { return magnitude_; }

  static const char* reason_name(Reason reason) noexcept {
    switch (reason) {
      case Reason::NotSquare: return "not-square";
      case Reason::NotHermitian: return "not-hermitian";
      case Reason::BadTrace: return "bad-trace";
      case Reason::NotPsd: return "not-psd";
    }
    return "unknown";
  }

 private:
  static std::string describe(Reason reason, double magnitude) {
    return std::string("invalid state (") + reason_name(reason) +
           "): magnitude " + std::to_string(magnitude);
  }

  Reason reason_;
  double magnitude_;
};

}  // namespace signpoly
