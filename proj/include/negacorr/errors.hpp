#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negacorr {

// Shift argument outside [0, N).
class ShiftOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A decimation factor that is not a unit modulo the required modulus.
class NotCoprime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (non-prime p,
// p != 1 mod 4, N = 1 for peak values, mismatched periods, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction row whose f-parity column does not match the prime.
class ConstructionInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  /// Zero-based character offset of the offending input character.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace negacorr
