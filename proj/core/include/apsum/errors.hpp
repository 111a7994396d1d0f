#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apsum {

/// Two residue sets from different rings were combined.
class ModulusMismatch : public std::invalid_argument {
 public:
  ModulusMismatch(std::uint64_t lhs, std::uint64_t rhs)
      : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An enumeration or scan would exceed its configured work cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal consistency check failed; indicates a corrupted trace or a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace apsum
