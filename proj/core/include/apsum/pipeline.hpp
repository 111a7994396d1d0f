#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "apsum/apsearch.hpp"
#include "apsum/bigint.hpp"
#include "apsum/modring.hpp"

namespace apsum {

struct ShiftChoice {
  Residue shift;
  ResidueSet set;
};

/// Shift j maximizing |(A + j) ∩ B| over [0, M), smallest j on ties, and the
/// intersection D itself. Since the maximum is at least the mean,
/// |D|·M >= |A|·|B|. Throws std::invalid_argument on empty input.
ShiftChoice best_intersection_shift(const ResidueSet& a, const ResidueSet& b);

/// Shift l maximizing |D ∩ (-D - 2l)| over [0, M), smallest l on ties, and the
/// symmetric set C = (D + l) ∩ -(D + l), which satisfies |C|·M >= |D|^2.
ShiftChoice best_symmetrization_shift(const ResidueSet& d);

/// Artifacts of the two-shift construction from (A, B) to a symmetric C with
/// C + C ⊆ (A + B) + (j + 2l).
struct PipelineTrace {
  ResidueSet a;
  ResidueSet b;
  Residue j;
  ResidueSet d;
  Residue ell;
  ResidueSet c;

  const Modulus& modulus() const noexcept { return a.modulus(); }
  /// (j + 2l) mod M.
  Residue shift_total() const noexcept;

  BigRational bound_d() const;  // |A||B|/M
  BigRational bound_c() const;  // |D|^2/M
  bool meets_bound_d() const;   // |D|·M >= |A||B|
  bool meets_bound_c() const;   // |C|·M >= |D|^2
  /// Recomputes every structural invariant; used by tests and the CLI.
  bool verify() const;
};

/// Throws std::invalid_argument when A or B is empty, ModulusMismatch when
/// their rings differ.
PipelineTrace build_c(const ResidueSet& a, const ResidueSet& b);

/// Translates a witness in C + C to one in A + B by subtracting j + 2l.
/// Throws std::invalid_argument if `w` is not a witness for C + C, and
/// InvariantViolation if the translate fails to land in A + B.
ApWitness map_witness_back(const ApWitness& w, const PipelineTrace& trace);

/// {"N", "M", "j", "ell", "cardA", "cardB", "cardD", "cardC", "shiftTotal", "C"}.
nlohmann::json to_json(const PipelineTrace& trace);

}  // namespace apsum
