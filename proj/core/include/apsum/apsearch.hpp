#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "apsum/intset.hpp"
#include "apsum/modring.hpp"

namespace apsum {

/// The progression first, first + diff, ..., first + (length-1)·diff, either
/// over the integers (no modulus) or in Z_M.
///
/// Modular witnesses keep first and diff as canonical residues in [0, M).
/// Integer witnesses may carry a negative diff.
struct ApWitness {
  std::optional<Modulus> modulus;
  std::int64_t first = 0;
  std::int64_t diff = 0;
  std::size_t length = 0;

  bool is_modular() const noexcept { return modulus.has_value(); }
  bool nontrivial() const noexcept;
  /// Generated terms; reduced into [0, M) for modular witnesses.
  std::vector<std::int64_t> terms() const;

  friend bool operator==(const ApWitness&, const ApWitness&) = default;
};

/// True when every generated term lies in the set. Ring kinds must agree.
bool witnesses(const ApWitness& w, const ResidueSet& s);
bool witnesses(const ApWitness& w, const IntegerSet& s);

/// Validated constructors; throw std::invalid_argument if a term is missing
/// from `s`, the progression is trivial, or length < 3.
ApWitness make_modular_witness(std::int64_t first, std::int64_t diff, std::size_t length, const ResidueSet& s);
ApWitness make_integer_witness(std::int64_t first, std::int64_t diff, std::size_t length, const IntegerSet& s);

/// Exhaustive search for a nontrivial k-AP in S ⊆ Z_M, scanning first
/// elements then differences in ascending order. Requires 3 <= k <= M.
std::optional<ApWitness> find_kap_mod(const ResidueSet& s, std::size_t k);

/// Exhaustive search for a k-AP with positive difference; same scan order.
std::optional<ApWitness> find_kap_integers(const IntegerSet& s, std::size_t k);

/// Turns a modular witness for the residue image of S ⊆ [2, 2N] (M = 4N + 1)
/// into a genuine integer progression inside S.
///
/// Consecutive terms of S differ by less than 2N - 1 < M/2 in absolute value,
/// so the congruence class of the difference pins down one integer d'.
/// Throws std::invalid_argument on precondition violations.
ApWitness lift_witness(const ApWitness& w, const IntegerSet& s);

/// {"ring": "mod"|"int", "modulus": M|null, "first", "diff", "length"}.
nlohmann::json to_json(const ApWitness& w);
ApWitness witness_from_json(const nlohmann::json& j);

}  // namespace apsum
