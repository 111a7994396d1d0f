#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "apsum/bigint.hpp"
#include "apsum/intset.hpp"
#include "apsum/modring.hpp"

namespace apsum {

/// SplitMix64 (Steele, Lea, Flood). Fixed algorithm so seeded sets are
/// reproducible across platforms and implementations:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, bound) by rejection; bound must be non-zero.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// Deterministic 64-bit seed derivation: one SplitMix64 step from base ^ mix(salt).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) noexcept;

/// Rational probability num/den in (0, 1].
struct Density {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  /// Parses "P/Q" or a bare integer ("1"). Throws std::invalid_argument
  /// unless 0 < P <= Q.
  static Density parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const Density&, const Density&) = default;
};

enum class GeneratorKind { random_density, interval, squares, ternary_apfree, explicit_set };

std::string_view to_string(GeneratorKind kind) noexcept;
/// Accepts both snake_case and the CLI's dashed spellings ("ternary-apfree",
/// "random", "explicit").
GeneratorKind parse_generator_kind(std::string_view text);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::interval;
  std::uint64_t n = 1;
  Density density;                   // random_density only
  std::uint64_t seed = 0;            // random_density only
  std::vector<std::int64_t> values;  // explicit_set only

  /// Throws std::invalid_argument for N = 0, a bad density, or explicit
  /// values outside [1, N].
  void validate() const;
};

/// Subset of {1, ..., N} described by the spec; identical specs give
/// identical sets.
IntegerSet generate(const GeneratorSpec& spec);

nlohmann::json to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

/// Uniformly chosen symmetric subset of Z_M with exactly `size` elements
/// (0 is included iff size is odd). Throws std::invalid_argument when no
/// such set exists.
ResidueSet random_symmetric_set(Modulus m, std::size_t size, SplitMix64& rng);

struct ShiftScan {
  Residue shift;
  std::size_t cardinality;
  friend bool operator==(const ShiftScan&, const ShiftScan&) = default;
};

/// Min-index argmax of |(A + j) ∩ B| computed with sorted-vector set
/// intersection only; independent of the bitset and correlation code.
ShiftScan oracle_best_shift(const ResidueSet& a, const ResidueSet& b);

inline constexpr std::uint64_t kOracleSolutionCap = 60'466'176;  // 6^10

/// Number of pairs (y, z) in C^k × C^k with equal chain vectors, by
/// enumerating all k-tuples, sorting their chains and summing squared group
/// sizes. Throws CapExceeded when |C|^{2k} > cap.
BigInt oracle_solution_count(const ResidueSet& c, std::size_t k, std::uint64_t cap = kOracleSolutionCap);

}  // namespace apsum
