#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "apsum/bitset.hpp"

namespace apsum {

using Residue = std::uint32_t;

/// Size of the residue ring Z_M.
///
/// Moduli used by the pipeline come from an interval bound N and are always
/// M = 4N + 1. Arbitrary moduli are allowed for library use; those carry no
/// interval bound.
class Modulus {
 public:
  /// Largest supported ring size; keeps residues and pairwise sums in 32 bits.
  static constexpr std::uint64_t kMaxValue = (std::uint64_t{1} << 31) - 1;

  static Modulus for_interval(std::uint64_t n);
  static Modulus arbitrary(std::uint64_t m);

  std::uint64_t value() const noexcept { return m_; }
  std::optional<std::uint64_t> interval_bound() const noexcept {
    return n_ == 0 ? std::nullopt : std::optional<std::uint64_t>(n_);
  }

  Residue reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(m_);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<Residue>(r);
  }

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.m_ == b.m_; }

 private:
  Modulus(std::uint64_t m, std::uint64_t n) : m_(m), n_(n) {}
  std::uint64_t m_;
  std::uint64_t n_;
};

/// M = 4N + 1. Throws std::invalid_argument for N = 0.
Modulus make_modulus(std::uint64_t n);

/// Immutable subset of Z_M stored as a dense bit vector of length M.
class ResidueSet {
 public:
  explicit ResidueSet(Modulus modulus);
  /// `members.size()` must equal M.
  ResidueSet(Modulus modulus, Bitset members);

  /// Throws std::out_of_range if any member is >= M. Repeats collapse.
  static ResidueSet from_members(Modulus modulus, std::span<const Residue> members);
  static ResidueSet from_members(Modulus modulus, std::initializer_list<Residue> members) {
    return from_members(modulus, std::span<const Residue>(members.begin(), members.size()));
  }
  static ResidueSet full(Modulus modulus);

  const Modulus& modulus() const noexcept { return modulus_; }
  const Bitset& bits() const noexcept { return bits_; }

  bool contains(Residue r) const noexcept { return r < bits_.size() && bits_.test(r); }
  std::size_t cardinality() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  std::vector<Residue> members() const;

  /// True when S = -S.
  bool is_symmetric() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Modulus modulus_;
  Bitset bits_;
};

/// counts[j] for every shift j in [0, M).
class CorrelationProfile {
 public:
  CorrelationProfile(Modulus modulus, std::vector<std::uint64_t> counts);

  const Modulus& modulus() const noexcept { return modulus_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t operator[](std::size_t shift) const noexcept { return counts_[shift]; }
  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept;

  friend bool operator==(const CorrelationProfile&, const CorrelationProfile&) = default;

 private:
  Modulus modulus_;
  std::vector<std::uint64_t> counts_;
};

enum class CorrelationMethod {
  direct,  // O(|A|·|B|) pair loop
  ntt,     // exact cyclic correlation through a number-theoretic transform
};

ResidueSet reduce_integers(std::span<const std::int64_t> values, Modulus modulus);
ResidueSet negate(const ResidueSet& s);
ResidueSet translate(const ResidueSet& s, std::int64_t shift);
ResidueSet intersect(const ResidueSet& a, const ResidueSet& b);
bool is_subset(const ResidueSet& a, const ResidueSet& b);
ResidueSet sumset(const ResidueSet& s, const ResidueSet& t);

/// counts[j] = |(A + j) ∩ B|.
CorrelationProfile cross_correlation(const ResidueSet& a, const ResidueSet& b,
                                     CorrelationMethod method = CorrelationMethod::direct);

/// r(u) = #{(y, z) in S^2 : y - z = u (mod M)}.
CorrelationProfile difference_representation_counts(const ResidueSet& s,
                                                    CorrelationMethod method = CorrelationMethod::direct);

}  // namespace apsum
