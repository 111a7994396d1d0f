#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace apsum {

/// Fixed-length dense bit vector with cyclic operations.
///
/// Bits beyond size() in the last word are always zero; every mutating
/// operation re-establishes that, so word-level popcounts and comparisons
/// never see garbage.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set_all() noexcept;

  std::size_t count() const noexcept;
  bool none() const noexcept;

  /// popcount(*this & other) without materializing the intersection.
  std::size_t and_count(const Bitset& other) const noexcept;
  bool is_subset_of(const Bitset& other) const noexcept;

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  friend Bitset operator&(Bitset lhs, const Bitset& rhs) noexcept { return lhs &= rhs; }
  friend Bitset operator|(Bitset lhs, const Bitset& rhs) noexcept { return lhs |= rhs; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// Bit i moves to (i + shift) mod size().
  Bitset rotated(std::size_t shift) const;
  /// Bit i moves to (size() - i) mod size(), i.e. negation in Z_size.
  Bitset reflected() const;

  template <typename F>
  void for_each_set(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;

 private:
  void trim() noexcept;
  Bitset shifted_up(std::size_t shift) const;
  Bitset shifted_down(std::size_t shift) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace apsum
