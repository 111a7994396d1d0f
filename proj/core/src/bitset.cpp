#include "apsum/bitset.hpp"

#include <algorithm>

namespace apsum {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + Bitset::kWordBits - 1) / Bitset::kWordBits; }

Bitset::Word reverse_word(Bitset::Word x) noexcept {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  return (x >> 32) | (x << 32);
}

}  // namespace

Bitset::Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

void Bitset::trim() noexcept {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

void Bitset::set_all() noexcept {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  trim();
}

std::size_t Bitset::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Bitset::and_count(const Bitset& other) const noexcept {
  std::size_t n = 0;
  const std::size_t len = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < len; ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return n;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word rhs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~rhs) != 0) return false;
  }
  return true;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  const std::size_t len = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < len; ++i) words_[i] |= other.words_[i];
  trim();
  return *this;
}

// Linear shift towards higher indices; bits pushed past size() are dropped.
Bitset Bitset::shifted_up(std::size_t shift) const {
  Bitset out(size_);
  if (shift >= size_) return out;
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  for (std::size_t i = words_.size(); i-- > ws;) {
    Word w = words_[i - ws] << bs;
    if (bs != 0 && i - ws >= 1) w |= words_[i - ws - 1] >> (kWordBits - bs);
    out.words_[i] = w;
  }
  out.trim();
  return out;
}

Bitset Bitset::shifted_down(std::size_t shift) const {
  Bitset out(size_);
  if (shift >= size_) return out;
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  const std::size_t n = words_.size();
  for (std::size_t i = 0; i + ws < n; ++i) {
    Word w = words_[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < n) w |= words_[i + ws + 1] << (kWordBits - bs);
    out.words_[i] = w;
  }
  return out;
}

Bitset Bitset::rotated(std::size_t shift) const {
  if (size_ == 0) return *this;
  shift %= size_;
  if (shift == 0) return *this;
  Bitset out = shifted_up(shift);
  out |= shifted_down(size_ - shift);
  return out;
}

Bitset Bitset::reflected() const {
  if (size_ == 0) return *this;
  // Full-width reversal maps bit i to (64W - 1 - i); dropping the padding
  // gives i -> size-1-i, and a rotation by one finishes i -> size-i.
  Bitset rev(size_);
  const std::size_t n = words_.size();
  rev.size_ = n * kWordBits;
  for (std::size_t i = 0; i < n; ++i) rev.words_[n - 1 - i] = reverse_word(words_[i]);
  Bitset mirrored = rev.shifted_down(n * kWordBits - size_);
  mirrored.size_ = size_;
  mirrored.trim();
  return mirrored.rotated(1);
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace apsum
