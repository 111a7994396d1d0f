#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace apsum {

/// Finite set of integers kept sorted and duplicate-free.
class IntegerSet {
 public:
  IntegerSet() = default;
  /// Sorts and removes repeats.
  explicit IntegerSet(std::vector<std::int64_t> values);
  IntegerSet(std::initializer_list<std::int64_t> values) : IntegerSet(std::vector<std::int64_t>(values)) {}

  bool contains(std::int64_t x) const noexcept { return std::binary_search(values_.begin(), values_.end(), x); }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t min() const { return values_.front(); }
  std::int64_t max() const { return values_.back(); }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// {a + b : a in A, b in B} over the integers.
IntegerSet integer_sumset(const IntegerSet& a, const IntegerSet& b);

}  // namespace apsum
