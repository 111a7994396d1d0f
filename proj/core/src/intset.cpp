#include "apsum/intset.hpp"

#include "apsum/bitset.hpp"

namespace apsum {

IntegerSet::IntegerSet(std::vector<std::int64_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

IntegerSet integer_sumset(const IntegerSet& a, const IntegerSet& b) {
  if (a.empty() || b.empty()) return {};
  const std::int64_t lo = a.min() + b.min();
  const std::int64_t span = a.max() + b.max() - lo + 1;
  std::vector<std::int64_t> out;
  if (span <= (std::int64_t{1} << 26)) {
    Bitset hit(static_cast<std::size_t>(span));
    for (auto x : a)
      for (auto y : b) hit.set(static_cast<std::size_t>(x + y - lo));
    hit.for_each_set([&](std::size_t i) { out.push_back(lo + static_cast<std::int64_t>(i)); });
    return IntegerSet(std::move(out));
  }
  out.reserve(a.size() * b.size());
  for (auto x : a)
    for (auto y : b) out.push_back(x + y);
  return IntegerSet(std::move(out));
}

}  // namespace apsum
