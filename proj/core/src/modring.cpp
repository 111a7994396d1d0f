#include "apsum/modring.hpp"

#include <stdexcept>
#include <string>

#include "apsum/errors.hpp"
#include "apsum/ntt.hpp"

namespace apsum {

namespace {

void require_same_ring(const ResidueSet& a, const ResidueSet& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch(a.modulus().value(), b.modulus().value());
}

}  // namespace

Modulus Modulus::for_interval(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("interval bound N must be at least 1");
  if (n > (kMaxValue - 1) / 4) throw std::invalid_argument("interval bound N too large: " + std::to_string(n));
  return Modulus(4 * n + 1, n);
}

Modulus Modulus::arbitrary(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be at least 1");
  if (m > kMaxValue) throw std::invalid_argument("modulus too large: " + std::to_string(m));
  return Modulus(m, 0);
}

Modulus make_modulus(std::uint64_t n) { return Modulus::for_interval(n); }

ResidueSet::ResidueSet(Modulus modulus) : modulus_(modulus), bits_(modulus.value()) {}

ResidueSet::ResidueSet(Modulus modulus, Bitset members) : modulus_(modulus), bits_(std::move(members)) {
  if (bits_.size() != modulus_.value()) {
    throw std::invalid_argument("bitset length " + std::to_string(bits_.size()) + " does not match modulus " +
                                std::to_string(modulus_.value()));
  }
}

ResidueSet ResidueSet::from_members(Modulus modulus, std::span<const Residue> members) {
  Bitset bits(modulus.value());
  for (Residue r : members) {
    if (r >= modulus.value()) {
      throw std::out_of_range("residue " + std::to_string(r) + " outside [0, " + std::to_string(modulus.value()) + ")");
    }
    bits.set(r);
  }
  return ResidueSet(modulus, std::move(bits));
}

ResidueSet ResidueSet::full(Modulus modulus) {
  Bitset bits(modulus.value());
  bits.set_all();
  return ResidueSet(modulus, std::move(bits));
}

std::vector<Residue> ResidueSet::members() const {
  std::vector<Residue> out;
  out.reserve(cardinality());
  bits_.for_each_set([&](std::size_t i) { out.push_back(static_cast<Residue>(i)); });
  return out;
}

bool ResidueSet::is_symmetric() const { return bits_.reflected() == bits_; }

CorrelationProfile::CorrelationProfile(Modulus modulus, std::vector<std::uint64_t> counts)
    : modulus_(modulus), counts_(std::move(counts)) {
  if (counts_.size() != modulus_.value()) throw std::invalid_argument("profile length does not match modulus");
}

std::uint64_t CorrelationProfile::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

ResidueSet reduce_integers(std::span<const std::int64_t> values, Modulus modulus) {
  Bitset bits(modulus.value());
  for (auto v : values) bits.set(modulus.reduce(v));
  return ResidueSet(modulus, std::move(bits));
}

ResidueSet negate(const ResidueSet& s) { return ResidueSet(s.modulus(), s.bits().reflected()); }

ResidueSet translate(const ResidueSet& s, std::int64_t shift) {
  return ResidueSet(s.modulus(), s.bits().rotated(s.modulus().reduce(shift)));
}

ResidueSet intersect(const ResidueSet& a, const ResidueSet& b) {
  require_same_ring(a, b);
  return ResidueSet(a.modulus(), a.bits() & b.bits());
}

bool is_subset(const ResidueSet& a, const ResidueSet& b) {
  require_same_ring(a, b);
  return a.bits().is_subset_of(b.bits());
}

ResidueSet sumset(const ResidueSet& s, const ResidueSet& t) {
  require_same_ring(s, t);
  // Rotate the larger operand once per element of the smaller one.
  const bool s_smaller = s.cardinality() <= t.cardinality();
  const ResidueSet& small = s_smaller ? s : t;
  const ResidueSet& large = s_smaller ? t : s;
  Bitset acc(s.modulus().value());
  const std::size_t m = s.modulus().value();
  small.bits().for_each_set([&](std::size_t x) {
    if (acc.count() == m) return;
    acc |= large.bits().rotated(x);
  });
  return ResidueSet(s.modulus(), std::move(acc));
}

CorrelationProfile cross_correlation(const ResidueSet& a, const ResidueSet& b, CorrelationMethod method) {
  require_same_ring(a, b);
  const std::uint64_t m = a.modulus().value();
  if (method == CorrelationMethod::ntt) {
    // counts[j] = sum_x [-x in A] [j - x in B], a cyclic convolution of -A with B.
    return CorrelationProfile(a.modulus(), ntt::cyclic_convolution(a.bits().reflected(), b.bits()));
  }
  std::vector<std::uint64_t> counts(m, 0);
  const auto bs = b.members();
  a.bits().for_each_set([&](std::size_t x) {
    for (Residue y : bs) {
      const std::uint64_t j = y >= x ? y - x : y + m - x;
      ++counts[j];
    }
  });
  return CorrelationProfile(a.modulus(), std::move(counts));
}

CorrelationProfile difference_representation_counts(const ResidueSet& s, CorrelationMethod method) {
  // |(S + u) ∩ S| counts pairs (z, y) with z + u = y.
  return cross_correlation(s, s, method);
}

}  // namespace apsum
