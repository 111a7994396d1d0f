#include "apsum/ntt.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include "apsum/errors.hpp"

namespace apsum::ntt {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp != 0) {
    if (exp & 1U) result = result * base % kPrime;
    base = base * base % kPrime;
    exp >>= 1;
  }
  return result;
}

void transform(std::vector<std::uint64_t>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pow_mod(3, (kPrime - 1) / len);
    if (inverse) w = pow_mod(w, kPrime - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::uint64_t u = a[i + k];
        const std::uint64_t v = a[i + k + len / 2] * wn % kPrime;
        a[i + k] = u + v < kPrime ? u + v : u + v - kPrime;
        a[i + k + len / 2] = u >= v ? u - v : u + kPrime - v;
        wn = wn * w % kPrime;
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow_mod(n, kPrime - 2);
    for (auto& x : a) x = x * inv_n % kPrime;
  }
}

std::vector<std::uint64_t> load(const Bitset& bits, std::size_t len) {
  std::vector<std::uint64_t> v(len, 0);
  bits.for_each_set([&](std::size_t i) { v[i] = 1; });
  return v;
}

}  // namespace

std::vector<std::uint64_t> cyclic_convolution(const Bitset& a, const Bitset& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolution: length mismatch");
  const std::size_t m = a.size();
  if (m == 0) return {};
  const std::size_t len = std::bit_ceil(2 * m - 1);
  if (len > kMaxTransform || m >= kPrime) {
    throw CapExceeded("cyclic_convolution: ring of size " + std::to_string(m) + " exceeds the NTT range");
  }
  auto fa = load(a, len);
  auto fb = load(b, len);
  transform(fa, false);
  transform(fb, false);
  for (std::size_t i = 0; i < len; ++i) fa[i] = fa[i] * fb[i] % kPrime;
  transform(fa, true);
  std::vector<std::uint64_t> out(m, 0);
  for (std::size_t i = 0; i + 1 < 2 * m; ++i) out[i % m] += fa[i];
  return out;
}

}  // namespace apsum::ntt
