#pragma once

#include <cstdint>
#include <vector>

#include "apsum/bitset.hpp"

namespace apsum::ntt {

/// NTT-friendly prime 119 * 2^23 + 1 with primitive root 3.
inline constexpr std::uint64_t kPrime = 998244353;
inline constexpr std::size_t kMaxTransform = std::size_t{1} << 23;

/// Exact cyclic convolution of two indicator vectors of equal length M:
/// out[n] = #{(x, y) : x + y = n (mod M), a[x] = b[y] = 1}.
///
/// Every output is at most M, so one prime larger than M recovers the counts
/// exactly. Throws CapExceeded when 2M - 1 exceeds the largest transform the
/// prime supports.
std::vector<std::uint64_t> cyclic_convolution(const Bitset& a, const Bitset& b);

}  // namespace apsum::ntt
