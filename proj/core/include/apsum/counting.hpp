#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "apsum/bigint.hpp"
#include "apsum/modring.hpp"

namespace apsum {

/// Second-difference vector (y_i + y_{i+2} - 2·y_{i+1} mod M) of a k-tuple.
using ChainVector = std::vector<Residue>;

inline constexpr std::uint64_t kDefaultLambdaCap = 10'000'000;

/// lambda(n) for every chain vector n with a non-zero count: the number of
/// k-tuples over C whose chain equals n. Absent keys have count zero.
/// Throws CapExceeded when |C|^k > cap, std::invalid_argument when k < 3.
std::map<ChainVector, std::uint64_t> lambda_bruteforce(const ResidueSet& c, std::size_t k,
                                                       std::uint64_t cap = kDefaultLambdaCap);

/// S = sum over (a, t) in Z_M^2 of prod_{i<k} r(a + i·t).
///
/// Two k-tuples y, z share a chain vector exactly when y - z is an
/// arithmetic progression mod M, so with r the difference-representation
/// profile of C this equals sum_n lambda(n)^2. Cost O(M^2·k); the (a, t)
/// plane is split across `threads` workers and summed exactly.
BigInt ap_weighted_solution_count(const CorrelationProfile& r, std::size_t k, unsigned threads = 1);

/// |C|^{2k} / M^{k-2}.
BigRational s_lower_bound(std::uint64_t card_c, std::uint64_t m, std::size_t k);

/// |C|^{k+1}: the most solutions that can come from constant progressions.
BigInt trivial_upper_bound(std::uint64_t card_c, std::size_t k);

enum class Verdict { certified, inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct SolutionCountReport {
  Modulus modulus;
  std::size_t k;
  std::uint64_t card_c;
  BigInt s_exact;
  BigRational s_lower;
  BigInt trivial_upper;
  bool sufficient_condition;  // |C|^{k-1} > M^{k-2}
  Verdict verdict;            // certified iff s_exact > trivial_upper

  bool meets_lower_bound() const { return BigRational(s_exact) >= s_lower; }
};

/// Requires C = -C and k >= 3 (std::invalid_argument otherwise). A certified
/// verdict guarantees a nontrivial k-AP in C + C.
SolutionCountReport certify(const ResidueSet& c, std::size_t k, unsigned threads = 1);

/// All integers are emitted as decimal strings; S_lower as "p/q".
nlohmann::json to_json(const SolutionCountReport& report);

}  // namespace apsum
