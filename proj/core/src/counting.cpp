#include "apsum/counting.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>

#include "apsum/errors.hpp"

namespace apsum {

namespace {

__extension__ typedef unsigned __int128 u128;

void require_length(std::size_t k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3, got " + std::to_string(k));
}

BigInt to_big(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(x);
}

// Sums machine-width terms in 128 bits and spills into a BigInt on carry.
class ExactSum {
 public:
  void add(u128 x) {
    const u128 next = low_ + x;
    if (next < low_) {
      spill_ += to_big(low_);
      low_ = x;
    } else {
      low_ = next;
    }
  }
  void add(const BigInt& x) { spill_ += x; }
  BigInt value() const { return spill_ + to_big(low_); }

 private:
  u128 low_ = 0;
  BigInt spill_ = 0;
};

BigInt sum_rows(std::span<const std::uint64_t> r, std::size_t k, std::uint64_t a_begin, std::uint64_t a_end) {
  const std::uint64_t m = r.size();
  ExactSum total;
  for (std::uint64_t a = a_begin; a < a_end; ++a) {
    if (r[a] == 0) continue;
    for (std::uint64_t t = 0; t < m; ++t) {
      u128 prod = r[a];
      bool wide = false;
      BigInt big;
      std::uint64_t idx = a;
      std::size_t i = 1;
      for (; i < k; ++i) {
        idx += t;
        if (idx >= m) idx -= m;
        const std::uint64_t f = r[idx];
        if (f == 0) break;
        if (wide) {
          big *= f;
        } else if (__builtin_mul_overflow(prod, static_cast<u128>(f), &prod)) {
          // Restart this term in arbitrary precision.
          big = r[a];
          std::uint64_t j = a;
          for (std::size_t q = 1; q <= i; ++q) {
            j += t;
            if (j >= m) j -= m;
            big *= r[j];
          }
          wide = true;
        }
      }
      if (i < k) continue;
      if (wide) {
        total.add(big);
      } else {
        total.add(prod);
      }
    }
  }
  return total.value();
}

}  // namespace

std::map<ChainVector, std::uint64_t> lambda_bruteforce(const ResidueSet& c, std::size_t k, std::uint64_t cap) {
  require_length(k);
  const auto members = c.members();
  if (ipow(members.size(), k) > cap) {
    throw CapExceeded("lambda_bruteforce: |C|^k exceeds the enumeration cap of " + std::to_string(cap));
  }
  std::map<ChainVector, std::uint64_t> lambda;
  if (members.empty()) return lambda;
  const Modulus& mod = c.modulus();
  std::vector<std::size_t> pos(k, 0);
  ChainVector chain(k - 2);
  while (true) {
    for (std::size_t i = 0; i + 2 < k; ++i) {
      const std::int64_t v = static_cast<std::int64_t>(members[pos[i]]) + members[pos[i + 2]] -
                             2 * static_cast<std::int64_t>(members[pos[i + 1]]);
      chain[i] = mod.reduce(v);
    }
    ++lambda[chain];
    std::size_t d = 0;
    while (d < k && ++pos[d] == members.size()) pos[d++] = 0;
    if (d == k) break;
  }
  return lambda;
}

BigInt ap_weighted_solution_count(const CorrelationProfile& r, std::size_t k, unsigned threads) {
  require_length(k);
  const std::uint64_t m = r.size();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(m, 256))));
  if (threads == 1) return sum_rows(r.counts(), k, 0, m);
  std::vector<std::future<BigInt>> parts;
  const std::uint64_t chunk = (m + threads - 1) / threads;
  for (std::uint64_t lo = 0; lo < m; lo += chunk) {
    const std::uint64_t hi = std::min(m, lo + chunk);
    parts.push_back(std::async(std::launch::async, [&r, k, lo, hi] { return sum_rows(r.counts(), k, lo, hi); }));
  }
  BigInt total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

BigRational s_lower_bound(std::uint64_t card_c, std::uint64_t m, std::size_t k) {
  require_length(k);
  return BigRational(ipow(card_c, 2 * k), ipow(m, k - 2));
}

BigInt trivial_upper_bound(std::uint64_t card_c, std::size_t k) {
  require_length(k);
  return ipow(card_c, k + 1);
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::certified ? "certified" : "inconclusive"; }

SolutionCountReport certify(const ResidueSet& c, std::size_t k, unsigned threads) {
  require_length(k);
  if (!c.is_symmetric()) throw std::invalid_argument("certify: C must satisfy C = -C");
  const std::uint64_t m = c.modulus().value();
  const std::uint64_t card = c.cardinality();
  BigInt s = ap_weighted_solution_count(difference_representation_counts(c), k, threads);
  BigInt upper = trivial_upper_bound(card, k);
  const bool sufficient = ipow(card, k - 1) > ipow(m, k - 2);
  const Verdict verdict = s > upper ? Verdict::certified : Verdict::inconclusive;
  return SolutionCountReport{c.modulus(), k, card, std::move(s), s_lower_bound(card, m, k), std::move(upper),
                             sufficient, verdict};
}

nlohmann::json to_json(const SolutionCountReport& report) {
  nlohmann::json j;
  const auto bound = report.modulus.interval_bound();
  j["N"] = bound ? nlohmann::json(std::to_string(*bound)) : nlohmann::json(nullptr);
  j["M"] = std::to_string(report.modulus.value());
  j["k"] = std::to_string(report.k);
  j["cardC"] = std::to_string(report.card_c);
  j["S_exact"] = to_decimal(report.s_exact);
  j["S_lower"] = to_decimal(report.s_lower);
  j["trivial_upper"] = to_decimal(report.trivial_upper);
  j["sufficient_condition"] = report.sufficient_condition;
  j["verdict"] = std::string(to_string(report.verdict));
  return j;
}

}  // namespace apsum
