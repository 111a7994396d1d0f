#include "apsum/apsearch.hpp"

#include <stdexcept>
#include <string>

#include "apsum/errors.hpp"

namespace apsum {

namespace {

void require_length(std::size_t k) {
  if (k < 3) throw std::invalid_argument("progression length k must be at least 3, got " + std::to_string(k));
}

}  // namespace

bool ApWitness::nontrivial() const noexcept {
  if (modulus) return modulus->reduce(diff) != 0;
  return diff != 0;
}

std::vector<std::int64_t> ApWitness::terms() const {
  std::vector<std::int64_t> out;
  out.reserve(length);
  if (modulus) {
    const auto m = static_cast<std::int64_t>(modulus->value());
    const std::int64_t start = modulus->reduce(first);
    const std::int64_t step = modulus->reduce(diff);
    std::int64_t t = start;
    for (std::size_t i = 0; i < length; ++i) {
      out.push_back(t);
      t += step;
      if (t >= m) t -= m;
    }
  } else {
    for (std::size_t i = 0; i < length; ++i) out.push_back(first + static_cast<std::int64_t>(i) * diff);
  }
  return out;
}

bool witnesses(const ApWitness& w, const ResidueSet& s) {
  if (!w.modulus || !(*w.modulus == s.modulus())) return false;
  for (auto t : w.terms()) {
    if (!s.contains(static_cast<Residue>(t))) return false;
  }
  return true;
}

bool witnesses(const ApWitness& w, const IntegerSet& s) {
  if (w.modulus) return false;
  for (auto t : w.terms()) {
    if (!s.contains(t)) return false;
  }
  return true;
}

ApWitness make_modular_witness(std::int64_t first, std::int64_t diff, std::size_t length, const ResidueSet& s) {
  require_length(length);
  const Modulus& m = s.modulus();
  ApWitness w{m, m.reduce(first), m.reduce(diff), length};
  if (!w.nontrivial()) throw std::invalid_argument("modular witness has difference 0 mod M");
  if (!witnesses(w, s)) throw std::invalid_argument("modular witness has a term outside the set");
  return w;
}

ApWitness make_integer_witness(std::int64_t first, std::int64_t diff, std::size_t length, const IntegerSet& s) {
  require_length(length);
  ApWitness w{std::nullopt, first, diff, length};
  if (!w.nontrivial()) throw std::invalid_argument("integer witness has difference 0");
  if (!witnesses(w, s)) throw std::invalid_argument("integer witness has a term outside the set");
  return w;
}

std::optional<ApWitness> find_kap_mod(const ResidueSet& s, std::size_t k) {
  require_length(k);
  const std::uint64_t m = s.modulus().value();
  if (k > m) throw std::invalid_argument("progression length k exceeds the modulus");
  const Bitset& bits = s.bits();
  const auto members = s.members();
  for (Residue first : members) {
    for (std::uint64_t d = 1; d < m; ++d) {
      std::uint64_t t = first;
      std::size_t i = 1;
      for (; i < k; ++i) {
        t += d;
        if (t >= m) t -= m;
        if (!bits.test(t)) break;
      }
      if (i == k) return ApWitness{s.modulus(), first, static_cast<std::int64_t>(d), k};
    }
  }
  return std::nullopt;
}

std::optional<ApWitness> find_kap_integers(const IntegerSet& s, std::size_t k) {
  require_length(k);
  const auto v = s.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const std::int64_t d = v[j] - v[i];
      std::size_t n = 2;
      for (; n < k; ++n) {
        if (!s.contains(v[i] + static_cast<std::int64_t>(n) * d)) break;
      }
      if (n == k) return ApWitness{std::nullopt, v[i], d, k};
    }
  }
  return std::nullopt;
}

ApWitness lift_witness(const ApWitness& w, const IntegerSet& s) {
  if (!w.modulus) throw std::invalid_argument("lift_witness: witness is already over the integers");
  require_length(w.length);
  const Modulus& mod = *w.modulus;
  const std::uint64_t m = mod.value();
  std::uint64_t n = 0;
  if (auto bound = mod.interval_bound()) {
    n = *bound;
  } else if (m % 4 == 1 && m > 1) {
    n = (m - 1) / 4;
  } else {
    throw std::invalid_argument("lift_witness: modulus " + std::to_string(m) + " is not of the form 4N+1");
  }
  const auto hi = static_cast<std::int64_t>(2 * n);
  for (auto x : s) {
    if (x < 2 || x > hi) {
      throw std::invalid_argument("lift_witness: element " + std::to_string(x) + " outside [2, " +
                                  std::to_string(hi) + "]");
    }
  }
  if (!w.nontrivial()) throw std::invalid_argument("lift_witness: witness is trivial");
  std::vector<std::int64_t> values(s.begin(), s.end());
  if (!witnesses(w, reduce_integers(values, mod))) {
    throw std::invalid_argument("lift_witness: witness does not lie in the residue image of the set");
  }

  // Elements of [2, 2N] have distinct residues, so the preimage is unique.
  const Residue first_residue = mod.reduce(w.first);
  std::int64_t start = 0;
  for (auto x : s) {
    if (mod.reduce(x) == first_residue) {
      start = x;
      break;
    }
  }
  auto step = static_cast<std::int64_t>(mod.reduce(w.diff));
  if (static_cast<std::uint64_t>(step) > m / 2) step -= static_cast<std::int64_t>(m);

  ApWitness lifted{std::nullopt, start, step, w.length};
  if (!witnesses(lifted, s)) throw InvariantViolation("lift_witness: lifted progression left the set");
  return lifted;
}

nlohmann::json to_json(const ApWitness& w) {
  nlohmann::json j;
  j["ring"] = w.modulus ? "mod" : "int";
  j["modulus"] = w.modulus ? nlohmann::json(w.modulus->value()) : nlohmann::json(nullptr);
  j["first"] = w.first;
  j["diff"] = w.diff;
  j["length"] = w.length;
  return j;
}

ApWitness witness_from_json(const nlohmann::json& j) {
  ApWitness w;
  const auto ring = j.at("ring").get<std::string>();
  if (ring == "mod") {
    w.modulus = Modulus::arbitrary(j.at("modulus").get<std::uint64_t>());
  } else if (ring != "int") {
    throw std::invalid_argument("witness ring must be \"mod\" or \"int\"");
  }
  w.first = j.at("first").get<std::int64_t>();
  w.diff = j.at("diff").get<std::int64_t>();
  w.length = j.at("length").get<std::size_t>();
  return w;
}

}  // namespace apsum
