#include "apsum/genlab.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <set>
#include <stdexcept>

#include "apsum/errors.hpp"

namespace apsum {

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(what) + ": not a non-negative integer: '" + std::string(text) + "'");
  }
  return v;
}

bool ternary_digits_small(std::uint64_t n) {
  for (; n != 0; n /= 3) {
    if (n % 3 == 2) return false;
  }
  return true;
}

}  // namespace

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) noexcept {
  SplitMix64 salt_mix(salt);
  SplitMix64 mixed(base ^ salt_mix.next());
  return mixed.next();
}

Density Density::parse(std::string_view text) {
  Density d;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    d.num = parse_u64(text, "density");
    d.den = 1;
  } else {
    d.num = parse_u64(text.substr(0, slash), "density numerator");
    d.den = parse_u64(text.substr(slash + 1), "density denominator");
  }
  if (d.den == 0 || d.num == 0 || d.num > d.den) {
    throw std::invalid_argument("density must be a fraction P/Q with 0 < P <= Q, got '" + std::string(text) + "'");
  }
  return d;
}

std::string Density::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::random_density: return "random_density";
    case GeneratorKind::interval: return "interval";
    case GeneratorKind::squares: return "squares";
    case GeneratorKind::ternary_apfree: return "ternary_apfree";
    case GeneratorKind::explicit_set: return "explicit";
  }
  return "interval";
}

GeneratorKind parse_generator_kind(std::string_view text) {
  if (text == "random_density" || text == "random-density" || text == "random") return GeneratorKind::random_density;
  if (text == "interval") return GeneratorKind::interval;
  if (text == "squares") return GeneratorKind::squares;
  if (text == "ternary_apfree" || text == "ternary-apfree") return GeneratorKind::ternary_apfree;
  if (text == "explicit") return GeneratorKind::explicit_set;
  throw std::invalid_argument("unknown generator kind '" + std::string(text) + "'");
}

void GeneratorSpec::validate() const {
  if (n == 0) throw std::invalid_argument("generator N must be at least 1");
  if (kind == GeneratorKind::random_density && (density.den == 0 || density.num == 0 || density.num > density.den)) {
    throw std::invalid_argument("invalid density " + density.str());
  }
  if (kind == GeneratorKind::explicit_set) {
    for (auto v : values) {
      if (v < 1 || static_cast<std::uint64_t>(v) > n) {
        throw std::invalid_argument("explicit value " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      }
    }
  }
}

IntegerSet generate(const GeneratorSpec& spec) {
  spec.validate();
  std::vector<std::int64_t> out;
  const auto n = static_cast<std::int64_t>(spec.n);
  switch (spec.kind) {
    case GeneratorKind::interval:
      for (std::int64_t x = 1; x <= n; ++x) out.push_back(x);
      break;
    case GeneratorKind::squares:
      for (std::int64_t r = 1; r * r <= n; ++r) out.push_back(r * r);
      break;
    case GeneratorKind::ternary_apfree:
      for (std::int64_t x = 1; x <= n; ++x) {
        if (ternary_digits_small(static_cast<std::uint64_t>(x))) out.push_back(x);
      }
      break;
    case GeneratorKind::random_density: {
      SplitMix64 rng(spec.seed);
      for (std::int64_t x = 1; x <= n; ++x) {
        if (rng.below(spec.density.den) < spec.density.num) out.push_back(x);
      }
      break;
    }
    case GeneratorKind::explicit_set:
      out = spec.values;
      break;
  }
  return IntegerSet(std::move(out));
}

nlohmann::json to_json(const GeneratorSpec& spec) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["N"] = spec.n;
  if (spec.kind == GeneratorKind::random_density) {
    j["density"] = spec.density.str();
    j["seed"] = std::to_string(spec.seed);
  }
  if (spec.kind == GeneratorKind::explicit_set) j["values"] = spec.values;
  return j;
}

GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(j.at("kind").get<std::string>());
  spec.n = j.at("N").get<std::uint64_t>();
  if (j.contains("density")) {
    const auto& d = j.at("density");
    spec.density = Density::parse(d.is_string() ? d.get<std::string>() : std::to_string(d.get<std::uint64_t>()));
  }
  if (j.contains("seed")) {
    const auto& s = j.at("seed");
    spec.seed = s.is_string() ? parse_u64(s.get<std::string>(), "seed") : s.get<std::uint64_t>();
  }
  if (j.contains("values")) spec.values = j.at("values").get<std::vector<std::int64_t>>();
  spec.validate();
  return spec;
}

ResidueSet random_symmetric_set(Modulus m, std::size_t size, SplitMix64& rng) {
  const std::uint64_t pairs_available = (m.value() - 1) / 2;
  const bool even_ring = m.value() % 2 == 0;
  const std::size_t pairs = size / 2;
  const bool with_zero = size % 2 == 1;
  if (even_ring || pairs > pairs_available) {
    throw std::invalid_argument("no symmetric set of size " + std::to_string(size) + " in Z_" +
                                std::to_string(m.value()));
  }
  // Partial Fisher-Yates over the pair representatives 1..(M-1)/2.
  std::vector<Residue> reps(pairs_available);
  for (std::size_t i = 0; i < reps.size(); ++i) reps[i] = static_cast<Residue>(i + 1);
  std::vector<Residue> members;
  if (with_zero) members.push_back(0);
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t pick = i + rng.below(reps.size() - i);
    std::swap(reps[i], reps[pick]);
    members.push_back(reps[i]);
    members.push_back(static_cast<Residue>(m.value() - reps[i]));
  }
  return ResidueSet::from_members(m, members);
}

ShiftScan oracle_best_shift(const ResidueSet& a, const ResidueSet& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch(a.modulus().value(), b.modulus().value());
  const std::uint64_t m = a.modulus().value();
  const auto as = a.members();
  const auto bs = b.members();
  ShiftScan best{0, 0};
  std::vector<Residue> shifted;
  std::vector<Residue> common;
  for (std::uint64_t j = 0; j < m; ++j) {
    shifted.clear();
    for (Residue x : as) shifted.push_back(static_cast<Residue>((x + j) % m));
    std::sort(shifted.begin(), shifted.end());
    common.clear();
    std::set_intersection(shifted.begin(), shifted.end(), bs.begin(), bs.end(), std::back_inserter(common));
    if (j == 0 || common.size() > best.cardinality) best = {static_cast<Residue>(j), common.size()};
  }
  return best;
}

BigInt oracle_solution_count(const ResidueSet& c, std::size_t k, std::uint64_t cap) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  const auto members = c.members();
  if (ipow(members.size(), 2 * k) > cap) {
    throw CapExceeded("oracle_solution_count: |C|^(2k) exceeds the enumeration cap");
  }
  if (members.empty()) return 0;
  const auto m = static_cast<std::int64_t>(c.modulus().value());
  const std::size_t width = k - 2;
  std::vector<std::int64_t> chains;  // flattened, one chain per tuple
  std::vector<std::size_t> pos(k, 0);
  std::vector<std::int64_t> y(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) y[i] = members[pos[i]];
    for (std::size_t i = 0; i < width; ++i) chains.push_back((((y[i] + y[i + 2] - 2 * y[i + 1]) % m) + m) % m);
    std::size_t d = 0;
    while (d < k && ++pos[d] == members.size()) pos[d++] = 0;
    if (d == k) break;
  }
  const std::size_t tuples = chains.size() / width;
  std::vector<std::size_t> order(tuples);
  for (std::size_t i = 0; i < tuples; ++i) order[i] = i;
  auto less = [&](std::size_t p, std::size_t q) {
    return std::lexicographical_compare(chains.begin() + p * width, chains.begin() + (p + 1) * width,
                                        chains.begin() + q * width, chains.begin() + (q + 1) * width);
  };
  auto same = [&](std::size_t p, std::size_t q) {
    return std::equal(chains.begin() + p * width, chains.begin() + (p + 1) * width, chains.begin() + q * width);
  };
  std::sort(order.begin(), order.end(), less);
  BigInt total = 0;
  for (std::size_t lo = 0; lo < tuples;) {
    std::size_t hi = lo + 1;
    while (hi < tuples && same(order[lo], order[hi])) ++hi;
    const std::uint64_t group = hi - lo;
    total += BigInt(group) * group;
    lo = hi;
  }
  return total;
}

}  // namespace apsum
