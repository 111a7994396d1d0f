#include "apsum/pipeline.hpp"

#include <stdexcept>

#include "apsum/errors.hpp"

namespace apsum {

namespace {

void require_nonempty(const ResidueSet& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
}

}  // namespace

ShiftChoice best_intersection_shift(const ResidueSet& a, const ResidueSet& b) {
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  const auto profile = cross_correlation(a, b);
  std::size_t best = 0;
  for (std::size_t j = 1; j < profile.size(); ++j) {
    if (profile[j] > profile[best]) best = j;
  }
  const auto j = static_cast<Residue>(best);
  return {j, intersect(translate(a, j), b)};
}

ShiftChoice best_symmetrization_shift(const ResidueSet& d) {
  require_nonempty(d, "D");
  const std::uint64_t m = d.modulus().value();
  const Bitset neg = d.bits().reflected();
  // |D ∩ (-D - 2l)|, scanned directly by rotating -D.
  std::size_t best_count = 0;
  Residue best = 0;
  for (std::uint64_t ell = 0; ell < m; ++ell) {
    const std::uint64_t back = (m - (2 * ell) % m) % m;
    const std::size_t c = d.bits().and_count(neg.rotated(back));
    if (c > best_count) {
      best_count = c;
      best = static_cast<Residue>(ell);
    }
  }
  const ResidueSet moved = translate(d, best);
  return {best, intersect(moved, negate(moved))};
}

Residue PipelineTrace::shift_total() const noexcept {
  const std::uint64_t m = modulus().value();
  return static_cast<Residue>((j + 2 * static_cast<std::uint64_t>(ell)) % m);
}

BigRational PipelineTrace::bound_d() const {
  return BigRational(BigInt(a.cardinality()) * b.cardinality(), BigInt(modulus().value()));
}

BigRational PipelineTrace::bound_c() const {
  return BigRational(BigInt(d.cardinality()) * d.cardinality(), BigInt(modulus().value()));
}

bool PipelineTrace::meets_bound_d() const {
  return BigInt(d.cardinality()) * modulus().value() >= BigInt(a.cardinality()) * b.cardinality();
}

bool PipelineTrace::meets_bound_c() const {
  return BigInt(c.cardinality()) * modulus().value() >= BigInt(d.cardinality()) * d.cardinality();
}

bool PipelineTrace::verify() const {
  if (d != intersect(translate(a, j), b)) return false;
  const ResidueSet moved = translate(d, ell);
  if (c != intersect(moved, negate(moved))) return false;
  if (!c.is_symmetric()) return false;
  if (!meets_bound_d() || !meets_bound_c()) return false;
  return is_subset(sumset(c, c), translate(sumset(a, b), shift_total()));
}

PipelineTrace build_c(const ResidueSet& a, const ResidueSet& b) {
  auto [j, d] = best_intersection_shift(a, b);
  auto [ell, c] = best_symmetrization_shift(d);
  return PipelineTrace{a, b, j, std::move(d), ell, std::move(c)};
}

ApWitness map_witness_back(const ApWitness& w, const PipelineTrace& trace) {
  if (!w.modulus || !(*w.modulus == trace.modulus())) {
    throw std::invalid_argument("map_witness_back: witness is not in the trace's ring");
  }
  if (!witnesses(w, sumset(trace.c, trace.c))) {
    throw std::invalid_argument("map_witness_back: witness does not lie in C + C");
  }
  const Modulus& m = trace.modulus();
  ApWitness mapped{m, m.reduce(w.first - static_cast<std::int64_t>(trace.shift_total())), m.reduce(w.diff),
                   w.length};
  if (!witnesses(mapped, sumset(trace.a, trace.b))) {
    throw InvariantViolation("map_witness_back: translated witness is not in A + B; trace is inconsistent");
  }
  return mapped;
}

nlohmann::json to_json(const PipelineTrace& trace) {
  nlohmann::json j;
  const auto bound = trace.modulus().interval_bound();
  j["N"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
  j["M"] = trace.modulus().value();
  j["j"] = trace.j;
  j["ell"] = trace.ell;
  j["cardA"] = trace.a.cardinality();
  j["cardB"] = trace.b.cardinality();
  j["cardD"] = trace.d.cardinality();
  j["cardC"] = trace.c.cardinality();
  j["shiftTotal"] = trace.shift_total();
  j["C"] = trace.c.members();
  return j;
}

}  // namespace apsum
