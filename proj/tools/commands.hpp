#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apsum/apsearch.hpp"
#include "apsum/counting.hpp"
#include "apsum/genlab.hpp"
#include "apsum/intset.hpp"
#include "apsum/pipeline.hpp"

namespace apsum::cli {

/// Process exit codes. These are a stable contract.
enum ExitCode : int {
  kExitWitness = 0,            // success; for pipeline, an AP witness was produced
  kExitError = 1,              // invalid input, I/O failure, or budget refusal
  kExitNoneFound = 2,          // inconclusive and exhaustive search found nothing
  kExitSearchInfeasible = 3,   // inconclusive and the ring is too large to search
};

inline constexpr std::uint64_t kDefaultBudgetOps = 10'000'000'000ULL;
inline constexpr std::uint64_t kDefaultSearchMaxM = 2001;

struct Limits {
  std::uint64_t budget_ops = kDefaultBudgetOps;     // refuse when M^2·k exceeds this
  std::uint64_t search_max_m = kDefaultSearchMaxM;  // largest M searched without a certificate
  unsigned threads = 1;
};

/// Thrown when the M^2·k work estimate exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_budget(std::uint64_t n, std::size_t k, const Limits& limits);

enum class SearchScope { none, sumset_cc, sumset_ab };

struct PipelineOutcome {
  PipelineTrace trace;
  SolutionCountReport report;
  SearchScope scope = SearchScope::none;
  std::optional<ApWitness> witness_cc;   // in C + C, mod M
  std::optional<ApWitness> witness_ab;   // in the residue image of A + B
  std::optional<ApWitness> witness_int;  // in the integer sumset A + B
  int exit_code = kExitError;
};

/// Full chain for A, B ⊆ {1, ..., N}: reduce mod 4N+1, build C, certify, and
/// search. A certified C + C is always searched and its witness mapped back
/// and lifted; otherwise the residue image of A + B is searched directly when
/// M <= limits.search_max_m.
PipelineOutcome run_pipeline(const IntegerSet& a, const IntegerSet& b, std::uint64_t n, std::size_t k,
                             const Limits& limits = {});

nlohmann::json to_json(const PipelineOutcome& outcome);

struct SweepConfig {
  std::vector<std::uint64_t> ns;
  std::vector<std::size_t> ks{3};
  std::vector<Density> densities{Density{1, 2}};
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;  // elapsed_ms is 0 unless set, keeping output byte-stable
  Limits limits;
};

SweepConfig sweep_config_from_json(const nlohmann::json& j);

struct SweepRow {
  std::uint64_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::uint64_t card_a = 0;
  std::uint64_t card_b = 0;
  std::uint64_t card_d = 0;
  std::uint64_t card_c = 0;
  std::string s_exact = "0";
  std::string trivial_upper = "0";
  bool sufficient_condition = false;
  Verdict verdict = Verdict::inconclusive;
  bool ap_found = false;
  std::optional<std::int64_t> witness_first;
  std::optional<std::int64_t> witness_diff;
  std::uint64_t elapsed_ms = 0;
};

/// Seeds for trial `trial` of density index `density_index` at bound `n`.
/// A is generated from the returned seed, B from derive_seed(seed, 1).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t n, std::size_t density_index, std::uint64_t trial);

SweepRow row_from_outcome(const PipelineOutcome& outcome, std::uint64_t n, std::size_t k, std::uint64_t seed);

/// One row per (N, k, density, trial) in that order, independent of `jobs`.
/// Throws BudgetExceeded before doing any work if some (N, k) is too large.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "N,k,seed,cardA,cardB,cardD,cardC,S_exact,trivial_upper,sufficient_condition,verdict,ap_found,"
    "witness_first,witness_diff,elapsed_ms";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
nlohmann::json to_json(const SweepRow& row);

/// Entry point shared by the binary and in-process tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apsum::cli
