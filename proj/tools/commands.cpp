#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "apsum/errors.hpp"
#include "apsum/setio.hpp"

namespace apsum::cli {

namespace {

std::vector<std::int64_t> as_signed(const IntegerSet& s) { return {s.begin(), s.end()}; }

IntegerSet load_integer_set(const std::string& path, std::uint64_t n, const char* name) {
  const SetFile file = read_set_file(path);
  if (file.modulus) {
    throw std::invalid_argument(std::string(name) + ": expected an integer set, found a '# modulus' header");
  }
  std::vector<std::int64_t> values;
  for (auto v : file.values) {
    if (v < 1 || v > n) {
      throw std::invalid_argument(std::string(name) + ": element " + std::to_string(v) + " outside {1, ..., " +
                                  std::to_string(n) + "}");
    }
    values.push_back(static_cast<std::int64_t>(v));
  }
  return IntegerSet(std::move(values));
}

std::string_view scope_name(SearchScope s) {
  switch (s) {
    case SearchScope::sumset_cc: return "C+C";
    case SearchScope::sumset_ab: return "A+B";
    case SearchScope::none: break;
  }
  return "none";
}

nlohmann::json optional_witness(const std::optional<ApWitness>& w) {
  return w ? to_json(*w) : nlohmann::json(nullptr);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
  file << text;
  if (!file) throw std::runtime_error("write error on '" + out_path + "'");
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad list element '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Density> parse_density_list(const std::string& text) {
  std::vector<Density> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Density::parse(item));
  }
  return out;
}

}  // namespace

void check_budget(std::uint64_t n, std::size_t k, const Limits& limits) {
  const BigInt m = BigInt(4) * n + 1;
  const BigInt estimate = m * m * k;
  if (estimate > limits.budget_ops) {
    throw BudgetExceeded("work estimate M^2*k = " + to_decimal(estimate) + " for N=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + " exceeds --budget-ops " + std::to_string(limits.budget_ops));
  }
}

PipelineOutcome run_pipeline(const IntegerSet& a, const IntegerSet& b, std::uint64_t n, std::size_t k,
                             const Limits& limits) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  const Modulus mod = make_modulus(n);
  if (k > mod.value()) throw std::invalid_argument("k exceeds the modulus 4N+1");
  for (const IntegerSet* s : {&a, &b}) {
    if (!s->empty() && (s->min() < 1 || static_cast<std::uint64_t>(s->max()) > n)) {
      throw std::invalid_argument("set element outside {1, ..., " + std::to_string(n) + "}");
    }
  }
  check_budget(n, k, limits);

  const ResidueSet ra = reduce_integers(as_signed(a), mod);
  const ResidueSet rb = reduce_integers(as_signed(b), mod);
  PipelineTrace trace = build_c(ra, rb);
  SolutionCountReport report = certify(trace.c, k, limits.threads);
  PipelineOutcome outcome{std::move(trace), std::move(report), SearchScope::none, {}, {}, {}, kExitError};

  const IntegerSet int_sum = integer_sumset(a, b);
  if (outcome.report.verdict == Verdict::certified) {
    outcome.scope = SearchScope::sumset_cc;
    outcome.witness_cc = find_kap_mod(sumset(outcome.trace.c, outcome.trace.c), k);
    if (!outcome.witness_cc) throw InvariantViolation("certified C + C has no nontrivial progression");
    outcome.witness_ab = map_witness_back(*outcome.witness_cc, outcome.trace);
  } else if (mod.value() <= limits.search_max_m) {
    outcome.scope = SearchScope::sumset_ab;
    outcome.witness_ab = find_kap_mod(reduce_integers(as_signed(int_sum), mod), k);
  }
  if (outcome.witness_ab) {
    outcome.witness_int = lift_witness(*outcome.witness_ab, int_sum);
    outcome.exit_code = kExitWitness;
  } else {
    outcome.exit_code = outcome.scope == SearchScope::none ? kExitSearchInfeasible : kExitNoneFound;
  }
  return outcome;
}

nlohmann::json to_json(const PipelineOutcome& outcome) {
  nlohmann::json j;
  j["trace"] = to_json(outcome.trace);
  j["report"] = to_json(outcome.report);
  j["search_scope"] = std::string(scope_name(outcome.scope));
  j["witness_cc"] = optional_witness(outcome.witness_cc);
  j["witness_ab"] = optional_witness(outcome.witness_ab);
  j["witness_int"] = optional_witness(outcome.witness_int);
  switch (outcome.exit_code) {
    case kExitWitness: j["status"] = "witness"; break;
    case kExitNoneFound: j["status"] = "none_found_within_exhaustive_range"; break;
    case kExitSearchInfeasible: j["status"] = "search_infeasible"; break;
    default: j["status"] = "error"; break;
  }
  j["exit_code"] = outcome.exit_code;
  return j;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig c;
  if (j.contains("N")) c.ns = j.at("N").get<std::vector<std::uint64_t>>();
  if (j.contains("k")) c.ks = j.at("k").get<std::vector<std::size_t>>();
  if (j.contains("densities")) {
    c.densities.clear();
    for (const auto& d : j.at("densities")) {
      c.densities.push_back(Density::parse(d.is_string() ? d.get<std::string>() : std::to_string(d.get<std::uint64_t>())));
    }
  }
  if (j.contains("trials")) c.trials = j.at("trials").get<std::uint64_t>();
  if (j.contains("seed")) {
    const auto& s = j.at("seed");
    c.seed = s.is_string() ? std::stoull(s.get<std::string>()) : s.get<std::uint64_t>();
  }
  if (j.contains("jobs")) c.jobs = j.at("jobs").get<unsigned>();
  if (j.contains("budget_ops")) c.limits.budget_ops = j.at("budget_ops").get<std::uint64_t>();
  if (j.contains("search_max_m")) c.limits.search_max_m = j.at("search_max_m").get<std::uint64_t>();
  return c;
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t n, std::size_t density_index, std::uint64_t trial) {
  return derive_seed(derive_seed(derive_seed(base, n), density_index), trial);
}

SweepRow row_from_outcome(const PipelineOutcome& o, std::uint64_t n, std::size_t k, std::uint64_t seed) {
  SweepRow row;
  row.n = n;
  row.k = k;
  row.seed = seed;
  row.card_a = o.trace.a.cardinality();
  row.card_b = o.trace.b.cardinality();
  row.card_d = o.trace.d.cardinality();
  row.card_c = o.trace.c.cardinality();
  row.s_exact = to_decimal(o.report.s_exact);
  row.trivial_upper = to_decimal(o.report.trivial_upper);
  row.sufficient_condition = o.report.sufficient_condition;
  row.verdict = o.report.verdict;
  row.ap_found = o.witness_int.has_value();
  if (o.witness_int) {
    row.witness_first = o.witness_int->first;
    row.witness_diff = o.witness_int->diff;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  for (auto n : config.ns) {
    for (auto k : config.ks) {
      if (k < 3) throw std::invalid_argument("sweep: k must be at least 3");
      check_budget(n, k, config.limits);
    }
  }
  struct Task {
    std::uint64_t n;
    std::size_t k;
    std::uint64_t seed;
    Density density;
  };
  std::vector<Task> tasks;
  for (auto n : config.ns)
    for (auto k : config.ks)
      for (std::size_t di = 0; di < config.densities.size(); ++di)
        for (std::uint64_t t = 0; t < config.trials; ++t)
          tasks.push_back({n, k, trial_seed(config.seed, n, di, t), config.densities[di]});

  std::vector<SweepRow> rows(tasks.size());
  auto run_one = [&](const Task& task) {
    const auto start = std::chrono::steady_clock::now();
    GeneratorSpec spec;
    spec.kind = GeneratorKind::random_density;
    spec.n = task.n;
    spec.density = task.density;
    spec.seed = task.seed;
    const IntegerSet a = generate(spec);
    spec.seed = derive_seed(task.seed, 1);
    const IntegerSet b = generate(spec);
    SweepRow row;
    if (a.empty() || b.empty()) {
      row.n = task.n;
      row.k = task.k;
      row.seed = task.seed;
      row.card_a = a.size();
      row.card_b = b.size();
    } else {
      Limits limits = config.limits;
      limits.threads = 1;
      row = row_from_outcome(run_pipeline(a, b, task.n, task.k, limits), task.n, task.k, task.seed);
    }
    if (config.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      row.elapsed_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    }
    return row;
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = run_one(tasks[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        try {
          rows[i] = run_one(tasks[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.seed << ',' << r.card_a << ',' << r.card_b << ',' << r.card_d << ','
        << r.card_c << ',' << r.s_exact << ',' << r.trivial_upper << ',' << (r.sufficient_condition ? "true" : "false")
        << ',' << to_string(r.verdict) << ',' << (r.ap_found ? "true" : "false") << ',';
    if (r.witness_first) out << *r.witness_first;
    out << ',';
    if (r.witness_diff) out << *r.witness_diff;
    out << ',' << r.elapsed_ms << '\n';
  }
}

nlohmann::json to_json(const SweepRow& r) {
  nlohmann::json j;
  j["N"] = r.n;
  j["k"] = r.k;
  j["seed"] = std::to_string(r.seed);
  j["cardA"] = r.card_a;
  j["cardB"] = r.card_b;
  j["cardD"] = r.card_d;
  j["cardC"] = r.card_c;
  j["S_exact"] = r.s_exact;
  j["trivial_upper"] = r.trivial_upper;
  j["sufficient_condition"] = r.sufficient_condition;
  j["verdict"] = std::string(to_string(r.verdict));
  j["ap_found"] = r.ap_found;
  j["witness_first"] = r.witness_first ? nlohmann::json(*r.witness_first) : nlohmann::json(nullptr);
  j["witness_diff"] = r.witness_diff ? nlohmann::json(*r.witness_diff) : nlohmann::json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"apsum: arithmetic progressions in sumsets, certified by exact counting"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a subset of {1, ..., N} as a set file");
  std::string gen_kind = "interval";
  std::uint64_t gen_n = 0;
  std::string gen_density = "1/2";
  std::uint64_t gen_seed = 0;
  std::string gen_values;
  std::string gen_spec_inline;
  std::string gen_spec_file;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "random | interval | squares | ternary-apfree | explicit");
  gen->add_option("--n", gen_n, "Interval bound N");
  gen->add_option("--density", gen_density, "Inclusion probability P/Q (random only)");
  gen->add_option("--seed", gen_seed, "64-bit seed (random only)");
  gen->add_option("--values", gen_values, "Comma-separated elements (explicit only)");
  gen->add_option("--spec", gen_spec_inline, "GeneratorSpec as inline JSON");
  gen->add_option("--spec-file", gen_spec_file, "GeneratorSpec JSON file");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "Build C from A and B, certify, and produce an AP witness in A + B");
  std::string pipe_a;
  std::string pipe_b;
  std::uint64_t pipe_n = 0;
  std::size_t pipe_k = 3;
  std::string pipe_out;
  std::string pipe_format = "json";
  Limits pipe_limits;
  pipe->add_option("--a", pipe_a, "Set file for A")->required();
  pipe->add_option("--b", pipe_b, "Set file for B")->required();
  pipe->add_option("--n", pipe_n, "Interval bound N (M = 4N+1)")->required();
  pipe->add_option("--k", pipe_k, "Progression length k >= 3");
  pipe->add_option("--out", pipe_out, "Output file (default stdout)");
  pipe->add_option("--format", pipe_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  pipe->add_option("--budget-ops", pipe_limits.budget_ops, "Refuse when M^2*k exceeds this");
  pipe->add_option("--search-max-m", pipe_limits.search_max_m, "Largest M searched without a certificate");
  pipe->add_option("--threads", pipe_limits.threads, "Worker threads for the solution count");

  // certify
  auto* cert = app.add_subcommand("certify", "Run the solution-count certificate on a symmetric residue set");
  std::string cert_c;
  std::uint64_t cert_n = 0;
  std::size_t cert_k = 3;
  std::string cert_out;
  cert->add_option("--c", cert_c, "Set file for C (needs '# modulus M' or --n)")->required();
  cert->add_option("--n", cert_n, "Interval bound N (M = 4N+1) when the file has no header");
  cert->add_option("--k", cert_k, "Progression length k >= 3");
  cert->add_option("--out", cert_out, "Output file (default stdout)");

  // search
  auto* search = app.add_subcommand("search", "Exhaustively search a set file for a k-term progression");
  std::string search_set;
  std::size_t search_k = 3;
  search->add_option("--set", search_set, "Set file; a '# modulus M' header searches Z_M")->required();
  search->add_option("--k", search_k, "Progression length k >= 3");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Seeded random trials over N, k and density; emits one row per trial");
  std::string sweep_config;
  std::string sweep_ns;
  std::string sweep_ks;
  std::string sweep_densities;
  std::uint64_t sweep_trials = 1;
  std::uint64_t sweep_seed = 0;
  unsigned sweep_jobs = 1;
  bool sweep_timing = false;
  std::string sweep_out;
  std::string sweep_format = "csv";
  std::uint64_t sweep_budget = kDefaultBudgetOps;
  std::uint64_t sweep_search_max_m = kDefaultSearchMaxM;
  sweep->add_option("--config", sweep_config, "Sweep config JSON file");
  sweep->add_option("--ns", sweep_ns, "Comma-separated N values");
  sweep->add_option("--ks", sweep_ks, "Comma-separated k values");
  sweep->add_option("--densities", sweep_densities, "Comma-separated densities P/Q");
  sweep->add_option("--trials", sweep_trials, "Trials per (N, k, density)");
  sweep->add_option("--seed", sweep_seed, "Base seed");
  sweep->add_option("--jobs", sweep_jobs, "Parallel trials");
  sweep->add_flag("--timing", sweep_timing, "Record wall-clock elapsed_ms (output is then not byte-stable)");
  sweep->add_option("--out", sweep_out, "Output file (default stdout)");
  sweep->add_option("--format", sweep_format, "csv | json")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--budget-ops", sweep_budget, "Refuse when M^2*k exceeds this");
  sweep->add_option("--search-max-m", sweep_search_max_m, "Largest M searched without a certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitError;
  }

  try {
    if (gen->parsed()) {
      GeneratorSpec spec;
      if (!gen_spec_inline.empty()) {
        spec = generator_spec_from_json(nlohmann::json::parse(gen_spec_inline));
      } else if (!gen_spec_file.empty()) {
        std::ifstream in(gen_spec_file);
        if (!in) throw std::runtime_error("cannot open '" + gen_spec_file + "'");
        spec = generator_spec_from_json(nlohmann::json::parse(in));
      } else {
        spec.kind = parse_generator_kind(gen_kind);
        spec.n = gen_n;
        if (spec.kind == GeneratorKind::random_density) {
          spec.density = Density::parse(gen_density);
          spec.seed = gen_seed;
        }
        if (spec.kind == GeneratorKind::explicit_set) {
          for (auto v : parse_u64_list(gen_values)) spec.values.push_back(static_cast<std::int64_t>(v));
        }
      }
      const IntegerSet set = generate(spec);
      std::vector<std::uint64_t> values(set.begin(), set.end());
      std::ostringstream text;
      write_set_file(text, values);
      emit(text.str(), gen_out, out);
      return kExitWitness;
    }

    if (pipe->parsed()) {
      const IntegerSet a = load_integer_set(pipe_a, pipe_n, "A");
      const IntegerSet b = load_integer_set(pipe_b, pipe_n, "B");
      if (a.empty() || b.empty()) throw std::invalid_argument("A and B must be non-empty");
      const PipelineOutcome outcome = run_pipeline(a, b, pipe_n, pipe_k, pipe_limits);
      std::ostringstream text;
      if (pipe_format == "csv") {
        write_csv(text, {row_from_outcome(outcome, pipe_n, pipe_k, 0)});
      } else {
        text << to_json(outcome).dump(2) << '\n';
      }
      emit(text.str(), pipe_out, out);
      return outcome.exit_code;
    }

    if (cert->parsed()) {
      const SetFile file = read_set_file(cert_c);
      std::optional<Modulus> mod;
      if (cert_n != 0) mod = make_modulus(cert_n);
      if (file.modulus) {
        if (mod && mod->value() != *file.modulus) throw std::invalid_argument("--n disagrees with the file's modulus");
        if (!mod) mod = Modulus::arbitrary(*file.modulus);
      }
      if (!mod) throw std::invalid_argument("certify: give --n or a '# modulus M' header");
      std::vector<std::int64_t> values(file.values.begin(), file.values.end());
      for (auto v : values) {
        if (static_cast<std::uint64_t>(v) >= mod->value()) throw std::invalid_argument("C has a value >= M");
      }
      const SolutionCountReport report = certify(reduce_integers(values, *mod), cert_k);
      emit(to_json(report).dump(2) + "\n", cert_out, out);
      return report.verdict == Verdict::certified ? kExitWitness : kExitNoneFound;
    }

    if (search->parsed()) {
      const SetFile file = read_set_file(search_set);
      std::vector<std::int64_t> values(file.values.begin(), file.values.end());
      std::optional<ApWitness> w;
      if (file.modulus) {
        w = find_kap_mod(reduce_integers(values, Modulus::arbitrary(*file.modulus)), search_k);
      } else {
        w = find_kap_integers(IntegerSet(values), search_k);
      }
      out << (w ? to_json(*w) : nlohmann::json(nullptr)).dump() << '\n';
      return w ? kExitWitness : kExitNoneFound;
    }

    if (sweep->parsed()) {
      SweepConfig config;
      if (!sweep_config.empty()) {
        std::ifstream in(sweep_config);
        if (!in) throw std::runtime_error("cannot open '" + sweep_config + "'");
        config = sweep_config_from_json(nlohmann::json::parse(in));
      }
      if (sweep->count("--ns") != 0) config.ns = parse_u64_list(sweep_ns);
      if (sweep->count("--ks") != 0) {
        config.ks.clear();
        for (auto k : parse_u64_list(sweep_ks)) config.ks.push_back(static_cast<std::size_t>(k));
      }
      if (sweep->count("--densities") != 0) config.densities = parse_density_list(sweep_densities);
      if (sweep->count("--trials") != 0) config.trials = sweep_trials;
      if (sweep->count("--seed") != 0) config.seed = sweep_seed;
      if (sweep->count("--jobs") != 0) config.jobs = sweep_jobs;
      if (sweep->count("--budget-ops") != 0) config.limits.budget_ops = sweep_budget;
      if (sweep->count("--search-max-m") != 0) config.limits.search_max_m = sweep_search_max_m;
      config.timing = sweep_timing;
      const auto rows = run_sweep(config);
      std::ostringstream text;
      if (sweep_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        text << arr.dump(2) << '\n';
      } else {
        write_csv(text, rows);
      }
      emit(text.str(), sweep_out, out);
      return kExitWitness;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace apsum::cli
