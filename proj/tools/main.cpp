// chevalley: invariants, table reproduction, growth-bound evaluation and
// randomized verification for Chevalley Lie algebras over F_p.
//
// Exit status: 0 ok, 1 a theorem-backed check failed, 2 usage error or
// refusal, 3 the conjecture search found a witness.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chevalley/growth_bounds.hpp"
#include "chevalley/report_io.hpp"
#include "chevalley/structure_cache.hpp"
#include "chevalley/suite.hpp"
#include "chevalley/verifier.hpp"

using namespace chevalley;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kWitness = 3;

struct Common {
  std::string family;
  int rank = 0;
  std::uint32_t p = 0;
  std::string format = "text";
  std::string out;
};

struct VerifyOpts {
  std::size_t trials = 0;  // 0: per-type default
  std::uint64_t seed = kDefaultSeed;
  std::string policy = "boundary";
  unsigned threads = 1;
  std::vector<std::size_t> dims;
  std::vector<std::string> suites;
  int graded_n = 4;
};

void add_type(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.family, "A B C D E F G")->required();
  sub->add_option("--rank", c.rank, "rank l")->required()->check(CLI::PositiveNumber);
  sub->add_option("--p", c.p, "prime")->required();
}

void add_output(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  sub->add_option("--out", c.out, "write to file instead of stdout");
}

void add_trials(CLI::App* sub, VerifyOpts& v) {
  sub->add_option("--trials", v.trials, "trials per check (default 10000 up to rank 4, else 1000)");
  sub->add_option("--seed", v.seed, "master seed")->capture_default_str();
  sub->add_option("--policy", v.policy, "dimension sampling")->check(CLI::IsMember({"uniform", "boundary"}));
  sub->add_option("--threads", v.threads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 256u));
  sub->add_option("--dims", v.dims, "fixed dim U and dim V")->expected(2);
}

RootSystemSpec spec_of(const Common& c) {
  const RootSystemSpec spec{parse_family(c.family), c.rank};
  RootSystem::build(spec);  // validates admissibility
  if (!is_prime(c.p)) throw std::invalid_argument(std::to_string(c.p) + " is not prime");
  return spec;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

TrialConfig config_of(const VerifyOpts& v, const RootSystemSpec& spec) {
  TrialConfig cfg;
  cfg.seed = v.seed;
  cfg.trials = v.trials ? v.trials : default_trials(spec);
  cfg.policy = parse_policy(v.policy);
  cfg.threads = v.threads;
  if (!v.dims.empty()) cfg.fixed_dims = std::make_pair(v.dims[0], v.dims[1]);
  return cfg;
}

int run_info(const Common& c) {
  const RootSystemSpec spec = spec_of(c);
  const InvariantsReport rep = compute_report(spec, c.p);
  const RowCheck check = verify_table_row(rep);
  if (c.format == "json") {
    json j = to_json(rep);
    j["table_check"] = to_json(check);
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    emit(c, csv_header() + "\n" + csv_row(rep) + "\n");
  } else {
    std::ostringstream os;
    os << spec.name() << " over F_" << c.p << " (" << to_string(rep.prime_class) << ")\n"
       << "  m = " << rep.m << ", r = " << rep.r << ", h_dual = " << rep.h_dual << ", s = " << rep.s
       << ", v = " << to_string(rep.v) << "\n"
       << "  m - 2(h_dual - 1) = " << rep.m - 2 * (rep.h_dual - 1) << ", witness y" << rep.witness_coweight
       << " with dim c = " << rep.witness_centralizer << "\n"
       << "  table: " << to_string(check.status);
    for (const auto& mm : check.mismatches) os << "\n    " << mm;
    if (!check.note.empty()) os << " (" << check.note << ")";
    os << "\n";
    emit(c, os.str());
  }
  return check.status == RowCheck::Status::mismatch ? kViolation : kOk;
}

int run_table(const Common& c, int max_rank, const std::vector<std::uint32_t>& primes) {
  std::vector<RootSystemSpec> specs;
  for (int l = 2; l <= max_rank; ++l) specs.push_back({Family::A, l});
  for (int l = 3; l <= max_rank; ++l) specs.push_back({Family::B, l});
  for (int l = 2; l <= max_rank; ++l) specs.push_back({Family::C, l});
  for (int l = 4; l <= max_rank; ++l) specs.push_back({Family::D, l});
  if (max_rank >= 2) specs.push_back({Family::G, 2});
  if (max_rank >= 4) specs.push_back({Family::F, 4});
  for (int l = 6; l <= std::min(max_rank, 8); ++l) specs.push_back({Family::E, l});

  std::ostringstream csv, text;
  json rows = json::array();
  csv << csv_header() << "\n";
  bool mismatch = false;
  for (const auto& spec : specs) {
    for (std::uint32_t p : primes) {
      if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
      if (classify_prime(chevalley_structure(spec)->roots(), p) == PrimeClass::intolerable) continue;
      const InvariantsReport rep = compute_report(spec, p);
      const RowCheck check = verify_table_row(rep);
      mismatch = mismatch || check.status == RowCheck::Status::mismatch;
      csv << csv_row(rep) << "\n";
      json j = to_json(rep);
      j["table_check"] = to_json(check);
      rows.push_back(j);
      text << csv_row(rep) << "  " << to_string(check.status) << "\n";
    }
  }
  if (c.format == "json") {
    emit(c, json{{"schema_version", kSchemaVersion}, {"kind", "table"}, {"rows", rows}}.dump(2) + "\n");
  } else if (c.format == "csv") {
    emit(c, csv.str());
  } else {
    emit(c, text.str());
  }
  return mismatch ? kViolation : kOk;
}

int run_bound(const Common& c, int k, int k_max) {
  const RootSystemSpec spec = spec_of(c);
  const InvariantsReport rep = compute_report(spec, c.p);
  if (k_max < k) k_max = k;
  if (c.format == "json") {
    json rows = json::array();
    for (int kk = k; kk <= k_max; ++kk) rows.push_back(to_json(theorem1_exponent(rep, kk)));
    json table = json::array();
    for (const auto& row : improvement_table(rep, k, k_max)) table.push_back(to_json(row));
    emit(c, json{{"schema_version", kSchemaVersion}, {"kind", "bounds"}, {"rows", rows}, {"comparison", table}}.dump(2) +
                "\n");
  } else if (c.format == "csv") {
    std::string s = improvement_csv_header() + ",regime\n";
    for (const auto& row : improvement_table(rep, k, k_max)) s += csv_row(row) + "," + to_string(regime_of(rep)) + "\n";
    emit(c, s);
  } else {
    std::ostringstream os;
    for (int kk = k; kk <= k_max; ++kk) {
      const BoundReport b = theorem1_exponent(rep, kk);
      os << spec.name() << " p=" << c.p << " k=" << kk << " regime " << to_string(b.regime) << ": exponent "
         << to_string(b.exponent) << " (quad " << to_string(b.quad_coeff) << ", lin " << to_string(b.lin_coeff)
         << "); earlier bound on s_{p^k}: " << to_string(b.ans_exponent) << "\n";
    }
    emit(c, os.str());
  }
  return kOk;
}

int run_verify(const Common& c, const VerifyOpts& v) {
  const RootSystemSpec spec = spec_of(c);
  const SuiteRun run = run_verify_suites(spec, c.p, v.suites, config_of(v, spec), v.graded_n);
  emit(c, c.format == "json" ? run.document.dump(2) + "\n" : run.text);
  return run.failed ? kViolation : kOk;
}

int run_search(const Common& c, const VerifyOpts& v) {
  const RootSystemSpec spec = spec_of(c);
  const InvariantsReport rep = compute_report(spec, c.p);
  const LieAlgebraFp g = instantiate(chevalley_structure(spec), c.p, Flavor::simply_connected);
  const ViolationReport r = search_conjecture(g, rep, config_of(v, spec));
  if (c.format == "json") {
    emit(c, to_json(r).dump(2) + "\n");
  } else {
    emit(c, text_line(r) + "\n");
  }
  return r.violations.empty() ? kOk : kWitness;
}

int run_cache(const std::string& dir_flag, const std::string& family, int rank, bool all) {
  std::filesystem::path dir;
  if (!dir_flag.empty()) {
    dir = dir_flag;
  } else if (auto d = cache_dir_from_env()) {
    dir = *d;
  } else {
    throw std::invalid_argument(std::string("no cache directory: pass --dir or set ") + kCacheEnvVar);
  }
  std::vector<RootSystemSpec> specs;
  if (all) {
    for (int l = 1; l <= 8; ++l) specs.push_back({Family::A, l});
    for (int l = 3; l <= 8; ++l) specs.push_back({Family::B, l});
    for (int l = 2; l <= 8; ++l) specs.push_back({Family::C, l});
    for (int l = 4; l <= 8; ++l) specs.push_back({Family::D, l});
    specs.insert(specs.end(), {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}});
  } else {
    if (family.empty() || rank <= 0) throw std::invalid_argument("cache needs --family and --rank, or --all");
    specs.push_back({parse_family(family), rank});
  }
  for (const auto& spec : specs) {
    std::optional<ChevalleyStructure> cs;
    try {
      cs = load_structure(spec, dir);
    } catch (const CacheError& e) {
      std::cout << spec.name() << ": " << e.what() << ", rebuilding\n";
    }
    if (cs) {
      std::cout << spec.name() << ": valid entry in " << cache_file(dir, spec).string() << "\n";
      continue;
    }
    save_structure(build_structure_constants(RootSystem::build(spec)), dir);
    if (!load_structure(spec, dir)) throw CacheError("entry for " + spec.name() + " did not persist");
    std::cout << spec.name() << ": written to " << cache_file(dir, spec).string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chevalley Lie algebras over F_p: invariants, bounds and randomized checks"};
  app.require_subcommand(1);

  Common info_c, table_c, bound_c, verify_c, search_c;
  auto* info = app.add_subcommand("info", "invariants of one type at one prime");
  add_type(info, info_c);
  add_output(info, info_c, {"text", "json", "csv"});

  auto* table = app.add_subcommand("table", "recompute the table of invariants and compare");
  int max_rank = 8;
  std::vector<std::uint32_t> primes = {2, 3, 5, 7};
  table->add_option("--max-rank", max_rank, "largest rank")->check(CLI::Range(2, 8))->capture_default_str();
  table->add_option("--primes", primes, "primes")->delimiter(',');
  add_output(table, table_c, {"text", "json", "csv"});

  auto* bound = app.add_subcommand("bound", "growth-bound exponents");
  add_type(bound, bound_c);
  int k = 1, k_max = 0;
  bound->add_option("--k", k, "k (or first k)")->check(CLI::PositiveNumber);
  bound->add_option("--k-max", k_max, "last k of a range");
  add_output(bound, bound_c, {"text", "json", "csv"});

  VerifyOpts verify_o, search_o;
  auto* verify = app.add_subcommand("verify", "randomized verification suites");
  add_type(verify, verify_c);
  add_trials(verify, verify_o);
  verify->add_option("--suite", verify_o.suites, "suites to run (default: all applicable)")
      ->delimiter(',')
      ->check(CLI::IsMember(all_suites()));
  verify->add_option("--graded-n", verify_o.graded_n, "truncation degree of the graded check")
      ->check(CLI::Range(2, 16));
  add_output(verify, verify_c, {"text", "json"});

  auto* search = app.add_subcommand("search", "look for counterexamples to the rank >= 3 conjecture");
  add_type(search, search_c);
  add_trials(search, search_o);
  add_output(search, search_c, {"text", "json"});

  auto* cache = app.add_subcommand("cache", std::string("populate the structure-constant cache ($") + kCacheEnvVar + ")");
  std::string cache_dir, cache_family;
  int cache_rank = 0;
  bool cache_all = false;
  cache->add_option("--dir", cache_dir, "cache directory");
  cache->add_option("--family", cache_family, "family");
  cache->add_option("--rank", cache_rank, "rank");
  cache->add_flag("--all", cache_all, "every type up to rank 8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return run_info(info_c);
    if (*table) return run_table(table_c, max_rank, primes);
    if (*bound) return run_bound(bound_c, k, k_max);
    if (*verify) return run_verify(verify_c, verify_o);
    if (*search) return run_search(search_c, search_o);
    if (*cache) return run_cache(cache_dir, cache_family, cache_rank, cache_all);
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
