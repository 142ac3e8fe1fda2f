#include "chevalley/suite.hpp"

#include <algorithm>
#include <sstream>

#include "chevalley/report_io.hpp"
#include "chevalley/structure_cache.hpp"

namespace chevalley {

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {"theorem2", "rank2_strong", "my_estimate", "dual_cox",
                                                 "lemX",     "graded",       "catalogue"};
  return names;
}

std::string text_line(const ViolationReport& r) {
  std::ostringstream os;
  os << r.check << ": " << r.trials_run << " trials, " << r.violations.size() << " violations";
  if (r.min_slack) os << ", min slack " << to_string(*r.min_slack);
  for (const auto& [k, x] : r.stats) os << ", " << k << "=" << x;
  return os.str();
}

SuiteRun run_verify_suites(const RootSystemSpec& spec, std::uint32_t p, const std::vector<std::string>& suites,
                           const TrialConfig& cfg, int graded_n) {
  const InvariantsReport rep = compute_report(spec, p);  // refuses intolerable p
  const LieAlgebraFp g = instantiate(chevalley_structure(spec), p, Flavor::simply_connected);
  const bool rank2 = spec.rank == 2 && rep.prime_class == PrimeClass::very_good;
  const std::vector<std::string>& names = suites.empty() ? all_suites() : suites;
  for (const std::string& s : names) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }

  SuiteRun out;
  nlohmann::json reports = nlohmann::json::array();
  std::ostringstream text;
  for (const std::string& s : names) {
    if ((s == "rank2_strong" || s == "catalogue") && !rank2) {
      if (!suites.empty()) {
        throw Refusal(s + " needs rank 2 and a very good prime; " + spec.name() + " at p = " + std::to_string(p) +
                      " is " + to_string(rep.prime_class));
      }
      continue;
    }
    if (s == "catalogue") {
      const OrbitCatalogue cat = rank2_orbit_catalogue(g);
      out.failed = out.failed || !cat.ok();
      reports.push_back(to_json(cat));
      text << "catalogue: " << (cat.ok() ? "ok" : "MISMATCH");
      for (const auto& e : cat.entries) text << ", " << e.label << "=" << e.computed_centralizer;
      text << "\n";
      continue;
    }
    ViolationReport r;
    if (s == "theorem2") r = check_theorem2(g, rep, cfg);
    else if (s == "rank2_strong") r = check_rank2_strong(g, rep, cfg);
    else if (s == "my_estimate") r = check_my_estimate(g, rep, cfg);
    else if (s == "dual_cox") r = check_dual_cox(g, rep, cfg);
    else if (s == "lemX") r = check_lemX(g, cfg);
    else {
      TrialConfig gc = cfg;
      gc.trials = std::max<std::size_t>(1, cfg.trials / 100);
      r = check_graded_chain(g, rep, graded_n, gc);
    }
    out.failed = out.failed || !r.ok();
    reports.push_back(to_json(r));
    text << text_line(r) << "\n";
  }
  out.document = {{"schema_version", kSchemaVersion}, {"kind", "verify"}, {"invariants", to_json(rep)},
                  {"reports", reports}};
  out.text = text.str();
  return out;
}

}  // namespace chevalley
