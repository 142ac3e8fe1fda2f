#include "chevalley/report_io.hpp"

#include <istream>
#include <sstream>

namespace chevalley {

using nlohmann::json;

namespace {

json spec_json(const RootSystemSpec& s) {
  return {{"family", std::string(1, family_letter(s.family))}, {"rank", s.rank}, {"type", s.name()}};
}

json config_json(const TrialConfig& c) {
  json j = {{"seed", c.seed}, {"trials", c.trials}, {"policy", to_string(c.policy)}};
  j["fixed_dims"] = c.fixed_dims ? json::array({c.fixed_dims->first, c.fixed_dims->second}) : json(nullptr);
  return j;
}

}  // namespace

json to_json(const InvariantsReport& r) {
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "invariants"},
      {"root_system", spec_json(r.spec)},
      {"p", r.p},
      {"m", r.m},
      {"prime_class", to_string(r.prime_class)},
      {"r", r.r},
      {"h_dual", r.h_dual},
      {"s", r.s},
      {"v", to_string(r.v)},
      {"m_minus_2_h_dual_minus_1", r.m - 2 * (r.h_dual - 1)},
      {"min_nilpotent_centralizer", r.min_nilpotent_centralizer},
      {"long_simple_centralizer", r.long_simple_centralizer},
      {"center_dim", r.center_dim},
      {"form_kernel_is_center", r.form_kernel_is_center},
      {"canonical_map_convention", r.canonical_map_transposed ? "transposed" : "c_ij = alpha_j(h_i)"},
      {"coweight_centralizers", r.coweight_centralizers},
      {"semisimple_witness", {{"coweight", "y" + std::to_string(r.witness_coweight)},
                              {"centralizer_dim", r.witness_centralizer}}},
  };
}

json to_json(const RowCheck& c) {
  json j = {{"status", to_string(c.status)}, {"mismatches", c.mismatches}, {"note", c.note}};
  if (c.golden) {
    const GoldenValues& g = *c.golden;
    j["table_row"] = {{"row", g.row_label},
                      {"r", g.r},
                      {"h_dual", g.h_dual},
                      {"v", to_string(g.v)},
                      {"m_minus_2_h_dual_minus_1", g.min_nilpotent_centralizer},
                      {"witness", "y" + std::to_string(g.witness_coweight)},
                      {"witness_centralizer", g.witness_centralizer}};
  }
  return j;
}

json to_json(const BoundReport& b) {
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "bound"},
      {"root_system", spec_json(b.report.spec)},
      {"p", b.report.p},
      {"m", b.report.m},
      {"v", to_string(b.report.v)},
      {"k", b.k},
      {"regime", to_string(b.regime)},
      {"exponent", to_string(b.exponent)},
      {"quad_coeff", to_string(b.quad_coeff)},
      {"lin_coeff", to_string(b.lin_coeff)},
      {"ans_exponent", to_string(b.ans_exponent)},
      {"dH_coefficients", {to_string(b.dH_constant), to_string(b.dH_slope)}},
  };
}

json to_json(const ImprovementRow& row) {
  return {{"k", row.k},
          {"exponent_a_pk", to_string(row.exponent)},
          {"ans_exponent_s_pk", to_string(row.ans_exponent)},
          {"difference", to_string(row.difference)}};
}

json to_json(const ViolationReport& v) {
  json violations = json::array();
  for (const Violation& x : v.violations) {
    violations.push_back({{"trial", x.trial},
                          {"what", x.what},
                          {"dim_u", x.dim_u},
                          {"dim_v", x.dim_v},
                          {"cod_uv", x.cod_uv},
                          {"bound", to_string(x.bound)},
                          {"u", x.u_rows},
                          {"v", x.v_rows}});
  }
  json stats = json::object();
  for (const auto& [k, x] : v.stats) stats[k] = x;
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "violations"},
      {"check", v.check},
      {"root_system", spec_json(v.spec)},
      {"p", v.p},
      {"config", config_json(v.config)},
      {"trials_run", v.trials_run},
      {"violation_count", v.violations.size()},
      {"min_slack", v.min_slack ? json(to_string(*v.min_slack)) : json(nullptr)},
      {"stats", stats},
      {"violations", violations},
  };
}

json to_json(const OrbitCatalogue& c) {
  json entries = json::array();
  for (const auto& e : c.entries) {
    entries.push_back({{"element", e.label},
                       {"expected_centralizer", e.expected_centralizer},
                       {"centralizer", e.computed_centralizer}});
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "orbit_catalogue"},
          {"root_system", spec_json(c.spec)},
          {"p", c.p},
          {"ok", c.ok()},
          {"entries", entries}};
}

std::string csv_header() { return "type,p,r,h_dual,v,m_minus_2_h_dual_minus_1,y,dim_c_y"; }

std::string csv_row(const InvariantsReport& r) {
  std::ostringstream os;
  os << r.spec.name() << ',' << r.p << ',' << r.r << ',' << r.h_dual << ',' << to_string(r.v) << ','
     << r.m - 2 * (r.h_dual - 1) << ",y" << r.witness_coweight << ',' << r.witness_centralizer;
  return os.str();
}

std::vector<CsvTableRow> parse_csv_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) throw std::invalid_argument("missing or wrong CSV header");
  std::vector<CsvTableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 8 || f[6].size() < 2 || f[6][0] != 'y') throw std::invalid_argument("bad CSV row: " + line);
    rows.push_back({f[0], static_cast<std::uint32_t>(std::stoul(f[1])), std::stoi(f[2]), std::stoi(f[3]),
                    parse_rational(f[4]), std::stoi(f[5]), std::stoi(f[6].substr(1)), std::stoi(f[7])});
  }
  return rows;
}

std::string improvement_csv_header() { return "k,exponent_a_pk,ans_exponent_s_pk,difference"; }

std::string csv_row(const ImprovementRow& row) {
  return std::to_string(row.k) + "," + to_string(row.exponent) + "," + to_string(row.ans_exponent) + "," +
         to_string(row.difference);
}

}  // namespace chevalley
