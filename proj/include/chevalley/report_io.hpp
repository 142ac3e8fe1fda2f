#pragma once

// JSON and CSV renderings of reports. Rationals are "num/den" strings;
// every JSON document carries schema_version.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevalley/growth_bounds.hpp"
#include "chevalley/invariants.hpp"
#include "chevalley/verifier.hpp"

namespace chevalley {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const InvariantsReport& r);
nlohmann::json to_json(const RowCheck& c);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const ImprovementRow& row);
nlohmann::json to_json(const ViolationReport& v);
nlohmann::json to_json(const OrbitCatalogue& c);

// Columns in table order: type, p, r, h_dual, v, m-2(h-1), y, dim c(y).
std::string csv_header();
std::string csv_row(const InvariantsReport& r);

struct CsvTableRow {
  std::string type;
  std::uint32_t p;
  int r;
  int h_dual;
  Rational v;
  int min_nilpotent_centralizer;
  int witness_coweight;
  int witness_centralizer;
};
// Parses output of csv_header() + csv_row(...) lines; throws on bad input.
std::vector<CsvTableRow> parse_csv_table(std::istream& in);

std::string improvement_csv_header();
std::string csv_row(const ImprovementRow& row);

}  // namespace chevalley
