#pragma once

// Transcription of the table of ridgeline numbers and centralizer
// dimensions, one row per (type, condition on p), formulas in l kept in the
// shape they are printed.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/rational.hpp"
#include "chevalley/root_data.hpp"

namespace chevalley {

struct GoldenValues {
  std::string row_label;  // e.g. "A_l, p | (l+1)"
  int r;
  int h_dual;
  Rational v;
  int min_nilpotent_centralizer;  // m - 2(h^vee - 1)
  int witness_coweight;           // 1-based index of y_i
  int witness_centralizer;
};

struct GoldenRow {
  Family family;
  std::string type_label;
  std::string p_label;
  std::function<bool(int l, std::uint32_t p)> applies;
  std::function<GoldenValues(int l)> values;
};

const std::vector<GoldenRow>& golden_rows();

// The unique applicable row, or nullopt (intolerable p, A_1, ...).
std::optional<GoldenValues> golden_lookup(const RootSystemSpec& spec, std::uint32_t p);

}  // namespace chevalley
