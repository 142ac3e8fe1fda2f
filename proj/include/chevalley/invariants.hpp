#pragma once

// Per (type, p) invariants: nullity r, dual Coxeter number, the maximal
// non-central centralizer dimension s, the ridgeline number v, and the
// semisimple witness in the adjoint form; plus comparison with the table.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/golden_table.hpp"
#include "chevalley/rational.hpp"
#include "chevalley/root_data.hpp"

namespace chevalley {

// Raised for inputs the invariants are not defined for (intolerable p,
// rank one) and for regime-restricted checks called outside their regime.
class Refusal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InvariantsReport {
  RootSystemSpec spec{Family::A, 2};
  std::uint32_t p = 2;
  int m = 0;
  PrimeClass prime_class = PrimeClass::very_good;
  int r = 0;
  int h_dual = 0;
  int s = 0;
  Rational v;
  int min_nilpotent_centralizer = 0;  // dim c(e_theta)
  int long_simple_centralizer = 0;    // dim c(e_alpha), alpha a long simple root
  int center_dim = 0;
  bool form_kernel_is_center = true;
  bool canonical_map_transposed = false;
  // dim c(y_i) in the adjoint form for i = 1..l, and the first maximizer.
  std::vector<int> coweight_centralizers;
  int witness_coweight = 1;
  int witness_centralizer = 0;
};

// Throws Refusal for intolerable p or l < 2.
InvariantsReport compute_report(const RootSystemSpec& spec, std::uint32_t p);

struct RowCheck {
  enum class Status { match, mismatch, skipped };
  Status status = Status::skipped;
  std::optional<GoldenValues> golden;
  std::vector<std::string> mismatches;  // one line per differing field
  std::string note;
};

std::string to_string(RowCheck::Status s);

RowCheck verify_table_row(const InvariantsReport& report);

}  // namespace chevalley
