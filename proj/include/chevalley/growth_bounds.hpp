#pragma once

// Exponents of the subgroup-growth bounds as exact rationals. Nothing here
// models the pro-p group itself; only the formulas are evaluated.

#include <vector>

#include "chevalley/invariants.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

enum class Regime { general, rank2_strong };

std::string to_string(Regime r);

// rank2_strong iff l = 2 and p is very good.
Regime regime_of(const InvariantsReport& rep);

struct BoundReport {
  InvariantsReport report;
  int k = 1;
  Regime regime = Regime::general;
  Rational exponent;       // a_{p^k}(G(1)) <= p^exponent
  Rational quad_coeff;
  Rational lin_coeff;
  Rational ans_exponent;   // the earlier bound, which counts s_{p^k}
  Rational dH_constant;    // d(H) <= dH_constant + dH_slope * j
  Rational dH_slope;
};

// Throws std::invalid_argument for k <= 0. The closed form is checked
// against the summation sum_{i<k} dH_bound(i).
BoundReport theorem1_exponent(const InvariantsReport& rep, int k);
// The closed form at a rational k.
Rational theorem1_exponent_at(const InvariantsReport& rep, const Rational& k);

Rational dH_bound(const InvariantsReport& rep, int j);
Rational ans_exponent(int m, const Rational& k);

struct ImprovementRow {
  int k;
  Rational exponent;        // bounds a_{p^k}
  Rational ans_exponent;    // bounds s_{p^k}
  Rational difference;      // ans - exponent
};

std::vector<ImprovementRow> improvement_table(const InvariantsReport& rep, int k_lo, int k_hi);

}  // namespace chevalley
