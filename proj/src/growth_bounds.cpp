#include "chevalley/growth_bounds.hpp"

#include <stdexcept>

namespace chevalley {

std::string to_string(Regime r) { return r == Regime::general ? "general" : "rank2_strong"; }

Regime regime_of(const InvariantsReport& rep) {
  return rep.spec.rank == 2 && rep.prime_class == PrimeClass::very_good ? Regime::rank2_strong : Regime::general;
}

namespace {

Rational slope(const InvariantsReport& rep) {
  return regime_of(rep) == Regime::rank2_strong ? Rational(3) : Rational(3) + 4 * rep.v;
}

}  // namespace

Rational dH_bound(const InvariantsReport& rep, int j) {
  if (j < 0) throw std::invalid_argument("index exponent j must be >= 0");
  return Rational(rep.m) + slope(rep) * j;
}

Rational theorem1_exponent_at(const InvariantsReport& rep, const Rational& k) {
  // sum_{i=0}^{k-1} (m + c i) = (c/2) k^2 + (m - c/2) k
  const Rational c = slope(rep);
  return c / 2 * k * k + (Rational(rep.m) - c / 2) * k;
}

Rational ans_exponent(int m, const Rational& k) { return Rational(7, 2) * k * k + Rational(m) * k; }

BoundReport theorem1_exponent(const InvariantsReport& rep, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  BoundReport b;
  b.report = rep;
  b.k = k;
  b.regime = regime_of(rep);
  const Rational c = slope(rep);
  b.quad_coeff = c / 2;
  b.lin_coeff = Rational(rep.m) - c / 2;
  b.exponent = theorem1_exponent_at(rep, Rational(k));
  Rational sum(0);
  for (int i = 0; i < k; ++i) sum += dH_bound(rep, i);
  if (sum != b.exponent) throw std::logic_error("closed-form exponent disagrees with the summation");
  b.ans_exponent = ans_exponent(rep.m, Rational(k));
  b.dH_constant = Rational(rep.m);
  b.dH_slope = c;
  return b;
}

std::vector<ImprovementRow> improvement_table(const InvariantsReport& rep, int k_lo, int k_hi) {
  if (k_lo <= 0 || k_hi < k_lo) throw std::invalid_argument("need 1 <= k_lo <= k_hi");
  std::vector<ImprovementRow> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    const BoundReport b = theorem1_exponent(rep, k);
    rows.push_back({k, b.exponent, b.ans_exponent, b.ans_exponent - b.exponent});
  }
  return rows;
}

}  // namespace chevalley
