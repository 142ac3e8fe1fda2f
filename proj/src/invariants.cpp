#include "chevalley/invariants.hpp"

#include <algorithm>

#include "chevalley/lie_algebra.hpp"
#include "chevalley/structure_cache.hpp"

namespace chevalley {

InvariantsReport compute_report(const RootSystemSpec& spec, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (spec.rank < 2) throw Refusal("rank 1 is excluded: invariants need l >= 2");
  const auto cs = chevalley_structure(spec);
  const RootSystem& rs = cs->roots();
  InvariantsReport rep;
  rep.spec = spec;
  rep.p = p;
  rep.m = cs->dimension();
  rep.prime_class = classify_prime(rs, p);
  if (rep.prime_class == PrimeClass::intolerable) {
    throw Refusal("p = " + std::to_string(p) + " is intolerable for " + spec.name() +
                  ": the short root vectors generate a proper ideal not contained in the centre");
  }
  const LieAlgebraFp g = instantiate(cs, p, Flavor::simply_connected);
  const LieAlgebraFp gflat = instantiate(cs, p, Flavor::adjoint);

  const InvariantForm form = invariant_form(g);
  rep.r = static_cast<int>(form.nullity);
  const Subspace z = g.center();
  rep.center_dim = static_cast<int>(z.dim());
  rep.form_kernel_is_center = form.kernel == z;
  rep.h_dual = dual_coxeter(rs);

  rep.min_nilpotent_centralizer = static_cast<int>(g.centralizer_dim(g.root_vector(rs.highest_root())));
  Root simple(rs.rank(), 0);
  simple[rs.long_simple_root()] = 1;
  rep.long_simple_centralizer = static_cast<int>(g.centralizer_dim(g.root_vector(*rs.index_of(simple))));
  if (rep.long_simple_centralizer != rep.min_nilpotent_centralizer) {
    throw std::logic_error("long root vectors e_alpha and e_theta have different centralizers in " + spec.name());
  }
  rep.s = rep.min_nilpotent_centralizer;
  if (rep.s != rep.m - 2 * (rep.h_dual - 1)) {
    throw std::logic_error("dim c(e_theta) = " + std::to_string(rep.s) + " differs from m - 2(h - 1) for " +
                           spec.name() + " at p = " + std::to_string(p));
  }
  rep.v = Rational(spec.rank, rep.m - rep.s - rep.r);
  if (rep.v != Rational(spec.rank, 2 * (rep.h_dual - 1) - rep.r)) {
    throw std::logic_error("the two expressions for v disagree");
  }

  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<std::int64_t> y(rs.rank(), 0);
    y[i] = 1;
    rep.coweight_centralizers.push_back(static_cast<int>(semisimple_centralizer_dim(gflat, y)));
  }
  const auto best = std::max_element(rep.coweight_centralizers.begin(), rep.coweight_centralizers.end());
  rep.witness_coweight = static_cast<int>(best - rep.coweight_centralizers.begin()) + 1;
  rep.witness_centralizer = *best;

  rep.canonical_map_transposed = canonical_map(g, gflat).transposed_convention;
  return rep;
}

std::string to_string(RowCheck::Status s) {
  switch (s) {
    case RowCheck::Status::match: return "match";
    case RowCheck::Status::mismatch: return "mismatch";
    case RowCheck::Status::skipped: return "skipped";
  }
  return "?";
}

RowCheck verify_table_row(const InvariantsReport& rep) {
  RowCheck out;
  out.golden = golden_lookup(rep.spec, rep.p);
  if (!out.golden) {
    out.status = RowCheck::Status::skipped;
    out.note = "no table row for " + rep.spec.name() + " at p = " + std::to_string(rep.p);
    return out;
  }
  const GoldenValues& g = *out.golden;
  auto cmp = [&out](const std::string& field, const std::string& want, const std::string& got) {
    if (want != got) out.mismatches.push_back(field + ": table " + want + ", computed " + got);
  };
  cmp("r", std::to_string(g.r), std::to_string(rep.r));
  cmp("h_dual", std::to_string(g.h_dual), std::to_string(rep.h_dual));
  cmp("v", to_string(g.v), to_string(rep.v));
  cmp("m-2(h-1)", std::to_string(g.min_nilpotent_centralizer), std::to_string(rep.m - 2 * (rep.h_dual - 1)));
  cmp("s", std::to_string(g.min_nilpotent_centralizer), std::to_string(rep.s));
  if (g.witness_coweight < 1 || g.witness_coweight > static_cast<int>(rep.coweight_centralizers.size())) {
    out.mismatches.push_back("witness coweight index out of range");
  } else {
    cmp("dim c(y" + std::to_string(g.witness_coweight) + ")", std::to_string(g.witness_centralizer),
        std::to_string(rep.coweight_centralizers[g.witness_coweight - 1]));
  }
  if (rep.witness_centralizer != g.witness_centralizer) {
    out.note = "largest coweight centralizer is dim c(y" + std::to_string(rep.witness_coweight) +
               ") = " + std::to_string(rep.witness_centralizer);
  }
  out.status = out.mismatches.empty() ? RowCheck::Status::match : RowCheck::Status::mismatch;
  return out;
}

}  // namespace chevalley
