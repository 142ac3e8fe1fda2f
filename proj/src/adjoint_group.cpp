#include "chevalley/adjoint_group.hpp"

#include <algorithm>
#include <map>

namespace chevalley {

DividedPowerFamily divided_powers(const BracketTable& table, int rank, int root) {
  const int m = table.dimension();
  const int e = rank + root;
  DividedPowerFamily fam{root, m, {}};
  SparseIntMatrix id;
  for (int i = 0; i < m; ++i) id.push_back({i, i, 1});
  fam.powers.push_back(std::move(id));
  for (int k = 1;; ++k) {
    // M_k = ad(e) M_{k-1} / k; column c of ad(e) is [e, b_c].
    std::map<std::pair<int, int>, std::int64_t> acc;
    for (const IntEntry& x : fam.powers.back()) {
      for (const Term& t : table.bracket(e, x.row)) acc[{t.index, x.col}] += t.coef * x.value;
    }
    SparseIntMatrix next;
    for (const auto& [rc, v] : acc) {
      if (v == 0) continue;
      if (v % k != 0) {
        throw DivisionError("(ad e)^" + std::to_string(k) + "/" + std::to_string(k) +
                            "! is not integral for root index " + std::to_string(root));
      }
      next.push_back({rc.first, rc.second, v / k});
    }
    if (next.empty()) break;
    fam.powers.push_back(std::move(next));
    if (k > 4) throw DivisionError("ad e is not nilpotent of order <= 4");
  }
  return fam;
}

AdjointGroup::AdjointGroup(const LieAlgebraFp& L) : L_(&L) {
  const auto& cs = L.structure();
  const BracketTable adj = L.flavor() == Flavor::adjoint ? adjoint_table(cs) : BracketTable();
  const BracketTable& table = L.flavor() == Flavor::adjoint ? adj : cs.table();
  for (int r = 0; r < L.roots().num_roots(); ++r) families_.push_back(divided_powers(table, L.rank(), r));
}

MatrixFp AdjointGroup::root_automorphism(int root, std::uint32_t t) const {
  const PrimeField& f = L_->field();
  const int m = L_->dimension();
  MatrixFp out(f, m, m);
  std::uint32_t tk = 1 % f.p();
  for (const auto& mk : families_[root].powers) {
    for (const IntEntry& x : mk) out(x.row, x.col) = f.add(out(x.row, x.col), f.mul(tk, f.reduce(x.value)));
    tk = f.mul(tk, t);
  }
  return out;
}

Vector AdjointGroup::apply(int root, std::uint32_t t, std::span<const std::uint32_t> x) const {
  const PrimeField& f = L_->field();
  Vector y(x.begin(), x.end());
  if (t == 0) return y;
  std::uint32_t tk = t;
  const auto& powers = families_[root].powers;
  for (std::size_t k = 1; k < powers.size(); ++k) {
    for (const IntEntry& e : powers[k]) {
      if (x[e.col] == 0) continue;
      y[e.row] = f.add(y[e.row], f.mul(f.mul(tk, f.reduce(e.value)), x[e.col]));
    }
    tk = f.mul(tk, t);
  }
  return y;
}

Vector GroupWord::apply(const AdjointGroup& G, std::span<const std::uint32_t> x) const {
  Vector y(x.begin(), x.end());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) y = G.apply(it->first, it->second, y);
  return y;
}

MatrixFp GroupWord::matrix(const AdjointGroup& G) const {
  const LieAlgebraFp& L = G.algebra();
  MatrixFp out = MatrixFp::identity(L.field(), L.dimension());
  for (const auto& [root, t] : factors) out = out * G.root_automorphism(root, t);
  return out;
}

GroupWord random_group_word(const AdjointGroup& G, std::size_t n_factors, Rng& rng) {
  const LieAlgebraFp& L = G.algebra();
  GroupWord w;
  const int np = L.roots().num_positive();
  // Alternate between positive and negative root subgroups.
  for (std::size_t i = 0; i < n_factors; ++i) {
    const int root = static_cast<int>(rng.below(np)) + (i % 2 == 1 ? np : 0);
    w.factors.emplace_back(root, static_cast<std::uint32_t>(rng.below(L.p())));
  }
  return w;
}

MatrixFp random_group_element(const AdjointGroup& G, std::size_t n_factors, std::uint64_t seed) {
  Rng rng(seed);
  return random_group_word(G, n_factors, rng).matrix(G);
}

}  // namespace chevalley
