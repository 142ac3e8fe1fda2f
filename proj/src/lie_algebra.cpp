#include "chevalley/lie_algebra.hpp"

#include <algorithm>
#include <deque>

namespace chevalley {

std::string to_string(Flavor f) {
  return f == Flavor::simply_connected ? "simply_connected" : "adjoint";
}

LieAlgebraFp::LieAlgebraFp(std::shared_ptr<const ChevalleyStructure> cs, PrimeField field,
                           Flavor flavor)
    : cs_(std::move(cs)), field_(field), flavor_(flavor), dim_(cs_->dimension()) {
  const BracketTable adjoint = flavor == Flavor::adjoint ? adjoint_table(*cs_) : BracketTable();
  const BracketTable& table = flavor == Flavor::adjoint ? adjoint : cs_->table();

  cell_offsets_.reserve(static_cast<std::size_t>(dim_) * dim_ + 1);
  cell_offsets_.push_back(0);
  entry_offsets_.reserve(dim_ + 1);
  entry_offsets_.push_back(0);
  for (int a = 0; a < dim_; ++a) {
    for (int b = 0; b < dim_; ++b) {
      for (const Term& t : table.bracket(a, b)) {
        const std::uint32_t c = field_.reduce(t.coef);
        if (c == 0) continue;
        cells_.push_back({t.index, c});
        entries_.push_back({b, t.index, c});
      }
      cell_offsets_.push_back(cells_.size());
    }
    entry_offsets_.push_back(entries_.size());
  }
}

LieAlgebraFp instantiate(std::shared_ptr<const ChevalleyStructure> cs, std::uint32_t p, Flavor flavor) {
  return LieAlgebraFp(std::move(cs), PrimeField(p), flavor);
}

std::string LieAlgebraFp::label(int a) const {
  if (flavor_ == Flavor::adjoint && a < rank()) return "y" + std::to_string(a + 1);
  return cs_->label(a);
}

Vector LieAlgebraFp::basis_vector(int a) const {
  Vector v(dim_, 0);
  v[a] = 1 % field_.p();
  return v;
}

Vector LieAlgebraFp::bracket_basis_vector(int a, int b) const {
  Vector v(dim_, 0);
  for (const FpTerm& t : bracket_basis(a, b)) v[t.index] = t.coef;
  return v;
}

Vector LieAlgebraFp::bracket(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
  if (x.size() != static_cast<std::size_t>(dim_) || y.size() != static_cast<std::size_t>(dim_)) {
    throw AmbientMismatch("bracket arguments must live in the algebra");
  }
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> acc(dim_, 0);
  for (int a = 0; a < dim_; ++a) {
    const std::uint64_t xa = x[a];
    if (xa == 0) continue;
    for (std::size_t k = entry_offsets_[a]; k < entry_offsets_[a + 1]; ++k) {
      const Entry& e = entries_[k];
      const std::uint64_t yb = y[e.b];
      if (yb == 0) continue;
      acc[e.c] = (acc[e.c] + (xa * yb % p) * e.coef) % p;
    }
  }
  return Vector(acc.begin(), acc.end());
}

MatrixFp LieAlgebraFp::ad_matrix(std::span<const std::uint32_t> x) const {
  if (x.size() != static_cast<std::size_t>(dim_)) throw AmbientMismatch("element must live in the algebra");
  MatrixFp m(field_, dim_, dim_);
  const std::uint64_t p = field_.p();
  for (int a = 0; a < dim_; ++a) {
    const std::uint64_t xa = x[a];
    if (xa == 0) continue;
    for (std::size_t k = entry_offsets_[a]; k < entry_offsets_[a + 1]; ++k) {
      const Entry& e = entries_[k];
      m(e.c, e.b) = static_cast<std::uint32_t>((m(e.c, e.b) + xa * e.coef) % p);
    }
  }
  return m;
}

std::size_t LieAlgebraFp::centralizer_dim(std::span<const std::uint32_t> x) const {
  return static_cast<std::size_t>(dim_) - chevalley::rank(ad_matrix(x));
}

Subspace LieAlgebraFp::centralizer(std::span<const std::uint32_t> x) const {
  return kernel(ad_matrix(x));
}

bool LieAlgebraFp::is_central(std::span<const std::uint32_t> x) const {
  return ad_matrix(x).is_zero();
}

Subspace LieAlgebraFp::center() const {
  const int l = rank();
  std::vector<Vector> generators;
  // Root spaces are one-dimensional: e_alpha is central or contributes nothing.
  for (int a = l; a < dim_; ++a) {
    bool central = true;
    for (int b = 0; b < dim_ && central; ++b) central = bracket_basis(a, b).empty();
    if (central) generators.push_back(basis_vector(a));
  }
  // Degree-zero block: kernel of the l columns (b, c) -> coefficient of
  // b_c in [h_i, b_b].
  EchelonBasis rows(field_, l);
  Vector row(l);
  for (int b = 0; b < dim_ && !rows.full(); ++b) {
    for (int c = 0; c < dim_ && !rows.full(); ++c) {
      bool nonzero = false;
      for (int i = 0; i < l; ++i) {
        row[i] = 0;
        for (const FpTerm& t : bracket_basis(i, b)) {
          if (t.index == c) row[i] = t.coef;
        }
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) rows.insert(row);
    }
  }
  const Subspace cartan_part = annihilator(rows);
  for (const Vector& v : cartan_part.basis()) {
    Vector full(dim_, 0);
    std::copy(v.begin(), v.end(), full.begin());
    generators.push_back(std::move(full));
  }
  return Subspace::span(field_, dim_, generators);
}

Subspace LieAlgebraFp::center_by_full_kernel() const {
  EchelonBasis rows(field_, dim_);
  Vector row(dim_);
  for (int b = 0; b < dim_ && !rows.full(); ++b) {
    for (int c = 0; c < dim_ && !rows.full(); ++c) {
      std::fill(row.begin(), row.end(), 0);
      bool nonzero = false;
      for (int a = 0; a < dim_; ++a) {
        for (const FpTerm& t : bracket_basis(a, b)) {
          if (t.index == c) {
            row[a] = t.coef;
            nonzero = true;
          }
        }
      }
      if (nonzero) rows.insert(row);
    }
  }
  return annihilator(rows);
}

Subspace LieAlgebraFp::derived_subalgebra() const {
  EchelonBasis eb(field_, dim_);
  for (int a = 0; a < dim_ && !eb.full(); ++a) {
    for (int b = a + 1; b < dim_ && !eb.full(); ++b) {
      if (!bracket_basis(a, b).empty()) eb.insert(bracket_basis_vector(a, b));
    }
  }
  return eb.to_subspace();
}

Subspace LieAlgebraFp::ideal_generated_by(const Subspace& s) const {
  if (s.ambient() != static_cast<std::size_t>(dim_)) throw AmbientMismatch("generators must live in the algebra");
  EchelonBasis eb(field_, dim_);
  std::deque<Vector> pending;
  for (const Vector& v : s.basis()) {
    if (eb.insert(v)) pending.push_back(v);
  }
  while (!pending.empty() && !eb.full()) {
    const Vector w = std::move(pending.front());
    pending.pop_front();
    for (int b = 0; b < dim_; ++b) {
      Vector v = bracket(basis_vector(b), w);
      if (eb.insert(v)) pending.push_back(std::move(v));
    }
  }
  return eb.to_subspace();
}

Vector coweight_vector(const LieAlgebraFp& gflat, std::span<const std::int64_t> coords) {
  if (gflat.flavor() != Flavor::adjoint) {
    throw std::invalid_argument("coweight coordinates refer to the adjoint form");
  }
  if (coords.size() != static_cast<std::size_t>(gflat.rank())) {
    throw AmbientMismatch("one coordinate per fundamental coweight expected");
  }
  Vector v(gflat.dimension(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = gflat.field().reduce(coords[i]);
  return v;
}

std::size_t semisimple_centralizer_dim(const LieAlgebraFp& gflat,
                                       std::span<const std::int64_t> coweight_coords) {
  return gflat.centralizer_dim(coweight_vector(gflat, coweight_coords));
}

bool is_homomorphism(const LieAlgebraFp& from, const LieAlgebraFp& to, const MatrixFp& map) {
  const int m = from.dimension();
  const PrimeField& f = from.field();
  // Images are sparse in practice; keep them as term lists.
  std::vector<std::vector<LieAlgebraFp::FpTerm>> images(m);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      if (map(c, a) != 0) images[a].push_back({c, map(c, a)});
  Vector lhs(m), rhs(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      for (const auto& t : from.bracket_basis(a, b))
        for (const auto& s : images[t.index]) lhs[s.index] = f.add(lhs[s.index], f.mul(t.coef, s.coef));
      for (const auto& x : images[a])
        for (const auto& y : images[b]) {
          const std::uint32_t c = f.mul(x.coef, y.coef);
          for (const auto& t : to.bracket_basis(x.index, y.index))
            rhs[t.index] = f.add(rhs[t.index], f.mul(c, t.coef));
        }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

CanonicalMap canonical_map(const LieAlgebraFp& g, const LieAlgebraFp& gflat) {
  if (g.flavor() != Flavor::simply_connected || gflat.flavor() != Flavor::adjoint) {
    throw std::invalid_argument("canonical map goes from the simply connected to the adjoint form");
  }
  if (!(g.field() == gflat.field()) || g.roots().spec() != gflat.roots().spec()) {
    throw std::invalid_argument("canonical map needs both forms of the same type over the same field");
  }
  const int l = g.rank();
  const int m = g.dimension();
  const RootSystem& rs = g.roots();
  for (bool transposed : {false, true}) {
    MatrixFp phi(g.field(), m, m);
    for (int a = l; a < m; ++a) phi(a, a) = 1;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        phi(j, i) = g.field().reduce(transposed ? rs.cartan(j, i) : rs.cartan(i, j));
    if (!is_homomorphism(g, gflat, phi)) continue;
    Subspace ker = kernel(phi);
    Subspace img = row_space(phi.transpose());
    return CanonicalMap{std::move(phi), transposed, std::move(ker), std::move(img)};
  }
  throw ConventionError("no Cartan index convention makes g -> g^flat a homomorphism for " +
                        rs.spec().name());
}

}  // namespace chevalley
