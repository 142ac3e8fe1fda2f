#include <algorithm>
#include <map>
#include <optional>

#include "chevalley/lie_algebra.hpp"
#include "chevalley/rng.hpp"
#include "chevalley/structure_cache.hpp"

namespace chevalley {

namespace {

// Unknowns of the degree-zero ansatz: <h_i, h_j> for i <= j, then
// c_alpha = <e_alpha, e_-alpha> for each positive root.
class DegreeZeroUnknowns {
 public:
  explicit DegreeZeroUnknowns(const LieAlgebraFp& L)
      : l_(L.rank()), np_(L.roots().num_positive()), rs_(L.roots()) {}

  int count() const { return l_ * (l_ + 1) / 2 + np_; }

  std::optional<int> of(int a, int b) const {
    if (a < l_ && b < l_) {
      const int i = std::min(a, b), j = std::max(a, b);
      return i * l_ - i * (i - 1) / 2 + (j - i);
    }
    if (a < l_ || b < l_) return std::nullopt;
    const int ra = a - l_, rb = b - l_;
    if (rb != rs_.negative_of(ra)) return std::nullopt;
    return l_ * (l_ + 1) / 2 + (rs_.is_positive(ra) ? ra : rb);
  }

 private:
  int l_;
  int np_;
  const RootSystem& rs_;
};

std::optional<int> basis_of_degree(const LieAlgebraFp& L, const Root& deg) {
  if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 0; })) return std::nullopt;
  auto idx = L.roots().index_of(deg);
  if (!idx) return std::nullopt;
  return L.structure().root_basis_index(*idx);
}

Root add_degrees(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Root negate(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

bool is_zero_degree(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

MatrixFp gram_from_solution(const LieAlgebraFp& L, const DegreeZeroUnknowns& u,
                            std::span<const std::uint32_t> s) {
  const int m = L.dimension();
  MatrixFp g(L.field(), m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (auto k = u.of(a, b)) g(a, b) = s[*k];
    }
  }
  return g;
}

// Rank of a degree-zero form: the Cartan block plus a 2x2 block per
// positive root.
std::size_t degree_zero_rank(const LieAlgebraFp& L, const DegreeZeroUnknowns& u,
                             std::span<const std::uint32_t> s) {
  const int l = L.rank();
  MatrixFp cartan(L.field(), l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cartan(i, j) = s[*u.of(i, j)];
  std::size_t r = rank(cartan);
  for (int k = l * (l + 1) / 2; k < u.count(); ++k) r += s[k] != 0 ? 2 : 0;
  return r;
}

}  // namespace

bool is_associative(const LieAlgebraFp& L, const MatrixFp& form) {
  const int m = L.dimension();
  const PrimeField& f = L.field();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const auto ab = L.bracket_basis(a, b);
      for (int c = 0; c < m; ++c) {
        std::uint64_t lhs = 0, rhs = 0;
        for (const auto& t : ab) lhs += static_cast<std::uint64_t>(t.coef) * form(t.index, c);
        for (const auto& t : L.bracket_basis(b, c)) rhs += static_cast<std::uint64_t>(t.coef) * form(a, t.index);
        if (lhs % f.p() != rhs % f.p()) return false;
      }
    }
  }
  return true;
}

MatrixFp form_combination(const InvariantForm& f, std::span<const std::uint32_t> coeffs) {
  if (coeffs.size() != f.solution_basis.size()) throw AmbientMismatch("one coefficient per basis form expected");
  const PrimeField& field = f.matrix.field();
  const std::size_t m = f.matrix.rows();
  MatrixFp out(field, m, m);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        out(i, j) = field.add(out(i, j), field.mul(coeffs[k], f.solution_basis[k](i, j)));
  }
  return out;
}

InvariantForm invariant_form(const LieAlgebraFp& L) {
  const int m = L.dimension();
  const int l = L.rank();
  const PrimeField& f = L.field();
  const DegreeZeroUnknowns u(L);
  const int n = u.count();

  EchelonBasis equations(f, n);
  std::vector<std::uint64_t> row(n);
  Vector reduced(n);
  auto emit = [&](int a, int b, int c) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& t : L.bracket_basis(a, b)) row[*u.of(t.index, c)] += t.coef;
    for (const auto& t : L.bracket_basis(b, c)) row[*u.of(a, t.index)] += f.p() - t.coef;
    bool nonzero = false;
    for (int k = 0; k < n; ++k) {
      reduced[k] = static_cast<std::uint32_t>(row[k] % f.p());
      nonzero = nonzero || reduced[k] != 0;
    }
    if (nonzero) equations.insert(reduced);
  };
  for (int a = 0; a < m && !equations.full(); ++a) {
    for (int b = 0; b < m && !equations.full(); ++b) {
      const Root target = negate(add_degrees(L.degree(a), L.degree(b)));
      if (is_zero_degree(target)) {
        for (int c = 0; c < l; ++c) emit(a, b, c);
      } else if (auto c = basis_of_degree(L, target)) {
        emit(a, b, *c);
      }
    }
  }
  const Subspace solutions = annihilator(equations);
  const std::size_t d = solutions.dim();
  if (d == 0) {
    throw NoInvariantForm("no nonzero invariant symmetric form of degree zero on " +
                          L.roots().spec().name() + " over F_" + std::to_string(f.p()));
  }

  // Maximal rank over the solution space: exhaustive when p^d <= 1e5,
  // otherwise the best of 100 seeded random combinations.
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t k = 0; k < d; ++k) {
    total *= f.p();
    if (total > 100000) {
      exhaustive = false;
      break;
    }
  }
  Vector best_coeffs;
  std::size_t best_rank = 0;
  Vector coeffs(d, 0);
  Vector combo(n);
  auto consider = [&]() {
    std::fill(combo.begin(), combo.end(), 0);
    for (std::size_t k = 0; k < d; ++k) {
      if (coeffs[k] == 0) continue;
      for (int j = 0; j < n; ++j) combo[j] = f.add(combo[j], f.mul(coeffs[k], solutions.basis()[k][j]));
    }
    const std::size_t r = degree_zero_rank(L, u, combo);
    if (best_coeffs.empty() || r > best_rank) {
      best_rank = r;
      best_coeffs = coeffs;
    }
  };
  if (exhaustive) {
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t x = code;
      for (std::size_t k = 0; k < d; ++k) {
        coeffs[k] = static_cast<std::uint32_t>(x % f.p());
        x /= f.p();
      }
      consider();
    }
  } else {
    Rng rng(0x5eed'f0f0ULL + d);
    for (int trial = 0; trial < 100; ++trial) {
      do {
        for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng.below(f.p()));
      } while (std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; }));
      consider();
    }
  }

  InvariantForm out{MatrixFp(f, m, m), Subspace::zero(f, m), 0, d, {}};
  for (const Vector& s : solutions.basis()) out.solution_basis.push_back(gram_from_solution(L, u, s));
  out.matrix = form_combination(out, best_coeffs);
  out.kernel = kernel(out.matrix);
  out.nullity = out.kernel.dim();
  if (static_cast<std::size_t>(m) - out.nullity != best_rank) {
    throw std::logic_error("block rank of the invariant form disagrees with its full rank");
  }
  return out;
}

std::size_t invariant_form_space_dimension_dense(const LieAlgebraFp& L) {
  const int m = L.dimension();
  const PrimeField& f = L.field();
  auto tri = [m](int a, int b) {
    const int i = std::min(a, b), j = std::max(a, b);
    return i * m - i * (i - 1) / 2 + (j - i);
  };
  const int n = m * (m + 1) / 2;
  EchelonBasis equations(f, n);
  std::vector<std::uint64_t> row(n, 0);
  Vector reduced(n);
  std::vector<int> touched;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        touched.clear();
        for (const auto& t : L.bracket_basis(a, b)) {
          const int k = tri(t.index, c);
          row[k] += t.coef;
          touched.push_back(k);
        }
        for (const auto& t : L.bracket_basis(b, c)) {
          const int k = tri(a, t.index);
          row[k] += f.p() - t.coef;
          touched.push_back(k);
        }
        bool nonzero = false;
        for (int k : touched) nonzero = nonzero || row[k] % f.p() != 0;
        if (nonzero) {
          std::fill(reduced.begin(), reduced.end(), 0);
          for (int k : touched) reduced[k] = static_cast<std::uint32_t>(row[k] % f.p());
          equations.insert(reduced);
        }
        for (int k : touched) row[k] = 0;
      }
    }
  }
  return static_cast<std::size_t>(n) - equations.dim();
}

GradedFormSpace invariant_form_space_by_degree(const LieAlgebraFp& L) {
  const int m = L.dimension();
  const PrimeField& f = L.field();
  // Unknowns <b_a, b_b>, a <= b, bucketed by deg a + deg b.
  std::map<Root, std::map<std::pair<int, int>, int>> sectors;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      auto& sector = sectors[add_degrees(L.degree(a), L.degree(b))];
      sector.emplace(std::make_pair(a, b), static_cast<int>(sector.size()));
    }
  std::map<Root, EchelonBasis> systems;
  for (const auto& [deg, sector] : sectors) systems.emplace(deg, EchelonBasis(f, sector.size()));

  std::vector<std::uint64_t> acc;
  Vector reduced;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Root ab = add_degrees(L.degree(a), L.degree(b));
      for (int c = 0; c < m; ++c) {
        const Root deg = add_degrees(ab, L.degree(c));
        auto sector_it = sectors.find(deg);
        if (sector_it == sectors.end()) continue;
        const auto& sector = sector_it->second;
        EchelonBasis& system = systems.at(deg);
        if (system.full()) continue;
        auto key = [](int x, int y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
        acc.assign(sector.size(), 0);
        bool any = false;
        for (const auto& t : L.bracket_basis(a, b)) {
          acc[sector.at(key(t.index, c))] += t.coef;
          any = true;
        }
        for (const auto& t : L.bracket_basis(b, c)) {
          acc[sector.at(key(a, t.index))] += f.p() - t.coef;
          any = true;
        }
        if (!any) continue;
        reduced.assign(sector.size(), 0);
        for (std::size_t k = 0; k < acc.size(); ++k) reduced[k] = static_cast<std::uint32_t>(acc[k] % f.p());
        system.insert(reduced);
      }
    }
  }
  GradedFormSpace out{0, 0};
  for (const auto& [deg, sector] : sectors) {
    const std::size_t dim = sector.size() - systems.at(deg).dim();
    if (is_zero_degree(deg)) {
      out.degree_zero_dimension += dim;
    } else {
      out.other_degrees_dimension += dim;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Type D_l in characteristic 2

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix zeros(int n) { return IntMatrix(n, std::vector<std::int64_t>(n, 0)); }

IntMatrix commutator(const IntMatrix& x, const IntMatrix& y) {
  const int n = static_cast<int>(x.size());
  IntMatrix out = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x[i][k] != 0)
        for (int j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
      if (y[i][k] != 0)
        for (int j = 0; j < n; ++j) out[i][j] -= y[i][k] * x[k][j];
    }
  return out;
}

}  // namespace

std::vector<IntMatrix> dl_standard_representation(const ChevalleyStructure& cs) {
  const RootSystem& rs = cs.roots();
  if (rs.spec().family != Family::D) {
    throw WrongTypeForConstruction("standard so_2l representation is built for type D only");
  }
  const int l = rs.rank();
  const int n = 2 * l;
  const int m = cs.dimension();
  std::vector<IntMatrix> rho(m, zeros(n));
  auto simple = [&](int i, bool positive) -> IntMatrix& {
    Root r(l, 0);
    r[i] = positive ? 1 : -1;
    return rho[cs.root_basis_index(*rs.index_of(r))];
  };
  // alpha_i = eps_i - eps_{i+1} (i < l), alpha_l = eps_{l-1} + eps_l, for
  // the split form with Gram matrix (0 I; I 0).
  for (int i = 0; i + 1 < l; ++i) {
    IntMatrix& e = simple(i, true);
    e[i][i + 1] = 1;
    e[l + i + 1][l + i] = -1;
    IntMatrix& f = simple(i, false);
    f[i + 1][i] = 1;
    f[l + i][l + i + 1] = -1;
  }
  {
    IntMatrix& e = simple(l - 1, true);
    e[l - 2][2 * l - 1] = 1;
    e[l - 1][2 * l - 2] = -1;
    IntMatrix& f = simple(l - 1, false);
    f[2 * l - 1][l - 2] = 1;
    f[2 * l - 2][l - 1] = -1;
  }
  for (int i = 0; i < l; ++i) rho[i] = commutator(simple(i, true), simple(i, false));

  // Remaining root vectors by height: e_g = [e_{a_i}, e_{g - a_i}] / N.
  for (int g = 0; g < rs.num_positive(); ++g) {
    if (rs.height(g) == 1) continue;
    for (int i = 0; i < l; ++i) {
      Root rest = rs.root(g);
      rest[i] -= 1;
      auto idx = rs.index_of(rest);
      if (!idx) continue;
      Root unit(l, 0);
      unit[i] = 1;
      const int si = *rs.index_of(unit);
      for (bool positive : {true, false}) {
        const int a = positive ? si : rs.negative_of(si);
        const int b = positive ? *idx : rs.negative_of(*idx);
        const std::int64_t nab = cs.structure_constant(a, b);
        IntMatrix x = commutator(rho[cs.root_basis_index(a)], rho[cs.root_basis_index(b)]);
        for (auto& r : x)
          for (auto& v : r) v /= nab;
        rho[cs.root_basis_index(positive ? g : rs.negative_of(g))] = std::move(x);
      }
      break;
    }
  }
  // Exhaustive homomorphism check over Z.
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      IntMatrix lhs = zeros(n);
      for (const Term& t : cs.bracket(a, b))
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) lhs[i][j] += t.coef * rho[t.index][i][j];
      if (lhs != commutator(rho[a], rho[b])) {
        throw std::logic_error("standard representation of " + rs.spec().name() +
                               " fails to be a homomorphism at (" + cs.label(a) + ", " +
                               cs.label(b) + ")");
      }
    }
  }
  return rho;
}

InvariantForm dl_char2_form(const LieAlgebraFp& g) {
  if (g.roots().spec().family != Family::D || g.p() != 2 || g.flavor() != Flavor::simply_connected) {
    throw WrongTypeForConstruction("the standard-representation form is defined for D_l over F_2");
  }
  const int l = g.rank();
  const int m = g.dimension();
  const auto rho = dl_standard_representation(g.structure());
  // Tr(PQ) over the blocks; lower/upper select the strict triangles.
  auto trace_block = [l](const IntMatrix& x, int xr, int xc, const IntMatrix& y, int yr, int yc,
                         int part) {
    std::int64_t s = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (part < 0 && !(i > j)) continue;  // x strictly lower, y upper
        s += x[xr + i][xc + j] * y[yr + j][yc + i];
      }
    return s;
  };
  MatrixFp gram(g.field(), m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const std::int64_t v = trace_block(rho[a], 0, 0, rho[b], 0, 0, 0) +
                             trace_block(rho[a], 0, l, rho[b], l, 0, -1) +
                             trace_block(rho[a], l, 0, rho[b], 0, l, -1);
      gram(a, b) = g.field().reduce(v);
    }
  }
  InvariantForm out{gram, kernel(gram), 0, 1, {gram}};
  out.nullity = out.kernel.dim();
  return out;
}

InvariantForm dl_char2_form(int l) {
  if (l < 4) throw WrongTypeForConstruction("D_l needs l >= 4");
  return dl_char2_form(instantiate(chevalley_structure({Family::D, l}), 2, Flavor::simply_connected));
}

}  // namespace chevalley
