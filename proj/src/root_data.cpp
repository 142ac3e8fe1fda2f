#include "chevalley/root_data.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace chevalley {

using Rational64 = boost::rational<std::int64_t>;

char family_letter(Family f) { return static_cast<char>(f); }

Family parse_family(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      case 'E': return Family::E;
      case 'F': return Family::F;
      case 'G': return Family::G;
      default: break;
    }
  }
  throw InadmissibleRootSystem("unknown family '" + text + "' (expected one of A B C D E F G)");
}

std::string RootSystemSpec::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

bool admissible(const RootSystemSpec& spec) {
  const int l = spec.rank;
  switch (spec.family) {
    case Family::A: return l >= 1;
    case Family::B: return l >= 3;
    case Family::C: return l >= 2;
    case Family::D: return l >= 4;
    case Family::E: return l >= 6 && l <= 8;
    case Family::F: return l == 4;
    case Family::G: return l == 2;
  }
  return false;
}

namespace {

// Gram matrix of the simple roots in Bourbaki numbering, integer scaled.
std::vector<std::vector<int>> simple_gram(const RootSystemSpec& spec) {
  const int l = spec.rank;
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  auto link = [&](int i, int j, int value) {  // 1-based
    g[i - 1][j - 1] = value;
    g[j - 1][i - 1] = value;
  };
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= l; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < l; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 1; i < l; ++i) g[i - 1][i - 1] = 2;
      g[l - 1][l - 1] = 1;
      for (int i = 1; i < l; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 1; i < l; ++i) g[i - 1][i - 1] = 2;
      g[l - 1][l - 1] = 4;
      for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
      link(l - 1, l, -2);
      break;
    case Family::D:
      for (int i = 1; i <= l; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
      link(l - 2, l, -1);
      break;
    case Family::E:
      for (int i = 1; i <= l; ++i) g[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      link(3, 4, -1);
      for (int i = 4; i < l; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = 4;
      g[1][1] = 4;
      g[2][2] = 2;
      g[3][3] = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

int height_of(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

bool is_nonnegative(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

}  // namespace

RootSystem RootSystem::build(const RootSystemSpec& spec) {
  if (!admissible(spec)) {
    throw InadmissibleRootSystem("root system " + spec.name() +
                                 " is not available (A_l l>=1, B_l l>=3, C_l l>=2, D_l l>=4, "
                                 "E6, E7, E8, F4, G2)");
  }
  RootSystem rs;
  rs.spec_ = spec;
  const int l = spec.rank;
  rs.gram_ = simple_gram(spec);
  rs.cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.cartan_[i][j] = 2 * rs.gram_[j][i] / rs.gram_[i][i];

  // Closure of the simple roots under the simple reflections.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      int pair = 0;
      for (int j = 0; j < l; ++j) pair += r[j] * rs.cartan_[i][j];
      Root s = r;
      s[i] -= pair;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }

  std::vector<Root> positive;
  for (const auto& r : seen) {
    if (is_nonnegative(r)) positive.push_back(r);
  }
  std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.num_positive_ = static_cast<int>(positive.size());
  rs.roots_ = positive;
  for (const auto& r : positive) {
    Root n(r);
    for (auto& x : n) x = -x;
    rs.roots_.push_back(std::move(n));
  }
  for (int i = 0; i < rs.num_roots(); ++i) rs.index_.emplace(rs.roots_[i], i);
  if (static_cast<int>(seen.size()) != rs.num_roots()) {
    throw std::logic_error("root closure produced a vector with mixed signs");
  }

  rs.highest_ = rs.num_positive_ - 1;  // unique root of maximal height
  rs.long_norm_ = 0;
  for (int i = 0; i < l; ++i) rs.long_norm_ = std::max(rs.long_norm_, rs.gram_[i][i]);
  return rs;
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::height(int index) const { return height_of(roots_[index]); }

std::int64_t RootSystem::cartan_determinant() const {
  // Fraction-free Bareiss elimination.
  const int n = rank();
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) swap = r;
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

bool RootSystem::simply_laced() const {
  for (int i = 0; i < rank(); ++i)
    if (gram_[i][i] != long_norm_) return false;
  return true;
}

int RootSystem::pairing(int index, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += roots_[index][j] * cartan_[i][j];
  return s;
}

std::vector<int> RootSystem::coroot_coefficients(int index) const {
  const int n = norm(index);
  std::vector<int> c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = roots_[index][i] * gram_[i][i] / n;
  return c;
}

std::vector<int> RootSystem::dual_marks() const { return coroot_coefficients(highest_); }

int RootSystem::long_simple_root() const {
  for (int i = 0; i < rank(); ++i)
    if (gram_[i][i] == long_norm_) return i;
  return 0;
}

int dual_coxeter_closed_form(const RootSystemSpec& spec) {
  const int l = spec.rank;
  switch (spec.family) {
    case Family::A: return l + 1;
    case Family::B: return 2 * l - 1;
    case Family::C: return l + 1;
    case Family::D: return 2 * l - 2;
    case Family::E: return l == 6 ? 12 : (l == 7 ? 18 : 30);
    case Family::F: return 9;
    case Family::G: return 4;
  }
  return 0;
}

int dual_coxeter(const RootSystem& rs) {
  const auto dm = rs.dual_marks();
  const int h = 1 + std::accumulate(dm.begin(), dm.end(), 0);
  // B_2 would disagree with the B_l formula, but B_l starts at l = 3 here.
  if (h != dual_coxeter_closed_form(rs.spec())) {
    throw std::logic_error("dual Coxeter number of " + rs.spec().name() +
                           " disagrees with its closed form");
  }
  return h;
}

std::string to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::very_good: return "very_good";
    case PrimeClass::good_not_very_good: return "good_not_very_good";
    case PrimeClass::tolerable_not_good: return "tolerable_not_good";
    case PrimeClass::intolerable: return "intolerable";
  }
  return "?";
}

bool is_good(const RootSystem& rs, std::uint32_t p) {
  for (int a : rs.marks())
    if (a % static_cast<int>(p) == 0) return false;
  return true;
}

bool is_tolerable(PrimeClass c) { return c != PrimeClass::intolerable; }

PrimeClass classify_prime(const RootSystem& rs, std::uint32_t p) {
  const Family f = rs.spec().family;
  // Non-simply-laced types where the short root vectors span a proper
  // non-central ideal.
  if ((p == 2 && (f == Family::B || f == Family::C || f == Family::F)) ||
      (p == 3 && f == Family::G)) {
    return PrimeClass::intolerable;
  }
  if (!is_good(rs, p)) return PrimeClass::tolerable_not_good;
  if (rs.cartan_determinant() % static_cast<std::int64_t>(p) == 0) {
    return PrimeClass::good_not_very_good;
  }
  return PrimeClass::very_good;
}

// ---------------------------------------------------------------------------
// BracketTable

BracketTable::BracketTable(int dim) : dim_(dim) {
  offsets_.reserve(static_cast<std::size_t>(dim) * dim + 1);
}

void BracketTable::push_cell(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i + 1 < terms.size() && terms[i].index == terms[i + 1].index) {
      terms[i + 1].coef += terms[i].coef;
      continue;
    }
    if (terms[i].coef != 0) terms_.push_back(terms[i]);
  }
  offsets_.push_back(terms_.size());
}

std::string JacobiFailure::describe() const {
  std::ostringstream os;
  os << "Jacobi identity fails on basis triple (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::optional<std::pair<int, int>> find_antisymmetry_failure(const BracketTable& t) {
  const int m = t.dimension();
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      auto ab = t.bracket(a, b);
      auto ba = t.bracket(b, a);
      if (ab.size() != ba.size()) return std::make_pair(a, b);
      for (std::size_t k = 0; k < ab.size(); ++k) {
        if (ab[k].index != ba[k].index || ab[k].coef != -ba[k].coef) return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

std::optional<JacobiFailure> find_jacobi_failure(const BracketTable& t) {
  const int m = t.dimension();
  std::vector<std::int64_t> acc(m, 0);
  std::vector<int> touched;
  touched.reserve(m);
  auto add_nested = [&](int x, int y, int z) {  // += [x, [y, z]]
    for (const Term& inner : t.bracket(y, z)) {
      for (const Term& outer : t.bracket(x, inner.index)) {
        if (acc[outer.index] == 0) touched.push_back(outer.index);
        acc[outer.index] += inner.coef * outer.coef;
      }
    }
  };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        add_nested(a, b, c);
        add_nested(b, c, a);
        add_nested(c, a, b);
        bool bad = false;
        for (int k : touched) {
          if (acc[k] != 0) bad = true;
          acc[k] = 0;
        }
        touched.clear();
        if (bad) return JacobiFailure{a, b, c};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

class ConstantSolver {
 public:
  explicit ConstantSolver(const RootSystem& rs) : rs_(rs), np_(rs.num_positive()) {
    extraspecial_.assign(np_, {-1, -1});
    // The extraspecial pair of xi is (alpha, xi - alpha) with alpha the
    // first positive root in the order for which xi - alpha is a root.
    for (int xi = 0; xi < np_; ++xi) {
      for (int a = 0; a < np_ && extraspecial_[xi].first < 0; ++a) {
        if (auto b = rs_.index_of(diff(xi, a)); b && rs_.is_positive(*b)) {
          extraspecial_[xi] = {a, *b};
        }
      }
    }
  }

  std::int64_t N(int a, int b) {
    auto sum = rs_.index_of(add(a, b));
    if (!sum) return 0;
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::int64_t value = compute(a, b, *sum);
    memo_.emplace(key, value);
    return value;
  }

 private:
  Root add(int a, int b) const {
    Root r = rs_.root(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += rs_.root(b)[i];
    return r;
  }
  Root diff(int a, int b) const {
    Root r = rs_.root(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= rs_.root(b)[i];
    return r;
  }
  int neg(int a) const { return rs_.negative_of(a); }

  // Largest k with beta - k alpha a root.
  int string_down(int alpha, int beta) const {
    int k = 0;
    Root r = rs_.root(beta);
    for (;;) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= rs_.root(alpha)[i];
      if (!rs_.index_of(r)) return k;
      ++k;
    }
  }

  static std::int64_t exact(const Rational64& q) {
    if (q.denominator() != 1) throw StructureConstantError("non-integral structure constant");
    return q.numerator();
  }

  std::int64_t compute(int a, int b, int sum) {
    const bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
    if (pa && pb) return positive_pair(a, b, sum);
    if (!pa && !pb) return -N(neg(a), neg(b));
    // Mixed signs: complete to a zero-sum triple (a, b, c) and use
    // N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) with the same-signed pair.
    const int c = neg(sum);
    const Rational64 nc(rs_.norm(c));
    if (rs_.is_positive(c) == pa) {
      return exact(Rational64(N(c, a)) * nc / Rational64(rs_.norm(b)));
    }
    return exact(Rational64(N(b, c)) * nc / Rational64(rs_.norm(a)));
  }

  std::int64_t positive_pair(int a, int b, int xi) {
    if (a > b) return -N(b, a);
    const auto [g, d] = extraspecial_[xi];
    if (g == a && d == b) return string_down(a, b) + 1;
    // Four-term relation on (a, b, -g, -d), which sum to zero.
    const int mg = neg(g), md = neg(d);
    Rational64 s(0);
    if (auto bg = rs_.index_of(diff(b, g))) {
      s += Rational64(N(b, mg) * N(a, md), rs_.norm(*bg));
    }
    if (auto ag = rs_.index_of(diff(a, g))) {
      s += Rational64(N(mg, a) * N(b, md), rs_.norm(*ag));
    }
    return exact(-Rational64(rs_.norm(xi)) * s / Rational64(N(mg, md)));
  }

  const RootSystem& rs_;
  int np_;
  std::vector<std::pair<int, int>> extraspecial_;
  std::map<std::pair<int, int>, std::int64_t> memo_;
};

}  // namespace

Root ChevalleyStructure::degree(int a) const {
  if (a < rank()) return Root(rank(), 0);
  return roots_.root(a - rank());
}

std::string ChevalleyStructure::label(int a) const {
  if (a < rank()) return "h" + std::to_string(a + 1);
  std::string s = "e[";
  const Root& r = roots_.root(a - rank());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + "]";
}

std::int64_t ChevalleyStructure::structure_constant(int alpha, int beta) const {
  auto terms = bracket(root_basis_index(alpha), root_basis_index(beta));
  Root sum = roots_.root(alpha);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += roots_.root(beta)[i];
  auto idx = roots_.index_of(sum);
  if (!idx) return 0;
  for (const Term& t : terms)
    if (t.index == root_basis_index(*idx)) return t.coef;
  return 0;
}

ChevalleyStructure build_structure_constants(const RootSystem& rs) {
  const int l = rs.rank();
  const int n = rs.num_roots();
  const int m = l + n;
  ConstantSolver solver(rs);
  BracketTable table(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      std::vector<Term> terms;
      const bool ha = a < l, hb = b < l;
      if (ha && hb) {
        // Cartan part is abelian.
      } else if (ha) {
        terms.push_back({b, rs.pairing(b - l, a)});
      } else if (hb) {
        terms.push_back({a, -rs.pairing(a - l, b)});
      } else {
        const int ra = a - l, rb = b - l;
        if (rb == rs.negative_of(ra)) {
          const int pos = rs.is_positive(ra) ? ra : rb;
          const int sign = rs.is_positive(ra) ? 1 : -1;
          const auto co = rs.coroot_coefficients(pos);
          for (int i = 0; i < l; ++i) terms.push_back({i, sign * co[i]});
        } else if (const std::int64_t nab = solver.N(ra, rb); nab != 0) {
          Root s = rs.root(ra);
          for (int i = 0; i < l; ++i) s[i] += rs.root(rb)[i];
          terms.push_back({l + *rs.index_of(s), nab});
        }
      }
      table.push_cell(std::move(terms));
    }
  }
  if (auto bad = find_antisymmetry_failure(table)) {
    throw StructureConstantError("antisymmetry fails on basis pair (" + std::to_string(bad->first) +
                                 ", " + std::to_string(bad->second) + ") of " + rs.spec().name());
  }
  if (auto bad = find_jacobi_failure(table)) {
    throw StructureConstantError(bad->describe() + " of " + rs.spec().name());
  }
  return ChevalleyStructure(rs, std::move(table));
}

ChevalleyStructure structure_from_table(const RootSystem& rs, BracketTable table) {
  if (!table.complete() || table.dimension() != rs.algebra_dimension()) {
    throw StructureConstantError("bracket table shape does not match " + rs.spec().name());
  }
  return ChevalleyStructure(rs, std::move(table));
}

BracketTable adjoint_table(const ChevalleyStructure& cs) {
  const RootSystem& rs = cs.roots();
  const int l = rs.rank();
  const int m = cs.dimension();
  BracketTable table(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      std::vector<Term> terms;
      const bool ya = a < l, yb = b < l;
      if (ya && yb) {
      } else if (ya) {
        // alpha(y_a) is the a-th coordinate of alpha.
        terms.push_back({b, rs.root(b - l)[a]});
      } else if (yb) {
        terms.push_back({a, -rs.root(a - l)[b]});
      } else if (b - l == rs.negative_of(a - l)) {
        // h_alpha = sum_j alpha_j(h_alpha) y_j.
        const auto co = rs.coroot_coefficients(a - l);
        for (int j = 0; j < l; ++j) {
          std::int64_t c = 0;
          for (int i = 0; i < l; ++i) c += static_cast<std::int64_t>(co[i]) * rs.cartan(i, j);
          terms.push_back({j, c});
        }
      } else {
        for (const Term& t : cs.bracket(a, b)) terms.push_back(t);
      }
      table.push_cell(std::move(terms));
    }
  }
  return table;
}

}  // namespace chevalley
