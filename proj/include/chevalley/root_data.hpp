#pragma once

// Root systems of the reduced irreducible types and the integral Chevalley
// bracket table built on them.
//
// Conventions, fixed once for the whole library:
//   * roots are integer coordinate vectors in the basis of simple roots,
//     numbered as in Bourbaki's plates;
//   * cartan(i, j) = alpha_j(h_i) = <alpha_j, alpha_i^vee>;
//   * positive roots are ordered by height, then lexicographically; the
//     negative roots follow in the same order;
//   * Chevalley basis order is h_1..h_l, then e_alpha for the positive roots,
//     then e_{-alpha}.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevalley {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_letter(Family f);
Family parse_family(const std::string& text);

struct RootSystemSpec {
  Family family;
  int rank;

  std::string name() const;  // e.g. "E8"
  friend auto operator<=>(const RootSystemSpec&, const RootSystemSpec&) = default;
};

class InadmissibleRootSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool admissible(const RootSystemSpec& spec);

using Root = std::vector<int>;

class RootSystem {
 public:
  // Throws InadmissibleRootSystem for an unsupported family/rank pair.
  static RootSystem build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  // Dimension of the Chevalley Lie algebra: rank + number of roots.
  int algebra_dimension() const { return rank() + num_roots(); }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int index) const { return roots_[index]; }
  std::optional<int> index_of(const Root& r) const;
  int negative_of(int index) const {
    return index < num_positive_ ? index + num_positive_ : index - num_positive_;
  }
  bool is_positive(int index) const { return index < num_positive_; }
  int height(int index) const;

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  std::int64_t cartan_determinant() const;

  // Symmetric integer inner product, scaled so the shortest roots have the
  // smallest norm present in the type.
  int inner(const Root& a, const Root& b) const;
  int norm(int index) const { return inner(roots_[index], roots_[index]); }
  bool is_long(int index) const { return norm(index) == long_norm_; }
  bool simply_laced() const;

  // alpha(h_i) for the root with the given index.
  int pairing(int index, int i) const;
  // Coefficients of h_alpha = alpha^vee in the simple coroot basis.
  std::vector<int> coroot_coefficients(int index) const;

  int highest_root() const { return highest_; }
  // Coefficients of the highest root (its marks).
  const std::vector<int>& marks() const { return roots_[highest_]; }
  // Coefficients of theta^vee in the simple coroot basis.
  std::vector<int> dual_marks() const;
  // Index of a long simple root (the first one in Bourbaki numbering).
  int long_simple_root() const;

 private:
  RootSystemSpec spec_{Family::A, 1};
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  int num_positive_ = 0;
  int highest_ = 0;
  int long_norm_ = 0;
};

// 1 + sum of the dual marks, cross-checked against the closed form.
int dual_coxeter(const RootSystem& rs);
int dual_coxeter_closed_form(const RootSystemSpec& spec);

enum class PrimeClass { very_good, good_not_very_good, tolerable_not_good, intolerable };

std::string to_string(PrimeClass c);
bool is_good(const RootSystem& rs, std::uint32_t p);
bool is_tolerable(PrimeClass c);
PrimeClass classify_prime(const RootSystem& rs, std::uint32_t p);

// Sparse integral bracket table on a fixed basis. bracket(a, b) lists the
// nonzero coefficients of [b_a, b_b].
struct Term {
  int index;
  std::int64_t coef;
  friend bool operator==(const Term&, const Term&) = default;
};

class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(int dim);

  int dimension() const { return dim_; }
  std::span<const Term> bracket(int a, int b) const {
    const std::size_t cell = static_cast<std::size_t>(a) * dim_ + b;
    return {terms_.data() + offsets_[cell], offsets_[cell + 1] - offsets_[cell]};
  }
  std::size_t nonzero_entries() const { return terms_.size(); }

  // Incremental construction in row-major (a, b) order.
  void push_cell(std::vector<Term> terms);
  bool complete() const { return offsets_.size() == static_cast<std::size_t>(dim_) * dim_ + 1; }

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  int dim_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Term> terms_;
};

struct JacobiFailure {
  int a, b, c;
  std::string describe() const;
};

// Exhaustive checks over all ordered basis pairs / triples, exact over Z.
std::optional<std::pair<int, int>> find_antisymmetry_failure(const BracketTable& t);
std::optional<JacobiFailure> find_jacobi_failure(const BracketTable& t);

class StructureConstantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChevalleyStructure {
 public:
  const RootSystem& roots() const { return roots_; }
  int dimension() const { return roots_.algebra_dimension(); }
  int rank() const { return roots_.rank(); }

  const BracketTable& table() const { return table_; }
  std::span<const Term> bracket(int a, int b) const { return table_.bracket(a, b); }

  // Basis bookkeeping.
  int cartan_index(int i) const { return i; }
  int root_basis_index(int root) const { return rank() + root; }
  std::optional<int> root_of_basis(int a) const {
    if (a < rank()) return std::nullopt;
    return a - rank();
  }
  // Root-lattice degree of a basis element (zero for the Cartan part).
  Root degree(int a) const;
  std::string label(int a) const;

  // N_{alpha,beta}, zero when alpha + beta is not a root.
  std::int64_t structure_constant(int alpha, int beta) const;

 private:
  friend ChevalleyStructure build_structure_constants(const RootSystem& rs);
  friend ChevalleyStructure structure_from_table(const RootSystem& rs, BracketTable table);
  ChevalleyStructure(RootSystem rs, BracketTable table)
      : roots_(std::move(rs)), table_(std::move(table)) {}

  RootSystem roots_;
  BracketTable table_;
};

// Signs are fixed through extraspecial pairs (all +) in the positive-root
// order; the remaining constants follow from the standard Chevalley-basis
// relations. Throws StructureConstantError with the offending triple if the
// result fails the Jacobi identity.
ChevalleyStructure build_structure_constants(const RootSystem& rs);

// Wraps an externally supplied table (e.g. a cache entry); validates shape.
ChevalleyStructure structure_from_table(const RootSystem& rs, BracketTable table);

// Integral bracket table of the adjoint form, basis y_1..y_l (fundamental
// coweights) followed by the root vectors in the same order.
BracketTable adjoint_table(const ChevalleyStructure& cs);

}  // namespace chevalley
