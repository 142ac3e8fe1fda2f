#pragma once

// Chevalley Lie algebras over F_p in the simply connected form g (Cartan
// basis h_i = simple coroots) and the adjoint form g^flat (Cartan basis
// y_i = fundamental coweights), together with centralizers, centre, derived
// algebra, generated ideals, the canonical map g -> g^flat and invariant
// symmetric bilinear forms.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chevalley/exact_linalg.hpp"
#include "chevalley/root_data.hpp"

namespace chevalley {

enum class Flavor { simply_connected, adjoint };

std::string to_string(Flavor f);

class LieAlgebraFp {
 public:
  LieAlgebraFp(std::shared_ptr<const ChevalleyStructure> cs, PrimeField field, Flavor flavor);

  const ChevalleyStructure& structure() const { return *cs_; }
  std::shared_ptr<const ChevalleyStructure> structure_ptr() const { return cs_; }
  const RootSystem& roots() const { return cs_->roots(); }
  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  Flavor flavor() const { return flavor_; }
  int dimension() const { return dim_; }
  int rank() const { return cs_->rank(); }

  struct FpTerm {
    int index;
    std::uint32_t coef;
  };
  std::span<const FpTerm> bracket_basis(int a, int b) const {
    const std::size_t cell = static_cast<std::size_t>(a) * dim_ + b;
    return {cells_.data() + cell_offsets_[cell], cell_offsets_[cell + 1] - cell_offsets_[cell]};
  }

  Vector basis_vector(int a) const;
  Vector root_vector(int root) const { return basis_vector(cs_->root_basis_index(root)); }
  Vector bracket(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const;
  Vector bracket_basis_vector(int a, int b) const;

  // Column b of ad(x) holds [x, b_b].
  MatrixFp ad_matrix(std::span<const std::uint32_t> x) const;
  std::size_t centralizer_dim(std::span<const std::uint32_t> x) const;
  Subspace centralizer(std::span<const std::uint32_t> x) const;
  bool is_central(std::span<const std::uint32_t> x) const;

  // Computed blockwise over the root-lattice grading (the centre is a graded
  // subspace because every basis element is homogeneous).
  Subspace center() const;
  // Kernel of x -> ad(x) as an m -> m^2 map, with no use of the grading.
  Subspace center_by_full_kernel() const;
  Subspace derived_subalgebra() const;
  Subspace ideal_generated_by(const Subspace& s) const;

  Root degree(int a) const { return cs_->degree(a); }
  std::string label(int a) const;

 private:
  struct Entry {
    int b;
    int c;
    std::uint32_t coef;
  };

  std::shared_ptr<const ChevalleyStructure> cs_;
  PrimeField field_;
  Flavor flavor_;
  int dim_;
  std::vector<std::size_t> cell_offsets_;
  std::vector<FpTerm> cells_;
  // All nonzero structure constants grouped by the first argument.
  std::vector<std::size_t> entry_offsets_;
  std::vector<Entry> entries_;
};

LieAlgebraFp instantiate(std::shared_ptr<const ChevalleyStructure> cs, std::uint32_t p, Flavor flavor);

// Vector of g^flat given by coordinates in the coweight basis.
Vector coweight_vector(const LieAlgebraFp& gflat, std::span<const std::int64_t> coords);
std::size_t semisimple_centralizer_dim(const LieAlgebraFp& gflat,
                                       std::span<const std::int64_t> coweight_coords);

struct CanonicalMap {
  MatrixFp matrix;  // column a is phi(b_a)
  // phi(h_i) = sum_j cartan(i, j) y_j when false; the transpose when true.
  bool transposed_convention;
  Subspace kernel;
  Subspace image;
};

class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws ConventionError if neither index convention yields a homomorphism.
CanonicalMap canonical_map(const LieAlgebraFp& g, const LieAlgebraFp& gflat);
bool is_homomorphism(const LieAlgebraFp& from, const LieAlgebraFp& to, const MatrixFp& map);

struct InvariantForm {
  MatrixFp matrix;  // symmetric Gram matrix in the algebra's basis
  Subspace kernel;
  std::size_t nullity;
  // Dimension of the space of invariant symmetric forms searched.
  std::size_t solution_dimension;
  // Basis of that space, as Gram matrices.
  std::vector<MatrixFp> solution_basis;
};

class NoInvariantForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invariant symmetric forms of degree zero for the root-lattice grading
// (<g_a, g_b> = 0 unless deg a + deg b = 0); picks one of maximal rank.
InvariantForm invariant_form(const LieAlgebraFp& L);

// Dimension of the space of all invariant symmetric forms, from the
// m(m+1)/2-unknown linear system with no grading assumption.
std::size_t invariant_form_space_dimension_dense(const LieAlgebraFp& L);
// The same space split by total degree (exact, since each invariance
// equation involves one degree only). Returns dimension per degree sector
// together with the maximal rank attained inside the full space when it
// can be enumerated.
struct GradedFormSpace {
  std::size_t degree_zero_dimension;
  std::size_t other_degrees_dimension;
};
GradedFormSpace invariant_form_space_by_degree(const LieAlgebraFp& L);

bool is_associative(const LieAlgebraFp& L, const MatrixFp& form);
MatrixFp form_combination(const InvariantForm& f, std::span<const std::uint32_t> coeffs);

class WrongTypeForConstruction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integral matrices of the standard 2l-dimensional representation of g for
// type D_l, generated from the simple root vectors via the bracket table.
std::vector<std::vector<std::vector<std::int64_t>>> dl_standard_representation(
    const ChevalleyStructure& cs);

// The form Tr(r11 r11' + r12^L r21'^U + r21^L r12'^U) on g of type D_l over
// F_2, where r = (r11 r12; r21 r22) is the standard representation and
// Z^L / Z^U are the strictly lower / upper triangular parts.
InvariantForm dl_char2_form(int l);
InvariantForm dl_char2_form(const LieAlgebraFp& g);

}  // namespace chevalley
