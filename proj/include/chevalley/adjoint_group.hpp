#pragma once

// Root automorphisms x_alpha(t) = sum_k t^k (ad e_alpha)^k / k!, with the
// divided powers formed over the integers before reduction mod p.

#include <vector>

#include "chevalley/exact_linalg.hpp"
#include "chevalley/lie_algebra.hpp"
#include "chevalley/rng.hpp"

namespace chevalley {

struct IntEntry {
  int row;
  int col;
  std::int64_t value;
  friend bool operator==(const IntEntry&, const IntEntry&) = default;
};

// Sparse integer matrix, entries sorted by (row, col).
using SparseIntMatrix = std::vector<IntEntry>;

struct DividedPowerFamily {
  int root;
  int dimension;
  // powers[k] = (ad e_root)^k / k!, k = 0..k_max; powers[k_max + 1] would be 0.
  std::vector<SparseIntMatrix> powers;
  int k_max() const { return static_cast<int>(powers.size()) - 1; }
};

class DivisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws DivisionError if some (ad e)^k / k! is not integral.
DividedPowerFamily divided_powers(const BracketTable& table, int rank, int root);

class AdjointGroup {
 public:
  explicit AdjointGroup(const LieAlgebraFp& L);

  const LieAlgebraFp& algebra() const { return *L_; }
  const DividedPowerFamily& family(int root) const { return families_[root]; }

  MatrixFp root_automorphism(int root, std::uint32_t t) const;
  Vector apply(int root, std::uint32_t t, std::span<const std::uint32_t> x) const;

 private:
  const LieAlgebraFp* L_;
  std::vector<DividedPowerFamily> families_;
};

// g = x_{a_1}(t_1) x_{a_2}(t_2) ... x_{a_n}(t_n).
struct GroupWord {
  std::vector<std::pair<int, std::uint32_t>> factors;

  Vector apply(const AdjointGroup& G, std::span<const std::uint32_t> x) const;
  MatrixFp matrix(const AdjointGroup& G) const;
};

// n_factors root automorphisms, alternating positive and negative roots,
// each root and parameter uniform.
GroupWord random_group_word(const AdjointGroup& G, std::size_t n_factors, Rng& rng);
MatrixFp random_group_element(const AdjointGroup& G, std::size_t n_factors, std::uint64_t seed);

}  // namespace chevalley
