#pragma once

// Exact linear algebra over prime fields F_p.
//
// Vectors are plain residue arrays. Subspaces are kept in fully reduced
// row echelon form, so two Subspace values are equal exactly when they
// describe the same subspace. For p = 2 the echelon kernel packs rows into
// 64-bit words and eliminates with XOR.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevalley {

class Rng;

using Vector = std::vector<std::uint32_t>;

class PrimeField {
 public:
  // Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class MatrixFp {
 public:
  MatrixFp(PrimeField field, std::size_t rows, std::size_t cols);
  MatrixFp(PrimeField field, std::size_t cols, const std::vector<Vector>& rows);

  static MatrixFp identity(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::uint32_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  MatrixFp transpose() const;
  MatrixFp operator*(const MatrixFp& rhs) const;
  Vector apply(std::span<const std::uint32_t> v) const;
  bool is_zero() const;

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

class Subspace;

// Incremental row echelon basis. Each stored row is zero before its pivot,
// has a unit pivot, and vanishes at the pivots of all earlier rows; a new
// vector is therefore reduced by a single pass in insertion order.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t ambient);

  // Returns true when v was not already in the span.
  bool insert(std::span<const std::uint32_t> v);
  bool contains(std::span<const std::uint32_t> v) const;

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient() const { return ambient_; }
  bool full() const { return pivots_.size() == ambient_; }
  const PrimeField& field() const { return field_; }
  std::span<const std::size_t> pivots() const { return pivots_; }

  // Row i of the (not fully reduced) basis, in insertion order.
  Vector row(std::size_t i) const;

  Subspace to_subspace() const;

 private:
  // Reduces in place; returns the index of the first nonzero entry or
  // ambient_ when the vector reduced to zero.
  std::size_t reduce_generic(std::vector<std::uint64_t>& acc) const;
  std::size_t reduce_binary(std::vector<std::uint64_t>& words) const;

  PrimeField field_;
  std::size_t ambient_;
  bool binary_;
  std::size_t words_per_row_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> rows_;       // generic storage, row-major
  std::vector<std::uint64_t> bit_rows_;   // packed storage for p = 2
};

class Subspace {
 public:
  static Subspace zero(PrimeField field, std::size_t ambient);
  static Subspace full(PrimeField field, std::size_t ambient);
  static Subspace span(PrimeField field, std::size_t ambient,
                       const std::vector<Vector>& vectors);

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return ambient_ - basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  // Rows of the reduced echelon basis, sorted by pivot column.
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonBasis;
  Subspace(PrimeField field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t rank(const MatrixFp& m);
// Right null space {v : M v = 0}.
Subspace kernel(const MatrixFp& m);
// Null space of the linear forms given by the rows of an echelon basis.
Subspace annihilator(const EchelonBasis& rows);
Subspace row_space(const MatrixFp& m);

Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

Vector random_vector(const PrimeField& field, std::size_t m, Rng& rng);
Subspace random_subspace(const PrimeField& field, std::size_t m, std::size_t d, Rng& rng);
Subspace random_subspace(const PrimeField& field, std::size_t m, std::size_t d,
                         std::uint64_t seed);

// Row encoding used in serialized witnesses: one character per entry for
// p <= 10, comma-separated decimal residues otherwise.
std::string encode_row(const PrimeField& field, std::span<const std::uint32_t> row);
Vector decode_row(const PrimeField& field, const std::string& text);

}  // namespace chevalley
