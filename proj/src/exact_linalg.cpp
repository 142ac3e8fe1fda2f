#include "chevalley/exact_linalg.hpp"

#include <algorithm>
#include <bit>

#include "chevalley/rng.hpp"

namespace chevalley {

namespace {

// Lazily reduced accumulators stay below 2^64 as long as the number of
// multiply-adds between reductions is bounded; with p < 2^16 each step adds
// less than 2^32, so rows of any practical length are safe.
constexpr std::uint32_t kLazyLimit = 1u << 16;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// MatrixFp

MatrixFp::MatrixFp(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFp::MatrixFp(PrimeField field, std::size_t cols, const std::vector<Vector>& rows)
    : field_(field), rows_(rows.size()), cols_(cols), data_(rows.size() * cols, 0) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AmbientMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) data_[r * cols + c] = rows[r][c] % field.p();
  }
}

MatrixFp MatrixFp::identity(PrimeField field, std::size_t n) {
  MatrixFp m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % field.p();
  return m;
}

Vector MatrixFp::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw AmbientMismatch("matrix product shape or field mismatch");
  }
  const std::uint32_t p = field_.p();
  MatrixFp out(field_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const std::uint32_t* src = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t c = 0; c < rhs.cols_; ++c) acc[c] = (acc[c] + a * src[c]) % p;
    }
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = static_cast<std::uint32_t>(acc[c]);
  }
  return out;
}

Vector MatrixFp::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw AmbientMismatch("vector length differs from column count");
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % field_.p();
    }
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

bool MatrixFp::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(PrimeField field, std::size_t ambient)
    : field_(field),
      ambient_(ambient),
      binary_(field.p() == 2),
      words_per_row_((ambient + 63) / 64) {}

std::size_t EchelonBasis::reduce_generic(std::vector<std::uint64_t>& acc) const {
  const std::uint32_t p = field_.p();
  const bool lazy = p < kLazyLimit;
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const std::size_t piv = pivots_[j];
    const std::uint64_t c = acc[piv] % p;
    if (c == 0) {
      acc[piv] = 0;
      continue;
    }
    const std::uint64_t factor = p - c;
    const std::uint32_t* row = rows_.data() + j * ambient_;
    if (lazy) {
      for (std::size_t k = piv; k < ambient_; ++k) acc[k] += factor * row[k];
    } else {
      for (std::size_t k = piv; k < ambient_; ++k) acc[k] = (acc[k] + factor * row[k]) % p;
    }
    acc[piv] = 0;
  }
  for (std::size_t k = 0; k < ambient_; ++k) {
    acc[k] %= p;
  }
  for (std::size_t k = 0; k < ambient_; ++k) {
    if (acc[k] != 0) return k;
  }
  return ambient_;
}

std::size_t EchelonBasis::reduce_binary(std::vector<std::uint64_t>& words) const {
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const std::size_t piv = pivots_[j];
    if ((words[piv / 64] >> (piv % 64)) & 1u) {
      const std::uint64_t* row = bit_rows_.data() + j * words_per_row_;
      for (std::size_t w = piv / 64; w < words_per_row_; ++w) words[w] ^= row[w];
    }
  }
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    if (words[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words[w]));
  }
  return ambient_;
}

bool EchelonBasis::insert(std::span<const std::uint32_t> v) {
  if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
  if (full()) return false;
  if (binary_) {
    std::vector<std::uint64_t> words(words_per_row_, 0);
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (v[k] & 1u) words[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    const std::size_t lead = reduce_binary(words);
    if (lead == ambient_) return false;
    pivots_.push_back(lead);
    bit_rows_.insert(bit_rows_.end(), words.begin(), words.end());
    return true;
  }
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  for (auto& x : acc) x %= field_.p();
  const std::size_t lead = reduce_generic(acc);
  if (lead == ambient_) return false;
  const std::uint64_t scale = field_.inv(static_cast<std::uint32_t>(acc[lead]));
  pivots_.push_back(lead);
  const std::size_t base = rows_.size();
  rows_.resize(base + ambient_);
  for (std::size_t k = 0; k < ambient_; ++k) {
    rows_[base + k] = static_cast<std::uint32_t>((acc[k] * scale) % field_.p());
  }
  return true;
}

bool EchelonBasis::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
  if (full()) return true;
  if (binary_) {
    std::vector<std::uint64_t> words(words_per_row_, 0);
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (v[k] & 1u) words[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    return reduce_binary(words) == ambient_;
  }
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  for (auto& x : acc) x %= field_.p();
  return reduce_generic(acc) == ambient_;
}

Vector EchelonBasis::row(std::size_t i) const {
  Vector out(ambient_, 0);
  if (binary_) {
    const std::uint64_t* words = bit_rows_.data() + i * words_per_row_;
    for (std::size_t k = 0; k < ambient_; ++k) out[k] = (words[k / 64] >> (k % 64)) & 1u;
  } else {
    std::copy_n(rows_.data() + i * ambient_, ambient_, out.begin());
  }
  return out;
}

Subspace EchelonBasis::to_subspace() const {
  const std::size_t n = pivots_.size();
  std::vector<Vector> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = row(i);
  // Clear each pivot column above its row, last pivot first; row k is
  // already clean at the pivots of rows inserted after it.
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t piv = pivots_[k];
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint32_t c = rows[j][piv];
      if (c == 0) continue;
      const std::uint32_t f = field_.neg(c);
      for (std::size_t t = piv; t < ambient_; ++t) {
        if (rows[k][t] != 0) rows[j][t] = field_.add(rows[j][t], field_.mul(f, rows[k][t]));
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Subspace s(field_, ambient_);
  s.basis_.reserve(n);
  s.pivots_.reserve(n);
  for (std::size_t i : order) {
    s.basis_.push_back(std::move(rows[i]));
    s.pivots_.push_back(pivots_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(PrimeField field, std::size_t ambient) { return Subspace(field, ambient); }

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(PrimeField field, std::size_t ambient, const std::vector<Vector>& vectors) {
  EchelonBasis eb(field, ambient);
  for (const auto& v : vectors) {
    eb.insert(v);
    if (eb.full()) break;
  }
  return eb.to_subspace();
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
  // With a reduced basis the only candidate combination uses the entries of
  // v at the pivot columns as coefficients.
  Vector rest(v.begin(), v.end());
  for (auto& x : rest) x %= field_.p();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::uint32_t c = rest[pivots_[i]];
    if (c == 0) continue;
    const std::uint32_t f = field_.neg(c);
    for (std::size_t t = pivots_[i]; t < ambient_; ++t) {
      if (basis_[i][t] != 0) rest[t] = field_.add(rest[t], field_.mul(f, basis_[i][t]));
    }
  }
  return std::all_of(rest.begin(), rest.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("subspaces live in different ambients");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

// ---------------------------------------------------------------------------
// Free functions

std::size_t rank(const MatrixFp& m) {
  EchelonBasis eb(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    eb.insert(m.row(r));
    if (eb.full()) break;
  }
  return eb.dim();
}

Subspace annihilator(const EchelonBasis& rows) {
  const Subspace rref = rows.to_subspace();
  const PrimeField& f = rref.field();
  const std::size_t n = rref.ambient();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t piv : rref.pivots()) is_pivot[piv] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rref.dim(); ++i) {
      v[rref.pivots()[i]] = f.neg(rref.basis()[i][free]);
    }
    out.push_back(std::move(v));
  }
  return Subspace::span(f, n, out);
}

Subspace kernel(const MatrixFp& m) {
  EchelonBasis eb(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    eb.insert(m.row(r));
    if (eb.full()) break;
  }
  return annihilator(eb);
}

Subspace row_space(const MatrixFp& m) {
  EchelonBasis eb(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    eb.insert(m.row(r));
    if (eb.full()) break;
  }
  return eb.to_subspace();
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field())) {
    throw AmbientMismatch("subspaces differ in ambient dimension or field");
  }
}

}  // namespace

Subspace span_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  EchelonBasis eb(a.field(), a.ambient());
  for (const auto& v : a.basis()) eb.insert(v);
  for (const auto& v : b.basis()) eb.insert(v);
  return eb.to_subspace();
}

// Zassenhaus: echelonize rows (a|a) and (b|0); rows whose pivot lies in the
// right half span the intersection.
Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient();
  EchelonBasis eb(a.field(), 2 * n);
  Vector buf(2 * n, 0);
  for (const auto& v : a.basis()) {
    std::copy(v.begin(), v.end(), buf.begin());
    std::copy(v.begin(), v.end(), buf.begin() + n);
    eb.insert(buf);
  }
  for (const auto& v : b.basis()) {
    std::copy(v.begin(), v.end(), buf.begin());
    std::fill(buf.begin() + n, buf.end(), 0);
    eb.insert(buf);
  }
  std::vector<Vector> right;
  for (std::size_t i = 0; i < eb.dim(); ++i) {
    if (eb.pivots()[i] < n) continue;
    Vector r = eb.row(i);
    right.emplace_back(r.begin() + n, r.end());
  }
  return Subspace::span(a.field(), n, right);
}

Vector random_vector(const PrimeField& field, std::size_t m, Rng& rng) {
  Vector v(m);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(field.p()));
  return v;
}

Subspace random_subspace(const PrimeField& field, std::size_t m, std::size_t d, Rng& rng) {
  if (d > m) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
  EchelonBasis eb(field, m);
  while (eb.dim() < d) eb.insert(random_vector(field, m, rng));
  return eb.to_subspace();
}

Subspace random_subspace(const PrimeField& field, std::size_t m, std::size_t d,
                         std::uint64_t seed) {
  Rng rng(seed);
  return random_subspace(field, m, d, rng);
}

std::string encode_row(const PrimeField& field, std::span<const std::uint32_t> row) {
  std::string out;
  if (field.p() <= 10) {
    out.reserve(row.size());
    for (auto x : row) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(row[i]);
  }
  return out;
}

Vector decode_row(const PrimeField& field, const std::string& text) {
  Vector out;
  if (field.p() <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9' || static_cast<std::uint32_t>(c - '0') >= field.p()) {
        throw std::invalid_argument("bad digit in encoded row");
      }
      out.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
    const unsigned long value = std::stoul(tok);
    if (value >= field.p()) throw std::invalid_argument("residue out of range in encoded row");
    out.push_back(static_cast<std::uint32_t>(value));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace chevalley
