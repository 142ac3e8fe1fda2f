#include <gtest/gtest.h>

#include <map>

#include "chevalley/exact_linalg.hpp"
#include "chevalley/rng.hpp"
#include "oracles.hpp"

using namespace chevalley;

namespace {

MatrixFp random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::uint64_t seed) {
  Rng rng(seed);
  MatrixFp m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::uint32_t>(rng.below(f.p()));
  return m;
}

oracle::Mat to_mat(const MatrixFp& m) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

std::vector<oracle::Vec> all_in(const Subspace& s) {
  return std::vector<oracle::Vec>(s.basis().begin(), s.basis().end());
}

}  // namespace

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeField, InverseAndReduce) {
  PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.reduce(-14), 0u);
}

TEST(Rank, MatchesMinorExpansion) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      // Low-rank products exercise the interesting cases.
      MatrixFp a = random_matrix(f, 5, 3 + seed % 3, seed);
      MatrixFp b = random_matrix(f, a.cols(), 5, seed + 100);
      MatrixFp m = seed % 2 ? a * b : random_matrix(f, 5, 5, seed + 200);
      EXPECT_EQ(rank(m), oracle::minor_rank(to_mat(m), p)) << "p=" << p << " seed=" << seed;
    }
  }
}

TEST(Rank, SubmatricesOfLargerMatrix) {
  PrimeField f(5);
  MatrixFp big = random_matrix(f, 10, 10, 7);
  for (std::size_t r0 : {0u, 3u, 5u}) {
    MatrixFp sub(f, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) sub(i, j) = big(r0 + i, (j * 2 + r0) % 10);
    EXPECT_EQ(rank(sub), oracle::minor_rank(to_mat(sub), 5));
    EXPECT_GE(rank(big), rank(sub));
  }
  EXPECT_EQ(rank(big), rank(big.transpose()));
}

TEST(Kernel, AnnihilatesAndHasComplementaryDimension) {
  for (std::uint32_t p : {2u, 3u, 7u}) {
    PrimeField f(p);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      MatrixFp m = random_matrix(f, 4 + seed % 5, 9, seed);
      if (seed % 3 == 0) m = random_matrix(f, 9, 2, seed) * random_matrix(f, 2, 9, seed + 1);
      Subspace k = kernel(m);
      EXPECT_EQ(k.dim() + rank(m), m.cols());
      for (const Vector& v : k.basis()) {
        Vector mv = m.apply(v);
        EXPECT_TRUE(std::all_of(mv.begin(), mv.end(), [](std::uint32_t x) { return x == 0; }));
      }
    }
  }
}

TEST(Kernel, BinaryPathAgreesWithEnumeration) {
  PrimeField f(2);
  MatrixFp m = random_matrix(f, 4, 7, 3);
  std::size_t count = 0;
  for (const auto& v : oracle::all_vectors(2, 7)) {
    Vector mv = m.apply(v);
    if (std::all_of(mv.begin(), mv.end(), [](std::uint32_t x) { return x == 0; })) ++count;
  }
  EXPECT_EQ(std::size_t{1} << kernel(m).dim(), count);
}

TEST(Subspace, SumAndIntersectionByEnumeration) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    const std::size_t m = p == 2 ? 8 : 5;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Subspace a = random_subspace(f, m, 1 + seed % 4, seed);
      Subspace b = random_subspace(f, m, 2 + seed % 3, seed + 50);
      auto sa = oracle::span_set(p, m, all_in(a));
      auto sb = oracle::span_set(p, m, all_in(b));
      std::vector<oracle::Vec> both = all_in(a);
      for (const auto& v : b.basis()) both.push_back(v);
      auto ssum = oracle::span_set(p, m, both);
      std::size_t inter = 0;
      for (const auto& v : sa) inter += sb.count(v);

      Subspace s = span_sum(a, b);
      Subspace i = intersect(a, b);
      EXPECT_EQ(oracle::log_p(ssum.size(), p), s.dim());
      EXPECT_EQ(oracle::log_p(inter, p), i.dim());
      EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
      for (const auto& v : ssum) EXPECT_TRUE(s.contains(v));
      for (const auto& v : i.basis()) {
        EXPECT_TRUE(sa.count(v));
        EXPECT_TRUE(sb.count(v));
      }
    }
  }
}

TEST(Subspace, CanonicalFormMakesEqualityStructural) {
  PrimeField f(5);
  Subspace a = random_subspace(f, 6, 3, 11);
  std::vector<Vector> shuffled;
  // Different generators for the same space.
  const auto& bs = a.basis();
  shuffled.push_back(bs[2]);
  Vector mix(6);
  for (std::size_t j = 0; j < 6; ++j) mix[j] = f.add(bs[0][j], f.mul(3, bs[1][j]));
  shuffled.push_back(mix);
  shuffled.push_back(bs[1]);
  EXPECT_EQ(Subspace::span(f, 6, shuffled), a);
  EXPECT_TRUE(a.contains(a));
  EXPECT_TRUE(Subspace::full(f, 6).contains(a));
  EXPECT_FALSE(a.contains(Subspace::full(f, 6)));
}

TEST(Subspace, AmbientMismatchThrows) {
  PrimeField f(3);
  EXPECT_THROW(span_sum(Subspace::zero(f, 3), Subspace::zero(f, 4)), AmbientMismatch);
  EXPECT_THROW(intersect(Subspace::full(f, 2), Subspace::full(f, 5)), AmbientMismatch);
}

TEST(RandomSubspace, DimensionAndSpread) {
  PrimeField f(3);
  Rng rng(99);
  std::map<std::vector<std::size_t>, int> pivot_patterns;
  for (int i = 0; i < 1000; ++i) {
    Subspace s = random_subspace(f, 8, 4, rng);
    ASSERT_EQ(s.dim(), 4u);
    ++pivot_patterns[s.pivots()];
  }
  // The generic cell dominates, but not exclusively.
  const int generic = pivot_patterns[{0, 1, 2, 3}];
  EXPECT_GT(generic, 400);
  EXPECT_LT(generic, 750);
  EXPECT_TRUE(random_subspace(f, 8, 0, rng).is_zero());
  EXPECT_TRUE(random_subspace(f, 8, 8, rng).is_full());
}

TEST(RandomSubspace, SeededIsReproducible) {
  PrimeField f(7);
  EXPECT_EQ(random_subspace(f, 10, 4, 5), random_subspace(f, 10, 4, 5));
  EXPECT_NE(random_subspace(f, 10, 4, 5), random_subspace(f, 10, 4, 6));
}

TEST(EncodeRow, RoundTrip) {
  PrimeField f5(5);
  Vector v{0, 4, 2, 1};
  EXPECT_EQ(encode_row(f5, v), "0421");
  EXPECT_EQ(decode_row(f5, "0421"), v);
  PrimeField f13(13);
  Vector w{12, 0, 7};
  EXPECT_EQ(decode_row(f13, encode_row(f13, w)), w);
  EXPECT_THROW(decode_row(f5, "07"), std::invalid_argument);
}
