#include <gtest/gtest.h>

#include "chevalley/lie_algebra.hpp"
#include "chevalley/rng.hpp"
#include "chevalley/structure_cache.hpp"

using namespace chevalley;

namespace {

LieAlgebraFp sc(Family f, int l, std::uint32_t p) {
  return instantiate(chevalley_structure({f, l}), p, Flavor::simply_connected);
}

std::uint32_t pair(const MatrixFp& B, const Vector& x, const Vector& y) {
  const Vector By = B.apply(y);
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = (s + static_cast<std::uint64_t>(x[i]) * By[i]) % B.field().p();
  return static_cast<std::uint32_t>(s);
}

// B([x,y],z) = B(x,[y,z]) on random triples, plus symmetry.
bool randomly_associative(const LieAlgebraFp& L, const MatrixFp& B, std::uint64_t seed) {
  if (!(B == B.transpose())) return false;
  Rng rng(seed);
  for (int i = 0; i < 40; ++i) {
    Vector x = random_vector(L.field(), L.dimension(), rng);
    Vector y = random_vector(L.field(), L.dimension(), rng);
    Vector z = random_vector(L.field(), L.dimension(), rng);
    if (pair(B, L.bracket(x, y), z) != pair(B, x, L.bracket(y, z))) return false;
  }
  return true;
}

const std::vector<std::tuple<Family, int, std::uint32_t>> kTolerableSmall = {
    {Family::A, 2, 2}, {Family::A, 2, 3}, {Family::A, 2, 5}, {Family::A, 3, 2}, {Family::A, 3, 3},
    {Family::A, 4, 5}, {Family::C, 2, 3}, {Family::C, 3, 3}, {Family::B, 3, 3}, {Family::D, 4, 2},
    {Family::D, 4, 3}, {Family::G, 2, 2}, {Family::G, 2, 5}, {Family::C, 4, 5}, {Family::F, 4, 3}};

}  // namespace

TEST(InvariantForm, Nullities) {
  EXPECT_EQ(invariant_form(sc(Family::A, 2, 5)).nullity, 0u);
  EXPECT_EQ(invariant_form(sc(Family::A, 2, 3)).nullity, 1u);
  EXPECT_EQ(invariant_form(sc(Family::A, 4, 5)).nullity, 1u);
  EXPECT_EQ(invariant_form(sc(Family::D, 4, 2)).nullity, 2u);
  EXPECT_EQ(invariant_form(sc(Family::E, 7, 2)).nullity, 1u);
  EXPECT_EQ(invariant_form(sc(Family::E, 8, 5)).nullity, 0u);
}

TEST(InvariantForm, AssociativeAndKernelIsCenter) {
  for (auto [f, l, p] : kTolerableSmall) {
    LieAlgebraFp g = sc(f, l, p);
    InvariantForm B = invariant_form(g);
    EXPECT_TRUE(is_associative(g, B.matrix));
    EXPECT_TRUE(randomly_associative(g, B.matrix, p * 31 + l));
    for (const MatrixFp& s : B.solution_basis) EXPECT_TRUE(randomly_associative(g, s, l));
    EXPECT_EQ(B.kernel, g.center()) << g.roots().spec().name() << " p=" << p;
  }
}

TEST(InvariantForm, NonInvariantFormIsRejected) {
  LieAlgebraFp g = sc(Family::A, 2, 5);
  MatrixFp id = MatrixFp::identity(g.field(), g.dimension());
  EXPECT_FALSE(is_associative(g, id));
  EXPECT_FALSE(randomly_associative(g, id, 1));
}

TEST(InvariantForm, ChosenRankIsMaximal) {
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 3, 2}, {Family::D, 4, 2}, {Family::A, 2, 3}, {Family::G, 2, 2}}) {
    LieAlgebraFp g = sc(f, l, p);
    InvariantForm B = invariant_form(g);
    const std::size_t d = B.solution_basis.size();
    ASSERT_LE(d, 6u);
    const std::size_t chosen = g.dimension() - B.nullity;
    std::size_t best = 0;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= p;
    Vector coeffs(d);
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t x = code;
      for (auto& c : coeffs) {
        c = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      best = std::max(best, rank(form_combination(B, coeffs)));
    }
    EXPECT_EQ(best, chosen);
  }
}

TEST(InvariantForm, DegreeZeroAnsatzIsComplete) {
  for (auto [f, l, p] : kTolerableSmall) {
    LieAlgebraFp g = sc(f, l, p);
    const std::size_t ansatz = invariant_form(g).solution_dimension;
    GradedFormSpace graded = invariant_form_space_by_degree(g);
    EXPECT_EQ(graded.degree_zero_dimension, ansatz);
    EXPECT_EQ(graded.other_degrees_dimension, 0u) << g.roots().spec().name() << " p=" << p;
    if (g.dimension() <= 36) EXPECT_EQ(invariant_form_space_dimension_dense(g), ansatz);
  }
}

TEST(InvariantForm, IntolerableC2HasFormsOfNonzeroDegree) {
  LieAlgebraFp g = sc(Family::C, 2, 2);
  GradedFormSpace graded = invariant_form_space_by_degree(g);
  EXPECT_GT(graded.other_degrees_dimension, 0u);
  EXPECT_EQ(invariant_form_space_dimension_dense(g),
            graded.degree_zero_dimension + graded.other_degrees_dimension);
}

TEST(DlChar2, StandardRepresentationIsHomomorphism) {
  auto cs = chevalley_structure({Family::D, 4});
  const auto rho = dl_standard_representation(*cs);
  ASSERT_EQ(rho.size(), 28u);
  const int n = 8;
  for (int a = 0; a < 28; ++a)
    for (int b = 0; b < 28; ++b) {
      std::vector<std::vector<std::int64_t>> lhs(n, std::vector<std::int64_t>(n, 0)), rhs = lhs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) lhs[i][j] += rho[a][i][k] * rho[b][k][j] - rho[b][i][k] * rho[a][k][j];
      for (const Term& t : cs->bracket(a, b))
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) rhs[i][j] += t.coef * rho[t.index][i][j];
      ASSERT_EQ(lhs, rhs) << a << "," << b;
    }
}

TEST(DlChar2, NullityAndKernel) {
  const std::size_t expected[] = {2, 1, 2, 1};
  for (int l = 4; l <= 7; ++l) {
    LieAlgebraFp g = sc(Family::D, l, 2);
    InvariantForm B = dl_char2_form(g);
    EXPECT_EQ(B.nullity, expected[l - 4]) << "D" << l;
    EXPECT_TRUE(is_associative(g, B.matrix));
    EXPECT_TRUE(randomly_associative(g, B.matrix, l));
    EXPECT_EQ(B.kernel, invariant_form(g).kernel);
    EXPECT_EQ(B.kernel, g.center());
  }
  EXPECT_EQ(dl_char2_form(5).nullity, 1u);
}

TEST(DlChar2, WrongTypeRejected) {
  EXPECT_THROW(dl_char2_form(sc(Family::A, 3, 2)), WrongTypeForConstruction);
  EXPECT_THROW(dl_char2_form(sc(Family::D, 4, 3)), WrongTypeForConstruction);
  EXPECT_THROW(dl_char2_form(instantiate(chevalley_structure({Family::D, 4}), 2, Flavor::adjoint)),
               WrongTypeForConstruction);
  EXPECT_THROW(dl_char2_form(3), WrongTypeForConstruction);
}
