#include <gtest/gtest.h>

#include "chevalley/lie_algebra.hpp"
#include "chevalley/rng.hpp"
#include "chevalley/structure_cache.hpp"
#include "oracles.hpp"

using namespace chevalley;

namespace {

LieAlgebraFp sc(Family f, int l, std::uint32_t p) {
  return instantiate(chevalley_structure({f, l}), p, Flavor::simply_connected);
}
LieAlgebraFp adj(Family f, int l, std::uint32_t p) {
  return instantiate(chevalley_structure({f, l}), p, Flavor::adjoint);
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

// Counts elements of L commuting with x by running over all of F_p^m.
std::size_t brute_centralizer_size(const LieAlgebraFp& L, const Vector& x) {
  std::size_t n = 0;
  for (const auto& y : oracle::all_vectors(L.p(), L.dimension())) n += is_zero(L.bracket(x, y));
  return n;
}

std::size_t brute_center_size(const LieAlgebraFp& L) {
  std::size_t n = 0;
  for (const auto& y : oracle::all_vectors(L.p(), L.dimension())) {
    bool central = true;
    for (int b = 0; b < L.dimension() && central; ++b) central = is_zero(L.bracket(y, L.basis_vector(b)));
    n += central;
  }
  return n;
}

}  // namespace

TEST(LieAlgebra, Dimensions) {
  EXPECT_EQ(sc(Family::A, 2, 5).dimension(), 8);
  EXPECT_EQ(sc(Family::G, 2, 5).dimension(), 14);
  EXPECT_EQ(sc(Family::E, 8, 2).dimension(), 248);
  EXPECT_EQ(sc(Family::F, 4, 5).dimension(), 52);
}

TEST(LieAlgebra, BracketIsAlternating) {
  LieAlgebraFp L = sc(Family::C, 3, 3);
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    Vector x = random_vector(L.field(), L.dimension(), rng);
    EXPECT_TRUE(is_zero(L.bracket(x, x)));
  }
  EXPECT_THROW(L.bracket(Vector(3), Vector(3)), AmbientMismatch);
}

TEST(Centralizer, RootVectorExamples) {
  LieAlgebraFp a2 = sc(Family::A, 2, 5);
  EXPECT_EQ(a2.centralizer_dim(a2.root_vector(a2.roots().highest_root())), 4u);
  LieAlgebraFp c2 = sc(Family::C, 2, 3);
  EXPECT_EQ(c2.centralizer_dim(c2.root_vector(c2.roots().long_simple_root())), 6u);
  EXPECT_EQ(c2.centralizer_dim(c2.root_vector(c2.roots().highest_root())), 6u);
}

TEST(Centralizer, MatchesEnumeration) {
  for (std::uint32_t p : {2u, 3u}) {
    LieAlgebraFp L = sc(Family::A, 2, p);
    Rng rng(p);
    std::vector<Vector> samples = {L.root_vector(0), L.basis_vector(0)};
    for (int i = 0; i < 3; ++i) samples.push_back(random_vector(L.field(), 8, rng));
    for (const Vector& x : samples) {
      const std::size_t n = brute_centralizer_size(L, x);
      EXPECT_EQ(oracle::log_p(n, p), L.centralizer_dim(x));
      EXPECT_EQ(L.centralizer(x).dim(), L.centralizer_dim(x));
    }
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(sc(Family::A, 2, 3).center().dim(), 1u);
  EXPECT_EQ(sc(Family::A, 2, 5).center().dim(), 0u);
  EXPECT_EQ(sc(Family::A, 3, 2).center().dim(), 1u);
  EXPECT_EQ(sc(Family::D, 4, 2).center().dim(), 2u);
  EXPECT_EQ(sc(Family::D, 5, 2).center().dim(), 1u);
  EXPECT_EQ(sc(Family::E, 6, 3).center().dim(), 1u);
  EXPECT_EQ(sc(Family::E, 7, 2).center().dim(), 1u);
  EXPECT_EQ(sc(Family::G, 2, 5).center().dim(), 0u);
  EXPECT_EQ(sc(Family::G, 2, 2).center().dim(), 0u);
}

TEST(Center, EnumerationOracle) {
  for (std::uint32_t p : {2u, 3u}) {
    LieAlgebraFp L = sc(Family::A, 2, p);
    EXPECT_EQ(oracle::log_p(brute_center_size(L), p), L.center().dim());
  }
}

TEST(Center, GradedAgreesWithFullKernel) {
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 3, 2}, {Family::D, 4, 2}, {Family::E, 6, 3}, {Family::C, 3, 3}, {Family::B, 3, 2}}) {
    LieAlgebraFp g = sc(f, l, p);
    EXPECT_EQ(g.center(), g.center_by_full_kernel());
    LieAlgebraFp ga = adj(f, l, p);
    EXPECT_EQ(ga.center(), ga.center_by_full_kernel());
  }
}

TEST(Ideals, DerivedIsEverything) {
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 2, 3}, {Family::D, 4, 2}, {Family::G, 2, 2}, {Family::B, 3, 2}}) {
    EXPECT_TRUE(sc(f, l, p).derived_subalgebra().is_full());
  }
  // The adjoint form at a prime dividing the Cartan determinant is not perfect.
  EXPECT_EQ(adj(Family::A, 2, 3).derived_subalgebra().dim(), 7u);
}

TEST(Ideals, ShortRootIdealInB3Char2) {
  LieAlgebraFp g = sc(Family::B, 3, 2);
  const RootSystem& rs = g.roots();
  int short_simple = -1;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (rs.height(i) == 1 && !rs.is_long(i)) short_simple = i;
  ASSERT_GE(short_simple, 0);
  Subspace I = g.ideal_generated_by(Subspace::span(g.field(), g.dimension(), {g.root_vector(short_simple)}));
  EXPECT_FALSE(I.is_full());
  EXPECT_FALSE(g.center().contains(I));
  EXPECT_TRUE(g.ideal_generated_by(Subspace::zero(g.field(), g.dimension())).is_zero());
  // Every short root vector lies in it, no long one does.
  for (int a = 0; a < rs.num_roots(); ++a)
    EXPECT_EQ(I.contains(g.root_vector(a)), !rs.is_long(a));
}

TEST(CanonicalMap, HomomorphismWithCentralKernel) {
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 2, 3}, {Family::A, 3, 2}, {Family::D, 4, 2}, {Family::E, 6, 3}, {Family::G, 2, 2},
           {Family::C, 3, 3}, {Family::F, 4, 3}, {Family::B, 4, 5}}) {
    LieAlgebraFp g = sc(f, l, p), ga = adj(f, l, p);
    CanonicalMap phi = canonical_map(g, ga);
    EXPECT_TRUE(is_homomorphism(g, ga, phi.matrix));
    EXPECT_EQ(phi.kernel, g.center());
    EXPECT_EQ(phi.image, ga.derived_subalgebra());
    for (int a = g.rank(); a < g.dimension(); ++a) EXPECT_EQ(phi.matrix.column(a), ga.basis_vector(a));
    const bool invertible = g.roots().cartan_determinant() % p != 0;
    EXPECT_EQ(rank(phi.matrix) == static_cast<std::size_t>(g.dimension()), invertible);
  }
}

TEST(CanonicalMap, RejectsWrongArguments) {
  LieAlgebraFp g = sc(Family::A, 2, 3), ga = adj(Family::A, 2, 3);
  EXPECT_THROW(canonical_map(ga, g), std::invalid_argument);
  EXPECT_THROW(canonical_map(g, adj(Family::A, 2, 5)), std::invalid_argument);
  EXPECT_FALSE(is_homomorphism(g, ga, MatrixFp::identity(g.field(), 8)));
}

TEST(Semisimple, CoweightCentralizers) {
  // dim c(y_i) = l + #{roots whose i-th coefficient vanishes mod p}.
  auto oracle_dim = [](const RootSystem& rs, int i, std::uint32_t p) {
    int n = rs.rank();
    for (const Root& r : rs.roots()) n += r[i] % static_cast<int>(p) == 0;
    return static_cast<std::size_t>(n);
  };
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 4, 5}, {Family::G, 2, 2}, {Family::E, 8, 2}, {Family::F, 4, 3}, {Family::D, 5, 2}}) {
    LieAlgebraFp ga = adj(f, l, p);
    for (int i = 0; i < l; ++i) {
      std::vector<std::int64_t> c(l, 0);
      c[i] = 1;
      EXPECT_EQ(semisimple_centralizer_dim(ga, c), oracle_dim(ga.roots(), i, p));
    }
  }
  for (int l = 2; l <= 6; ++l) {
    std::vector<std::int64_t> c(l, 0);
    c[0] = 1;
    EXPECT_EQ(semisimple_centralizer_dim(adj(Family::A, l, 7), c), static_cast<std::size_t>(l * l));
  }
  EXPECT_EQ(semisimple_centralizer_dim(adj(Family::G, 2, 2), std::vector<std::int64_t>{1, 0}), 6u);
  EXPECT_EQ(semisimple_centralizer_dim(adj(Family::E, 8, 2), std::vector<std::int64_t>{0, 0, 1, 0, 0, 0, 0, 0}), 136u);
  EXPECT_THROW(coweight_vector(sc(Family::A, 2, 5), std::vector<std::int64_t>{1, 0}), std::invalid_argument);
}
