#include <gtest/gtest.h>

#include "chevalley/invariants.hpp"

using namespace chevalley;

TEST(Invariants, RidgelineExamples) {
  EXPECT_EQ(compute_report({Family::A, 2}, 3).v, Rational(2, 3));
  EXPECT_EQ(compute_report({Family::A, 2}, 5).v, Rational(1, 2));
  EXPECT_EQ(compute_report({Family::E, 7}, 2).v, Rational(7, 33));
  EXPECT_EQ(compute_report({Family::D, 4}, 2).v, Rational(1, 2));
  EXPECT_EQ(compute_report({Family::D, 5}, 2).v, Rational(5, 13));
  EXPECT_EQ(compute_report({Family::G, 2}, 5).v, Rational(1, 3));
}

TEST(Invariants, VFromOtherColumns) {
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 3, 2}, {Family::B, 4, 3}, {Family::C, 3, 5}, {Family::E, 6, 3}, {Family::F, 4, 5}}) {
    const InvariantsReport rep = compute_report({f, l}, p);
    EXPECT_EQ(rep.v, Rational(l, 2 * (rep.h_dual - 1) - rep.r));
    EXPECT_EQ(rep.s, rep.m - 2 * (rep.h_dual - 1));
    EXPECT_EQ(rep.r, rep.center_dim);
    EXPECT_TRUE(rep.form_kernel_is_center);
  }
}

TEST(Invariants, B3AtFive) {
  const InvariantsReport rep = compute_report({Family::B, 3}, 5);
  EXPECT_EQ(rep.m, 21);
  EXPECT_EQ(rep.r, 0);
  EXPECT_EQ(rep.h_dual, 5);
  EXPECT_EQ(rep.v, Rational(3, 8));
  EXPECT_EQ(rep.s, 13);
  EXPECT_EQ(rep.witness_coweight, 1);
  EXPECT_EQ(rep.witness_centralizer, 11);
  EXPECT_EQ(verify_table_row(rep).status, RowCheck::Status::match);
}

TEST(Invariants, A3AtTwo) {
  const InvariantsReport rep = compute_report({Family::A, 3}, 2);
  EXPECT_EQ(rep.prime_class, PrimeClass::good_not_very_good);
  EXPECT_EQ(rep.r, 1);
  EXPECT_EQ(rep.h_dual, 4);
  EXPECT_EQ(rep.v, Rational(3, 5));
  EXPECT_EQ(rep.s, 9);
  EXPECT_EQ(rep.witness_centralizer, 9);
  EXPECT_EQ(verify_table_row(rep).status, RowCheck::Status::match);
}

TEST(Invariants, G2AtTwoWitness) {
  const InvariantsReport rep = compute_report({Family::G, 2}, 2);
  EXPECT_EQ(rep.witness_coweight, 1);
  EXPECT_EQ(rep.witness_centralizer, 6);
  EXPECT_EQ(rep.coweight_centralizers, (std::vector<int>{6, 6}));
  EXPECT_EQ(compute_report({Family::G, 2}, 5).witness_centralizer, 4);
}

TEST(Invariants, E8WitnessMovesAtTwo) {
  const InvariantsReport two = compute_report({Family::E, 8}, 2);
  EXPECT_EQ(two.witness_coweight, 3);
  EXPECT_EQ(two.witness_centralizer, 136);
  const InvariantsReport seven = compute_report({Family::E, 8}, 7);
  EXPECT_EQ(seven.witness_coweight, 8);
  EXPECT_EQ(seven.witness_centralizer, 134);
}

TEST(Invariants, Refusals) {
  EXPECT_THROW(compute_report({Family::B, 3}, 2), Refusal);
  EXPECT_THROW(compute_report({Family::C, 2}, 2), Refusal);
  EXPECT_THROW(compute_report({Family::F, 4}, 2), Refusal);
  EXPECT_THROW(compute_report({Family::G, 2}, 3), Refusal);
  EXPECT_THROW(compute_report({Family::A, 1}, 5), Refusal);
  EXPECT_THROW(compute_report({Family::A, 2}, 4), std::invalid_argument);
  EXPECT_THROW(compute_report({Family::E, 5}, 5), InadmissibleRootSystem);
}

TEST(Invariants, NilpotentColumnDominatesSemisimple) {
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 4, 5}, {Family::B, 3, 3}, {Family::C, 3, 3}, {Family::D, 4, 2}, {Family::G, 2, 2},
           {Family::E, 6, 2}, {Family::F, 4, 3}}) {
    const InvariantsReport rep = compute_report({f, l}, p);
    EXPECT_GE(rep.s, rep.witness_centralizer);
  }
}

TEST(Invariants, TamperedReportIsFlagged) {
  InvariantsReport rep = compute_report({Family::C, 2}, 3);
  EXPECT_EQ(verify_table_row(rep).status, RowCheck::Status::match);
  rep.r = 1;
  rep.v = Rational(2, 3);
  RowCheck c = verify_table_row(rep);
  EXPECT_EQ(c.status, RowCheck::Status::mismatch);
  EXPECT_EQ(c.mismatches.size(), 2u);
}

TEST(GoldenTable, RowsAreUniqueAndCoverTolerablePrimes) {
  for (int l = 2; l <= 8; ++l)
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      EXPECT_TRUE(golden_lookup({Family::A, l}, p));
      EXPECT_TRUE(golden_lookup({Family::C, l}, p).has_value() == (p != 2));
    }
  EXPECT_FALSE(golden_lookup({Family::G, 2}, 3));
  EXPECT_FALSE(golden_lookup({Family::F, 4}, 2));
  EXPECT_EQ(golden_lookup({Family::D, 6}, 2)->r, 2);
  EXPECT_EQ(golden_lookup({Family::D, 7}, 2)->v, Rational(1, 3));
}
