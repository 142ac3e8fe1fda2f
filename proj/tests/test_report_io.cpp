#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "chevalley/report_io.hpp"
#include "chevalley/structure_cache.hpp"

using namespace chevalley;

TEST(Rational, Rendering) {
  EXPECT_EQ(to_string(Rational(7, 33)), "7/33");
  EXPECT_EQ(to_string(Rational(4, 2)), "2/1");
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(parse_rational("97/3"), Rational(97, 3));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Json, InvariantsReport) {
  const auto j = to_json(compute_report({Family::E, 7}, 2));
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("v"), "7/33");
  EXPECT_EQ(j.at("r"), 1);
  EXPECT_EQ(j.at("root_system").at("type"), "E7");
  EXPECT_EQ(j.at("semisimple_witness").at("coweight"), "y7");
}

TEST(Json, BoundReport) {
  const auto j = to_json(theorem1_exponent(compute_report({Family::A, 2}, 5), 3));
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("exponent"), "33/1");
  EXPECT_EQ(j.at("regime"), "rank2_strong");
}

TEST(Json, ViolationReportOmitsThreads) {
  LieAlgebraFp g = instantiate(chevalley_structure({Family::A, 2}), 5, Flavor::simply_connected);
  TrialConfig cfg;
  cfg.trials = 20;
  cfg.threads = 3;
  const auto j = to_json(check_theorem2(g, compute_report({Family::A, 2}, 5), cfg));
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_FALSE(j.at("config").contains("threads"));
  EXPECT_EQ(j.at("violation_count"), 0);
  EXPECT_EQ(j.at("trials_run"), 20);
}

TEST(Csv, RoundTripAgainstTable) {
  std::stringstream ss;
  ss << csv_header() << "\n";
  std::vector<InvariantsReport> reps;
  for (auto [f, l, p] : std::vector<std::tuple<Family, int, std::uint32_t>>{
           {Family::A, 3, 2}, {Family::B, 3, 5}, {Family::D, 5, 2}, {Family::G, 2, 2}, {Family::E, 6, 3}}) {
    reps.push_back(compute_report({f, l}, p));
    ss << csv_row(reps.back()) << "\n";
  }
  const auto rows = parse_csv_table(ss);
  ASSERT_EQ(rows.size(), reps.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto golden = golden_lookup(reps[i].spec, reps[i].p);
    ASSERT_TRUE(golden);
    EXPECT_EQ(rows[i].type, reps[i].spec.name());
    EXPECT_EQ(rows[i].p, reps[i].p);
    EXPECT_EQ(rows[i].r, golden->r);
    EXPECT_EQ(rows[i].h_dual, golden->h_dual);
    EXPECT_EQ(rows[i].v, golden->v);
    EXPECT_EQ(rows[i].min_nilpotent_centralizer, golden->min_nilpotent_centralizer);
    EXPECT_EQ(rows[i].witness_coweight, golden->witness_coweight);
    EXPECT_EQ(rows[i].witness_centralizer, golden->witness_centralizer);
  }
}

TEST(Csv, RejectsMalformedInput) {
  std::stringstream bad_header("type,p\nA2,5\n");
  EXPECT_THROW(parse_csv_table(bad_header), std::exception);
  std::stringstream short_row(csv_header() + "\nA2,5,0\n");
  EXPECT_THROW(parse_csv_table(short_row), std::exception);
}

TEST(Cache, RoundTripAndCorruption) {
  auto cs = chevalley_structure({Family::G, 2});
  const auto j = structure_to_json(*cs);
  const ChevalleyStructure back = structure_from_json(j);
  EXPECT_EQ(back.table(), cs->table());
  auto tampered = j;
  tampered["checksum"] = "0";
  EXPECT_THROW(structure_from_json(tampered), CacheError);

  const auto dir = std::filesystem::temp_directory_path() / "chevalley_cache_test";
  std::filesystem::remove_all(dir);
  EXPECT_FALSE(load_structure({Family::G, 2}, dir));
  save_structure(*cs, dir);
  auto loaded = load_structure({Family::G, 2}, dir);
  ASSERT_TRUE(loaded);
  EXPECT_EQ(loaded->table(), cs->table());
  {
    std::ofstream out(cache_file(dir, {Family::G, 2}));
    out << "{ not json";
  }
  EXPECT_THROW(load_structure({Family::G, 2}, dir), CacheError);
  std::filesystem::remove_all(dir);
}

TEST(Csv, SmallRankTableParsesBackToGolden) {
  std::stringstream ss;
  ss << csv_header() << "\n";
  int rows = 0;
  for (auto f : {Family::A, Family::B, Family::C, Family::D, Family::F, Family::G})
    for (int l = 2; l <= 4; ++l) {
      if (!admissible({f, l})) continue;
      for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        if (!golden_lookup({f, l}, p)) continue;
        ss << csv_row(compute_report({f, l}, p)) << "\n";
        ++rows;
      }
    }
  const auto parsed = parse_csv_table(ss);
  ASSERT_EQ(parsed.size(), static_cast<std::size_t>(rows));
  for (const auto& row : parsed) {
    const RootSystemSpec spec{parse_family(row.type.substr(0, 1)), std::stoi(row.type.substr(1))};
    const auto g = golden_lookup(spec, row.p);
    ASSERT_TRUE(g);
    EXPECT_EQ(row.r, g->r);
    EXPECT_EQ(row.h_dual, g->h_dual);
    EXPECT_EQ(row.v, g->v);
    EXPECT_EQ(row.min_nilpotent_centralizer, g->min_nilpotent_centralizer);
    EXPECT_EQ(row.witness_coweight, g->witness_coweight);
    EXPECT_EQ(row.witness_centralizer, g->witness_centralizer);
  }
}
