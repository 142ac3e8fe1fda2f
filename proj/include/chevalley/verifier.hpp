#pragma once

// Seeded randomized checks of the commutator-codimension inequalities and
// the centralizer facts they rest on. Trial i draws from
// Rng::for_trial(seed, i), so reports do not depend on the thread count.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/adjoint_group.hpp"
#include "chevalley/exact_linalg.hpp"
#include "chevalley/invariants.hpp"
#include "chevalley/lie_algebra.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

enum class DimPolicy { uniform, boundary };
std::string to_string(DimPolicy p);
DimPolicy parse_policy(const std::string& text);

struct TrialConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 1000;
  DimPolicy policy = DimPolicy::boundary;
  std::optional<std::pair<std::size_t, std::size_t>> fixed_dims;
  unsigned threads = 1;  // execution detail, never serialized
};

// 10^4 up to rank 4, 10^3 above.
std::size_t default_trials(const RootSystemSpec& spec);

struct Violation {
  std::uint64_t trial = 0;
  std::string what;
  std::size_t dim_u = 0;
  std::size_t dim_v = 0;
  std::size_t cod_uv = 0;
  Rational bound;
  std::vector<std::string> u_rows;  // encode_row of each basis row
  std::vector<std::string> v_rows;
};

struct ViolationReport {
  std::string check;
  RootSystemSpec spec{Family::A, 2};
  std::uint32_t p = 2;
  TrialConfig config;
  std::size_t trials_run = 0;
  std::vector<Violation> violations;
  std::optional<Rational> min_slack;
  std::map<std::string, std::int64_t> stats;
  bool ok() const { return violations.empty(); }
};

// Span of [u_i, v_j] over basis pairs; stops as soon as it is everything.
Subspace commutator_span(const LieAlgebraFp& L, const Subspace& U, const Subspace& V);

// cod[U,V] <= (1 + v)(cod U + cod V).
ViolationReport check_theorem2(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg);
// cod[U,V] <= cod U + cod V; Refusal unless l = 2 and p is very good.
ViolationReport check_rank2_strong(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg);
// dim U + dim V > m + s + r forces [U,V] = g.
ViolationReport check_my_estimate(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg);
// dim c(x) <= s for non-central x, with s attained at e_theta. Stats hold
// the largest centralizer seen per sampling strategy.
ViolationReport check_dual_cox(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg);
// dim[U,V] >= dim V - dim(V cap c(x)) for x in U.
ViolationReport check_lemX(const LieAlgebraFp& L, const TrialConfig& cfg);
// The rank-2 conjecture inequality in rank >= 3; violations are findings.
// Every witness is re-checked from its serialized rows before returning.
ViolationReport search_conjecture(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg);
// Random graded families H_1..H_N closed under [H_i, H_j] <= H_{i+j}.
ViolationReport check_graded_chain(const LieAlgebraFp& L, const InvariantsReport& rep, int N, const TrialConfig& cfg);

struct CatalogueEntry {
  std::string label;  // "e_r", "e_sr", "e_beta", "e_alpha", "0"
  int expected_centralizer;
  int computed_centralizer;
};

struct OrbitCatalogue {
  RootSystemSpec spec{Family::A, 2};
  std::uint32_t p = 2;
  std::vector<CatalogueEntry> entries;
  bool ok() const;
};

// Refusal unless l = 2 and p is very good.
OrbitCatalogue rank2_orbit_catalogue(const LieAlgebraFp& L);

// Re-evaluates cod[U,V] from a serialized witness.
std::size_t recheck_witness(const LieAlgebraFp& L, const Violation& v);

}  // namespace chevalley
