#include "chevalley/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace chevalley {

std::string to_string(DimPolicy p) { return p == DimPolicy::uniform ? "uniform" : "boundary"; }

DimPolicy parse_policy(const std::string& text) {
  if (text == "uniform") return DimPolicy::uniform;
  if (text == "boundary") return DimPolicy::boundary;
  throw std::invalid_argument("policy must be 'uniform' or 'boundary', got '" + text + "'");
}

std::size_t default_trials(const RootSystemSpec& spec) { return spec.rank <= 4 ? 10000 : 1000; }

bool OrbitCatalogue::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CatalogueEntry& e) { return e.expected_centralizer == e.computed_centralizer; });
}

namespace {

struct TrialOutcome {
  std::optional<Rational> slack;
  std::vector<Violation> violations;
  std::map<std::string, std::int64_t> maxima;
};

template <class Fn>
std::vector<TrialOutcome> run_trials(std::size_t n, unsigned threads, Fn fn) {
  std::vector<TrialOutcome> out(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

ViolationReport merge(std::string check, const LieAlgebraFp& L, const TrialConfig& cfg,
                      std::vector<TrialOutcome> outcomes) {
  ViolationReport rep;
  rep.check = std::move(check);
  rep.spec = L.roots().spec();
  rep.p = L.p();
  rep.config = cfg;
  rep.trials_run = outcomes.size();
  for (auto& o : outcomes) {
    if (o.slack && (!rep.min_slack || *o.slack < *rep.min_slack)) rep.min_slack = o.slack;
    for (auto& v : o.violations) rep.violations.push_back(std::move(v));
    for (const auto& [k, x] : o.maxima) {
      auto it = rep.stats.find(k);
      if (it == rep.stats.end() || x > it->second) rep.stats[k] = x;
    }
  }
  return rep;
}

std::vector<std::string> encode_subspace(const Subspace& S) {
  std::vector<std::string> rows;
  for (const Vector& v : S.basis()) rows.push_back(encode_row(S.field(), v));
  return rows;
}

Subspace decode_subspace(const LieAlgebraFp& L, const std::vector<std::string>& rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v = decode_row(L.field(), r);
    if (v.size() != static_cast<std::size_t>(L.dimension())) throw AmbientMismatch("witness row has wrong length");
    vs.push_back(std::move(v));
  }
  return Subspace::span(L.field(), L.dimension(), vs);
}

// Dimensions of (U, V). Boundary draws put dim U + dim V within a window
// around `centre`; a quarter of them are uniform anyway.
std::pair<std::size_t, std::size_t> sample_dims(const TrialConfig& cfg, std::size_t m, std::size_t centre,
                                                Rng& rng) {
  if (cfg.fixed_dims) return *cfg.fixed_dims;
  if (cfg.policy == DimPolicy::uniform || rng.chance(1, 4)) {
    return {rng.below(m + 1), rng.below(m + 1)};
  }
  const std::int64_t w = std::max<std::int64_t>(2, static_cast<std::int64_t>(m) / 8);
  const std::int64_t total =
      std::clamp<std::int64_t>(static_cast<std::int64_t>(centre) + rng.between(-w, w), 0, 2 * static_cast<std::int64_t>(m));
  const std::int64_t lo = std::max<std::int64_t>(0, total - static_cast<std::int64_t>(m));
  const std::int64_t hi = std::min<std::int64_t>(static_cast<std::int64_t>(m), total);
  const std::int64_t du = rng.between(lo, hi);
  return {static_cast<std::size_t>(du), static_cast<std::size_t>(total - du)};
}

void require_rank2_very_good(const LieAlgebraFp& L, const std::string& what) {
  const RootSystem& rs = L.roots();
  if (rs.rank() != 2 || classify_prime(rs, L.p()) != PrimeClass::very_good) {
    throw Refusal(what + " is stated for rank 2 at very good p only; " + rs.spec().name() + " at p = " +
                  std::to_string(L.p()) + " is " + to_string(classify_prime(rs, L.p())));
  }
}

void require_tolerable(const LieAlgebraFp& L) {
  const RootSystem& rs = L.roots();
  if (rs.rank() < 2) throw Refusal("checks need rank >= 2");
  if (classify_prime(rs, L.p()) == PrimeClass::intolerable) {
    throw Refusal("p = " + std::to_string(L.p()) + " is intolerable for " + rs.spec().name());
  }
}

// Shared driver for the inequalities cod[U,V] <= bound(cod U, cod V).
template <class Bound>
ViolationReport codimension_check(std::string name, const LieAlgebraFp& L, const TrialConfig& cfg,
                                  std::size_t centre, Bound bound) {
  const std::size_t m = L.dimension();
  auto outcomes = run_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const auto [du, dv] = sample_dims(cfg, m, centre, rng);
    const Subspace U = random_subspace(L.field(), m, du, rng);
    const Subspace V = random_subspace(L.field(), m, dv, rng);
    const std::size_t cod = m - commutator_span(L, U, V).dim();
    const Rational b = bound(U.codim(), V.codim());
    TrialOutcome o;
    o.slack = b - Rational(static_cast<std::int64_t>(cod));
    if (*o.slack < 0) {
      o.violations.push_back({i, "", du, dv, cod, b, encode_subspace(U), encode_subspace(V)});
    }
    return o;
  });
  return merge(std::move(name), L, cfg, std::move(outcomes));
}

}  // namespace

Subspace commutator_span(const LieAlgebraFp& L, const Subspace& U, const Subspace& V) {
  const std::size_t m = L.dimension();
  if (U.ambient() != m || V.ambient() != m || !(U.field() == L.field()) || !(V.field() == L.field())) {
    throw AmbientMismatch("commutator span needs subspaces of the algebra");
  }
  EchelonBasis eb(L.field(), m);
  for (const Vector& u : U.basis()) {
    for (const Vector& v : V.basis()) {
      eb.insert(L.bracket(u, v));
      if (eb.full()) return Subspace::full(L.field(), m);
    }
  }
  return eb.to_subspace();
}

std::size_t recheck_witness(const LieAlgebraFp& L, const Violation& v) {
  const Subspace U = decode_subspace(L, v.u_rows);
  const Subspace V = decode_subspace(L, v.v_rows);
  return L.dimension() - commutator_span(L, U, V).dim();
}

ViolationReport check_theorem2(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg) {
  require_tolerable(L);
  const Rational alpha = Rational(1) + rep.v;
  return codimension_check("theorem2", L, cfg, rep.m + rep.s + rep.r, [&](std::size_t cu, std::size_t cv) {
    return alpha * static_cast<std::int64_t>(cu + cv);
  });
}

ViolationReport check_rank2_strong(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg) {
  require_rank2_very_good(L, "the strong commutator bound");
  return codimension_check("rank2_strong", L, cfg, rep.m + rep.s + rep.r, [](std::size_t cu, std::size_t cv) {
    return Rational(static_cast<std::int64_t>(cu + cv));
  });
}

ViolationReport check_my_estimate(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg) {
  require_tolerable(L);
  const std::size_t m = L.dimension();
  const std::size_t threshold = rep.m + rep.s + rep.r;
  if (threshold >= 2 * m) throw Refusal("no pair of subspaces exceeds m + s + r");
  if (cfg.fixed_dims && cfg.fixed_dims->first + cfg.fixed_dims->second <= threshold) {
    throw Refusal("fixed dimensions must add up to more than m + s + r = " + std::to_string(threshold));
  }
  auto outcomes = run_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    std::size_t du, dv;
    if (cfg.fixed_dims) {
      std::tie(du, dv) = *cfg.fixed_dims;
    } else {
      const std::size_t total = static_cast<std::size_t>(rng.between(threshold + 1, 2 * m));
      du = static_cast<std::size_t>(rng.between(total - m, m));
      dv = total - du;
    }
    const Subspace U = random_subspace(L.field(), m, du, rng);
    const Subspace V = random_subspace(L.field(), m, dv, rng);
    const std::size_t cod = m - commutator_span(L, U, V).dim();
    TrialOutcome o;
    o.slack = Rational(-static_cast<std::int64_t>(cod));
    if (cod != 0) o.violations.push_back({i, "[U,V] is not g", du, dv, cod, Rational(0), encode_subspace(U), encode_subspace(V)});
    return o;
  });
  auto out = merge("my_estimate", L, cfg, std::move(outcomes));
  out.stats["threshold"] = static_cast<std::int64_t>(threshold);
  return out;
}

ViolationReport check_dual_cox(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg) {
  require_tolerable(L);
  const RootSystem& rs = L.roots();
  const PrimeField& f = L.field();
  const std::size_t m = L.dimension();
  const std::size_t l = rs.rank();
  const bool rank2 = rs.rank() == 2 && rep.prime_class == PrimeClass::very_good;
  const AdjointGroup G(L);
  const std::size_t strategies = rank2 ? 4 : 3;

  auto nonzero = [&](Rng& rng) { return static_cast<std::uint32_t>(1 + rng.below(f.p() - 1)); };
  auto outcomes = run_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const std::size_t strategy = i % strategies;
    static const char* names[] = {"max_dense", "max_sparse", "max_conjugate", "max_mixed"};
    Vector x;
    std::size_t dim = m;
    do {
      switch (strategy) {
        case 0:
          x = random_vector(f, m, rng);
          break;
        case 1: {
          x.assign(m, 0);
          const std::size_t k = 1 + rng.below(3);
          for (std::size_t j = 0; j < k; ++j) x[rng.below(m)] = nonzero(rng);
          break;
        }
        case 2: {
          const int root = static_cast<int>(rng.below(rs.num_roots()));
          x = random_group_word(G, 2 * m, rng).apply(G, L.root_vector(root));
          break;
        }
        default: {
          // h + c e_gamma with gamma(h) = 0, h non-central, then conjugated.
          const int root = static_cast<int>(rng.below(rs.num_roots()));
          std::vector<std::uint32_t> h(l, 0);
          std::uint64_t pairing = 0;
          for (std::size_t j = 0; j < l; ++j) h[j] = static_cast<std::uint32_t>(rng.below(f.p()));
          // Solve for the last coordinate with nonzero gamma(h_j).
          std::size_t pivot = l;
          for (std::size_t j = 0; j < l; ++j)
            if (f.reduce(rs.pairing(root, static_cast<int>(j))) != 0) pivot = j;
          if (pivot == l) {
            x.assign(m, 0);
            break;
          }
          h[pivot] = 0;
          for (std::size_t j = 0; j < l; ++j) pairing += f.mul(h[j], f.reduce(rs.pairing(root, static_cast<int>(j))));
          h[pivot] = f.mul(f.neg(static_cast<std::uint32_t>(pairing % f.p())),
                           f.inv(f.reduce(rs.pairing(root, static_cast<int>(pivot)))));
          Vector y(m, 0);
          std::copy(h.begin(), h.end(), y.begin());
          if (L.is_central(y)) {
            x.assign(m, 0);
            break;
          }
          y[L.structure().root_basis_index(root)] = nonzero(rng);
          x = random_group_word(G, 2 * m, rng).apply(G, y);
          break;
        }
      }
      dim = L.centralizer_dim(x);
    } while (dim == m);

    TrialOutcome o;
    o.maxima[names[strategy]] = static_cast<std::int64_t>(dim);
    o.maxima["max_observed"] = static_cast<std::int64_t>(dim);
    auto flag = [&](std::string what, std::int64_t bound) {
      o.violations.push_back({i, std::move(what), 1, 0, dim, Rational(bound), {encode_row(f, x)}, {}});
    };
    if (dim > static_cast<std::size_t>(rep.s)) flag("dim c(x) exceeds s", rep.s);
    if (rank2 && (dim % 2) != 0) flag("odd centralizer dimension", rep.s);
    if (strategy == 3 && dim != 2) flag("truly mixed element is not regular", 2);
    return o;
  });
  auto out = merge("dual_cox", L, cfg, std::move(outcomes));
  const Vector theta = L.root_vector(rs.highest_root());
  const std::size_t at_theta = L.centralizer_dim(theta);
  out.stats["s"] = rep.s;
  out.stats["theta_centralizer"] = static_cast<std::int64_t>(at_theta);
  if (at_theta != static_cast<std::size_t>(rep.s)) {
    out.violations.push_back({0, "dim c(e_theta) differs from s", 1, 0, at_theta, Rational(rep.s),
                              {encode_row(f, theta)}, {}});
  }
  return out;
}

ViolationReport check_lemX(const LieAlgebraFp& L, const TrialConfig& cfg) {
  const std::size_t m = L.dimension();
  const PrimeField& f = L.field();
  auto outcomes = run_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    auto [du, dv] = sample_dims(cfg, m, m, rng);
    if (du == 0) du = 1;
    const Subspace U = random_subspace(f, m, du, rng);
    const Subspace V = random_subspace(f, m, dv, rng);
    Vector x(m, 0);
    switch (rng.below(4)) {
      case 0: break;  // x = 0
      case 1: x = U.basis()[rng.below(U.dim())]; break;
      default:
        for (const Vector& b : U.basis()) {
          const std::uint32_t c = static_cast<std::uint32_t>(rng.below(f.p()));
          for (std::size_t k = 0; k < m; ++k) x[k] = f.add(x[k], f.mul(c, b[k]));
        }
    }
    const std::size_t lhs = commutator_span(L, U, V).dim();
    const std::size_t rhs = V.dim() - intersect(V, L.centralizer(x)).dim();
    TrialOutcome o;
    o.slack = Rational(static_cast<std::int64_t>(lhs) - static_cast<std::int64_t>(rhs));
    if (lhs < rhs) {
      Violation v{i, "dim[U,V] < dim V - dim(V cap c(x))", du, dv, m - lhs, Rational(static_cast<std::int64_t>(m - rhs)),
                  encode_subspace(U), encode_subspace(V)};
      v.u_rows.push_back("x:" + encode_row(f, x));
      o.violations.push_back(std::move(v));
    }
    return o;
  });
  return merge("lemX", L, cfg, std::move(outcomes));
}

ViolationReport search_conjecture(const LieAlgebraFp& L, const InvariantsReport& rep, const TrialConfig& cfg) {
  const RootSystem& rs = L.roots();
  if (rs.rank() < 3 || classify_prime(rs, L.p()) != PrimeClass::very_good) {
    throw Refusal("the conjecture search runs in rank >= 3 at very good p; " + rs.spec().name() + " at p = " +
                  std::to_string(L.p()) + " does not qualify");
  }
  const std::size_t m = L.dimension();
  const PrimeField& f = L.field();
  // Centre of the window between dim U + dim V = m and the threshold m + s + r.
  const std::size_t centre = m + static_cast<std::size_t>(rep.s + rep.r) / 2;
  auto outcomes = run_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const auto [du, dv] = sample_dims(cfg, m, centre, rng);
    Subspace U = random_subspace(f, m, du, rng);
    if (!cfg.fixed_dims && i % 2 == 1 && du >= static_cast<std::size_t>(rep.s)) {
      // Half the trials put the centralizer of e_theta inside U.
      std::vector<Vector> gens = L.centralizer(L.root_vector(rs.highest_root())).basis();
      EchelonBasis eb(f, m);
      for (const Vector& g : gens) eb.insert(g);
      while (eb.dim() < du) eb.insert(random_vector(f, m, rng));
      U = eb.to_subspace();
    }
    const Subspace V = random_subspace(f, m, dv, rng);
    const std::size_t cod = m - commutator_span(L, U, V).dim();
    const Rational b(static_cast<std::int64_t>(U.codim() + V.codim()));
    TrialOutcome o;
    o.slack = b - Rational(static_cast<std::int64_t>(cod));
    if (*o.slack < 0) o.violations.push_back({i, "witness", du, dv, cod, b, encode_subspace(U), encode_subspace(V)});
    return o;
  });
  auto out = merge("conjecture_search", L, cfg, std::move(outcomes));
  for (const Violation& v : out.violations) {
    if (recheck_witness(L, v) != v.cod_uv) throw std::logic_error("serialized witness does not reproduce");
  }
  return out;
}

ViolationReport check_graded_chain(const LieAlgebraFp& L, const InvariantsReport& rep, int N, const TrialConfig& cfg) {
  require_tolerable(L);
  if (N < 2) throw std::invalid_argument("truncation degree must be >= 2");
  const std::size_t m = L.dimension();
  const PrimeField& f = L.field();
  const Rational alpha = Rational(1) + rep.v;
  auto outcomes = run_trials(cfg.trials, cfg.threads, [&](std::size_t t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    // H[0] unused; Hp[k] = sum_{i+j=k} [H_i, H_j].
    std::vector<Subspace> H(N + 1, Subspace::zero(f, m)), Hp(N + 1, Subspace::zero(f, m));
    std::vector<std::vector<Subspace>> brackets(N + 1, std::vector<Subspace>(N + 1, Subspace::zero(f, m)));
    const std::size_t d1 = cfg.fixed_dims ? cfg.fixed_dims->first : static_cast<std::size_t>(rng.below(m + 1));
    H[1] = random_subspace(f, m, d1, rng);
    for (int k = 2; k <= N; ++k) {
      for (int i = 1; 2 * i <= k; ++i) {
        brackets[i][k - i] = commutator_span(L, H[i], H[k - i]);
        Hp[k] = span_sum(Hp[k], brackets[i][k - i]);
      }
      const std::size_t d0 = cfg.fixed_dims ? cfg.fixed_dims->second : static_cast<std::size_t>(rng.below(m + 1));
      H[k] = span_sum(random_subspace(f, m, d0, rng), Hp[k]);
    }
    TrialOutcome o;
    for (int i = 1; i <= N; ++i) {
      for (int j = i; i + j <= N; ++j) {
        const Subspace& W = brackets[i][j];
        if (!H[i + j].contains(W)) throw std::logic_error("graded family is not closed");
        const Rational b = alpha * static_cast<std::int64_t>(H[i].codim() + H[j].codim());
        const Rational slack = b - Rational(static_cast<std::int64_t>(W.codim()));
        if (slack < 0) {
          o.violations.push_back({t, "degrees " + std::to_string(i) + "+" + std::to_string(j), H[i].dim(), H[j].dim(),
                                  W.codim(), b, encode_subspace(H[i]), encode_subspace(H[j])});
        }
      }
    }
    std::int64_t lhs = 0, cod_h = 0;
    for (int k = 2; k <= N; ++k) lhs += static_cast<std::int64_t>(Hp[k].codim());
    for (int i = 1; i <= N; ++i) cod_h += static_cast<std::int64_t>(H[i].codim());
    // dim(L_N / H') = m + lhs against m + 4(1+v) dim(L_N / H).
    const Rational rhs = 4 * alpha * cod_h;
    o.slack = rhs - Rational(lhs);
    if (*o.slack < 0) {
      o.violations.push_back({t, "summed inequality", H[1].dim(), 0, static_cast<std::size_t>(lhs), rhs,
                              encode_subspace(H[1]), {}});
    }
    return o;
  });
  auto out = merge("graded_chain", L, cfg, std::move(outcomes));
  out.stats["N"] = N;
  return out;
}

OrbitCatalogue rank2_orbit_catalogue(const LieAlgebraFp& L) {
  require_rank2_very_good(L, "the rank-2 nilpotent orbit catalogue");
  const RootSystem& rs = L.roots();
  const PrimeField& f = L.field();
  const int m = L.dimension();
  // alpha long simple, beta the other simple root (|beta| <= |alpha|).
  const int a_idx = rs.long_simple_root();
  const int b_idx = 1 - a_idx;
  Root ra(2, 0), rb(2, 0);
  ra[a_idx] = 1;
  rb[b_idx] = 1;
  const Vector ea = L.root_vector(*rs.index_of(ra));
  const Vector eb = L.root_vector(*rs.index_of(rb));
  auto sum = [&f](const Vector& x, const Vector& y) {
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.add(x[i], y[i]);
    return z;
  };
  auto dim = [&L](const Vector& x) { return static_cast<int>(L.centralizer_dim(x)); };

  OrbitCatalogue cat;
  cat.spec = rs.spec();
  cat.p = L.p();
  cat.entries.push_back({"e_r", 2, dim(sum(ea, eb))});
  switch (rs.spec().family) {
    case Family::A:
      cat.entries.push_back({"e_alpha", 4, dim(ea)});
      break;
    case Family::C:
      cat.entries.push_back({"e_beta", 4, dim(eb)});
      cat.entries.push_back({"e_alpha", 6, dim(ea)});
      break;
    case Family::G: {
      Root r(2, 0);
      r[a_idx] = 2;
      r[b_idx] = 3;
      cat.entries.push_back({"e_sr", 4, dim(sum(L.root_vector(*rs.index_of(r)), eb))});
      cat.entries.push_back({"e_beta", 6, dim(eb)});
      cat.entries.push_back({"e_alpha", 8, dim(ea)});
      break;
    }
    default:
      throw Refusal("no rank-2 catalogue for " + rs.spec().name());
  }
  cat.entries.push_back({"0", m, dim(Vector(m, 0))});
  return cat;
}

}  // namespace chevalley
