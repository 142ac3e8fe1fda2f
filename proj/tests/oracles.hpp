#pragma once

// Brute-force reference computations, written without the library's
// elimination code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "chevalley/exact_linalg.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

// Determinant by permutation expansion, mod p.
inline std::int64_t det_mod(const Mat& a, std::int64_t p) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::int64_t term = 1;
    for (int i = 0; i < n; ++i) term = term * a[i][perm[i]] % p;
    total = (total + (inversions % 2 ? p - term : term)) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const Mat& a, std::int64_t p) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        Mat sub;
        for (int i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<std::int64_t> row;
          for (int j = 0; j < cols; ++j)
            if (csel[j]) row.push_back(a[i][j]);
          sub.push_back(row);
        }
        if (det_mod(sub, p) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

using Vec = std::vector<std::uint32_t>;

// Every vector of F_p^m.
inline std::vector<Vec> all_vectors(std::uint32_t p, std::size_t m) {
  std::vector<Vec> out;
  Vec v(m, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < m && ++v[i] == p) v[i++] = 0;
    if (i == m) break;
  }
  return out;
}

// All linear combinations of the generators, as a set.
inline std::set<Vec> span_set(std::uint32_t p, std::size_t m, const std::vector<Vec>& gens) {
  std::set<Vec> s{Vec(m, 0)};
  for (const Vec& g : gens) {
    std::set<Vec> next;
    for (const Vec& x : s)
      for (std::uint32_t c = 0; c < p; ++c) {
        Vec y = x;
        for (std::size_t i = 0; i < m; ++i) y[i] = (y[i] + c * g[i]) % p;
        next.insert(y);
      }
    s = std::move(next);
  }
  return s;
}

inline std::size_t log_p(std::size_t n, std::uint32_t p) {
  std::size_t d = 0;
  while (n > 1) {
    n /= p;
    ++d;
  }
  return d;
}

}  // namespace oracle
