#pragma once

// Test-only reference computations. None of these call into the library's
// cone, lattice or enumeration code; they are brute force by construction.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solves A^T c = m for the columns A[0..k) (given as rows), if the system is
// consistent and the solution is unique. Plain Gauss-Jordan over Q.
inline std::optional<std::vector<Rat>> solve_unique(const std::vector<Vec>& columns, const Vec& m) {
  const std::size_t k = columns.size();
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = columns[c][r];
    aug[r][k] = m[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t sel = row;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) return std::nullopt;  // dependent columns
    std::swap(aug[sel], aug[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || aug[r][c] == 0) continue;
      const Rat f = aug[r][c] / aug[row][c];
      for (std::size_t j = 0; j <= k; ++j) aug[r][j] -= f * aug[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  if (pivots.size() != k) return std::nullopt;
  for (std::size_t r = row; r < n; ++r)
    if (aug[r][k] != 0) return std::nullopt;
  std::vector<Rat> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = aug[i][k] / aug[i][i];
  return c;
}

// m in cone(gens) by Caratheodory: try every subset of at most n generators.
inline bool in_cone(const std::vector<Vec>& gens, const Vec& m) {
  bool zero = std::all_of(m.begin(), m.end(), [](const Int& e) { return e == 0; });
  if (zero) return true;
  const std::size_t k = gens.size();
  const std::size_t n = m.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > n) continue;
    std::vector<Vec> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) subset.push_back(gens[i]);
    auto c = solve_unique(subset, m);
    if (c && std::all_of(c->begin(), c->end(), [](const Rat& q) { return q >= 0; })) return true;
  }
  return false;
}

inline std::size_t rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Rat>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const Rat f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Calls f on every integer vector in [-bound, bound]^n in lexicographic order.
inline void for_box(std::size_t n, long bound, const std::function<void(const Vec&)>& f) {
  Vec v(n, -bound);
  for (;;) {
    f(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < bound) {
        ++v[i];
        for (std::size_t j = i + 1; j < n; ++j) v[j] = -bound;
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

// Facet normals of a full-dimensional cone by searching primitive vectors in
// a box: nonnegative on all generators and tight on a hyperplane's worth.
inline std::vector<Vec> facets_by_search(const std::vector<Vec>& gens, std::size_t n, long bound) {
  std::vector<Vec> found;
  for_box(n, bound, [&](const Vec& u) {
    Int g = 0;
    for (const auto& e : u) g = gcd(g, e);
    if (g != 1) return;
    std::vector<Vec> tight;
    for (const auto& x : gens) {
      const Int s = dot(u, x);
      if (s < 0) return;
      if (s == 0) tight.push_back(x);
    }
    if (rank_of(tight) + 1 == n) found.push_back(u);
  });
  return found;
}

// Kempf vector by scanning boxes of growing max-norm in lexicographic order.
inline Vec kempf_by_scan(const std::vector<Vec>& gens, std::size_t n) {
  for (long bound = 0;; ++bound) {
    std::optional<Vec> best;
    for_box(n, bound, [&](const Vec& w) {
      if (best) return;
      for (const auto& g : gens) {
        bool zero = std::all_of(g.begin(), g.end(), [](const Int& e) { return e == 0; });
        if (!zero && dot(w, g) < 1) return;
      }
      best = w;
    });
    if (best) return *best;
  }
}

// Number of partitions of d by the coin-change recurrence.
inline std::uint64_t partition_count(int d) {
  std::vector<std::uint64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= d; ++part)
    for (int s = part; s <= d; ++s) ways[s] += ways[s - part];
  return ways[d];
}

// Every exponent vector in [0, cap]^k.
inline void for_exponents(std::size_t k, unsigned cap,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> e(k, 0);
  for (;;) {
    f(e);
    std::size_t i = 0;
    while (i < k && e[i] == cap) e[i++] = 0;
    if (i == k) return;
    ++e[i];
  }
}

}  // namespace oracle
