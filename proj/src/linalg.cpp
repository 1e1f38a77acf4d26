#include "torusbb/linalg.hpp"

#include <utility>

namespace torusbb::linalg {
namespace {

RationalMatrix to_rational(const IntMatrix& rows) {
  RationalMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// In-place Gauss-Jordan. Returns the number of pivots; nonzero rows end up first.
std::size_t eliminate(RationalMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[pivot_row]);
    const Rational inv = 1 / m[pivot_row][c];
    for (auto& e : m[pivot_row]) e *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[pivot_row][k];
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::size_t rank(RationalMatrix rows) { return eliminate(rows); }

std::size_t rank(const IntMatrix& rows) { return rank(to_rational(rows)); }

RationalMatrix reduced_row_echelon(RationalMatrix rows) {
  rows.resize(eliminate(rows));
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  // Column operations on a copy of A, mirrored on U = identity, until A*U is
  // in column echelon form. Columns of U past the rank span the kernel.
  IntMatrix m = a;
  IntMatrix u(cols, IntVector(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto combine = [&](IntMatrix& mat, std::size_t j, std::size_t k, const Integer& s,
                     const Integer& t, const Integer& p, const Integer& q) {
    // col_j <- s col_j + t col_k ; col_k <- p col_j + q col_k
    for (auto& row : mat) {
      Integer cj = s * row[j] + t * row[k];
      Integer ck = p * row[j] + q * row[k];
      row[j] = std::move(cj);
      row[k] = std::move(ck);
    }
  };

  std::size_t pivot = 0;
  for (std::size_t i = 0; i < m.size() && pivot < cols; ++i) {
    for (std::size_t k = pivot + 1; k < cols; ++k) {
      if (m[i][k] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[i][pivot].get_mpz_t(),
                 m[i][k].get_mpz_t());
      const Integer p = -m[i][k] / g;
      const Integer q = m[i][pivot] / g;
      combine(m, pivot, k, s, t, p, q);
      combine(u, pivot, k, s, t, p, q);
    }
    if (m[i][pivot] != 0) ++pivot;
  }

  IntMatrix kernel;
  for (std::size_t c = pivot; c < cols; ++c) {
    IntVector v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& e : rows[r]) e = -e;
    for (std::size_t i = 0; i < r; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntVector project_out(const IntVector& v, const IntMatrix& rows) {
  if (rows.empty()) return primitive(v);
  // Solve (B B^T) c = B v, then v - B^T c.
  const std::size_t k = rows.size();
  const std::size_t n = v.size();
  RationalMatrix system(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) system[i][j] = dot(rows[i], rows[j]);
    system[i][k] = dot(rows[i], v);
  }
  eliminate(system);
  std::vector<Rational> out(v.begin(), v.end());
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& c = system[i][k];
    for (std::size_t j = 0; j < n; ++j) out[j] -= c * rows[i][j];
  }
  return clear_denominators(out);
}

}  // namespace torusbb::linalg
