#pragma once

// Exact linear solvers: over Q (reduced row echelon form) and over Z
// (column Hermite reduction with a unimodular transform).

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace magtrans::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Solves A y = b over Q. Pivots are taken left to right and every free
/// unknown is set to 0. Returns nullopt when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_rational(
    Matrix a, std::vector<Rational> b, std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < unknowns; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < unknowns; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> y(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = b[i];
  return y;
}

namespace detail {

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s,
                    Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

}  // namespace detail

/// Solves A y = b with y integral, or returns nullopt when no integral
/// solution exists. Free unknowns of the reduced system are set to 0.
inline std::optional<std::vector<Integer>> solve_integer(
    const Matrix& a, const std::vector<Rational>& b, std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::vector<std::vector<Integer>> h(rows, std::vector<Integer>(unknowns));
  std::vector<Integer> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < unknowns; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den_mpz_t());
    for (std::size_t j = 0; j < unknowns; ++j) {
      Rational v = a[i][j] * Rational(l);
      h[i][j] = v.get_num();
    }
    Rational bv = b[i] * Rational(l);
    // Integer row times integer y is integral.
    if (!is_integer(bv)) return std::nullopt;
    rhs[i] = bv.get_num();
  }

  // U starts as identity; column operations on H are mirrored on U.
  std::vector<std::vector<Integer>> u(unknowns, std::vector<Integer>(unknowns));
  for (std::size_t j = 0; j < unknowns; ++j) u[j][j] = 1;

  auto column_combine = [&](std::size_t c, std::size_t j, const Integer& s,
                            const Integer& t, const Integer& x,
                            const Integer& y) {
    // col_c <- s col_c + t col_j ; col_j <- x col_c + y col_j
    for (std::size_t i = 0; i < rows; ++i) {
      Integer hc = h[i][c], hj = h[i][j];
      h[i][c] = s * hc + t * hj;
      h[i][j] = x * hc + y * hj;
    }
    for (std::size_t i = 0; i < unknowns; ++i) {
      Integer uc = u[i][c], uj = u[i][j];
      u[i][c] = s * uc + t * uj;
      u[i][j] = x * uc + y * uj;
    }
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows && col < unknowns; ++r) {
    for (std::size_t j = col + 1; j < unknowns; ++j) {
      if (h[r][j] == 0) continue;
      Integer g, s, t;
      detail::ext_gcd(h[r][col], h[r][j], g, s, t);
      Integer x = -h[r][j] / g;
      Integer y = h[r][col] / g;
      column_combine(col, j, s, t, x, y);
    }
    if (h[r][col] != 0) {
      pivots.emplace_back(r, col);
      ++col;
    }
  }

  // Forward substitution on the column echelon form.
  std::vector<Integer> w(unknowns);
  std::size_t next = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    Integer acc = rhs[r];
    const std::size_t known =
        next < pivots.size() && pivots[next].first == r ? pivots[next].second
                                                        : col;
    for (std::size_t j = 0; j < known && j < unknowns; ++j)
      acc -= h[r][j] * w[j];
    if (next < pivots.size() && pivots[next].first == r) {
      const std::size_t c = pivots[next].second;
      if (!mpz_divisible_p(acc.get_mpz_t(), h[r][c].get_mpz_t()))
        return std::nullopt;
      w[c] = acc / h[r][c];
      ++next;
    } else if (acc != 0) {
      return std::nullopt;
    }
  }

  std::vector<Integer> out(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i)
    for (std::size_t j = 0; j < unknowns; ++j) out[i] += u[i][j] * w[j];
  return out;
}

}  // namespace magtrans::linalg
