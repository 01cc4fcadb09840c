#include "hecke/cone.hpp"

#include "hecke/errors.hpp"

namespace hecke {

std::optional<Vec> cone_coefficients(const std::vector<Vec>& gens, const Vec& target) {
  const size_t m = target.size();
  const size_t n = gens.size();
  for (const auto& g : gens)
    if (g.size() != m) throw Error(ErrorCode::ShapeError, "cone generator of wrong length");

  // Tableau rows: constraints with artificial slack a_i, all rhs made nonnegative.
  // Columns 0..n-1 structural, n..n+m-1 artificial, last column rhs.
  const size_t cols = n + m + 1;
  std::vector<Vec> t(m, Vec(cols, 0));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    int sign = target[i] < 0 ? -1 : 1;
    for (size_t j = 0; j < n; ++j) t[i][j] = sign * gens[j][i];
    t[i][n + i] = 1;
    t[i][cols - 1] = sign * target[i];
    basis[i] = n + i;
  }
  // Objective: minimise the sum of artificials; reduced costs r_j = -sum_i t[i][j] for structurals.
  Vec cost(cols, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (j < n || j == cols - 1) cost[j] -= t[i][j];

  for (;;) {
    size_t enter = cols;
    for (size_t j = 0; j + 1 < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    size_t leave = m;
    Rational best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] > 0) {
        Rational ratio = t[i][cols - 1] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[cols - 1] != 0) return std::nullopt;
  Vec x(n, 0);
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < n) {
      x[basis[i]] = t[i][cols - 1];
    } else if (t[i][cols - 1] != 0) {
      return std::nullopt;
    }
  }
  return x;
}

bool in_cone(const std::vector<Vec>& gens, const Vec& target) {
  return cone_coefficients(gens, target).has_value();
}

Vec solve_linear(std::vector<Vec> a, Vec b) {
  const size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::InputError, "singular linear system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace hecke
