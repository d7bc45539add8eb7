#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppv/param_scalar.hpp"

namespace ppv {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline std::size_t entry_cost(const mpq_class& a) {
  return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
}
inline std::size_t entry_cost(const ParamScalar& a) { return a.size(); }

template <class T>
struct RowEchelon {
  Matrix<T> rows;           // nonzero rows of the reduced row echelon form
  std::vector<int> pivots;  // pivot column of each row
};

// Reduced row echelon form; the pivot of each row is its first nonzero column.
template <class T>
RowEchelon<T> rref(Matrix<T> m, int ncols) {
  RowEchelon<T> out;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t best = m.size();
    for (std::size_t r = row; r < m.size(); ++r) {
      if (is_zero(m[r][col])) continue;
      if (best == m.size() || entry_cost(m[r][col]) < entry_cost(m[best][col])) best = r;
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    T inv = T(1) / m[row][col];
    for (int c = col; c < ncols; ++c)
      if (!is_zero(m[row][c])) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      T f = m[r][col];
      for (int c = col; c < ncols; ++c)
        if (!is_zero(m[row][c])) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

// Basis of {v : m v = 0}, one vector per free column, with v[free] = 1.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m, int ncols) {
  RowEchelon<T> e = rref(m, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(static_cast<std::size_t>(ncols), T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Reduced echelon basis of the row space of `vectors`.
template <class T>
std::vector<std::vector<T>> canonical_basis(const std::vector<std::vector<T>>& vectors, int ncols) {
  return rref(vectors, ncols).rows;
}

template <class T>
struct LinearSolution {
  std::vector<T> particular;
  std::vector<std::vector<T>> kernel;
};

// Solves a x = b; nullopt when inconsistent.
template <class T>
std::optional<LinearSolution<T>> solve_linear_system(const Matrix<T>& a, const std::vector<T>& b) {
  int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  Matrix<T> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  RowEchelon<T> e = rref(aug, n + 1);
  for (int p : e.pivots)
    if (p == n) return std::nullopt;
  LinearSolution<T> sol;
  sol.particular.assign(static_cast<std::size_t>(n), T(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) sol.particular[e.pivots[i]] = e.rows[i][n];
  sol.kernel = kernel_basis(a, n);
  return sol;
}

}  // namespace ppv
