#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qawa/scalar.hpp"

namespace qawa {

using Matrix = std::vector<std::vector<Scalar>>;

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Matrix out(r, std::vector<Scalar>(c, Scalar(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

// Gauss-Jordan with exact arithmetic; pivot = first nonzero entry in column.
// Returns nullopt for singular input.
inline std::optional<Matrix> invert(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Scalar d = m[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= d;
      inv[col][j] *= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Scalar f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += m[i][j] * v[j];
    }
  return out;
}

// Basis of the null space {x : M x = 0} for an r x c matrix.
inline std::vector<std::vector<Scalar>> kernel_basis(Matrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Scalar d = m[rank][col].inverse();
    for (std::size_t j = 0; j < cols; ++j) m[rank][j] *= d;
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == rank || m[row][col].is_zero()) continue;
      Scalar f = m[row][col];
      for (std::size_t j = 0; j < cols; ++j) m[row][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free_col] = Scalar(1);
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qawa
