#pragma once

// Dense exact linear algebra over any field type exposing zero()/one() and a
// value_type with field operators (PrimeField, RationalField).

#include "hjoints/field.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hjoints {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

// Reduces m in place to reduced row echelon form and returns the pivot
// columns; zero rows are dropped so m.size() equals the rank afterwards.
template <class Field>
std::vector<std::size_t> row_reduce(const Field& field, Mat<typename Field::value_type>& m, std::size_t cols) {
  using T = typename Field::value_type;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    T inv = field.one() / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || is_zero(m[i][col])) continue;
      T factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

template <class Field>
std::size_t rank_of(const Field& field, Mat<typename Field::value_type> m, std::size_t cols) {
  return row_reduce(field, m, cols).size();
}

// Basis (as rows) of { x : m x = 0 }.
template <class Field>
Mat<typename Field::value_type> nullspace(const Field& field, Mat<typename Field::value_type> m, std::size_t cols) {
  using T = typename Field::value_type;
  auto pivots = row_reduce(field, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Mat<T> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with a x = b, or nullopt when inconsistent.
template <class Field>
std::optional<Vec<typename Field::value_type>> solve(const Field& field, const Mat<typename Field::value_type>& a,
                                                      const Vec<typename Field::value_type>& b, std::size_t cols) {
  using T = typename Field::value_type;
  Mat<T> aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec<T> row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  auto pivots = row_reduce(field, aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec<T> x(cols, field.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

// Basis of the intersection of the given subspaces (each a list of spanning
// rows in an ambient space of dimension `dim`).
template <class Field>
Mat<typename Field::value_type> intersect_subspaces(const Field& field,
                                                     const std::vector<Mat<typename Field::value_type>>& spans,
                                                     std::size_t dim) {
  using T = typename Field::value_type;
  Mat<T> constraints;
  for (const auto& span : spans) {
    for (auto& normal : nullspace(field, span, dim)) constraints.push_back(std::move(normal));
  }
  if (constraints.empty()) {
    Mat<T> identity(dim, Vec<T>(dim, field.zero()));
    for (std::size_t i = 0; i < dim; ++i) identity[i][i] = field.one();
    return identity;
  }
  return nullspace(field, constraints, dim);
}

template <class Field>
typename Field::value_type determinant(const Field& field, Mat<typename Field::value_type> m) {
  using T = typename Field::value_type;
  const std::size_t n = m.size();
  T det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && is_zero(m[sel][col])) ++sel;
    if (sel == n) return field.zero();
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    T inv = field.one() / m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m[i][col])) continue;
      T factor = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  return det;
}

template <class Field>
Mat<typename Field::value_type> transpose(const Field& field, const Mat<typename Field::value_type>& m,
                                          std::size_t cols) {
  Mat<typename Field::value_type> t(cols, Vec<typename Field::value_type>(m.size(), field.zero()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

template <class Field>
Vec<typename Field::value_type> mat_vec(const Field& field, const Mat<typename Field::value_type>& m,
                                        const Vec<typename Field::value_type>& v) {
  Vec<typename Field::value_type> out(m.size(), field.zero());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace hjoints
