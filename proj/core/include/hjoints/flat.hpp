#pragma once

#include "hjoints/error.hpp"
#include "hjoints/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hjoints {

// Affine subspace basepoint + span(directions). Always kept canonical:
// directions in reduced row echelon form, basepoint zero at pivot columns.
template <class Field>
struct Flat {
  using T = typename Field::value_type;

  std::size_t ambient = 0;
  Vec<T> basepoint;
  Mat<T> directions;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return directions.size(); }

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.ambient == b.ambient && a.basepoint == b.basepoint && a.directions == b.directions;
  }
};

template <class Field>
Flat<Field> make_flat(const Field& field, Vec<typename Field::value_type> basepoint,
                      Mat<typename Field::value_type> directions) {
  Flat<Field> f;
  f.ambient = basepoint.size();
  for (const auto& row : directions)
    if (row.size() != f.ambient) throw Error(ErrorCode::DimensionMismatch, "direction length differs from ambient");
  f.pivots = row_reduce(field, directions, f.ambient);
  for (std::size_t r = 0; r < f.pivots.size(); ++r) {
    auto coef = basepoint[f.pivots[r]];
    if (is_zero(coef)) continue;
    for (std::size_t j = 0; j < f.ambient; ++j) basepoint[j] -= coef * directions[r][j];
  }
  f.basepoint = std::move(basepoint);
  f.directions = std::move(directions);
  return f;
}

template <class Field>
Flat<Field> point_flat(const Field& field, Vec<typename Field::value_type> point) {
  return make_flat(field, std::move(point), {});
}

// Residual of v against the direction space; zero iff v is in it.
template <class Field>
Vec<typename Field::value_type> reduce_against(const Flat<Field>& f, Vec<typename Field::value_type> v) {
  for (std::size_t r = 0; r < f.pivots.size(); ++r) {
    auto coef = v[f.pivots[r]];
    if (is_zero(coef)) continue;
    for (std::size_t j = 0; j < f.ambient; ++j) v[j] -= coef * f.directions[r][j];
  }
  return v;
}

template <class Field>
bool in_direction_space(const Flat<Field>& f, const Vec<typename Field::value_type>& v) {
  auto rest = reduce_against(f, v);
  for (const auto& x : rest)
    if (!is_zero(x)) return false;
  return true;
}

template <class Field>
bool flat_contains(const Flat<Field>& f, const Vec<typename Field::value_type>& point) {
  if (point.size() != f.ambient) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from flat");
  Vec<typename Field::value_type> diff = point;
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= f.basepoint[j];
  return in_direction_space(f, diff);
}

// Rows n with n.x = n.basepoint cutting out the flat.
template <class Field>
Mat<typename Field::value_type> flat_normals(const Field& field, const Flat<Field>& f) {
  return nullspace(field, f.directions, f.ambient);
}

template <class Field>
std::optional<Flat<Field>> intersect_flats(const Field& field, const std::vector<Flat<Field>>& flats) {
  using T = typename Field::value_type;
  if (flats.empty()) throw Error(ErrorCode::InvalidArgument, "intersection of no flats");
  const std::size_t d = flats.front().ambient;
  Mat<T> a;
  Vec<T> b;
  for (const auto& f : flats) {
    if (f.ambient != d) throw Error(ErrorCode::DimensionMismatch, "flats live in different ambient spaces");
    for (auto& n : flat_normals(field, f)) {
      T rhs = field.zero();
      for (std::size_t j = 0; j < d; ++j) rhs += n[j] * f.basepoint[j];
      a.push_back(std::move(n));
      b.push_back(rhs);
    }
  }
  if (a.empty()) return flats.front();
  auto x = solve(field, a, b, d);
  if (!x) return std::nullopt;
  return make_flat(field, std::move(*x), nullspace(field, a, d));
}

// Image of a flat under x -> m x + shift (m need not be square or invertible;
// the image directions are re-reduced so the dimension may drop).
template <class Field>
Flat<Field> map_flat(const Field& field, const Mat<typename Field::value_type>& m,
                     const Vec<typename Field::value_type>& shift, const Flat<Field>& f) {
  auto base = mat_vec(field, m, f.basepoint);
  for (std::size_t j = 0; j < base.size(); ++j) base[j] += shift[j];
  Mat<typename Field::value_type> dirs;
  for (const auto& row : f.directions) dirs.push_back(mat_vec(field, m, row));
  return make_flat(field, std::move(base), std::move(dirs));
}

template <class Field>
std::string vec_key(const Field& field, const Vec<typename Field::value_type>& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out += ",";
    out += field.format(v[j]);
  }
  return out + ")";
}

// Text identity of the canonical form; equal flats give equal keys.
template <class Field>
std::string flat_key(const Field& field, const Flat<Field>& f) {
  std::string out = vec_key(field, f.basepoint) + "+<";
  for (const auto& row : f.directions) out += vec_key(field, row);
  return out + ">";
}

}  // namespace hjoints
