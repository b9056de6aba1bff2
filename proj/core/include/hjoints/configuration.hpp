#pragma once

#include "hjoints/extremal.hpp"
#include "hjoints/witness.hpp"

#include <optional>
#include <random>
#include <set>
#include <unordered_set>

namespace hjoints {

// m hyperplanes in F^D; hyperplane i is {x : sum_j t_i^j x_j = t_i^D}
// (j = 0..D-1). A D-set A of labels meets in the point whose coordinates are
// minus the low coefficients of prod_{a in A} (t - t_a).
template <class Field>
struct HyperplaneFamily {
  using T = typename Field::value_type;

  std::size_t dim = 0;
  std::vector<T> params;
  Mat<T> normals;
  Vec<T> offsets;
};

inline constexpr unsigned kProjectionRetries = 16;

namespace detail {

inline bool field_too_small(const PrimeField& f, std::size_t m) { return f.characteristic() <= m; }
inline bool field_too_small(const RationalField&, std::size_t) { return false; }

template <class Field, class Rng>
typename Field::value_type draw_param(const Field& field, Rng& rng, std::size_t m) {
  if constexpr (std::is_same_v<Field, RationalField>) {
    // Small integers keep rational elimination cheap.
    return field.from_int(static_cast<std::int64_t>(rng() % (8 * m + 8)) - static_cast<std::int64_t>(4 * m + 4));
  } else {
    return field.random(rng);
  }
}

}  // namespace detail

template <class Field>
HyperplaneFamily<Field> generic_hyperplanes(const Field& field, std::size_t m, std::size_t D, std::uint64_t seed) {
  using T = typename Field::value_type;
  if (D < 1 || m < D) throw Error(ErrorCode::InvalidArgument, "need m >= D >= 1");
  if (detail::field_too_small(field, m))
    throw Error(ErrorCode::FieldTooSmall, field.name() + " has too few elements for " + std::to_string(m) + " hyperplanes");
  std::mt19937_64 rng(seed);
  HyperplaneFamily<Field> fam;
  fam.dim = D;
  std::set<std::string> used;
  while (fam.params.size() < m) {
    T t = detail::draw_param(field, rng, m);
    if (!used.insert(field.format(t)).second) continue;
    fam.params.push_back(t);
  }
  for (const T& t : fam.params) {
    Vec<T> normal;
    T power = field.one();
    for (std::size_t j = 0; j < D; ++j) {
      normal.push_back(power);
      power *= t;
    }
    fam.normals.push_back(std::move(normal));
    fam.offsets.push_back(power);
  }
  return fam;
}

// labels are 1-based hyperplane indices.
template <class Field>
Flat<Field> hyperplane_flat(const Field& field, const HyperplaneFamily<Field>& fam, VertexSet labels) {
  using T = typename Field::value_type;
  Mat<T> a;
  Vec<T> b;
  for (unsigned l : set_members(labels)) {
    a.push_back(fam.normals[l - 1]);
    b.push_back(fam.offsets[l - 1]);
  }
  if (a.empty()) {
    Mat<T> id(fam.dim, Vec<T>(fam.dim, field.zero()));
    for (std::size_t i = 0; i < fam.dim; ++i) id[i][i] = field.one();
    return make_flat(field, Vec<T>(fam.dim, field.zero()), std::move(id));
  }
  auto x = solve(field, a, b, fam.dim);
  if (!x) throw Error(ErrorCode::GenericityFailure, "hyperplanes " + set_to_string(labels) + " do not meet");
  return make_flat(field, std::move(*x), nullspace(field, a, fam.dim));
}

// Closed-form intersection point of a D-set of labels.
template <class Field>
Vec<typename Field::value_type> hyperplane_point(const Field& field, const HyperplaneFamily<Field>& fam,
                                                 VertexSet labels) {
  using T = typename Field::value_type;
  if (set_size(labels) != fam.dim) throw Error(ErrorCode::SizeMismatch, "a point needs exactly D labels");
  Vec<T> poly{field.one()};  // coefficients, lowest degree first
  for (unsigned l : set_members(labels)) {
    const T& root = fam.params[l - 1];
    Vec<T> next(poly.size() + 1, field.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  Vec<T> x(fam.dim, field.zero());
  for (std::size_t j = 0; j < fam.dim; ++j) x[j] = -poly[j];
  return x;
}

// Exhaustive check that every D-subset of normals is invertible.
template <class Field>
bool verify_general_position(const Field& field, const HyperplaneFamily<Field>& fam) {
  using T = typename Field::value_type;
  const std::size_t m = fam.params.size();
  if (m > 63) throw Error(ErrorCode::InvalidArgument, "exhaustive check limited to 63 hyperplanes");
  bool ok = true;
  VertexSet limit = VertexSet{1} << m;
  for (VertexSet s = full_set(static_cast<unsigned>(fam.dim)); s < limit && ok;) {
    Mat<T> a;
    for (unsigned l : set_members(s)) a.push_back(fam.normals[l - 1]);
    ok = rank_of(field, a, fam.dim) == fam.dim;
    VertexSet c = s & (~s + 1);
    VertexSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return ok;
}

namespace detail {

inline std::vector<unsigned> color_sizes(const Hypergraph& h) {
  auto profile = validate_uniform_coloring(h);
  std::vector<unsigned> sizes;
  for (unsigned k : profile.k) sizes.push_back(h.d() - k);
  return sizes;
}

}  // namespace detail

template <class Field>
JointsConfiguration<Field> generically_induced(const Field& field, const SimpleHypergraph& host, const Hypergraph& h,
                                               const HyperplaneFamily<Field>& fam, bool verify_joints = true,
                                               std::uint64_t seed = 0) {
  if (fam.dim != h.d()) throw Error(ErrorCode::SizeMismatch, "hyperplane dimension differs from d");
  if (fam.params.size() < host.n) throw Error(ErrorCode::SizeMismatch, "fewer hyperplanes than host vertices");
  auto sizes = detail::color_sizes(h);
  for (VertexSet e : host.edges) {
    if (std::find(sizes.begin(), sizes.end(), set_size(e)) == sizes.end())
      throw Error(ErrorCode::SizeMismatch, "host edge " + set_to_string(e) + " matches no color size");
  }
  JointsConfiguration<Field> config{field, h.d(), {}, {}, "generic", {}, {}};
  config.families.resize(h.num_colors());
  config.flat_labels.resize(h.num_colors());
  std::map<VertexSet, Flat<Field>> cache;
  for (unsigned c = 0; c < h.num_colors(); ++c) {
    for (VertexSet e : host.edges) {
      if (set_size(e) != sizes[c]) continue;
      auto it = cache.find(e);
      if (it == cache.end()) it = cache.emplace(e, hyperplane_flat(field, fam, e)).first;
      config.families[c].push_back(it->second);
      config.flat_labels[c].push_back(e);
    }
  }
  for (VertexSet a : inducing_sets(host, h)) {
    config.points.push_back(hyperplane_point(field, fam, a));
    config.point_labels.push_back(a);
  }
  if (verify_joints) {
    auto hits = detect_joints(h, config, config.points, kDefaultTrials, seed);
    if (hits.size() != config.points.size())
      throw Error(ErrorCode::GenericityFailure, "an asserted joint failed the witness check");
  }
  return config;
}

// Random d x (d+t) matrix over the field.
template <class Field>
Mat<typename Field::value_type> random_projection(const Field& field, std::size_t d, std::size_t t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat<typename Field::value_type> p(d, Vec<typename Field::value_type>(d + t, field.zero()));
  for (auto& row : p)
    for (auto& x : row) x = detail::draw_param(field, rng, 4 * (d + t));
  return p;
}

template <class Field>
JointsConfiguration<Field> projected_generically_induced(
    const Field& field, const SimpleHypergraph& host, const Hypergraph& h, unsigned t, const HyperplaneFamily<Field>& fam,
    std::uint64_t projection_seed,
    const std::optional<Mat<typename Field::value_type>>& forced_projection = std::nullopt) {
  using T = typename Field::value_type;
  if (t == 0 && !forced_projection) return generically_induced(field, host, h, fam, true, projection_seed);
  const std::size_t d = h.d();
  if (fam.dim != d + t) throw Error(ErrorCode::SizeMismatch, "hyperplane dimension must be d + t");
  Hypergraph upstairs = cone(h, t);
  auto up = generically_induced(field, host, upstairs, fam, false);
  const unsigned attempts = forced_projection ? 1 : kProjectionRetries;
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    Mat<T> p = forced_projection ? *forced_projection : random_projection(field, d, t, derive_seed(projection_seed, attempt));
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "projection must have d rows");
    JointsConfiguration<Field> config{field, d, {}, {}, "projected", up.flat_labels, up.point_labels};
    config.families.resize(up.families.size());
    Vec<T> zero(d, field.zero());
    bool degenerate = false;
    for (std::size_t c = 0; c < up.families.size() && !degenerate; ++c) {
      std::unordered_set<std::string> keys;
      for (const auto& f : up.families[c]) {
        auto g = map_flat(field, p, zero, f);
        if (g.dim() != f.dim() || !keys.insert(flat_key(field, g)).second) {
          degenerate = true;
          break;
        }
        config.families[c].push_back(std::move(g));
      }
    }
    if (degenerate) continue;
    std::unordered_set<std::string> point_keys;
    for (const auto& x : up.points) {
      config.points.push_back(mat_vec(field, p, x));
      if (!point_keys.insert(vec_key(field, config.points.back())).second) degenerate = true;
    }
    if (degenerate) continue;
    auto hits = detect_joints(h, config, config.points, kDefaultTrials, derive_seed(projection_seed, 1000 + attempt));
    if (hits.size() != config.points.size()) continue;
    return config;
  }
  throw Error(ErrorCode::GenericityFailure, "no generic projection found after " + std::to_string(attempts) + " attempts");
}

// One function per coordinate subset: values[i] is indexed by the mixed-radix
// encoding of p_i in S^{I_i}, the lowest member of I_i being the least
// significant digit.
struct AxisFunction {
  VertexSet subset = 0;
  std::vector<std::int64_t> values;
};

inline std::size_t axis_index(const std::vector<unsigned>& digits, unsigned s) {
  std::size_t idx = 0;
  for (std::size_t k = digits.size(); k-- > 0;) idx = idx * s + digits[k];
  return idx;
}

inline std::vector<unsigned> axis_digits(std::size_t index, unsigned s, std::size_t count) {
  std::vector<unsigned> digits(count);
  for (std::size_t k = 0; k < count; ++k) {
    digits[k] = static_cast<unsigned>(index % s);
    index /= s;
  }
  return digits;
}

// Pattern with edge I_i of color i.
inline Hypergraph axis_pattern(unsigned d, const std::vector<AxisFunction>& functions) {
  std::vector<VertexSet> edges;
  std::vector<unsigned> colors;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    edges.push_back(functions[i].subset);
    colors.push_back(static_cast<unsigned>(i + 1));
  }
  return Hypergraph(d, std::move(edges), std::move(colors));
}

// Ground set S = {0, ..., s-1} embedded as field integers. points lists all of S^d.
template <class Field>
JointsConfiguration<Field> axis_parallel_from_functions(const Field& field, unsigned d, unsigned s,
                                                        const std::vector<AxisFunction>& functions) {
  using T = typename Field::value_type;
  if constexpr (std::is_same_v<Field, PrimeField>) {
    if (field.characteristic() <= s) throw Error(ErrorCode::FieldTooSmall, "ground set does not embed");
  }
  JointsConfiguration<Field> config{field, d, {}, {}, "axis-parallel", {}, {}};
  for (const auto& fn : functions) {
    auto coords = set_members(fn.subset);
    std::size_t cells = 1;
    for (std::size_t k = 0; k < coords.size(); ++k) cells *= s;
    if (fn.values.size() != cells)
      throw Error(ErrorCode::SizeMismatch, "function table must have s^|I| entries");
    Mat<T> dirs;
    for (unsigned j = 1; j <= d; ++j) {
      if (contains_vertex(fn.subset, j)) continue;
      Vec<T> e(d, field.zero());
      e[j - 1] = field.one();
      dirs.push_back(std::move(e));
    }
    std::vector<Flat<Field>> family;
    for (std::size_t idx = 0; idx < cells; ++idx) {
      if (fn.values[idx] < 0) throw Error(ErrorCode::NegativeValue, "function values must be nonnegative");
      if (fn.values[idx] == 0) continue;
      auto digits = axis_digits(idx, s, coords.size());
      Vec<T> base(d, field.zero());
      for (std::size_t k = 0; k < coords.size(); ++k) base[coords[k] - 1] = field.from_int(digits[k]);
      auto flat = make_flat(field, std::move(base), dirs);
      for (std::int64_t copy = 0; copy < fn.values[idx]; ++copy) family.push_back(flat);
    }
    config.families.push_back(std::move(family));
  }
  std::size_t total = 1;
  for (unsigned j = 0; j < d; ++j) total *= s;
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto digits = axis_digits(idx, s, d);
    Vec<T> x(d, field.zero());
    for (unsigned j = 0; j < d; ++j) x[j] = field.from_int(digits[j]);
    config.points.push_back(std::move(x));
  }
  return config;
}

// Keeps only the listed point indices.
template <class Field>
void restrict_points(JointsConfiguration<Field>& config, const std::vector<std::size_t>& keep) {
  std::vector<Vec<typename Field::value_type>> points;
  std::vector<VertexSet> labels;
  for (auto i : keep) {
    points.push_back(config.points[i]);
    if (i < config.point_labels.size()) labels.push_back(config.point_labels[i]);
  }
  config.points = std::move(points);
  config.point_labels = std::move(labels);
}

}  // namespace hjoints
