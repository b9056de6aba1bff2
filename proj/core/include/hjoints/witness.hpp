#pragma once

#include "hjoints/flat.hpp"
#include "hjoints/hypergraph.hpp"
#include "hjoints/parallel.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace hjoints {

// Point set J and flat multisets F_1..F_r (family i-1 holds color i).
template <class Field>
struct JointsConfiguration {
  using T = typename Field::value_type;

  Field field;
  std::size_t d = 0;
  std::vector<std::vector<Flat<Field>>> families;
  std::vector<Vec<T>> points;
  std::string provenance = "custom";
  // Hyperplane labels behind each flat / point for generic and projected builds.
  std::vector<std::vector<VertexSet>> flat_labels;
  std::vector<VertexSet> point_labels;
};

template <class Field>
struct WitnessResult {
  using T = typename Field::value_type;

  bool exists = false;
  // Row j holds v_{j+1}; empty when existence came from the subspace criterion alone.
  Mat<T> columns;
  std::size_t trials_used = 0;
  // Upper bound on the chance that a witness exists although none was sampled.
  double false_negative_bound = 0.0;
  // True when the answer was settled by the subspace rank criterion.
  bool certified = false;
};

inline constexpr unsigned kRankCriterionMaxDim = 12;

// Bases of W_j = intersection of dir(F_e) over edges e not containing j.
template <class Field>
std::vector<Mat<typename Field::value_type>> witness_spaces(const Field& field, const Hypergraph& h,
                                                            const std::vector<Flat<Field>>& tuple) {
  using T = typename Field::value_type;
  std::vector<Mat<T>> spaces;
  for (unsigned j = 1; j <= h.d(); ++j) {
    std::vector<Mat<T>> spans;
    for (std::size_t e = 0; e < h.num_edges(); ++e)
      if (!contains_vertex(h.edge(e), j)) spans.push_back(tuple[e].directions);
    spaces.push_back(intersect_subspaces(field, spans, h.d()));
  }
  return spaces;
}

// Independent v_j in W_j exist iff dim(sum_{j in S} W_j) >= |S| for every S.
template <class Field>
bool transversal_exists(const Field& field, const std::vector<Mat<typename Field::value_type>>& spaces,
                        std::size_t dim) {
  using T = typename Field::value_type;
  const std::size_t n = spaces.size();
  if (n > 63) throw Error(ErrorCode::InvalidArgument, "subspace criterion limited to 63 spaces");
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    Mat<T> stacked;
    for (std::size_t j = 0; j < n; ++j)
      if ((s >> j) & 1U) stacked.insert(stacked.end(), spaces[j].begin(), spaces[j].end());
    if (rank_of(field, stacked, dim) < static_cast<std::size_t>(__builtin_popcountll(s))) return false;
  }
  return true;
}

template <class Field>
void check_tuple_shape(const Hypergraph& h, const Vec<typename Field::value_type>& point,
                       const std::vector<Flat<Field>>& tuple) {
  if (tuple.size() != h.num_edges()) throw Error(ErrorCode::SizeMismatch, "tuple needs one flat per edge");
  if (point.size() != h.d()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from d");
  for (std::size_t e = 0; e < tuple.size(); ++e) {
    if (tuple[e].ambient != h.d() || tuple[e].dim() != h.d() - set_size(h.edge(e)))
      throw Error(ErrorCode::DimensionMismatch, "edge " + std::to_string(e) + ": flat has dimension " +
                                                    std::to_string(tuple[e].dim()));
    if (!flat_contains(tuple[e], point))
      throw Error(ErrorCode::PointNotOnFlat, "edge " + std::to_string(e) + ": point not on flat");
  }
}

template <class Field, class Rng>
Mat<typename Field::value_type> sample_transversal(const Field& field,
                                                   const std::vector<Mat<typename Field::value_type>>& spaces,
                                                   std::size_t dim, Rng& rng) {
  using T = typename Field::value_type;
  Mat<T> v;
  for (const auto& basis : spaces) {
    Vec<T> x(dim, field.zero());
    for (const auto& b : basis) {
      T c = field.random(rng);
      for (std::size_t i = 0; i < dim; ++i) x[i] += c * b[i];
    }
    v.push_back(std::move(x));
  }
  return v;
}

// Decides whether an invertible affine A with A(0) = point and
// A(span{e_j : j not in e}) = tuple[e] exists.
template <class Field>
WitnessResult<Field> witness_check(const Field& field, const Hypergraph& h, const Vec<typename Field::value_type>& point,
                                   const std::vector<Flat<Field>>& tuple, unsigned trials, std::uint64_t seed) {
  check_tuple_shape<Field>(h, point, tuple);
  WitnessResult<Field> out;
  auto spaces = witness_spaces(field, h, tuple);
  for (const auto& s : spaces) {
    if (s.empty()) {
      out.certified = true;
      return out;
    }
  }
  std::mt19937_64 rng(seed);
  const std::size_t d = h.d();
  for (unsigned t = 0; t < trials; ++t) {
    ++out.trials_used;
    auto v = sample_transversal(field, spaces, d, rng);
    if (!is_zero(determinant(field, v))) {
      out.exists = true;
      out.columns = std::move(v);
      return out;
    }
  }
  out.false_negative_bound = std::pow(static_cast<double>(d) / field.sample_space_size(), static_cast<double>(trials));
  if (d <= kRankCriterionMaxDim) {
    out.certified = true;
    if (transversal_exists(field, spaces, d)) {
      out.exists = true;
      out.false_negative_bound = 0.0;
      for (unsigned t = 0; t < 256; ++t) {
        auto v = sample_transversal(field, spaces, d, rng);
        if (!is_zero(determinant(field, v))) {
          out.columns = std::move(v);
          break;
        }
      }
    }
  }
  return out;
}

// Deterministic variant using only the subspace rank criterion.
template <class Field>
bool witness_exists_exact(const Field& field, const Hypergraph& h, const Vec<typename Field::value_type>& point,
                          const std::vector<Flat<Field>>& tuple) {
  check_tuple_shape<Field>(h, point, tuple);
  auto spaces = witness_spaces(field, h, tuple);
  for (const auto& s : spaces)
    if (s.empty()) return false;
  return transversal_exists(field, spaces, h.d());
}

// One witnessed tuple: flats[e] indexes family c(e)-1 of the configuration.
template <class Field>
struct WitnessTuple {
  std::vector<std::size_t> flats;
  Mat<typename Field::value_type> columns;
};

inline constexpr unsigned kDefaultTrials = 8;

namespace detail {

template <class Field>
std::vector<std::vector<std::size_t>> incident_candidates(const Hypergraph& h, const JointsConfiguration<Field>& config,
                                                          const Vec<typename Field::value_type>& point) {
  if (config.families.size() < h.num_colors())
    throw Error(ErrorCode::SizeMismatch, "configuration has fewer flat families than colors");
  std::vector<std::vector<std::size_t>> out(h.num_edges());
  std::map<unsigned, std::vector<std::size_t>> by_color;
  for (unsigned c = 1; c <= h.num_colors(); ++c) {
    const auto& family = config.families[c - 1];
    for (std::size_t i = 0; i < family.size(); ++i)
      if (family[i].ambient == point.size() && flat_contains(family[i], point)) by_color[c].push_back(i);
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& family = config.families[h.color(e) - 1];
    for (auto i : by_color[h.color(e)])
      if (family[i].dim() == h.d() - set_size(h.edge(e))) out[e].push_back(i);
  }
  return out;
}

template <class Field, class Visit>
void for_each_tuple(const Hypergraph& h, const JointsConfiguration<Field>& config,
                    const Vec<typename Field::value_type>& point, unsigned trials, std::uint64_t seed, Visit&& visit) {
  auto candidates = incident_candidates(h, config, point);
  for (const auto& c : candidates)
    if (c.empty()) return;
  const std::size_t m = h.num_edges();
  std::vector<std::size_t> pos(m, 0);
  std::vector<Flat<Field>> flats(m);
  std::uint64_t counter = 0;
  for (;;) {
    std::vector<std::size_t> chosen(m);
    for (std::size_t e = 0; e < m; ++e) {
      chosen[e] = candidates[e][pos[e]];
      flats[e] = config.families[h.color(e) - 1][chosen[e]];
    }
    auto result = witness_check(config.field, h, point, flats, trials, derive_seed(seed, counter++));
    if (result.exists) {
      if (!visit(WitnessTuple<Field>{std::move(chosen), std::move(result.columns)})) return;
    }
    std::size_t e = m;
    while (e > 0) {
      --e;
      if (++pos[e] < candidates[e].size()) break;
      pos[e] = 0;
      if (e == 0) return;
    }
    if (m == 0) return;
  }
}

}  // namespace detail

// T_p: every tuple of incident flats admitting a witness. Throws CapExceeded
// once more than `cap` tuples are found.
template <class Field>
std::vector<WitnessTuple<Field>> enumerate_witness_tuples(const Hypergraph& h, const JointsConfiguration<Field>& config,
                                                          const Vec<typename Field::value_type>& point,
                                                          std::size_t cap, unsigned trials = kDefaultTrials,
                                                          std::uint64_t seed = 0) {
  std::vector<WitnessTuple<Field>> out;
  detail::for_each_tuple(h, config, point, trials, seed, [&](WitnessTuple<Field>&& t) {
    if (out.size() == cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " witness tuples");
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

template <class Field>
bool is_joint(const Hypergraph& h, const JointsConfiguration<Field>& config, const Vec<typename Field::value_type>& point,
              unsigned trials = kDefaultTrials, std::uint64_t seed = 0) {
  bool found = false;
  detail::for_each_tuple(h, config, point, trials, seed, [&](WitnessTuple<Field>&&) {
    found = true;
    return false;
  });
  return found;
}

// Indices of the candidates that are H-joints, in increasing order.
template <class Field>
std::vector<std::size_t> detect_joints(const Hypergraph& h, const JointsConfiguration<Field>& config,
                                       const std::vector<Vec<typename Field::value_type>>& candidates,
                                       unsigned trials = kDefaultTrials, std::uint64_t seed = 0) {
  std::vector<char> hit(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t i) {
    hit[i] = is_joint(h, config, candidates[i], trials, derive_seed(seed, i)) ? 1 : 0;
  });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

// Points cut out as zero-dimensional intersections of subsets of the
// configuration's flats. Throws BudgetExceeded after `budget` intersections.
template <class Field>
std::vector<Vec<typename Field::value_type>> intersection_candidates(const JointsConfiguration<Field>& config,
                                                                     std::size_t budget) {
  using T = typename Field::value_type;
  std::vector<Flat<Field>> all;
  for (const auto& fam : config.families) {
    for (const auto& f : fam) {
      bool dup = false;
      for (const auto& g : all) dup = dup || g == f;
      if (!dup) all.push_back(f);
    }
  }
  std::vector<Vec<T>> points;
  std::set<std::string> seen;
  std::size_t work = 0;
  auto record = [&](const Flat<Field>& f) {
    if (seen.insert(vec_key(config.field, f.basepoint)).second) points.push_back(f.basepoint);
  };
  for (const auto& f : all)
    if (f.dim() == 0) record(f);
  // Depth-first over increasing index subsets, extending while the
  // intersection is nonempty and still positive dimensional.
  struct Frame {
    Flat<Field> flat;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].dim() > 0) stack.push_back({all[i], i + 1});
  while (!stack.empty()) {
    Frame top = std::move(stack.back());
    stack.pop_back();
    for (std::size_t j = top.next; j < all.size(); ++j) {
      if (++work > budget) throw Error(ErrorCode::BudgetExceeded, "candidate generation exceeded its budget");
      auto meet = intersect_flats(config.field, std::vector<Flat<Field>>{top.flat, all[j]});
      if (!meet || meet->dim() == top.flat.dim()) continue;
      if (meet->dim() == 0) record(*meet);
      else stack.push_back({std::move(*meet), j + 1});
    }
  }
  return points;
}

}  // namespace hjoints
