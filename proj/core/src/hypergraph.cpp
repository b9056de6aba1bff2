#include "hjoints/hypergraph.hpp"

#include "hjoints/error.hpp"

#include <algorithm>
#include <set>

namespace hjoints {

VertexSet make_set(const std::vector<unsigned>& vertices) {
  VertexSet s = 0;
  for (unsigned v : vertices) {
    if (v < 1 || v > kMaxVertices) throw Error(ErrorCode::InvalidArgument, "vertex out of range: " + std::to_string(v));
    s |= vertex_bit(v);
  }
  return s;
}

std::vector<unsigned> set_members(VertexSet s) {
  std::vector<unsigned> out;
  while (s) {
    out.push_back(static_cast<unsigned>(__builtin_ctzll(s)) + 1);
    s &= s - 1;
  }
  return out;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (unsigned v : set_members(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Hypergraph::Hypergraph(unsigned d, std::vector<VertexSet> edges, std::vector<unsigned> colors, unsigned num_colors)
    : d_(d), edges_(std::move(edges)), colors_(std::move(colors)) {
  if (d_ < 1 || d_ > kMaxVertices) throw Error(ErrorCode::InvalidHypergraph, "d must be in 1..64");
  if (colors_.empty()) colors_.assign(edges_.size(), 1);
  if (colors_.size() != edges_.size()) throw Error(ErrorCode::InvalidHypergraph, "one color per edge required");
  const VertexSet all = full_set(d_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    VertexSet e = edges_[i];
    if (e == 0 || (e & ~all) != 0 || set_size(e) > d_ - 1)
      throw Error(ErrorCode::InvalidHypergraph, "edge " + std::to_string(i) + " must satisfy 1 <= |e| <= d-1 inside [d]");
    if (colors_[i] == 0) throw Error(ErrorCode::InvalidHypergraph, "colors are 1-based");
  }
  unsigned used = colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
  num_colors_ = num_colors == 0 ? used : num_colors;
  if (used > num_colors_) throw Error(ErrorCode::InvalidHypergraph, "color exceeds declared color count");
}

Hypergraph Hypergraph::from_lists(unsigned d, const std::vector<std::vector<unsigned>>& edges,
                                  std::vector<unsigned> colors) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) sets.push_back(make_set(e));
  return Hypergraph(d, std::move(sets), std::move(colors));
}

std::vector<std::size_t> Hypergraph::edges_of_color(unsigned c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (colors_[i] == c) out.push_back(i);
  return out;
}

unsigned Hypergraph::degree(unsigned j) const {
  unsigned deg = 0;
  for (VertexSet e : edges_) deg += contains_vertex(e, j) ? 1 : 0;
  return deg;
}

UniformityProfile validate_uniform_coloring(const Hypergraph& h) {
  UniformityProfile profile;
  for (unsigned c = 1; c <= h.num_colors(); ++c) {
    auto idx = h.edges_of_color(c);
    if (idx.empty()) throw Error(ErrorCode::EmptyColor, "color " + std::to_string(c) + " has no edges");
    unsigned size = set_size(h.edge(idx.front()));
    std::set<VertexSet> seen;
    for (auto i : idx) {
      if (set_size(h.edge(i)) != size)
        throw Error(ErrorCode::MixedUniformity, "color " + std::to_string(c) + " mixes edge sizes");
      if (!seen.insert(h.edge(i)).second)
        throw Error(ErrorCode::DuplicateEdge,
                    "color " + std::to_string(c) + " repeats edge " + set_to_string(h.edge(i)));
    }
    profile.k.push_back(h.d() - size);
  }
  return profile;
}

Hypergraph cone(const Hypergraph& h, unsigned t) {
  if (h.d() + t > kMaxVertices) throw Error(ErrorCode::InvalidArgument, "cone exceeds 64 vertices");
  VertexSet apex = full_set(h.d() + t) & ~full_set(h.d());
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) edges.push_back(e | apex);
  return Hypergraph(h.d() + t, std::move(edges), h.colors(), h.num_colors());
}

Hypergraph complete_hypergraph(unsigned n, unsigned s) {
  std::vector<VertexSet> edges;
  const VertexSet limit = VertexSet{1} << n;
  for (VertexSet e = 1; e < limit; ++e)
    if (set_size(e) == s) edges.push_back(e);
  std::sort(edges.begin(), edges.end(), [](VertexSet a, VertexSet b) { return a < b; });
  return Hypergraph(n, std::move(edges), {});
}

Hypergraph cycle_graph(unsigned n) {
  std::vector<VertexSet> edges;
  for (unsigned i = 1; i <= n; ++i) edges.push_back(vertex_bit(i) | vertex_bit(i % n + 1));
  return Hypergraph(n, std::move(edges), {});
}

WeightFunction uniform_weight(const Hypergraph& h, const Rational& value) {
  return WeightFunction{std::vector<Rational>(h.num_edges(), value)};
}

void check_weight_shape(const Hypergraph& h, const WeightFunction& w) {
  if (w.weights.size() != h.num_edges())
    throw Error(ErrorCode::SizeMismatch, "weight count " + std::to_string(w.weights.size()) + " != edge count " +
                                             std::to_string(h.num_edges()));
  for (const auto& x : w.weights)
    if (x < 0) throw Error(ErrorCode::NegativeValue, "weights must be nonnegative");
}

Rational total_weight(const WeightFunction& w) {
  Rational sum = 0;
  for (const auto& x : w.weights) sum += x;
  return sum;
}

std::vector<Rational> subtotal_sequence(const Hypergraph& h, const WeightFunction& w) {
  check_weight_shape(h, w);
  std::vector<Rational> out(h.num_colors(), Rational(0));
  for (std::size_t i = 0; i < h.num_edges(); ++i) out[h.color(i) - 1] += w.weights[i];
  return out;
}

std::vector<Rational> cover_slacks(const Hypergraph& h, const WeightFunction& w) {
  check_weight_shape(h, w);
  std::vector<Rational> out(h.d(), Rational(-1));
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (unsigned j : set_members(h.edge(i))) out[j - 1] += w.weights[i];
  return out;
}

bool covers(const Hypergraph& h, const WeightFunction& w) {
  auto slacks = cover_slacks(h, w);
  return std::all_of(slacks.begin(), slacks.end(), [](const Rational& s) { return s >= 0; });
}

ConstantC constant_C(const Hypergraph& h, const WeightFunction& w) {
  auto profile = validate_uniform_coloring(h);
  if (!covers(h, w)) throw Error(ErrorCode::NotCovering, "weight does not cover every vertex");
  auto subtotals = subtotal_sequence(h, w);
  ConstantC out;
  out.log2.add_log2_factorial(h.d(), total_weight(w) - 1);
  for (unsigned c = 0; c < h.num_colors(); ++c) out.log2.add_log2_factorial(profile.k[c], -subtotals[c]);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Rational& we = w.weights[i];
    if (we == 0) continue;
    out.log2.add_log2_ratio(we / subtotals[h.color(i) - 1], we);
  }
  out.value = out.log2.value();
  out.approx = out.value.convert_to<double>();
  return out;
}

}  // namespace hjoints
