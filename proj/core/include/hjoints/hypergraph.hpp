#pragma once

#include "hjoints/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hjoints {

// Vertex j (1-based) is bit j-1.
using VertexSet = std::uint64_t;

inline constexpr unsigned kMaxVertices = 64;

inline VertexSet vertex_bit(unsigned j) { return VertexSet{1} << (j - 1); }
inline unsigned set_size(VertexSet s) { return static_cast<unsigned>(__builtin_popcountll(s)); }
inline VertexSet full_set(unsigned n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
inline bool contains_vertex(VertexSet s, unsigned j) { return (s >> (j - 1)) & 1U; }
VertexSet make_set(const std::vector<unsigned>& vertices);
std::vector<unsigned> set_members(VertexSet s);
std::string set_to_string(VertexSet s);

// Edge-colored multi-hypergraph on vertices 1..d. Structural checks happen
// at construction; color-class uniformity is left to
// validate_uniform_coloring so that invalid colorings stay representable.
class Hypergraph {
 public:
  Hypergraph() = default;
  // colors are 1-based; num_colors == 0 means "largest color used".
  Hypergraph(unsigned d, std::vector<VertexSet> edges, std::vector<unsigned> colors, unsigned num_colors = 0);

  static Hypergraph from_lists(unsigned d, const std::vector<std::vector<unsigned>>& edges,
                               std::vector<unsigned> colors = {});

  unsigned d() const { return d_; }
  std::size_t num_edges() const { return edges_.size(); }
  unsigned num_colors() const { return num_colors_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet edge(std::size_t i) const { return edges_[i]; }
  unsigned color(std::size_t i) const { return colors_[i]; }
  const std::vector<unsigned>& colors() const { return colors_; }
  std::vector<std::size_t> edges_of_color(unsigned c) const;
  unsigned degree(unsigned j) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  unsigned d_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<unsigned> colors_;
  unsigned num_colors_ = 0;
};

// k[i-1] = d - |e| for the edges of color i.
struct UniformityProfile {
  std::vector<unsigned> k;
};

UniformityProfile validate_uniform_coloring(const Hypergraph& h);

Hypergraph cone(const Hypergraph& h, unsigned t);

// K_n^{(s)}: all s-subsets of [n], one color.
Hypergraph complete_hypergraph(unsigned n, unsigned s);
// The cycle 12, 23, ..., n1, one color.
Hypergraph cycle_graph(unsigned n);

struct WeightFunction {
  std::vector<Rational> weights;
};

WeightFunction uniform_weight(const Hypergraph& h, const Rational& value);
Rational total_weight(const WeightFunction& w);
std::vector<Rational> subtotal_sequence(const Hypergraph& h, const WeightFunction& w);
// Per vertex: sum of w(e) over e containing j, minus 1.
std::vector<Rational> cover_slacks(const Hypergraph& h, const WeightFunction& w);
bool covers(const Hypergraph& h, const WeightFunction& w);
void check_weight_shape(const Hypergraph& h, const WeightFunction& w);

struct ConstantC {
  Log2Sum log2;
  HighPrecision value;
  double approx = 0.0;
};

ConstantC constant_C(const Hypergraph& h, const WeightFunction& w);

}  // namespace hjoints
