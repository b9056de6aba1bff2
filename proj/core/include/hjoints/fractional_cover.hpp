#pragma once

#include "hjoints/hypergraph.hpp"

#include <vector>

namespace hjoints {

struct CoverSolution {
  Rational value;
  WeightFunction weights;
  std::vector<unsigned> tight_vertices;
  // Optimum of the dual packing LP, solved separately.
  Rational dual_value;
  std::vector<Rational> dual_solution;
};

// Minimum total weight of a fractional edge cover. Throws IsolatedVertex.
CoverSolution rho_star(const Hypergraph& h);

// Per vertex sum_{e ∋ j} w(e) - 1.
struct CoverReport {
  std::vector<Rational> slacks;
  bool covering = false;
};
CoverReport verify_cover(const Hypergraph& h, const WeightFunction& w);

}  // namespace hjoints
