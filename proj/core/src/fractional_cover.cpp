#include "hjoints/fractional_cover.hpp"

#include "hjoints/error.hpp"
#include "hjoints/lp.hpp"

namespace hjoints {

CoverSolution rho_star(const Hypergraph& h) {
  for (unsigned j = 1; j <= h.d(); ++j)
    if (h.degree(j) == 0) throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(j) + " lies in no edge");

  const std::size_t m = h.num_edges();
  LinearProgram primal;
  primal.goal = Goal::Minimize;
  primal.c.assign(m, Rational(1));
  LinearProgram dual;
  dual.goal = Goal::Maximize;
  dual.c.assign(h.d(), Rational(1));
  for (unsigned j = 1; j <= h.d(); ++j) {
    std::vector<Rational> row(m, Rational(0));
    for (std::size_t e = 0; e < m; ++e)
      if (contains_vertex(h.edge(e), j)) row[e] = 1;
    primal.a.push_back(std::move(row));
    primal.sense.push_back(Sense::GreaterEqual);
    primal.b.push_back(1);
  }
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<Rational> row(h.d(), Rational(0));
    for (unsigned j : set_members(h.edge(e))) row[j - 1] = 1;
    dual.a.push_back(std::move(row));
    dual.sense.push_back(Sense::LessEqual);
    dual.b.push_back(1);
  }

  auto p = solve_lp(primal);
  auto q = solve_lp(dual);
  if (p.status != LpStatus::Optimal || q.status != LpStatus::Optimal)
    throw Error(ErrorCode::InvalidHypergraph, "cover LP did not reach an optimum");

  CoverSolution out;
  out.value = p.value;
  out.weights.weights = p.x;
  out.dual_value = q.value;
  out.dual_solution = q.x;
  auto slacks = cover_slacks(h, out.weights);
  for (unsigned j = 1; j <= h.d(); ++j)
    if (slacks[j - 1] == 0) out.tight_vertices.push_back(j);
  return out;
}

CoverReport verify_cover(const Hypergraph& h, const WeightFunction& w) {
  CoverReport out;
  out.slacks = cover_slacks(h, w);
  out.covering = true;
  for (const auto& s : out.slacks)
    if (s < 0) out.covering = false;
  return out;
}

}  // namespace hjoints
