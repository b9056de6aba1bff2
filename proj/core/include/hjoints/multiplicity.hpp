#pragma once

#include "hjoints/hypergraph.hpp"

#include <cstddef>
#include <vector>

namespace hjoints {

// Tuple data at one point: tuples[t][e] is the flat (index within the
// family of color c(e)) used for edge e by tuple t.
struct EtaProblem {
  std::vector<unsigned> edge_color;  // 0-based
  std::vector<double> edge_weight;
  std::vector<double> subtotals;
  std::vector<double> mixture;       // w(e) / wbar_{c(e)}, 0 when wbar is 0
  std::vector<std::vector<std::size_t>> tuples;
  double baseline = 0.0;             // sum_i wbar_i H(e_i)
};

EtaProblem make_eta_problem(const Hypergraph& h, const WeightFunction& w,
                            std::vector<std::vector<std::size_t>> tuples);

// Per color: law of the flat F_{p,e_i} (sparse, sorted by flat index).
using ColorMarginal = std::vector<std::pair<std::size_t, double>>;
std::vector<ColorMarginal> color_marginals(const EtaProblem& problem, const std::vector<double>& mu);

// Phi(mu) = sum_i wbar_i H(F_{p,e_i}).
double eta_objective(const EtaProblem& problem, const std::vector<double>& mu);

struct EtaResult {
  double eta = 1.0;
  double log2_eta = 0.0;
  double phi = 0.0;
  double gap = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> mu;
};

inline constexpr double kEtaTolerance = 1e-9;
inline constexpr std::size_t kEtaMaxIterations = 100000;

// Maximizes Phi over distributions on the tuples with away-step Frank-Wolfe.
// Throws EmptyTupleSet.
EtaResult eta_multiplicity(const EtaProblem& problem, double tol = kEtaTolerance,
                           std::size_t max_iters = kEtaMaxIterations);

// prod_e (w(e)/wbar_i)^{w(e)} * prod_i C(d, d - k_i)^{wbar_i}.
double eta_closed_form_generic(const Hypergraph& h, const WeightFunction& w);

// Tuple data and distributions at one point for the geometric Shearer audit.
struct PointLaw {
  double weight = 0.0;  // P(p)
  EtaProblem problem;
  std::vector<double> mu;
};

struct GeometricShearerResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double h_point = 0.0;
  std::vector<double> h_flat;            // H(F_{p,e_i})
  std::vector<double> h_flat_given_point;
};

GeometricShearerResult geometric_shearer_audit(const Hypergraph& h, const WeightFunction& w,
                                               const std::vector<PointLaw>& points);

}  // namespace hjoints
