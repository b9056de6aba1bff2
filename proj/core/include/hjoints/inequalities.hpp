#pragma once

#include "hjoints/configuration.hpp"
#include "hjoints/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace hjoints {

struct InequalityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
};

// Law of (X_1, ..., X_d): outcomes[k] has d coordinates, probs[k] its mass.
struct JointLaw {
  std::vector<std::vector<int>> outcomes;
  std::vector<double> probs;
};

// Entropy of the marginal on the coordinates in `subset` (1-based bits).
double marginal_entropy(const JointLaw& law, VertexSet subset);

// Throws NotCovering unless sum_{I_i containing j} w_i >= 1 for every j.
void check_covering(unsigned d, const std::vector<VertexSet>& subsets, const std::vector<double>& weights);

// H(X_1..X_d) <= sum_i w_i H(X_{I_i}).
InequalityResult shearer_check(unsigned d, const std::vector<VertexSet>& subsets, const std::vector<double>& weights,
                               const JointLaw& law);

// sum_{x in S^d} prod_i f_i(pi_i x)^{w_i} <= prod_i (sum f_i)^{w_i}; f_i >= 0.
InequalityResult holder_check(unsigned d, unsigned s, const std::vector<AxisFunction>& functions,
                              const std::vector<double>& weights);

// |T| <= prod_i |pi_i(T)|^{w_i}; points are indices into S^d (mixed radix).
InequalityResult loomis_whitney_check(unsigned d, unsigned s, const std::vector<std::size_t>& points,
                                      const std::vector<VertexSet>& subsets, const std::vector<double>& weights);

// Tensor-power form of the constant-weakened Hölder bound. lhs_root is the
// n-th root of the brute-force tensored left side; rhs_root the n-th root of
// C_{H,w} * (prod_i (sum f_i)^{w_i})^n.
struct TensorPowerResult {
  unsigned n = 1;
  double lhs_root = 0.0;
  double rhs_root = 0.0;
};
TensorPowerResult tensor_power_check(unsigned d, unsigned s, const std::vector<AxisFunction>& functions,
                                     const WeightFunction& weights, unsigned n);

// The n-th tensor power of an axis function over S^n (ground set size s^n).
AxisFunction tensor_power(const AxisFunction& f, unsigned s, unsigned n);

}  // namespace hjoints
