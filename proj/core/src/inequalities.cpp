#include "hjoints/inequalities.hpp"

#include "hjoints/entropy.hpp"
#include "hjoints/error.hpp"

#include <cmath>
#include <map>
#include <set>

namespace hjoints {

double marginal_entropy(const JointLaw& law, VertexSet subset) {
  std::map<std::vector<int>, double> acc;
  auto coords = set_members(subset);
  for (std::size_t k = 0; k < law.outcomes.size(); ++k) {
    std::vector<int> key;
    for (unsigned j : coords) key.push_back(law.outcomes[k][j - 1]);
    acc[key] += law.probs[k];
  }
  std::vector<double> probs;
  for (const auto& [key, p] : acc) probs.push_back(p);
  return entropy(probs);
}

void check_covering(unsigned d, const std::vector<VertexSet>& subsets, const std::vector<double>& weights) {
  if (subsets.size() != weights.size()) throw Error(ErrorCode::SizeMismatch, "one weight per subset required");
  for (unsigned j = 1; j <= d; ++j) {
    double cover = 0.0;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (weights[i] < 0) throw Error(ErrorCode::NegativeValue, "weights must be nonnegative");
      if (contains_vertex(subsets[i], j)) cover += weights[i];
    }
    if (cover < 1.0 - 1e-12) throw Error(ErrorCode::NotCovering, "coordinate " + std::to_string(j) + " is not covered");
  }
}

InequalityResult shearer_check(unsigned d, const std::vector<VertexSet>& subsets, const std::vector<double>& weights,
                               const JointLaw& law) {
  check_covering(d, subsets, weights);
  validate_distribution(law.probs);
  InequalityResult out;
  out.lhs = marginal_entropy(law, full_set(d));
  for (std::size_t i = 0; i < subsets.size(); ++i) out.rhs += weights[i] * marginal_entropy(law, subsets[i]);
  out.slack = out.rhs - out.lhs;
  return out;
}

namespace {

std::size_t grid_size(unsigned s, std::size_t count) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < count; ++k) total *= s;
  return total;
}

std::size_t project_index(const std::vector<unsigned>& digits, const std::vector<unsigned>& coords, unsigned s) {
  std::vector<unsigned> sub;
  for (unsigned j : coords) sub.push_back(digits[j - 1]);
  return axis_index(sub, s);
}

}  // namespace

InequalityResult holder_check(unsigned d, unsigned s, const std::vector<AxisFunction>& functions,
                              const std::vector<double>& weights) {
  std::vector<VertexSet> subsets;
  for (const auto& f : functions) subsets.push_back(f.subset);
  check_covering(d, subsets, weights);
  InequalityResult out;
  out.rhs = 1.0;
  std::vector<std::vector<unsigned>> coords;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    coords.push_back(set_members(functions[i].subset));
    if (functions[i].values.size() != grid_size(s, coords.back().size()))
      throw Error(ErrorCode::SizeMismatch, "function table must have s^|I| entries");
    double sum = 0.0;
    for (auto v : functions[i].values) {
      if (v < 0) throw Error(ErrorCode::NegativeValue, "function values must be nonnegative");
      sum += static_cast<double>(v);
    }
    out.rhs *= std::pow(sum, weights[i]);
  }
  const std::size_t total = grid_size(s, d);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto digits = axis_digits(idx, s, d);
    double term = 1.0;
    for (std::size_t i = 0; i < functions.size() && term != 0.0; ++i) {
      double v = static_cast<double>(functions[i].values[project_index(digits, coords[i], s)]);
      term *= weights[i] == 0.0 ? 1.0 : std::pow(v, weights[i]);
    }
    out.lhs += term;
  }
  out.slack = out.rhs - out.lhs;
  return out;
}

InequalityResult loomis_whitney_check(unsigned d, unsigned s, const std::vector<std::size_t>& points,
                                      const std::vector<VertexSet>& subsets, const std::vector<double>& weights) {
  check_covering(d, subsets, weights);
  std::set<std::size_t> distinct(points.begin(), points.end());
  InequalityResult out;
  out.lhs = static_cast<double>(distinct.size());
  out.rhs = 1.0;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    auto coords = set_members(subsets[i]);
    std::set<std::size_t> image;
    for (auto idx : distinct) image.insert(project_index(axis_digits(idx, s, d), coords, s));
    out.rhs *= std::pow(static_cast<double>(image.size()), weights[i]);
  }
  out.slack = out.rhs - out.lhs;
  return out;
}

AxisFunction tensor_power(const AxisFunction& f, unsigned s, unsigned n) {
  const std::size_t width = set_size(f.subset);
  const std::size_t base_cells = grid_size(s, width);
  const unsigned big = static_cast<unsigned>(grid_size(s, n));
  AxisFunction out{f.subset, std::vector<std::int64_t>(grid_size(big, width), 0)};
  // A point of (S^n)^I is n points of S^I; digit k of coordinate j in base s
  // is coordinate j of copy k.
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    auto big_digits = axis_digits(idx, big, width);
    std::int64_t value = 1;
    for (unsigned copy = 0; copy < n && value != 0; ++copy) {
      std::vector<unsigned> small(width);
      for (std::size_t j = 0; j < width; ++j) small[j] = axis_digits(big_digits[j], s, n)[copy];
      std::size_t cell = axis_index(small, s);
      if (cell >= base_cells) throw Error(ErrorCode::InvalidArgument, "tensor index out of range");
      value *= f.values[cell];
    }
    out.values[idx] = value;
  }
  return out;
}

TensorPowerResult tensor_power_check(unsigned d, unsigned s, const std::vector<AxisFunction>& functions,
                                     const WeightFunction& weights, unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "tensor power must be positive");
  Hypergraph h = axis_pattern(d, functions);
  std::vector<double> w;
  for (const auto& x : weights.weights) w.push_back(to_double(x));
  std::vector<AxisFunction> powered;
  for (const auto& f : functions) powered.push_back(tensor_power(f, s, n));
  const unsigned big = static_cast<unsigned>(grid_size(s, n));
  auto raw = holder_check(d, big, powered, w);
  TensorPowerResult out;
  out.n = n;
  out.lhs_root = std::pow(raw.lhs, 1.0 / n);
  double log2_c = constant_C(h, weights).log2.log2_approx();
  out.rhs_root = std::exp2(log2_c / n) * std::pow(raw.rhs, 1.0 / n);
  return out;
}

}  // namespace hjoints
