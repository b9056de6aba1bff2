#include "hjoints/entropy.hpp"

#include "hjoints/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hjoints {

void validate_distribution(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative or NaN probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance * std::max<std::size_t>(1, probs.size()))
    throw Error(ErrorCode::InvalidArgument, "probabilities sum to " + std::to_string(sum));
}

double entropy(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double conditional_entropy(const std::vector<std::vector<double>>& joint) {
  std::vector<double> flat;
  std::vector<double> y_marginal;
  for (const auto& row : joint) {
    if (y_marginal.size() < row.size()) y_marginal.resize(row.size(), 0.0);
    for (std::size_t y = 0; y < row.size(); ++y) {
      flat.push_back(row[y]);
      y_marginal[y] += row[y];
    }
  }
  validate_distribution(flat);
  return entropy(flat) - entropy(y_marginal);
}

UniformBoundResult uniform_bound_check(const std::vector<double>& probs) {
  validate_distribution(probs);
  UniformBoundResult out;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double p : probs) {
    if (p <= 0.0) continue;
    ++out.support;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  out.slack = std::log2(static_cast<double>(out.support)) - entropy(probs);
  out.equality = hi - lo < 1e-12;
  return out;
}

JensenResult jensen_bound_check(const std::vector<std::vector<double>>& x, double a,
                                const std::vector<std::vector<double>>& joint) {
  if (x.size() != joint.size()) throw Error(ErrorCode::SizeMismatch, "x and joint differ in rows");
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (x[s].size() != joint[s].size()) throw Error(ErrorCode::SizeMismatch, "x and joint differ in columns");
    double row = 0.0;
    for (double v : x[s]) {
      if (v < 0.0) throw Error(ErrorCode::NegativeValue, "x must be nonnegative");
      row += v;
    }
    if (row > a * (1 + 1e-12)) throw Error(ErrorCode::RowSumExceedsA, "row " + std::to_string(s) + " sums past A");
  }
  JensenResult out;
  for (std::size_t s = 0; s < x.size(); ++s) {
    for (std::size_t t = 0; t < x[s].size(); ++t) {
      if (joint[s][t] <= 0.0) continue;
      if (x[s][t] <= 0.0) {
        out.infinite = true;
        continue;
      }
      out.lhs -= joint[s][t] * std::log2(x[s][t]);
    }
  }
  std::size_t cols = 0;
  for (const auto& row : joint) cols = std::max(cols, row.size());
  std::vector<std::vector<double>> by_t(cols, std::vector<double>(joint.size(), 0.0));
  for (std::size_t s = 0; s < joint.size(); ++s)
    for (std::size_t t = 0; t < joint[s].size(); ++t) by_t[t][s] = joint[s][t];
  out.rhs = conditional_entropy(by_t) - std::log2(a);
  if (out.infinite) {
    out.lhs = std::numeric_limits<double>::infinity();
    out.gap = std::numeric_limits<double>::infinity();
  } else {
    out.gap = out.lhs - out.rhs;
  }
  return out;
}

}  // namespace hjoints
