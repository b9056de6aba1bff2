#pragma once

#include <cstddef>
#include <vector>

namespace hjoints {

inline constexpr double kProbabilityTolerance = 1e-12;

// Throws InvalidArgument unless probs are >= 0 and sum to 1 within 1e-12.
void validate_distribution(const std::vector<double>& probs);

// Shannon entropy in bits; zero-probability atoms are skipped.
double entropy(const std::vector<double>& probs);

// joint[x][y] = P(X = x, Y = y). Returns H(X | Y) = H(X, Y) - H(Y).
double conditional_entropy(const std::vector<std::vector<double>>& joint);

struct UniformBoundResult {
  double slack = 0.0;       // log2 |supp| - H(X), on the pruned support
  std::size_t support = 0;
  bool equality = false;
};
UniformBoundResult uniform_bound_check(const std::vector<double>& probs);

struct JensenResult {
  double lhs = 0.0;  // E[-log2 x_{s,t}]
  double rhs = 0.0;  // H(t | s) - log2 A
  double gap = 0.0;
  bool infinite = false;
};

// x[s][t] >= 0 with row sums <= a; joint[s][t] is the law of (s, t).
// Throws RowSumExceedsA.
JensenResult jensen_bound_check(const std::vector<std::vector<double>>& x, double a,
                                const std::vector<std::vector<double>>& joint);

}  // namespace hjoints
