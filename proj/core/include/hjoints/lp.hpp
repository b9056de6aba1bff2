#pragma once

#include "hjoints/rational.hpp"

#include <cstddef>
#include <vector>

namespace hjoints {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class Goal { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

// goal c.x subject to a_i.x (sense_i) b_i, x >= 0.
struct LinearProgram {
  Goal goal = Goal::Minimize;
  std::vector<Rational> c;
  std::vector<std::vector<Rational>> a;
  std::vector<Sense> sense;
  std::vector<Rational> b;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

// Dense two-phase simplex in exact rationals, Bland's rule throughout.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace hjoints
