#include "hjoints/lp.hpp"

#include "hjoints/error.hpp"

#include <limits>
#include <optional>

namespace hjoints {
namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // last entry is the rhs
  std::vector<Rational> cost;               // reduced costs, last entry is -objective
  std::vector<std::size_t> basis;
  std::size_t cols = 0;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t col) {
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j <= cols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    if (cost[col] != 0) {
      Rational f = cost[col];
      for (std::size_t j = 0; j <= cols; ++j)
        if (rows[r][j] != 0) cost[j] -= f * rows[r][j];
    }
    basis[r] = col;
    ++pivots;
  }

  void price(const std::vector<Rational>& c) {
    cost = c;
    cost.resize(cols + 1, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational f = cost[basis[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * rows[r][j];
    }
  }

  // Minimizes the priced objective over columns < allowed. Returns false when unbounded.
  bool run(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][*enter] <= 0) continue;
        Rational ratio = rows[r][cols] / rows[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.c.size();
  const std::size_t m = lp.a.size();
  if (lp.sense.size() != m || lp.b.size() != m) throw Error(ErrorCode::SizeMismatch, "LP row data sizes differ");
  for (const auto& row : lp.a)
    if (row.size() != n) throw Error(ErrorCode::SizeMismatch, "LP row length differs from objective length");

  std::vector<std::vector<Rational>> a = lp.a;
  std::vector<Rational> b = lp.b;
  std::vector<Sense> sense = lp.sense;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
      if (sense[i] == Sense::LessEqual) sense[i] = Sense::GreaterEqual;
      else if (sense[i] == Sense::GreaterEqual) sense[i] = Sense::LessEqual;
    }
  }

  std::size_t slack_count = 0, artificial_count = 0;
  for (auto s : sense) {
    if (s != Sense::Equal) ++slack_count;
    if (s != Sense::LessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = n + slack_count;
  Tableau t;
  t.cols = first_artificial + artificial_count;
  t.rows.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.assign(m, 0);
  std::size_t next_slack = n, next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = a[i][j];
    t.rows[i][t.cols] = b[i];
    if (sense[i] == Sense::LessEqual) {
      t.rows[i][next_slack] = 1;
      t.basis[i] = next_slack++;
    } else {
      if (sense[i] == Sense::GreaterEqual) t.rows[i][next_slack++] = -1;
      t.rows[i][next_artificial] = 1;
      t.basis[i] = next_artificial++;
    }
  }

  LpResult result;
  std::vector<Rational> phase1(t.cols, Rational(0));
  for (std::size_t j = first_artificial; j < t.cols; ++j) phase1[j] = 1;
  t.price(phase1);
  t.run(t.cols);
  if (-t.cost[t.cols] != 0) {
    result.status = LpStatus::Infeasible;
    result.pivots = t.pivots;
    return result;
  }
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < first_artificial) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < first_artificial && !col; ++j)
      if (t.rows[r][j] != 0) col = j;
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  std::vector<Rational> phase2(t.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.goal == Goal::Minimize ? lp.c[j] : -lp.c[j];
  t.price(phase2);
  for (std::size_t j = first_artificial; j < t.cols; ++j) t.cost[j] = 0;
  bool bounded = t.run(first_artificial);
  result.pivots = t.pivots;
  if (!bounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.basis[r] < n) result.x[t.basis[r]] = t.rows[r][t.cols];
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += lp.c[j] * result.x[j];
  return result;
}

}  // namespace hjoints
