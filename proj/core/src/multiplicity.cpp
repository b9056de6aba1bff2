#include "hjoints/multiplicity.hpp"

#include "hjoints/entropy.hpp"
#include "hjoints/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace hjoints {

EtaProblem make_eta_problem(const Hypergraph& h, const WeightFunction& w,
                            std::vector<std::vector<std::size_t>> tuples) {
  auto subtotals = subtotal_sequence(h, w);
  EtaProblem p;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    p.edge_color.push_back(h.color(e) - 1);
    p.edge_weight.push_back(to_double(w.weights[e]));
    const Rational& sub = subtotals[h.color(e) - 1];
    p.mixture.push_back(sub == 0 ? 0.0 : to_double(w.weights[e] / sub));
  }
  for (const auto& s : subtotals) p.subtotals.push_back(to_double(s));
  for (unsigned c = 0; c < h.num_colors(); ++c) {
    std::vector<double> law;
    for (std::size_t e = 0; e < h.num_edges(); ++e)
      if (p.edge_color[e] == c) law.push_back(p.mixture[e]);
    if (p.subtotals[c] > 0) p.baseline += p.subtotals[c] * entropy(law);
  }
  for (const auto& t : tuples)
    if (t.size() != h.num_edges()) throw Error(ErrorCode::SizeMismatch, "tuple length differs from edge count");
  p.tuples = std::move(tuples);
  return p;
}

namespace {

// Dense per-color marginal tables indexed by flat id.
struct Marginals {
  std::vector<std::vector<double>> q;
};

Marginals dense_marginals(const EtaProblem& p, const std::vector<double>& mu,
                          const std::vector<std::size_t>& width) {
  Marginals m;
  m.q.resize(p.subtotals.size());
  for (std::size_t c = 0; c < m.q.size(); ++c) m.q[c].assign(width[c], 0.0);
  for (std::size_t t = 0; t < p.tuples.size(); ++t) {
    if (mu[t] == 0.0) continue;
    for (std::size_t e = 0; e < p.tuples[t].size(); ++e)
      m.q[p.edge_color[e]][p.tuples[t][e]] += mu[t] * p.mixture[e];
  }
  return m;
}

double objective_of(const EtaProblem& p, const Marginals& m) {
  double phi = 0.0;
  for (std::size_t c = 0; c < m.q.size(); ++c)
    if (p.subtotals[c] > 0) phi += p.subtotals[c] * entropy(m.q[c]);
  return phi;
}

// Gradient up to an additive constant shared by all tuples.
double tuple_score(const EtaProblem& p, const Marginals& m, std::size_t t) {
  double g = 0.0;
  for (std::size_t e = 0; e < p.tuples[t].size(); ++e) {
    if (p.edge_weight[e] == 0.0) continue;
    double q = m.q[p.edge_color[e]][p.tuples[t][e]];
    if (q <= 0.0) return std::numeric_limits<double>::infinity();
    g -= p.edge_weight[e] * std::log2(q);
  }
  return g;
}

// Directional derivative of Phi along dir (sum of dir is zero).
double directional(const EtaProblem& p, const Marginals& m, const std::vector<double>& dir) {
  double s = 0.0;
  for (std::size_t t = 0; t < dir.size(); ++t) {
    if (dir[t] == 0.0) continue;
    s += dir[t] * tuple_score(p, m, t);
  }
  return s;
}

}  // namespace

std::vector<ColorMarginal> color_marginals(const EtaProblem& problem, const std::vector<double>& mu) {
  std::vector<std::map<std::size_t, double>> acc(problem.subtotals.size());
  for (std::size_t t = 0; t < problem.tuples.size(); ++t)
    for (std::size_t e = 0; e < problem.tuples[t].size(); ++e)
      acc[problem.edge_color[e]][problem.tuples[t][e]] += mu[t] * problem.mixture[e];
  std::vector<ColorMarginal> out(acc.size());
  for (std::size_t c = 0; c < acc.size(); ++c) out[c].assign(acc[c].begin(), acc[c].end());
  return out;
}

double eta_objective(const EtaProblem& problem, const std::vector<double>& mu) {
  double phi = 0.0;
  auto marg = color_marginals(problem, mu);
  for (std::size_t c = 0; c < marg.size(); ++c) {
    if (problem.subtotals[c] <= 0) continue;
    std::vector<double> probs;
    for (const auto& [id, q] : marg[c]) probs.push_back(q);
    phi += problem.subtotals[c] * entropy(probs);
  }
  return phi;
}

EtaResult eta_multiplicity(const EtaProblem& problem, double tol, std::size_t max_iters) {
  const std::size_t n = problem.tuples.size();
  if (n == 0) throw Error(ErrorCode::EmptyTupleSet, "no witness tuples at this point");
  std::vector<std::size_t> width(problem.subtotals.size(), 0);
  for (const auto& t : problem.tuples)
    for (std::size_t e = 0; e < t.size(); ++e)
      width[problem.edge_color[e]] = std::max(width[problem.edge_color[e]], t[e] + 1);

  EtaResult out;
  out.mu.assign(n, 1.0 / static_cast<double>(n));
  std::vector<double> dir(n, 0.0);
  std::vector<double> trial(n, 0.0);
  for (;;) {
    Marginals m = dense_marginals(problem, out.mu, width);
    std::vector<double> score(n);
    double mean = 0.0;
    std::size_t best = 0;
    std::size_t away = n;
    for (std::size_t t = 0; t < n; ++t) {
      score[t] = tuple_score(problem, m, t);
      if (score[t] > score[best]) best = t;
      if (out.mu[t] > 0.0) {
        mean += out.mu[t] * score[t];
        if (away == n || score[t] < score[away]) away = t;
      }
    }
    double fw_gap = score[best] - mean;
    double away_gap = mean - score[away];
    out.gap = fw_gap;
    out.phi = objective_of(problem, m);
    if (fw_gap <= tol) {
      out.converged = true;
      break;
    }
    if (out.iterations >= max_iters) break;
    ++out.iterations;

    double step_max;
    std::fill(dir.begin(), dir.end(), 0.0);
    if (fw_gap >= away_gap) {
      for (std::size_t t = 0; t < n; ++t) dir[t] = -out.mu[t];
      dir[best] += 1.0;
      step_max = 1.0;
    } else {
      for (std::size_t t = 0; t < n; ++t) dir[t] = out.mu[t];
      dir[away] -= 1.0;
      step_max = out.mu[away] / (1.0 - out.mu[away]);
    }
    auto slope_at = [&](double step) {
      for (std::size_t t = 0; t < n; ++t) trial[t] = std::max(0.0, out.mu[t] + step * dir[t]);
      return directional(problem, dense_marginals(problem, trial, width), dir);
    };
    double step;
    if (slope_at(step_max) >= 0.0) {
      step = step_max;
    } else {
      double lo = 0.0, hi = step_max;
      for (int k = 0; k < 100 && hi - lo > 1e-16; ++k) {
        double mid = 0.5 * (lo + hi);
        if (slope_at(mid) > 0.0) lo = mid;
        else hi = mid;
      }
      step = 0.5 * (lo + hi);
    }
    double total = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      out.mu[t] = std::max(0.0, out.mu[t] + step * dir[t]);
      if (out.mu[t] < 1e-300) out.mu[t] = 0.0;
      total += out.mu[t];
    }
    if (step == step_max && fw_gap < away_gap) out.mu[away] = 0.0;
    for (auto& x : out.mu) x /= total;
  }
  out.log2_eta = out.phi - problem.baseline;
  out.eta = std::exp2(out.log2_eta);
  return out;
}

double eta_closed_form_generic(const Hypergraph& h, const WeightFunction& w) {
  auto profile = validate_uniform_coloring(h);
  auto subtotals = subtotal_sequence(h, w);
  check_weight_shape(h, w);
  Log2Sum log2;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const Rational& we = w.weights[e];
    if (we == 0) continue;
    log2.add_log2_ratio(we / subtotals[h.color(e) - 1], we);
  }
  for (unsigned c = 0; c < h.num_colors(); ++c) {
    BigInt binom = 1;
    const unsigned d = h.d(), k = profile.k[c];
    for (unsigned i = 1; i <= k; ++i) binom = binom * (d - k + i) / i;
    log2.add_log2(binom, subtotals[c]);
  }
  return log2.value().convert_to<double>();
}

GeometricShearerResult geometric_shearer_audit(const Hypergraph& h, const WeightFunction& w,
                                               const std::vector<PointLaw>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyTupleSet, "no points in the audit");
  GeometricShearerResult out;
  std::vector<double> point_probs;
  for (const auto& p : points) point_probs.push_back(p.weight);
  validate_distribution(point_probs);
  out.h_point = entropy(point_probs);

  const auto& first = points.front().problem;
  const std::size_t colors = first.subtotals.size();
  out.h_flat.assign(colors, 0.0);
  out.h_flat_given_point.assign(colors, 0.0);
  std::vector<std::map<std::size_t, double>> overall(colors);
  for (const auto& p : points) {
    validate_distribution(p.mu);
    if (p.mu.size() != p.problem.tuples.size()) throw Error(ErrorCode::SizeMismatch, "mu length differs from tuple count");
    auto marg = color_marginals(p.problem, p.mu);
    for (std::size_t c = 0; c < colors; ++c) {
      std::vector<double> probs;
      for (const auto& [id, q] : marg[c]) {
        probs.push_back(q);
        overall[c][id] += p.weight * q;
      }
      out.h_flat_given_point[c] += p.weight * entropy(probs);
    }
  }
  for (std::size_t c = 0; c < colors; ++c) {
    std::vector<double> probs;
    for (const auto& [id, q] : overall[c]) probs.push_back(q);
    out.h_flat[c] = entropy(probs);
  }
  out.lhs = out.h_point - first.baseline;
  out.rhs = constant_C(h, w).log2.log2_approx();
  for (std::size_t c = 0; c < colors; ++c) {
    out.lhs += first.subtotals[c] * out.h_flat_given_point[c];
    out.rhs += first.subtotals[c] * out.h_flat[c];
  }
  out.slack = out.rhs - out.lhs;
  return out;
}

}  // namespace hjoints
