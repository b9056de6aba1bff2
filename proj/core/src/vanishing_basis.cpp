#include "hjoints/vanishing.hpp"

#include <limits>

namespace hjoints {

namespace {

void compose(unsigned k, unsigned r, Exponent& cur, std::size_t pos, std::vector<Exponent>& out) {
  if (pos + 1 == k) {
    cur[pos] = r;
    out.push_back(cur);
    return;
  }
  for (unsigned first = r + 1; first-- > 0;) {
    cur[pos] = first;
    compose(k, r - first, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<Exponent> compositions(unsigned k, unsigned r) {
  std::vector<Exponent> out;
  if (k == 0) {
    if (r == 0) out.emplace_back();
    return out;
  }
  Exponent cur(k, 0);
  compose(k, r, cur, 0, out);
  return out;
}

MonomialBasis monomial_basis(unsigned k, unsigned n) {
  MonomialBasis b;
  b.k = k;
  b.n = n;
  for (unsigned r = 0; r <= n; ++r)
    for (auto& e : compositions(k, r)) {
      b.index.emplace(e, b.exps.size());
      b.exps.push_back(std::move(e));
    }
  return b;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::uint64_t ledger_hash(const BasisLedger& ledger) {
  std::uint64_t hash = 14695981039346656037ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (x >> (8 * i)) & 0xff;
      hash *= 1099511628211ULL;
    }
  };
  mix(ledger.k);
  mix(ledger.n);
  mix(ledger.rank);
  for (std::size_t j = 0; j < ledger.joint_ids.size(); ++j) {
    mix(ledger.joint_ids[j]);
    mix(static_cast<std::uint64_t>(ledger.alphas[j]));
    mix(static_cast<std::uint64_t>(ledger.chart_edges[j]));
    for (auto c : ledger.b_r[j]) mix(c);
    for (const auto& g : ledger.g[j])
      for (auto x : g) mix(x);
  }
  return hash;
}

Exponent project_exponent(const Exponent& gamma, VertexSet edge) {
  Exponent out;
  for (std::size_t j = 0; j < gamma.size(); ++j)
    if (!contains_vertex(edge, static_cast<unsigned>(j + 1))) out.push_back(gamma[j]);
  return out;
}

std::vector<Exponent> assemble_G_p(const Hypergraph& h, const std::vector<std::vector<Exponent>>& g_by_edge, unsigned n) {
  if (g_by_edge.size() != h.num_edges()) throw Error(ErrorCode::SizeMismatch, "one G set per edge");
  std::vector<std::set<Exponent>> lookup;
  for (const auto& g : g_by_edge) {
    if (g.empty()) return {};
    lookup.emplace_back(g.begin(), g.end());
  }
  std::vector<Exponent> out;
  for (unsigned r = 0; r <= n; ++r)
    for (auto& gamma : compositions(h.d(), r)) {
      bool keep = true;
      for (std::size_t e = 0; e < h.num_edges() && keep; ++e)
        keep = lookup[e].count(project_exponent(gamma, h.edge(e))) > 0;
      if (keep) out.push_back(std::move(gamma));
    }
  return out;
}

LogCheck lw_step_check(const Hypergraph& h, const WeightFunction& w, std::uint64_t g_p,
                       const std::vector<std::uint64_t>& g_by_edge, unsigned n) {
  check_weight_shape(h, w);
  if (!covers(h, w)) throw Error(ErrorCode::NotCovering, "weight does not cover the pattern");
  if (g_by_edge.size() != h.num_edges()) throw Error(ErrorCode::SizeMismatch, "one G size per edge");
  const Rational excess = total_weight(w) - 1;
  if (excess <= 0) throw Error(ErrorCode::InvalidArgument, "|w| must exceed 1");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double box = std::log2(static_cast<double>(n) + 1.0);
  LogCheck out;
  out.lhs = g_p == 0 ? -inf : std::log2(static_cast<double>(g_p)) - h.d() * box;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const double sigma = to_double(w.weights[e] / excess);
    if (sigma == 0.0) continue;
    if (g_by_edge[e] == 0) {
      out.rhs = -inf;
      break;
    }
    out.rhs += sigma * (std::log2(static_cast<double>(g_by_edge[e])) - (h.d() - set_size(h.edge(e))) * box);
  }
  if (out.lhs == -inf)
    out.slack = inf;
  else
    out.slack = out.rhs - out.lhs;
  return out;
}

CountCheck param_counting_check(const std::vector<BasisLedger>& ledgers, const std::vector<std::uint64_t>& g_sizes,
                                unsigned d, unsigned n) {
  std::map<std::size_t, std::pair<std::size_t, std::int64_t>> seen;
  std::map<std::size_t, std::size_t> owner;
  for (const auto& ledger : ledgers) {
    for (std::size_t j = 0; j < ledger.joint_ids.size(); ++j) {
      const auto id = ledger.joint_ids[j];
      auto [it, fresh] = seen.emplace(id, std::make_pair(ledger.ranks[j], ledger.alphas[j]));
      if (!fresh && it->second != std::make_pair(ledger.ranks[j], ledger.alphas[j]))
        throw Error(ErrorCode::InconsistentLedgers, "joint " + std::to_string(id) + " has differing order or handicap");
      auto [ot, ofresh] = owner.emplace(ledger.ranks[j], id);
      if (!ofresh && ot->second != id)
        throw Error(ErrorCode::InconsistentLedgers, "two joints share a preassigned rank");
    }
  }
  CountCheck out;
  out.lhs = 0;
  for (auto g : g_sizes) out.lhs += g;
  out.rhs = binomial(n + d, d);
  out.slack = out.lhs - out.rhs;
  return out;
}

}  // namespace hjoints

namespace hjoints {

bool mono_hypothesis(const std::vector<std::int64_t>& alpha1, const std::vector<std::int64_t>& alpha2, std::size_t p,
                     const std::vector<std::size_t>& on_flat) {
  for (std::size_t q : on_flat)
    if (alpha1[p] - alpha1[q] > alpha2[p] - alpha2[q]) return false;
  return true;
}

std::int64_t lip_distance(const std::vector<std::int64_t>& alpha1, const std::vector<std::int64_t>& alpha2,
                          std::size_t p, const std::vector<std::size_t>& on_flat) {
  std::int64_t total = 0;
  for (std::size_t q : on_flat) {
    std::int64_t diff = (alpha1[q] - alpha1[p]) - (alpha2[q] - alpha2[p]);
    total += diff < 0 ? -diff : diff;
  }
  return total;
}

}  // namespace hjoints
