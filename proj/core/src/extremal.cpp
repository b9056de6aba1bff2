#include "hjoints/extremal.hpp"

#include "hjoints/error.hpp"
#include "hjoints/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace hjoints {
namespace {

VertexSet next_same_size(VertexSet x) {
  VertexSet c = x & (~x + 1);
  VertexSet r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

template <class Visit>
void for_each_subset(unsigned n, unsigned k, Visit&& visit) {
  if (k > n) return;
  if (k == 0) {
    visit(VertexSet{0});
    return;
  }
  const VertexSet limit_bit = n >= 64 ? 0 : VertexSet{1} << n;
  for (VertexSet s = full_set(k);;) {
    visit(s);
    if (s == (full_set(n) & ~full_set(n - k))) break;
    s = next_same_size(s);
    if (limit_bit && s >= limit_bit) break;
  }
}

VertexSet remap(VertexSet e, const std::vector<unsigned>& image) {
  VertexSet out = 0;
  for (unsigned v : set_members(e)) out |= vertex_bit(image[v - 1]);
  return out;
}

// Backtracking embedding of a pattern (vertices 1..r) into target vertices.
class Embedder {
 public:
  explicit Embedder(const Hypergraph& h) : r_(h.d()) {
    std::set<VertexSet> distinct(h.edges().begin(), h.edges().end());
    edges_.assign(distinct.begin(), distinct.end());
    std::vector<unsigned> degree(r_ + 1, 0);
    for (VertexSet e : edges_)
      for (unsigned v : set_members(e)) ++degree[v];
    order_.resize(r_);
    std::iota(order_.begin(), order_.end(), 1U);
    std::stable_sort(order_.begin(), order_.end(), [&](unsigned a, unsigned b) { return degree[a] > degree[b]; });
    std::vector<unsigned> position(r_ + 1, 0);
    for (unsigned i = 0; i < r_; ++i) position[order_[i]] = i;
    completed_.assign(r_, {});
    for (VertexSet e : edges_) {
      unsigned last = 0;
      for (unsigned v : set_members(e)) last = std::max(last, position[v]);
      completed_[last].push_back(e);
    }
    pattern_degree_.resize(r_);
    for (unsigned i = 0; i < r_; ++i) pattern_degree_[i] = degree[order_[i]];
    for (VertexSet e : edges_) sizes_.insert(set_size(e));
  }

  std::size_t distinct_edges() const { return edges_.size(); }
  bool uses_size(unsigned s) const { return sizes_.count(s) > 0; }

  bool embeds(const std::vector<unsigned>& targets, const std::vector<VertexSet>& target_edges) const {
    if (targets.size() != r_) return false;
    if (target_edges.size() < edges_.size()) return false;
    std::unordered_set<VertexSet> lookup(target_edges.begin(), target_edges.end());
    std::vector<unsigned> target_degree(r_, 0);
    for (unsigned i = 0; i < r_; ++i)
      for (VertexSet e : target_edges) target_degree[i] += contains_vertex(e, targets[i]) ? 1 : 0;
    std::vector<unsigned> image(kMaxVertices, 0);
    std::vector<bool> used(r_, false);
    return extend(0, targets, target_degree, lookup, image, used);
  }

 private:
  bool extend(unsigned step, const std::vector<unsigned>& targets, const std::vector<unsigned>& target_degree,
              const std::unordered_set<VertexSet>& lookup, std::vector<unsigned>& image, std::vector<bool>& used) const {
    if (step == r_) return true;
    const unsigned u = order_[step];
    for (unsigned i = 0; i < r_; ++i) {
      if (used[i] || target_degree[i] < pattern_degree_[step]) continue;
      image[u - 1] = targets[i];
      bool ok = true;
      for (VertexSet e : completed_[step]) {
        if (!lookup.count(remap(e, image))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[i] = true;
      if (extend(step + 1, targets, target_degree, lookup, image, used)) return true;
      used[i] = false;
    }
    return false;
  }

  unsigned r_;
  std::vector<VertexSet> edges_;
  std::vector<unsigned> order_;
  std::vector<std::vector<VertexSet>> completed_;
  std::vector<unsigned> pattern_degree_;
  std::set<unsigned> sizes_;
};

std::uint64_t count_with(const Embedder& embedder, unsigned r, const SimpleHypergraph& host,
                         std::vector<VertexSet>* hits) {
  std::uint64_t count = 0;
  std::vector<VertexSet> relevant;
  for (VertexSet e : host.edges)
    if (embedder.uses_size(set_size(e))) relevant.push_back(e);
  std::vector<VertexSet> inside;
  for_each_subset(host.n, r, [&](VertexSet a) {
    inside.clear();
    for (VertexSet e : relevant)
      if ((e & ~a) == 0) inside.push_back(e);
    if (inside.size() < embedder.distinct_edges()) return;
    if (embedder.embeds(set_members(a), inside)) {
      ++count;
      if (hits) hits->push_back(a);
    }
  });
  return count;
}

}  // namespace

SimpleHypergraph make_simple(unsigned n, std::vector<VertexSet> edges) {
  if (n > kMaxVertices) throw Error(ErrorCode::InvalidHypergraph, "at most 64 vertices");
  std::set<VertexSet> seen;
  for (VertexSet e : edges) {
    if (e == 0 || (e & ~full_set(n)) != 0) throw Error(ErrorCode::InvalidHypergraph, "edge outside the vertex set");
    if (!seen.insert(e).second) throw Error(ErrorCode::InvalidHypergraph, "repeated edge " + set_to_string(e));
  }
  return SimpleHypergraph{n, std::move(edges)};
}

SimpleHypergraph simple_from_lists(unsigned n, const std::vector<std::vector<unsigned>>& edges) {
  std::vector<VertexSet> sets;
  for (const auto& e : edges) sets.push_back(make_set(e));
  return make_simple(n, std::move(sets));
}

SimpleHypergraph underlying_simple(const Hypergraph& h) {
  std::set<VertexSet> distinct(h.edges().begin(), h.edges().end());
  return SimpleHypergraph{h.d(), std::vector<VertexSet>(distinct.begin(), distinct.end())};
}

bool contains_copy(const SimpleHypergraph& g, const Hypergraph& h) {
  if (g.n != h.d())
    throw Error(ErrorCode::SizeMismatch, "host has " + std::to_string(g.n) + " vertices, pattern " + std::to_string(h.d()));
  Embedder embedder(h);
  std::vector<unsigned> targets(g.n);
  std::iota(targets.begin(), targets.end(), 1U);
  return embedder.embeds(targets, g.edges);
}

std::vector<VertexSet> inducing_sets(const SimpleHypergraph& host, const Hypergraph& h) {
  Embedder embedder(h);
  std::vector<VertexSet> hits;
  count_with(embedder, h.d(), host, &hits);
  return hits;
}

std::uint64_t count_inducing_sets(const SimpleHypergraph& host, const Hypergraph& h) {
  Embedder embedder(h);
  return count_with(embedder, h.d(), host, nullptr);
}

bool colex_less(VertexSet a, VertexSet b) { return a < b; }

std::vector<VertexSet> colex_initial_segment(std::uint64_t n, unsigned k) {
  std::vector<VertexSet> out;
  if (n == 0) return out;
  if (k == 0 || k > kMaxVertices) throw Error(ErrorCode::InvalidArgument, "k must be in 1..64");
  for (VertexSet s = full_set(k); out.size() < n;) {
    out.push_back(s);
    if (s >> 63) {
      if (out.size() < n) throw Error(ErrorCode::InvalidArgument, "colex segment exceeds 64 vertices");
      break;
    }
    VertexSet next = next_same_size(s);
    if (next <= s) throw Error(ErrorCode::InvalidArgument, "colex segment exceeds 64 vertices");
    s = next;
  }
  return out;
}

std::uint64_t kruskal_katona_count(std::uint64_t n, unsigned d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be at least 2");
  auto family = colex_initial_segment(n, d - 1);
  if (family.empty()) return 0;
  std::unordered_set<VertexSet> lookup(family.begin(), family.end());
  unsigned universe = 0;
  for (VertexSet e : family) universe = std::max(universe, 64U - static_cast<unsigned>(__builtin_clzll(e)));
  std::uint64_t count = 0;
  for_each_subset(universe, d, [&](VertexSet a) {
    for (VertexSet rest = a; rest; rest &= rest - 1) {
      VertexSet face = a & ~(rest & (~rest + 1));
      if (!lookup.count(face)) return;
    }
    ++count;
  });
  return count;
}

double real_binomial(double x, unsigned k) {
  double out = 1.0;
  for (unsigned i = 0; i < k; ++i) out *= (x - i) / static_cast<double>(i + 1);
  return out;
}

LovaszBound lovasz_bound(std::uint64_t n, unsigned d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be at least 2");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const double target = static_cast<double>(n);
  double lo = d - 1.0;
  double hi = d;
  while (real_binomial(hi, d - 1) < target) hi *= 2;
  while (hi - lo > kBisectionTolerance * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    if (real_binomial(mid, d - 1) < target) lo = mid;
    else hi = mid;
  }
  LovaszBound out;
  out.x = 0.5 * (lo + hi);
  out.bound = real_binomial(out.x, d);
  if (out.x < d) {
    out.clamped = true;
    out.bound = std::max(0.0, out.bound);
  }
  return out;
}

ShadowReport partial_shadow_check(const SimpleHypergraph& host, unsigned d, unsigned t) {
  for (VertexSet e : host.edges)
    if (set_size(e) != d + t - 1)
      throw Error(ErrorCode::UniformityMismatch, "host edge " + set_to_string(e) + " is not (d+t-1)-uniform");
  ShadowReport out;
  out.count = count_inducing_sets(host, cone(complete_hypergraph(d, d - 1), t));
  if (host.edges.empty()) {
    out.pass = out.count == 0;
    return out;
  }
  out.bound = lovasz_bound(host.edges.size(), d);
  out.pass = static_cast<double>(out.count) <= out.bound.bound * (1 + kBoundGuard) + kBoundGuard;
  return out;
}

std::vector<VertexSet> canonical_form(unsigned n, const std::vector<VertexSet>& edges) {
  std::vector<std::uint64_t> color(n, 0);
  std::size_t classes = 1;
  for (;;) {
    std::vector<std::vector<std::uint64_t>> signature(n);
    for (unsigned v = 0; v < n; ++v) {
      std::vector<std::vector<std::uint64_t>> incident;
      for (VertexSet e : edges) {
        if (!contains_vertex(e, v + 1)) continue;
        std::vector<std::uint64_t> others;
        for (unsigned u : set_members(e))
          if (u != v + 1) others.push_back(color[u - 1]);
        std::sort(others.begin(), others.end());
        incident.push_back(std::move(others));
      }
      std::sort(incident.begin(), incident.end());
      signature[v].push_back(color[v]);
      signature[v].push_back(incident.size());
      for (const auto& inc : incident) {
        signature[v].push_back(inc.size());
        signature[v].insert(signature[v].end(), inc.begin(), inc.end());
      }
    }
    std::vector<std::vector<std::uint64_t>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (unsigned v = 0; v < n; ++v)
      color[v] = static_cast<std::uint64_t>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                            distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }

  std::vector<std::vector<unsigned>> cells(classes);
  for (unsigned v = 0; v < n; ++v) cells[color[v]].push_back(v + 1);
  std::vector<unsigned> slot_base(classes, 0);
  for (std::size_t c = 1; c < classes; ++c) slot_base[c] = slot_base[c - 1] + static_cast<unsigned>(cells[c - 1].size());

  std::vector<VertexSet> best;
  bool have = false;
  std::vector<unsigned> image(n, 0);
  std::vector<VertexSet> mapped(edges.size());
  // Enumerate one permutation per cell, odometer style.
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  for (;;) {
    for (std::size_t c = 0; c < classes; ++c)
      for (std::size_t i = 0; i < cells[c].size(); ++i) image[cells[c][i] - 1] = slot_base[c] + static_cast<unsigned>(i) + 1;
    for (std::size_t i = 0; i < edges.size(); ++i) mapped[i] = remap(edges[i], image);
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = mapped;
      have = true;
    }
    std::size_t c = 0;
    while (c < classes && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
    if (c == classes) break;
  }
  return best;
}

namespace {

std::uint64_t pattern_edge_size(const Hypergraph& h) {
  if (h.num_edges() == 0) throw Error(ErrorCode::InvalidArgument, "pattern has no edges");
  unsigned s = set_size(h.edge(0));
  for (VertexSet e : h.edges())
    if (set_size(e) != s) throw Error(ErrorCode::UniformityMismatch, "search needs a uniform pattern");
  return s;
}

struct Score {
  std::uint64_t count = 0;
  std::uint64_t potential = 0;
  friend bool operator<(const Score& a, const Score& b) {
    return a.count != b.count ? a.count < b.count : a.potential < b.potential;
  }
};

Score score_host(const Embedder& embedder, unsigned r, unsigned n, const std::vector<VertexSet>& edges) {
  Score s;
  std::vector<VertexSet> inside;
  for_each_subset(n, r, [&](VertexSet a) {
    inside.clear();
    for (VertexSet e : edges)
      if ((e & ~a) == 0) inside.push_back(e);
    s.potential += inside.size() * inside.size();
    if (inside.size() >= embedder.distinct_edges() && embedder.embeds(set_members(a), inside)) ++s.count;
  });
  return s;
}

}  // namespace

SearchResult search_M(const Hypergraph& h, std::uint64_t n, const SearchOptions& options) {
  const unsigned s = static_cast<unsigned>(pattern_edge_size(h));
  const unsigned budget = options.vertex_budget;
  if (budget > 16) throw Error(ErrorCode::InvalidArgument, "vertex budget above 16 is not supported");
  std::vector<VertexSet> universe;
  for_each_subset(budget, s, [&](VertexSet e) { universe.push_back(e); });
  if (n > universe.size()) throw Error(ErrorCode::InvalidArgument, "more edges requested than s-sets available");
  Embedder embedder(h);
  const unsigned r = h.d();
  SearchResult out;

  if (options.mode == SearchMode::Exhaustive) {
    std::set<std::vector<VertexSet>> level{std::vector<VertexSet>{}};
    for (std::uint64_t step = 0; step < n; ++step) {
      std::set<std::vector<VertexSet>> next;
      for (const auto& host : level) {
        for (VertexSet e : universe) {
          if (std::binary_search(host.begin(), host.end(), e)) continue;
          if (++out.work > options.work_limit)
            throw Error(ErrorCode::WorkLimitExceeded, "exhaustive search exceeded its work limit");
          auto grown = host;
          grown.push_back(e);
          next.insert(canonical_form(budget, grown));
        }
      }
      level = std::move(next);
    }
    bool have = false;
    for (const auto& host : level) {
      ++out.work;
      auto count = count_inducing_sets(SimpleHypergraph{budget, host}, h);
      if (!have || count > out.best_count) {
        out.best_count = count;
        out.best_host = SimpleHypergraph{budget, host};
        have = true;
      }
    }
    out.certified = true;
    return out;
  }

  std::vector<VertexSet> start;
  auto colex = colex_initial_segment(n, s);
  bool colex_fits = std::all_of(colex.begin(), colex.end(), [&](VertexSet e) { return (e & ~full_set(budget)) == 0; });
  Score best_score;
  bool have = false;
  for (unsigned restart = 0; restart <= options.restarts; ++restart) {
    std::uint64_t seed = derive_seed(options.seed, restart);
    out.restart_seeds.push_back(seed);
    std::mt19937_64 rng(seed);
    std::vector<VertexSet> host;
    if (restart == 0 && colex_fits) {
      host = colex;
    } else {
      host = universe;
      std::shuffle(host.begin(), host.end(), rng);
      host.resize(n);
    }
    Score current = score_host(embedder, r, budget, host);
    ++out.work;
    for (bool improved = true; improved;) {
      improved = false;
      std::vector<std::pair<std::size_t, VertexSet>> moves;
      for (std::size_t i = 0; i < host.size(); ++i)
        for (VertexSet e : universe)
          if (std::find(host.begin(), host.end(), e) == host.end()) moves.emplace_back(i, e);
      std::shuffle(moves.begin(), moves.end(), rng);
      for (const auto& [i, e] : moves) {
        VertexSet old = host[i];
        host[i] = e;
        Score candidate = score_host(embedder, r, budget, host);
        if (++out.work > options.work_limit)
          throw Error(ErrorCode::WorkLimitExceeded, "local search exceeded its work limit");
        if (current < candidate) {
          current = candidate;
          improved = true;
          break;
        }
        host[i] = old;
      }
    }
    if (!have || best_score.count < current.count) {
      best_score = current;
      std::sort(host.begin(), host.end());
      out.best_host = SimpleHypergraph{budget, host};
      out.best_count = current.count;
      have = true;
    }
  }
  return out;
}

}  // namespace hjoints
