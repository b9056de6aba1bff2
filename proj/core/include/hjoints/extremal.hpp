#pragma once

#include "hjoints/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hjoints {

// Uncolored simple hypergraph on vertices 1..n with edges of any size >= 1.
struct SimpleHypergraph {
  unsigned n = 0;
  std::vector<VertexSet> edges;
};

// Throws InvalidHypergraph on repeated, empty or out-of-range edges.
SimpleHypergraph make_simple(unsigned n, std::vector<VertexSet> edges);
SimpleHypergraph simple_from_lists(unsigned n, const std::vector<std::vector<unsigned>>& edges);
SimpleHypergraph underlying_simple(const Hypergraph& h);

// True iff some bijection V(h) -> V(g) maps every edge of h onto an edge of g.
// Requires g.n == h.d().
bool contains_copy(const SimpleHypergraph& g, const Hypergraph& h);

// r-subsets A of V(host), r = h.d(), whose induced subhypergraph contains h;
// returned in increasing bitset (colex) order.
std::vector<VertexSet> inducing_sets(const SimpleHypergraph& host, const Hypergraph& h);
std::uint64_t count_inducing_sets(const SimpleHypergraph& host, const Hypergraph& h);

// Colex order: compare the largest element of the symmetric difference. For
// bitsets this is plain integer order.
bool colex_less(VertexSet a, VertexSet b);
// The first n k-subsets of {1,2,...} in colex order.
std::vector<VertexSet> colex_initial_segment(std::uint64_t n, unsigned k);

// Number of d-sets all of whose (d-1)-subsets lie in the first n colex (d-1)-sets.
std::uint64_t kruskal_katona_count(std::uint64_t n, unsigned d);

struct LovaszBound {
  double x = 0.0;      // C(x, d-1) = n with x >= d-1
  double bound = 0.0;  // C(x, d), clamped at 0
  bool clamped = false;
};

inline constexpr double kBisectionTolerance = 1e-12;
inline constexpr double kBoundGuard = 1e-9;

double real_binomial(double x, unsigned k);
LovaszBound lovasz_bound(std::uint64_t n, unsigned d);

struct ShadowReport {
  std::uint64_t count = 0;
  LovaszBound bound;
  bool pass = false;
};

// Host must be (d+t-1)-uniform. Counts (d+t)-sets containing a copy of
// cone(K_d^{(d-1)}, t) and compares with the Lovász bound for n = |E(host)|.
ShadowReport partial_shadow_check(const SimpleHypergraph& host, unsigned d, unsigned t);

enum class SearchMode { Exhaustive, Local };

struct SearchOptions {
  SearchMode mode = SearchMode::Local;
  unsigned vertex_budget = 6;
  std::uint64_t work_limit = 2'000'000;
  unsigned restarts = 200;
  std::uint64_t seed = 0;
};

struct SearchResult {
  std::uint64_t best_count = 0;
  SimpleHypergraph best_host;
  // Exhaustive mode only: every host within the budget was examined.
  bool certified = false;
  std::uint64_t work = 0;
  std::vector<std::uint64_t> restart_seeds;
};

// Hosts are s-uniform with exactly n edges, s the (common) edge size of h.
SearchResult search_M(const Hypergraph& h, std::uint64_t n, const SearchOptions& options);

// Canonical labeling used by the exhaustive search: sorted edge bitsets after
// relabeling by refined degree classes and the lexicographically smallest
// permutation inside each class.
std::vector<VertexSet> canonical_form(unsigned n, const std::vector<VertexSet>& edges);

}  // namespace hjoints
