#include "hjoints/error.hpp"
#include "hjoints/extremal.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace hjoints;

TEST(Extremal, InducingSets) {
  auto k4 = make_simple(4, complete_hypergraph(4, 2).edges());
  auto k3 = complete_hypergraph(3, 2);
  EXPECT_EQ(count_inducing_sets(k4, k3), 4u);
  auto path = simple_from_lists(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(count_inducing_sets(path, k3), 0u);
  auto sets = inducing_sets(k4, k3);
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end()));
}

TEST(Extremal, ContainsCopy) {
  auto tri = simple_from_lists(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_TRUE(contains_copy(tri, complete_hypergraph(3, 2)));
  auto p3 = simple_from_lists(3, {{1, 2}, {2, 3}});
  EXPECT_FALSE(contains_copy(p3, complete_hypergraph(3, 2)));
  EXPECT_TRUE(contains_copy(tri, Hypergraph::from_lists(3, {{1, 3}, {3, 2}})));
}

TEST(Extremal, SimpleHypergraphValidation) {
  EXPECT_THROW(simple_from_lists(3, {{1, 2}, {2, 1}}), Error);
  EXPECT_THROW(simple_from_lists(3, {{1, 4}}), Error);
  EXPECT_THROW(simple_from_lists(3, {{}}), Error);
}

TEST(Extremal, ColexOrder) {
  auto seg = colex_initial_segment(4, 2);
  std::vector<VertexSet> expected{make_set({1, 2}), make_set({1, 3}), make_set({2, 3}), make_set({1, 4})};
  EXPECT_EQ(seg, expected);
  EXPECT_TRUE(colex_less(make_set({2, 3}), make_set({1, 4})));
  EXPECT_FALSE(colex_less(make_set({1, 4}), make_set({2, 3})));
}

TEST(Extremal, KruskalKatonaCounts) {
  // n = C(x, d-1) exactly: the count is C(x, d).
  EXPECT_EQ(kruskal_katona_count(10, 3), 10u);
  EXPECT_EQ(kruskal_katona_count(6, 3), 4u);
  EXPECT_EQ(kruskal_katona_count(3, 3), 1u);
  EXPECT_EQ(kruskal_katona_count(2, 3), 0u);
  EXPECT_EQ(kruskal_katona_count(15, 3), 20u);
  EXPECT_EQ(kruskal_katona_count(5, 3), 2u);
  // The first ten 3-sets fill [5]; the next two add no 4-clique.
  EXPECT_EQ(kruskal_katona_count(12, 4), 5u);
}

TEST(Extremal, LovaszBound) {
  auto exact = lovasz_bound(10, 3);
  EXPECT_NEAR(exact.x, 5.0, 1e-10);
  EXPECT_NEAR(exact.bound, 10.0, 1e-9);
  // C(x,2) = 5 at x = (1 + sqrt 41) / 2.
  auto five = lovasz_bound(5, 3);
  const double x = (1.0 + std::sqrt(41.0)) / 2.0;
  EXPECT_NEAR(five.x, x, 1e-10);
  EXPECT_NEAR(five.bound, 2.836, 1e-3);
  EXPECT_NEAR(real_binomial(x, 3), five.bound, 1e-9);
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (unsigned d = 2; d <= 5; ++d)
      EXPECT_LE(double(kruskal_katona_count(n, d)), lovasz_bound(n, d).bound + 1e-9) << n << " " << d;
}

TEST(Extremal, PartialShadow) {
  // Host: the 3-sets of [5]; every 4-set contains a copy of K_4^{(3)}.
  auto host = make_simple(5, complete_hypergraph(5, 3).edges());
  auto r = partial_shadow_check(host, 4, 0);
  EXPECT_EQ(r.count, 5u);
  EXPECT_TRUE(r.pass);
  // t = 1 with a 3-uniform host asks for cone(K_3, 1).
  auto r1 = partial_shadow_check(host, 3, 1);
  EXPECT_TRUE(r1.pass);
  EXPECT_THROW(partial_shadow_check(host, 3, 0), Error);
}

TEST(Extremal, CanonicalFormIsInvariant) {
  std::vector<VertexSet> a{make_set({1, 2}), make_set({2, 3})};
  std::vector<VertexSet> b{make_set({3, 4}), make_set({1, 4})};
  EXPECT_EQ(canonical_form(4, a), canonical_form(4, b));
  std::vector<VertexSet> c{make_set({1, 2}), make_set({3, 4})};
  EXPECT_NE(canonical_form(4, a), canonical_form(4, c));
}

TEST(Extremal, ExhaustiveSearchSmall) {
  SearchOptions o;
  o.mode = SearchMode::Exhaustive;
  o.vertex_budget = 4;
  auto r = search_M(complete_hypergraph(3, 2), 3, o);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.best_count, 1u);
  auto r6 = search_M(complete_hypergraph(3, 2), 6, o);
  EXPECT_EQ(r6.best_count, 4u);
}

TEST(Extremal, LocalSearchIsReproducible) {
  SearchOptions o;
  o.vertex_budget = 6;
  o.restarts = 20;
  o.seed = 3;
  auto a = search_M(complete_hypergraph(4, 3), 7, o);
  auto b = search_M(complete_hypergraph(4, 3), 7, o);
  EXPECT_EQ(a.best_count, b.best_count);
  EXPECT_EQ(a.best_host.edges, b.best_host.edges);
  EXPECT_EQ(count_inducing_sets(a.best_host, complete_hypergraph(4, 3)), a.best_count);
  EXPECT_LE(double(a.best_count), lovasz_bound(7, 4).bound + 1e-9);
}
