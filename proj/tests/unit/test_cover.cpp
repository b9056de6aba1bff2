#include "hjoints/error.hpp"
#include "hjoints/fractional_cover.hpp"
#include "hjoints/hypergraph.hpp"
#include "hjoints/lp.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hjoints;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Hypergraph, Construction) {
  auto h = Hypergraph::from_lists(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 2, 3});
  EXPECT_EQ(h.d(), 3u);
  EXPECT_EQ(h.num_colors(), 3u);
  EXPECT_EQ(h.edge(0), make_set({1, 2}));
  EXPECT_EQ(h.degree(1), 2u);
  EXPECT_EQ(set_to_string(make_set({3, 1})), "{1,3}");
  EXPECT_EQ(set_members(make_set({2, 5})), (std::vector<unsigned>{2, 5}));
}

TEST(Hypergraph, RejectsBadEdges) {
  EXPECT_THROW(Hypergraph::from_lists(3, {{1, 4}}), Error);
  EXPECT_THROW(Hypergraph::from_lists(3, {{}}), Error);
}

TEST(Hypergraph, UniformColoring) {
  auto h = Hypergraph::from_lists(4, {{1, 2, 3}, {1, 4}}, {1, 1});
  EXPECT_EQ(code_of([&] { validate_uniform_coloring(h); }), ErrorCode::MixedUniformity);
  auto ok = Hypergraph::from_lists(4, {{1, 2, 3}, {1, 4}}, {1, 2});
  EXPECT_EQ(validate_uniform_coloring(ok).k, (std::vector<unsigned>{1, 2}));
}

TEST(Hypergraph, Cone) {
  auto k3 = complete_hypergraph(3, 2);
  auto c = cone(k3, 2);
  EXPECT_EQ(c.d(), 5u);
  for (auto e : c.edges()) {
    EXPECT_TRUE(contains_vertex(e, 4));
    EXPECT_TRUE(contains_vertex(e, 5));
    EXPECT_EQ(set_size(e), 4u);
  }
  EXPECT_EQ(cone(k3, 0), k3);
}

TEST(Lp, SmallOptimum) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
  LinearProgram lp;
  lp.goal = Goal::Maximize;
  lp.c = {1, 1};
  lp.a = {{1, 2}, {3, 1}};
  lp.sense = {Sense::LessEqual, Sense::LessEqual};
  lp.b = {4, 6};
  auto r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(14, 5));
  EXPECT_EQ(r.x[0], Rational(8, 5));
  EXPECT_EQ(r.x[1], Rational(6, 5));
}

TEST(Lp, InfeasibleAndUnbounded) {
  LinearProgram bad;
  bad.c = {1};
  bad.a = {{1}, {1}};
  bad.sense = {Sense::GreaterEqual, Sense::LessEqual};
  bad.b = {2, 1};
  EXPECT_EQ(solve_lp(bad).status, LpStatus::Infeasible);

  LinearProgram open;
  open.goal = Goal::Maximize;
  open.c = {1, 0};
  open.a = {{0, 1}};
  open.sense = {Sense::Equal};
  open.b = {1};
  EXPECT_EQ(solve_lp(open).status, LpStatus::Unbounded);
}

TEST(FractionalCover, KnownValues) {
  struct Case {
    Hypergraph h;
    Rational value;
  };
  std::vector<Case> cases{{complete_hypergraph(3, 2), Rational(3, 2)},
                          {cycle_graph(5), Rational(5, 2)},
                          {complete_hypergraph(4, 3), Rational(4, 3)},
                          {complete_hypergraph(4, 2), Rational(2)},
                          {Hypergraph::from_lists(3, {{1}, {2}, {3}}), Rational(3)}};
  for (const auto& c : cases) {
    auto sol = rho_star(c.h);
    EXPECT_EQ(sol.value, c.value);
    EXPECT_EQ(sol.dual_value, c.value);
    EXPECT_EQ(total_weight(sol.weights), c.value);
    EXPECT_TRUE(verify_cover(c.h, sol.weights).covering);
  }
}

TEST(FractionalCover, IsolatedVertex) {
  auto h = Hypergraph::from_lists(3, {{1, 2}});
  EXPECT_EQ(code_of([&] { rho_star(h); }), ErrorCode::IsolatedVertex);
}

TEST(FractionalCover, SlacksAndCovers) {
  auto k3 = complete_hypergraph(3, 2);
  auto w = uniform_weight(k3, Rational(1, 3));
  auto slacks = cover_slacks(k3, w);
  for (const auto& s : slacks) EXPECT_EQ(s, Rational(-1, 3));
  EXPECT_FALSE(covers(k3, w));
  EXPECT_FALSE(verify_cover(k3, w).covering);
}

TEST(ConstantC, TriangleOneColor) {
  auto k3 = complete_hypergraph(3, 2);
  auto c = constant_C(k3, uniform_weight(k3, Rational(1, 2)));
  EXPECT_NEAR(c.approx, std::sqrt(2.0) / 3.0, 1e-14);
  EXPECT_EQ(subtotal_sequence(k3, uniform_weight(k3, Rational(1, 2))), (std::vector<Rational>{Rational(3, 2)}));
}

TEST(ConstantC, ZeroWeights) {
  auto k3 = complete_hypergraph(3, 2);
  auto c = constant_C(k3, WeightFunction{{Rational(1), Rational(1), Rational(0)}});
  EXPECT_NEAR(c.approx, 1.5, 1e-14);
}

TEST(ConstantC, WeightShape) {
  auto k3 = complete_hypergraph(3, 2);
  EXPECT_EQ(code_of([&] { check_weight_shape(k3, WeightFunction{{Rational(1)}}); }), ErrorCode::SizeMismatch);
  EXPECT_EQ(code_of([&] { check_weight_shape(k3, WeightFunction{{Rational(1), Rational(-1), Rational(1)}}); }),
            ErrorCode::NegativeValue);
}
