#include "hjoints/entropy.hpp"
#include "hjoints/error.hpp"
#include "hjoints/inequalities.hpp"
#include "hjoints/multiplicity.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hjoints;
using namespace hjoints::testing;

TEST(Entropy, Basics) {
  EXPECT_NEAR(entropy({0.5, 0.5}), 1.0, 1e-15);
  EXPECT_NEAR(entropy({1.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(entropy({0.25, 0.25, 0.25, 0.25}), 2.0, 1e-15);
  EXPECT_THROW(validate_distribution({0.5, 0.6}), Error);
  EXPECT_THROW(validate_distribution({1.5, -0.5}), Error);
}

TEST(Entropy, Conditional) {
  // X = Y: nothing left once Y is known.
  EXPECT_NEAR(conditional_entropy({{0.5, 0.0}, {0.0, 0.5}}), 0.0, 1e-15);
  // X independent of Y and uniform on two values.
  EXPECT_NEAR(conditional_entropy({{0.25, 0.25}, {0.25, 0.25}}), 1.0, 1e-15);
}

TEST(Entropy, UniformBound) {
  auto u = uniform_bound_check({0.25, 0.25, 0.25, 0.25, 0.0});
  EXPECT_EQ(u.support, 4u);
  EXPECT_TRUE(u.equality);
  EXPECT_NEAR(u.slack, 0.0, 1e-12);
  auto v = uniform_bound_check({0.7, 0.2, 0.1});
  EXPECT_FALSE(v.equality);
  EXPECT_GT(v.slack, 0.0);
}

TEST(Entropy, JensenBound) {
  std::vector<std::vector<double>> x{{0.5, 0.5}, {1.0, 0.0}};
  std::vector<std::vector<double>> joint{{0.25, 0.25}, {0.5, 0.0}};
  auto r = jensen_bound_check(x, 1.0, joint);
  EXPECT_FALSE(r.infinite);
  EXPECT_GE(r.lhs + 1e-12, r.rhs);
  try {
    jensen_bound_check({{0.8, 0.8}}, 1.0, {{0.5, 0.5}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RowSumExceedsA);
  }
}

TEST(Shearer, UniformCubeIsTight) {
  JointLaw law;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        law.outcomes.push_back({a, b, c});
        law.probs.push_back(0.125);
      }
  std::vector<VertexSet> pairs{make_set({1, 2}), make_set({1, 3}), make_set({2, 3})};
  auto r = shearer_check(3, pairs, {0.5, 0.5, 0.5}, law);
  EXPECT_NEAR(r.lhs, 3.0, 1e-12);
  EXPECT_NEAR(r.rhs, 3.0, 1e-12);
  EXPECT_NEAR(marginal_entropy(law, make_set({2})), 1.0, 1e-12);
  EXPECT_THROW(shearer_check(3, pairs, {0.5, 0.5, 0.4}, law), Error);
}

TEST(LoomisWhitney, FullCubeAndSingletons) {
  std::vector<VertexSet> pairs{make_set({1, 2}), make_set({1, 3}), make_set({2, 3})};
  std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7};
  auto r = loomis_whitney_check(3, 2, all, pairs, {0.5, 0.5, 0.5});
  EXPECT_NEAR(r.lhs, 8.0, 1e-12);
  EXPECT_NEAR(r.rhs, 8.0, 1e-9);
  auto one = loomis_whitney_check(3, 2, {5}, pairs, {0.5, 0.5, 0.5});
  EXPECT_NEAR(one.lhs, 1.0, 1e-12);
  EXPECT_NEAR(one.rhs, 1.0, 1e-12);
}

TEST(Holder, ConstantFunctions) {
  // f_i = 1 on S^1 with singletons: sum over S^2 of 1 against 2 * 2.
  std::vector<AxisFunction> fs{{vertex_bit(1), {1, 1}}, {vertex_bit(2), {1, 1}}};
  auto r = holder_check(2, 2, fs, {1.0, 1.0});
  EXPECT_NEAR(r.lhs, 4.0, 1e-12);
  EXPECT_NEAR(r.rhs, 4.0, 1e-12);
  EXPECT_NEAR(r.slack, 0.0, 1e-12);
}

TEST(Holder, TensorPower) {
  AxisFunction f{vertex_bit(1), {1, 2}};
  auto t1 = tensor_power(f, 2, 1);
  EXPECT_EQ(t1.values, f.values);
  auto t2 = tensor_power(f, 2, 2);
  EXPECT_EQ(t2.values.size(), 4u);
  std::int64_t total = 0;
  for (auto v : t2.values) total += v;
  EXPECT_EQ(total, 9);

  std::vector<AxisFunction> fs{{vertex_bit(1), {1, 2}}, {vertex_bit(2), {3, 1}}};
  auto a = tensor_power_check(2, 2, fs, WeightFunction{{Rational(1), Rational(1)}}, 1);
  auto b = tensor_power_check(2, 2, fs, WeightFunction{{Rational(1), Rational(1)}}, 2);
  EXPECT_LE(a.lhs_root, a.rhs_root + 1e-9);
  EXPECT_LE(b.lhs_root, b.rhs_root + 1e-9);
}

TEST(Multiplicity, SingleTupleIsOne) {
  auto h = Hypergraph::from_lists(2, {{1}, {2}}, {1, 2});
  auto problem = make_eta_problem(h, WeightFunction{{Rational(1), Rational(1)}}, {{0, 0}});
  auto r = eta_multiplicity(problem);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.eta, 1.0, 1e-12);
  EXPECT_THROW(eta_multiplicity(make_eta_problem(h, WeightFunction{{Rational(1), Rational(1)}}, {})), Error);
}

TEST(Multiplicity, AxisProductGrid) {
  // Tuples (i, j) for i < 2, j < 3 with unit weights: eta = 2 * 3.
  auto h = Hypergraph::from_lists(2, {{1}, {2}}, {1, 2});
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) tuples.push_back({i, j});
  auto r = eta_multiplicity(make_eta_problem(h, WeightFunction{{Rational(1), Rational(1)}}, tuples));
  EXPECT_NEAR(r.eta, 6.0, 1e-8);
  double sum = 0.0;
  for (double m : r.mu) sum += m;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_NEAR(eta_objective(make_eta_problem(h, WeightFunction{{Rational(1), Rational(1)}}, tuples), r.mu),
              r.phi, 1e-12);
}

TEST(Multiplicity, GenericTriangleMatchesClosedForm) {
  auto h = complete_hypergraph(3, 2);
  auto w = rho_star(h).weights;
  auto config = generic_config(h, 5);
  const double expected = eta_closed_form_generic(h, w);
  for (std::size_t p = 0; p < config.points.size(); ++p) {
    auto r = eta_multiplicity(make_eta_problem(h, w, tuple_lists(h, config, p)));
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.gap, kEtaTolerance);
    EXPECT_NEAR(r.eta, expected, 1e-6);
  }
}

TEST(Multiplicity, GeometricShearerHolds) {
  auto h = complete_hypergraph(3, 2);
  auto w = rho_star(h).weights;
  auto config = generic_config(h, 5);
  std::vector<PointLaw> laws;
  for (std::size_t p = 0; p < config.points.size(); ++p) {
    auto problem = make_eta_problem(h, w, tuple_lists(h, config, p));
    std::vector<double> mu(problem.tuples.size(), 1.0 / double(problem.tuples.size()));
    laws.push_back(PointLaw{1.0 / double(config.points.size()), problem, mu});
  }
  auto r = geometric_shearer_audit(h, w, laws);
  EXPECT_GE(r.slack, -1e-9);
  EXPECT_NEAR(r.h_point, std::log2(double(config.points.size())), 1e-12);
}
