#include "support.hpp"

#include <gtest/gtest.h>

using namespace hjoints;
using namespace hjoints::testing;

namespace {

// K_3 with three colors; edge {i,j} asks for a line through the point.
Hypergraph triangle() { return Hypergraph::from_lists(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 2, 3}); }

Flat<RationalField> line(Vec<Rational> base, Vec<Rational> dir) {
  return make_flat(RationalField{}, std::move(base), Mat<Rational>{std::move(dir)});
}

}  // namespace

TEST(Witness, IndependentLinesFormAJoint) {
  RationalField q;
  auto h = triangle();
  Vec<Rational> origin{0, 0, 0};
  // Edge {1,2} misses vertex 3, so its line must be the image of e_3.
  std::vector<Flat<RationalField>> tuple{line(origin, {0, 0, 1}), line(origin, {0, 1, 0}), line(origin, {1, 0, 0})};
  auto r = witness_check(q, h, origin, tuple, kDefaultTrials, 1);
  EXPECT_TRUE(r.exists);
  EXPECT_TRUE(witness_exists_exact(q, h, origin, tuple));
  ASSERT_EQ(r.columns.size(), 3u);
  EXPECT_NE(determinant(q, r.columns), 0);
}

TEST(Witness, CoplanarLinesFail) {
  RationalField q;
  auto h = triangle();
  Vec<Rational> origin{0, 0, 0};
  std::vector<Flat<RationalField>> tuple{line(origin, {1, 0, 0}), line(origin, {0, 1, 0}), line(origin, {1, 1, 0})};
  auto r = witness_check(q, h, origin, tuple, kDefaultTrials, 1);
  EXPECT_FALSE(r.exists);
  EXPECT_TRUE(r.certified);
  EXPECT_FALSE(witness_exists_exact(q, h, origin, tuple));
}

TEST(Witness, TupleShapeErrors) {
  RationalField q;
  auto h = triangle();
  Vec<Rational> origin{0, 0, 0};
  auto off = line({1, 1, 1}, {1, 0, 0});
  std::vector<Flat<RationalField>> tuple{off, line(origin, {0, 1, 0}), line(origin, {0, 0, 1})};
  try {
    witness_check(q, h, origin, tuple, 1, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointNotOnFlat);
  }
  EXPECT_THROW(witness_check(q, h, origin, std::vector<Flat<RationalField>>{off}, 1, 0), Error);
}

TEST(Witness, TransversalCriterion) {
  RationalField q;
  // Two copies of the same line cannot host two independent vectors.
  Mat<Rational> a{{1, 0}};
  EXPECT_FALSE(transversal_exists(q, std::vector<Mat<Rational>>{a, a}, 2));
  Mat<Rational> b{{0, 1}};
  EXPECT_TRUE(transversal_exists(q, std::vector<Mat<Rational>>{a, b}, 2));
}

TEST(Configuration, GeneralPosition) {
  PrimeField f;
  auto fam = generic_hyperplanes(f, 6, 3, 11);
  EXPECT_TRUE(verify_general_position(f, fam));
  // The point of a 3-set lies on each of its hyperplanes.
  auto labels = make_set({1, 4, 6});
  auto x = hyperplane_point(f, fam, labels);
  for (unsigned l : set_members(labels)) {
    Fp lhs = f.zero();
    for (std::size_t j = 0; j < 3; ++j) lhs += fam.normals[l - 1][j] * x[j];
    EXPECT_EQ(lhs, fam.offsets[l - 1]);
  }
  EXPECT_TRUE(flat_contains(hyperplane_flat(f, fam, make_set({1, 4})), x));
}

TEST(Configuration, FieldTooSmall) {
  try {
    generic_hyperplanes(PrimeField(5), 6, 2, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooSmall);
  }
}

TEST(Configuration, GenericTriangleJoints) {
  auto h = complete_hypergraph(3, 2);
  for (unsigned m = 4; m <= 6; ++m) {
    auto config = generic_config(h, m);
    // One joint per triangle of K_m, one line per edge.
    EXPECT_EQ(config.points.size(), m * (m - 1) * (m - 2) / 6);
    EXPECT_EQ(config.families[0].size(), m * (m - 1) / 2);
    auto hits = detect_joints(h, config, config.points);
    EXPECT_EQ(hits.size(), config.points.size());
  }
}

TEST(Configuration, IntersectionCandidatesFindAllJoints) {
  auto h = complete_hypergraph(3, 2);
  auto config = generic_config(h, 5);
  auto candidates = intersection_candidates(config, 100000);
  auto hits = detect_joints(h, config, candidates);
  EXPECT_EQ(hits.size(), config.points.size());
  EXPECT_THROW(intersection_candidates(config, 3), Error);
}

TEST(Configuration, ProjectedKeepsJoints) {
  PrimeField f;
  auto k3 = complete_hypergraph(3, 2);
  auto host = complete_host(5, 3);
  auto fam = generic_hyperplanes(f, 5, 4, 5);
  auto config = projected_generically_induced(f, host, k3, 1, fam, 9);
  EXPECT_EQ(config.d, 3u);
  EXPECT_EQ(config.points.size(), count_inducing_sets(host, cone(k3, 1)));
  EXPECT_EQ(detect_joints(k3, config, config.points).size(), config.points.size());
}

TEST(Configuration, AxisParallel) {
  PrimeField f;
  std::vector<AxisFunction> fs{{vertex_bit(1), {2, 1}}, {vertex_bit(2), {1, 3}}};
  auto h = axis_pattern(2, fs);
  auto config = axis_parallel_from_functions(f, 2, 2, fs);
  // Two copies of {x_1 = 0} and one of {x_1 = 1}; one and three for x_2.
  EXPECT_EQ(config.families[0].size(), 3u);
  EXPECT_EQ(config.families[1].size(), 4u);
  EXPECT_EQ(config.points.size(), 4u);
  auto hits = detect_joints(h, config, config.points);
  EXPECT_EQ(hits.size(), 4u);
  EXPECT_EQ(axis_index(axis_digits(3, 2, 2), 2), 3u);
  restrict_points(config, {1, 2});
  EXPECT_EQ(config.points.size(), 2u);
}

TEST(Configuration, TupleEnumeration) {
  auto h = complete_hypergraph(3, 2);
  auto config = generic_config(h, 4);
  // Three lines through each generic point; each edge can take any of them
  // as long as the three chosen lines are distinct.
  auto tuples = enumerate_witness_tuples(h, config, config.points[0], kDefaultTupleCap);
  EXPECT_EQ(tuples.size(), 6u);
  EXPECT_THROW(enumerate_witness_tuples(h, config, config.points[0], 2), Error);
}
