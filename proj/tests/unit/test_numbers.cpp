#include "hjoints/error.hpp"
#include "hjoints/field.hpp"
#include "hjoints/flat.hpp"
#include "hjoints/linalg.hpp"
#include "hjoints/parallel.hpp"
#include "hjoints/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hjoints;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.5"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Log2Sum, ExactTerms) {
  Log2Sum s;
  s.add_log2(BigInt(8), Rational(1, 3));
  EXPECT_NEAR(s.log2_approx(), 1.0, 1e-15);
  EXPECT_NEAR(s.value().convert_to<double>(), 2.0, 1e-15);

  Log2Sum f;
  f.add_log2_factorial(5, Rational(1));
  EXPECT_NEAR(f.log2_approx(), std::log2(120.0), 1e-12);

  // 6 = 2 * 3, so log2(6) - log2(2) leaves only log2(3).
  Log2Sum a;
  a.add_log2(BigInt(6), Rational(1));
  a.add_log2(BigInt(2), Rational(-1));
  ASSERT_EQ(a.terms().size(), 1u);
  EXPECT_EQ(a.terms().begin()->first, BigInt(3));
  EXPECT_EQ(a.to_string(), "(1)*log2(3)");
}

TEST(Log2Sum, RatioAndScaling) {
  Log2Sum s;
  s.add_log2_ratio(Rational(3, 4), Rational(2));
  EXPECT_NEAR(s.log2_approx(), 2.0 * std::log2(0.75), 1e-14);
  auto half = s.scaled(Rational(1, 2));
  EXPECT_NEAR(half.log2_approx(), std::log2(0.75), 1e-14);
  s -= s;
  EXPECT_TRUE(s.empty());
}

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  Fp a = f.from_int(3);
  EXPECT_EQ(a.inverse().value(), 5u);
  EXPECT_EQ((a * a.inverse()).value(), 1u);
  EXPECT_EQ(f.from_int(-1).value(), 6u);
  EXPECT_EQ(f.from_rational(Rational(1, 2)).value(), 4u);
  EXPECT_EQ(f.parse("10").value(), 3u);
  EXPECT_TRUE(is_prime_u64(kDefaultPrime));
  EXPECT_FALSE(is_prime_u64(91));
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), Error);
  PrimeField f(5);
  EXPECT_THROW(f.from_rational(Rational(1, 5)), Error);
}

TEST(LinearAlgebra, RankNullspaceSolve) {
  RationalField q;
  Mat<Rational> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank_of(q, m, 3), 2u);
  auto ns = nullspace(q, m, 3);
  ASSERT_EQ(ns.size(), 1u);
  auto zero = mat_vec(q, m, ns[0]);
  for (const auto& x : zero) EXPECT_EQ(x, 0);

  auto x = solve(q, m, Vec<Rational>{6, 12, 2}, 3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(mat_vec(q, m, *x), (Vec<Rational>{6, 12, 2}));
  EXPECT_FALSE(solve(q, m, Vec<Rational>{6, 13, 2}, 3).has_value());

  EXPECT_EQ(determinant(q, Mat<Rational>{{2, 1}, {1, 3}}), Rational(5));
  EXPECT_EQ(determinant(q, m), Rational(0));
}

TEST(LinearAlgebra, SubspaceIntersection) {
  RationalField q;
  // The xy-plane and the yz-plane in Q^3 meet in the y-axis.
  Mat<Rational> xy{{1, 0, 0}, {0, 1, 0}}, yz{{0, 1, 0}, {0, 0, 1}};
  auto both = intersect_subspaces(q, std::vector<Mat<Rational>>{xy, yz}, 3);
  ASSERT_EQ(both.size(), 1u);
  EXPECT_EQ(both[0][0], 0);
  EXPECT_EQ(both[0][2], 0);
}

TEST(Flat, CanonicalForm) {
  RationalField q;
  auto a = make_flat(q, Vec<Rational>{1, 1}, Mat<Rational>{{2, 2}});
  auto b = make_flat(q, Vec<Rational>{3, 3}, Mat<Rational>{{-1, -1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(flat_key(q, a), flat_key(q, b));
  EXPECT_TRUE(flat_contains(a, Vec<Rational>{5, 5}));
  EXPECT_FALSE(flat_contains(a, Vec<Rational>{5, 4}));
}

TEST(Flat, Intersections) {
  RationalField q;
  auto diag = make_flat(q, Vec<Rational>{0, 0}, Mat<Rational>{{1, 1}});
  auto horizontal = make_flat(q, Vec<Rational>{0, 2}, Mat<Rational>{{1, 0}});
  auto meet = intersect_flats(q, std::vector<Flat<RationalField>>{diag, horizontal});
  ASSERT_TRUE(meet.has_value());
  EXPECT_EQ(meet->dim(), 0u);
  EXPECT_EQ(meet->basepoint, (Vec<Rational>{2, 2}));

  auto parallel = make_flat(q, Vec<Rational>{0, 1}, Mat<Rational>{{1, 1}});
  EXPECT_FALSE(intersect_flats(q, std::vector<Flat<RationalField>>{diag, parallel}).has_value());
}

TEST(Flat, DimensionMismatch) {
  RationalField q;
  auto line = make_flat(q, Vec<Rational>{0, 0}, Mat<Rational>{{1, 1}});
  EXPECT_THROW(flat_contains(line, Vec<Rational>{1, 1, 1}), Error);
  EXPECT_THROW(make_flat(q, Vec<Rational>{0, 0}, Mat<Rational>{{1, 1, 1}}), Error);
}

TEST(Parallel, DeriveSeedIsDeterministic) {
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
  std::vector<int> out(100, 0);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_for(4, [](std::size_t i) {
                 if (i == 2) throw Error(ErrorCode::InvalidArgument, "boom");
               }),
               Error);
}
