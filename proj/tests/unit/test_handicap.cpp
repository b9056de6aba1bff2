#include "hjoints/handicap.hpp"
#include "hjoints/key_inequality.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace hjoints;
using namespace hjoints::testing;

TEST(Handicap, Helpers) {
  EXPECT_NEAR(default_delta(24), 1.0 / std::log(24.0), 1e-15);
  EXPECT_EQ(handicap_hash({0, 1, 2}), handicap_hash({5, 6, 7}));
  EXPECT_NE(handicap_hash({0, 1, 2}), handicap_hash({0, 2, 1}));
  auto w = uniform_W(4, 3);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_NEAR(w[0], 1.0 / 24.0, 1e-15);
  EXPECT_EQ(to_string(HandicapStatus::Converged), "converged");
}

TEST(Handicap, UniformTriangleConverges) {
  auto h = complete_hypergraph(3, 2);
  auto w = rho_star(h).weights;
  auto config = generic_config(h, 5);
  auto setup = make_vanishing_setup(h, config);
  auto W = uniform_W(config.points.size(), h.d());
  HandicapOptions o;
  o.n = 24;
  auto r = handicap_iteration(setup, w, W, o);
  EXPECT_NE(r.status, HandicapStatus::MaxRounds);
  EXPECT_EQ(r.alpha.size(), config.points.size());
  EXPECT_NEAR(r.delta, default_delta(24), 1e-15);
  EXPECT_EQ(r.certificate.tuples.size(), config.points.size());

  auto audit = key_inequality_audit(h, w, r.certificate);
  EXPECT_TRUE(audit.condition2);
  EXPECT_EQ(audit.points.size(), config.points.size());
  for (const auto& f : audit.flats) EXPECT_NEAR(f.cap, 1.0, 1e-15);
}

TEST(Handicap, AsymmetricTargetsMoveTheHandicap) {
  auto h = complete_hypergraph(3, 2);
  auto w = rho_star(h).weights;
  auto config = generic_config(h, 5);
  auto setup = make_vanishing_setup(h, config);
  auto W = uniform_W(config.points.size(), h.d());
  // The first joint asks for far less, so it starts out ahead and is held back.
  W[0] /= 50.0;
  HandicapOptions o;
  o.n = 24;
  o.max_rounds = 400;
  auto r = handicap_iteration(setup, w, W, o);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_GE(r.trace.front().block, 1u);
  const auto lowest = *std::min_element(r.alpha.begin(), r.alpha.end());
  const auto highest = *std::max_element(r.alpha.begin(), r.alpha.end());
  EXPECT_LT(lowest, highest);
  EXPECT_EQ(r.alpha[0], lowest);
}

TEST(Handicap, InputErrors) {
  auto h = complete_hypergraph(3, 2);
  auto w = rho_star(h).weights;
  auto config = generic_config(h, 4);
  auto setup = make_vanishing_setup(h, config);
  auto code = [&](std::vector<double> W) {
    try {
      handicap_iteration(setup, w, W, HandicapOptions{});
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code({0.1}), ErrorCode::SizeMismatch);
  EXPECT_EQ(code({0.1, 0.1, -0.1, 0.1}), ErrorCode::NegativeValue);
}

TEST(KeyAudit, HandBuiltCertificate) {
  // One joint on two lines, d = 2, edges {1} and {2} with unit weight.
  auto h = Hypergraph::from_lists(2, {{1}, {2}}, {1, 2});
  WeightFunction w{{Rational(1), Rational(1)}};
  KeyCertificate cert;
  cert.n = 10;
  cert.W = {0.5};
  cert.tuples = {{{0, 0}}};
  cert.b = {{0, 0, 0, 1, 0.9}, {0, 1, 0, 1, 0.6}};
  auto a = key_inequality_audit(h, w, cert);
  ASSERT_EQ(a.points.size(), 1u);
  EXPECT_NEAR(a.points[0].min_product, 0.9 * 0.6, 1e-12);
  EXPECT_TRUE(a.condition1);
  EXPECT_TRUE(a.condition2);
  EXPECT_NEAR(a.flat_excess, -0.1, 1e-12);

  cert.b[0].b = 1.3;
  auto over = key_inequality_audit(h, w, cert);
  EXPECT_FALSE(over.condition2);
  EXPECT_NEAR(over.worst_flat_slack, 1.1 - 1.3, 1e-12);

  cert.b[0].b = 0.5;
  cert.b[1].b = 0.5;
  auto under = key_inequality_audit(h, w, cert);
  EXPECT_FALSE(under.condition1);
  EXPECT_NEAR(under.worst_point_slack, 0.25 - 0.4, 1e-12);
}

TEST(Handicap, TwoJointsShareALine) {
  PrimeField f;
  auto h = Hypergraph::from_lists(2, {{1}, {2}}, {1, 2});
  WeightFunction w{{Rational(1), Rational(1)}};
  auto line = [&](std::int64_t x, std::int64_t y, std::int64_t dx, std::int64_t dy) {
    return make_flat(f, Vec<Fp>{f.from_int(x), f.from_int(y)}, Mat<Fp>{{f.from_int(dx), f.from_int(dy)}});
  };
  JointsConfiguration<PrimeField> config;
  config.field = f;
  config.d = 2;
  config.families = {{line(0, 0, 1, 0)}, {line(0, 0, 0, 1), line(1, 0, 0, 1)}};
  config.points = {{f.zero(), f.zero()}, {f.one(), f.zero()}};
  auto setup = make_vanishing_setup(h, config);
  HandicapOptions o;
  o.n = 24;
  auto r = handicap_iteration(setup, w, uniform_W(2, 2), o);
  EXPECT_NE(r.status, HandicapStatus::MaxRounds);
  EXPECT_LE(std::abs(r.w_prime[0] - r.w_prime[1]), r.delta);
  auto audit = key_inequality_audit(h, w, r.certificate);
  ASSERT_EQ(audit.points.size(), 2u);
  EXPECT_LE(std::abs(audit.points[0].min_product - audit.points[1].min_product), 10 * r.delta);
}
