#include "hjoints/vanishing.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hjoints;
using namespace hjoints::testing;

namespace {

using QPoly = Polynomial<RationalField>;

QPoly multiply(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// x^beta composed with x_l = c_l + sum_m M_lm y_m, expanded term by term.
QPoly compose(const Exponent& beta, const Vec<Rational>& c, const Mat<Rational>& m) {
  const std::size_t k = beta.size();
  QPoly out{{Exponent(k, 0), Rational(1)}};
  for (std::size_t l = 0; l < k; ++l) {
    QPoly linear{{Exponent(k, 0), c[l]}};
    for (std::size_t j = 0; j < k; ++j) {
      Exponent e(k, 0);
      e[j] = 1;
      linear[e] += m[l][j];
    }
    for (unsigned t = 0; t < beta[l]; ++t) out = multiply(out, linear);
  }
  return out;
}

LedgerJoint<RationalField> joint_at(const Flat<RationalField>& flat, Vec<Rational> point, std::size_t id,
                                    std::int64_t alpha) {
  LedgerJoint<RationalField> j;
  j.id = id;
  j.rank = id;
  j.alpha = alpha;
  j.chart = canonical_chart(flat, point);
  return j;
}

}  // namespace

TEST(Monomials, OrderAndSize) {
  EXPECT_EQ(compositions(2, 2), (std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}}));
  auto basis = monomial_basis(2, 2);
  std::vector<Exponent> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(basis.exps, expected);
  EXPECT_EQ(basis.index.at(Exponent{1, 1}), 4u);
  EXPECT_EQ(binomial(4, 2), BigInt(6));
  EXPECT_EQ(binomial(13, 3), BigInt(286));
  EXPECT_EQ(binomial(2, 3), BigInt(0));
  EXPECT_EQ(monomial_basis(3, 4).exps.size(), 35u);
}

TEST(Monomials, HasseDerivative) {
  RationalField q;
  QPoly cube{{Exponent{3}, Rational(1)}};
  auto d1 = hasse_derivative(q, cube, Exponent{1});
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1.at(Exponent{2}), Rational(3));
  auto d2 = hasse_derivative(q, cube, Exponent{2});
  EXPECT_EQ(d2.at(Exponent{1}), Rational(3));
  auto d4 = hasse_derivative(q, cube, Exponent{4});
  EXPECT_TRUE(d4.empty());

  // Over GF(2) the second Hasse derivative of x^2 is 1, not 2/2.
  PrimeField f2(2);
  Polynomial<PrimeField> sq{{Exponent{2}, f2.one()}};
  EXPECT_EQ(hasse_derivative(f2, sq, Exponent{2}).at(Exponent{0}), f2.one());
}

TEST(Functionals, TranslationChartRow) {
  RationalField q;
  auto flat = make_flat(q, Vec<Rational>{0}, Mat<Rational>{{1}});
  const Rational p(3, 2);
  Chart<RationalField> chart{{p}, {{1}}};
  const unsigned n = 5;
  for (unsigned r = 0; r <= n; ++r) {
    auto row = functional_row(q, flat, chart, Exponent{r}, n);
    ASSERT_EQ(row.size(), n + 1);
    for (unsigned j = 0; j <= n; ++j) {
      Rational expected = 0;
      if (j >= r) {
        expected = Rational(binomial(j, r));
        for (unsigned t = 0; t < j - r; ++t) expected *= p;
      }
      EXPECT_EQ(row[j], expected) << "r=" << r << " j=" << j;
    }
  }
}

TEST(Functionals, MatchesPolynomialComposition) {
  RationalField q;
  auto flat = make_flat(q, Vec<Rational>{1, 2, 3}, Mat<Rational>{{1, 0, 2}, {0, 1, -1}});
  ASSERT_EQ(flat.pivots, (std::vector<std::size_t>{0, 1}));
  // Origin: basepoint + 2 d1 - d2. Columns: d1 + d2 and d1 - 3 d2.
  Vec<Rational> origin{flat.basepoint[0] + 2, flat.basepoint[1] - 1, flat.basepoint[2] + 4 + 1};
  Mat<Rational> columns{{1, 1, 1}, {1, -3, 5}};
  for (const auto& col : columns) ASSERT_TRUE(in_direction_space(flat, col));
  ASSERT_TRUE(flat_contains(flat, origin));
  Chart<RationalField> chart{origin, columns};

  Vec<Rational> c{origin[0], origin[1]};
  Mat<Rational> m{{columns[0][0], columns[1][0]}, {columns[0][1], columns[1][1]}};
  const unsigned n = 3;
  auto basis = monomial_basis(2, n);
  auto qm = functional_matrix(q, basis, chart_pullback(q, flat, chart));
  for (std::size_t b = 0; b < basis.exps.size(); ++b) {
    auto poly = compose(basis.exps[b], c, m);
    for (std::size_t g = 0; g < basis.exps.size(); ++g) {
      auto it = poly.find(basis.exps[g]);
      Rational expected = it == poly.end() ? Rational(0) : it->second;
      EXPECT_EQ(qm[g][b], expected) << "gamma " << g << " beta " << b;
    }
  }
}

TEST(Functionals, Errors) {
  RationalField q;
  auto flat = make_flat(q, Vec<Rational>{0, 0}, Mat<Rational>{{1, 1}});
  Chart<RationalField> chart{{0, 0}, {{1, 1}}};
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code([&] { functional_row(q, flat, chart, Exponent{4}, 3); }), ErrorCode::DegreeOverflow);
  EXPECT_EQ(code([&] { functional_row(q, flat, chart, Exponent{1, 0}, 3); }), ErrorCode::DimensionMismatch);
  Chart<RationalField> singular{{0, 0}, {{0, 0}}};
  EXPECT_EQ(code([&] { functional_row(q, flat, singular, Exponent{1}, 3); }), ErrorCode::ChartMissing);
  Chart<RationalField> off{{1, 0}, {{1, 1}}};
  EXPECT_EQ(code([&] { functional_row(q, flat, off, Exponent{1}, 3); }), ErrorCode::ChartMissing);
}

TEST(Echelon, Store) {
  RationalField q;
  EchelonStore<RationalField> store(q, 3);
  EXPECT_TRUE(store.add({1, 2, 3}));
  EXPECT_TRUE(store.add({0, 1, 1}));
  EXPECT_FALSE(store.add({2, 5, 7}));
  EXPECT_FALSE(store.add({0, 0, 0}));
  EXPECT_EQ(store.rank(), 2u);
}

TEST(BCounts, TwoJointsOnALine) {
  RationalField q;
  auto line = make_flat(q, Vec<Rational>{0, 0}, Mat<Rational>{{1, 1}});
  std::vector<LedgerJoint<RationalField>> joints{joint_at(line, {0, 0}, 0, 0), joint_at(line, {2, 2}, 1, 0)};
  auto ledger = compute_B_counts(q, line, joints, 3);
  EXPECT_EQ(ledger.b, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(ledger.rank, 4u);
  EXPECT_EQ(ledger.full, 4u);
  EXPECT_EQ(ledger.b_r[0], (std::vector<std::uint64_t>{1, 1, 0, 0}));
  EXPECT_EQ(ledger.g[1], (std::vector<Exponent>{{0}, {1}}));

  // A handicap of one more on the first joint hands it a third order.
  joints[0].alpha = 1;
  auto shifted = compute_B_counts(q, line, joints, 3);
  EXPECT_EQ(shifted.b, (std::vector<std::uint64_t>{3, 1}));
  EXPECT_NE(ledger_hash(ledger), ledger_hash(shifted));
}

TEST(BCounts, SingleJointTakesEverything) {
  RationalField q;
  auto plane = make_flat(q, Vec<Rational>{0, 0, 1}, Mat<Rational>{{1, 0, 0}, {0, 1, 0}});
  std::vector<LedgerJoint<RationalField>> joints{joint_at(plane, {5, -1, 1}, 0, 0)};
  auto ledger = compute_B_counts(q, plane, joints, 4);
  EXPECT_EQ(ledger.b[0], 15u);
  EXPECT_EQ(ledger.full, 15u);
}

TEST(Counting, InconsistentLedgers) {
  BasisLedger a, b;
  for (auto* l : {&a, &b}) {
    l->k = 1;
    l->n = 1;
    l->joint_ids = {0};
    l->ranks = {0};
    l->chart_edges = {-1};
    l->b = {2};
    l->b_r = {{1, 1}};
    l->full = 2;
    l->rank = 2;
  }
  a.alphas = {0};
  b.alphas = {1};
  try {
    param_counting_check({a, b}, {1}, 2, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentLedgers);
  }
  b.alphas = {0};
  b.ranks = {3};
  EXPECT_THROW(param_counting_check({a, b}, {1}, 2, 1), Error);
  b.ranks = {0};
  auto ok = param_counting_check({a, b}, {3}, 2, 1);
  EXPECT_EQ(ok.rhs, BigInt(3));
  EXPECT_EQ(ok.slack, BigInt(0));
}

TEST(Counting, ProjectExponent) {
  EXPECT_EQ(project_exponent(Exponent{1, 2, 3}, make_set({2})), (Exponent{1, 3}));
  EXPECT_EQ(project_exponent(Exponent{1, 2, 3}, make_set({1, 3})), (Exponent{2}));
}

TEST(Counting, AssembleG) {
  // d = 2, edges {1} and {2}: G_p is the product of the two projections.
  auto h = Hypergraph::from_lists(2, {{1}, {2}}, {1, 2});
  std::vector<std::vector<Exponent>> by_edge{{{0}, {1}}, {{0}}};
  auto g = assemble_G_p(h, by_edge, 3);
  EXPECT_EQ(g.size(), 2u);
}

TEST(Setup, GenericTriangle) {
  auto h = complete_hypergraph(3, 2);
  auto w = rho_star(h).weights;
  auto config = generic_config(h, 5);
  auto setup = make_vanishing_setup(h, config);
  EXPECT_NO_THROW(check_connected(setup));
  EXPECT_EQ(setup.flats.size(), 10u);
  const unsigned n = 6;
  std::vector<std::int64_t> alpha(config.points.size(), 0);
  auto ledgers = compute_ledgers(setup, alpha, n);
  for (const auto& l : ledgers) {
    std::uint64_t total = 0;
    for (auto b : l.b) total += b;
    EXPECT_EQ(total, l.full);
    EXPECT_EQ(l.full, n + 1);
  }
  auto gsets = build_G_sets(setup, ledgers, n);
  std::vector<std::uint64_t> sizes;
  for (const auto& g : gsets.g_p) sizes.push_back(g.size());
  auto pc = param_counting_check(ledgers, sizes, h.d(), n);
  EXPECT_GE(pc.slack, 0);
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    std::vector<std::uint64_t> by_edge;
    for (const auto& g : gsets.by_edge[p]) by_edge.push_back(g.size());
    EXPECT_GE(lw_step_check(h, w, sizes[p], by_edge, n).slack, -1e-9);
  }

  // Shifting every handicap by a constant changes nothing.
  auto up = alpha;
  for (auto& a : up) a += 5;
  auto moved = compute_ledgers(setup, up, n);
  for (std::size_t f = 0; f < ledgers.size(); ++f) EXPECT_EQ(moved[f].b, ledgers[f].b);
  EXPECT_THROW(compute_ledgers(setup, std::vector<std::int64_t>{0}, n), Error);
}

TEST(Setup, MonotoneAndBoundedDomain) {
  auto h = complete_hypergraph(3, 2);
  auto config = generic_config(h, 5);
  auto setup = make_vanishing_setup(h, config);
  const unsigned n = 5;
  const std::size_t f = 0;
  ASSERT_GE(setup.joints_on[f].size(), 2u);
  const std::size_t p = setup.joints_on[f][0];
  std::vector<std::int64_t> alpha(config.points.size(), 0);
  auto raised = alpha;
  raised[p] += 2;
  EXPECT_TRUE(mono_hypothesis(alpha, raised, p, setup.joints_on[f]));
  EXPECT_FALSE(mono_hypothesis(raised, alpha, p, setup.joints_on[f]));
  EXPECT_EQ(lip_distance(alpha, raised, p, setup.joints_on[f]), 2 * std::int64_t(setup.joints_on[f].size() - 1));

  auto before = single_ledger(setup, f, alpha, n);
  auto after = single_ledger(setup, f, raised, n);
  EXPECT_GE(after.b[after.local(p)], before.b[before.local(p)]);

  auto sweep = bdd_domain_sweep(setup, f, p, alpha, n, n + 2);
  EXPECT_GE(sweep.threshold, 0);
  EXPECT_TRUE(sweep.stays_zero);
  EXPECT_EQ(sweep.counts.back(), 0u);
}

TEST(Setup, EmptyConfiguration) {
  auto h = complete_hypergraph(3, 2);
  auto config = generic_config(h, 4);
  config.families[0].clear();
  EXPECT_THROW(make_vanishing_setup(h, config), Error);
}
