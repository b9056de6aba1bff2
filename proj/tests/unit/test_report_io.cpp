#include "hjoints/io.hpp"
#include "hjoints/report.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

using namespace hjoints;
using namespace hjoints::testing;

TEST(Report, MakeCheck) {
  EXPECT_EQ(make_check("a", 1, 2, 1).status, CheckStatus::Pass);
  EXPECT_EQ(make_check("a", 1, 2, -1e-12, 1e-9).status, CheckStatus::Pass);
  EXPECT_EQ(make_check("a", 1, 2, -1e-3, 1e-9).status, CheckStatus::Fail);
  EXPECT_EQ(parse_status(to_string(CheckStatus::Unconverged)), CheckStatus::Unconverged);
}

TEST(Report, ExitCode) {
  VerificationReport r;
  r.add(make_check("ok", 0, 0, 0));
  CheckRecord u;
  u.status = CheckStatus::Unconverged;
  r.add(u);
  EXPECT_EQ(r.exit_code(), 0);
  r.add(make_check("bad", 0, 0, -1));
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Report, Digest) {
  EXPECT_EQ(fnv_digest(""), "cbf29ce484222325");
  EXPECT_EQ(fnv_digest("a"), "af63dc4c8601ec8c");
}

TEST(Report, JsonRoundTrip) {
  VerificationReport r;
  r.command = "eta";
  r.inputs_digest = fnv_digest("x");
  r.version = kVersion;
  r.wall_time = 0.5;
  r.seeds["seed"] = 42;
  auto c = make_check("gap", 1.5, std::numeric_limits<double>::infinity(), -2.0, 0.0, "detail");
  c.certificate = {{"mu", {0.5, 0.5}}};
  r.add(c);
  r.add(make_check("nan", std::nan(""), 0, 0));
  auto back = report_from_json(report_to_json(r));
  EXPECT_EQ(back.command, "eta");
  EXPECT_EQ(back.seeds.at("seed"), 42u);
  ASSERT_EQ(back.checks.size(), 2u);
  EXPECT_EQ(back.checks[0].status, CheckStatus::Fail);
  EXPECT_TRUE(std::isinf(back.checks[0].rhs));
  EXPECT_EQ(back.checks[0].certificate, c.certificate);
  EXPECT_TRUE(std::isnan(back.checks[1].lhs));
  EXPECT_EQ(report_to_json(back), report_to_json(r));
  EXPECT_NE(report_table(r).find("FAIL"), std::string::npos);
}

TEST(Io, HypergraphAndWeightsFromFixtures) {
  auto h = hypergraph_from_json(read_json_file(fixture("k3.hg")));
  EXPECT_EQ(h.d(), 3u);
  EXPECT_EQ(h.num_colors(), 1u);
  EXPECT_EQ(hypergraph_from_json(hypergraph_to_json(h)), h);
  auto colored = hypergraph_from_json(read_json_file(fixture("k3_colored.hg")));
  EXPECT_EQ(colored.num_colors(), 3u);
  EXPECT_EQ(hypergraph_from_json(hypergraph_to_json(colored)), colored);
  auto w = weights_from_json(read_json_file(fixture("half.w")));
  EXPECT_EQ(w.weights, (std::vector<Rational>(3, Rational(1, 2))));
  EXPECT_EQ(weights_from_json(weights_to_json(w)).weights, w.weights);
  auto host = simple_from_json(read_json_file(fixture("k4_host.json")));
  EXPECT_EQ(host.n, 4u);
  EXPECT_EQ(simple_from_json(simple_to_json(host)).edges, host.edges);
}

TEST(Io, BadInput) {
  EXPECT_THROW(read_json_file(fixture("missing.json")), Error);
  EXPECT_THROW(hypergraph_from_json(nlohmann::json{{"d", 3}}), Error);
  EXPECT_THROW(weights_from_json(nlohmann::json{{"weights", {"1/0"}}}), Error);
}

TEST(Io, ConfigurationRoundTrip) {
  auto h = complete_hypergraph(3, 2);
  auto config = generic_config(h, 4);
  auto j = config_to_json(config);
  EXPECT_EQ(field_spec_of(j).kind, FieldKind::Prime);
  auto back = config_from_json(make_field(field_spec_of(j)), j);
  EXPECT_EQ(back.points, config.points);
  EXPECT_EQ(back.families, config.families);
  EXPECT_EQ(back.point_labels, config.point_labels);
  EXPECT_EQ(config_to_json(back), j);

  RationalField q;
  JointsConfiguration<RationalField> rc;
  rc.d = 2;
  rc.families = {{make_flat(q, Vec<Rational>{Rational(1, 2), 0}, Mat<Rational>{{0, 1}})}};
  rc.points = {{Rational(1, 2), Rational(-3)}};
  auto rj = config_to_json(rc);
  EXPECT_EQ(field_spec_of(rj).kind, FieldKind::Rational);
  auto rback = config_from_json(q, rj);
  EXPECT_EQ(rback.points, rc.points);
  EXPECT_EQ(rback.families, rc.families);
}

TEST(Io, CertificateRoundTrip) {
  auto h = Hypergraph::from_lists(2, {{1}, {2}}, {1, 2});
  WeightFunction w{{Rational(1), Rational(1)}};
  KeyCertificate cert;
  cert.n = 24;
  cert.delta = 0.25;
  cert.lambda = 1.5;
  cert.status = "converged";
  cert.W = {0.5};
  cert.tuples = {{{0, 0}}};
  cert.b = {{0, 0, 0, 1, 0.9}, {0, 1, 0, 1, 0.6}};
  auto file = certificate_from_json(certificate_to_json(cert, h, w));
  EXPECT_EQ(file.pattern, h);
  EXPECT_EQ(file.weights.weights, w.weights);
  EXPECT_EQ(file.certificate.n, 24u);
  EXPECT_EQ(file.certificate.tuples, cert.tuples);
  ASSERT_EQ(file.certificate.b.size(), 2u);
  EXPECT_DOUBLE_EQ(file.certificate.b[1].b, 0.6);
  EXPECT_EQ(file.certificate.status, "converged");
}

TEST(Io, WriteAndRead) {
  auto path = std::filesystem::temp_directory_path() / "hjoints_io_test.json";
  write_json_file(path.string(), nlohmann::json{{"a", 1}});
  EXPECT_EQ(read_json_file(path.string()).at("a"), 1);
  std::filesystem::remove(path);
}
