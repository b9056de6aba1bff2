#include "hjoints/acceptance.hpp"
#include "hjoints/configuration.hpp"
#include "hjoints/entropy.hpp"
#include "hjoints/extremal.hpp"
#include "hjoints/fractional_cover.hpp"
#include "hjoints/handicap.hpp"
#include "hjoints/inequalities.hpp"
#include "hjoints/io.hpp"
#include "hjoints/multiplicity.hpp"
#include "hjoints/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace hjoints;
using nlohmann::json;

namespace {

struct Globals {
  std::string json_path;
  std::uint64_t seed = 0;
};

// Inputs are folded into the digest in the order they are read.
class Inputs {
 public:
  json load(const std::string& path) {
    auto j = read_json_file(path);
    text_ += path.empty() ? "" : j.dump();
    text_ += "\n";
    return j;
  }
  void note(const std::string& s) { text_ += s + "\n"; }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

void emit_artifact(const std::string& out, const json& artifact) {
  if (out.empty())
    std::cout << artifact.dump(2) << "\n";
  else
    write_json_file(out, artifact);
}

int finish(VerificationReport report, const Globals& g, const Inputs& inputs,
           std::chrono::steady_clock::time_point start, bool table_to_stderr = false) {
  report.version = kVersion;
  report.seeds["seed"] = g.seed;
  report.inputs_digest = fnv_digest(report.command + "\n" + std::to_string(g.seed) + "\n" + inputs.text());
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  (table_to_stderr ? std::cerr : std::cout) << report_table(report);
  if (!g.json_path.empty()) write_json_file(g.json_path, report_to_json(report));
  return report.exit_code();
}

CheckRecord info(std::string name, double lhs, double rhs, std::string detail) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.status = CheckStatus::Info;
  r.detail = std::move(detail);
  return r;
}

// Runs body(config) with the configuration read in its own field.
template <class Body>
auto with_config(const json& j, Body&& body) {
  auto spec = field_spec_of(j);
  if (spec.kind == FieldKind::Rational) return body(config_from_json(RationalField{}, j));
  return body(config_from_json(make_field(spec), j));
}

template <class Field>
double log2_bound(const Hypergraph& h, const WeightFunction& w, const JointsConfiguration<Field>& config) {
  Log2Sum bound = constant_C(h, w).log2;
  auto sub = subtotal_sequence(h, w);
  for (unsigned c = 0; c < h.num_colors(); ++c)
    if (!config.families[c].empty()) bound.add_log2(BigInt(config.families[c].size()), sub[c]);
  return bound.log2_value().convert_to<double>();
}

template <class Field>
std::vector<std::vector<std::size_t>> tuple_lists(const Hypergraph& h, const JointsConfiguration<Field>& config,
                                                  std::size_t p, std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& t : enumerate_witness_tuples(h, config, config.points[p], kDefaultTupleCap, kDefaultTrials,
                                          derive_seed(seed, p)))
    out.push_back(std::move(t.flats));
  return out;
}

WeightFunction weights_or_optimal(Inputs& inputs, const std::string& path, const Hypergraph& h) {
  if (!path.empty()) return weights_from_json(inputs.load(path));
  inputs.note("weights: optimal cover");
  return rho_star(h).weights;
}

std::vector<AxisFunction> functions_from_json(const json& j) {
  std::vector<AxisFunction> fs;
  for (const auto& f : j.at("functions"))
    fs.push_back(AxisFunction{make_set(f.at("subset").get<std::vector<unsigned>>()),
                              f.at("values").get<std::vector<std::int64_t>>()});
  return fs;
}

std::vector<VertexSet> subsets_from_json(const json& j) {
  std::vector<VertexSet> out;
  for (const auto& s : j) out.push_back(make_set(s.get<std::vector<unsigned>>()));
  return out;
}

std::vector<std::int64_t> parse_alpha(const std::string& spec, std::size_t joints, Inputs& inputs) {
  std::vector<std::int64_t> alpha(joints, 0);
  if (spec == "zero") return alpha;
  if (spec.rfind("random:", 0) == 0) {
    std::mt19937_64 rng(std::stoull(spec.substr(7)));
    for (auto& a : alpha) a = static_cast<std::int64_t>(rng() % 5) - 2;
    return alpha;
  }
  auto j = inputs.load(spec);
  alpha = j.at("alpha").get<std::vector<std::int64_t>>();
  if (alpha.size() != joints) throw Error(ErrorCode::SizeMismatch, "one handicap entry per joint");
  return alpha;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hjoints: exact joints, covers, entropy and vanishing checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--json", g.json_path, "Write the machine-readable report here");
  app.add_option("--seed", g.seed, "Base seed for randomized steps");

  std::string hg_path, w_path, config_path, pattern_path, host_path, out_path, cert_path, input_path;
  std::string kind = "generic", field_name = "prime", mode = "local", alpha_spec = "zero", w_spec = "uniform";
  std::uint64_t modulus = kDefaultPrime;
  unsigned t = 0, d = 3, budget = 6, n_deg = 24, restarts = 200;
  std::uint64_t n_edges = 0, work_limit = 2'000'000, tuple_cap = kDefaultTupleCap, candidate_budget = 100000;
  std::size_t point = 0, rounds = 5000, random_count = 0, only = 0;
  double delta = 0.0, factor = 0.8, additive = 0.1, tol = kEtaTolerance;
  bool auto_candidates = false;

  auto* rho = app.add_subcommand("rho-star", "Fractional edge-covering number");
  rho->add_option("hypergraph", hg_path)->required();

  auto* constant = app.add_subcommand("constant", "The constant C_{H,w}");
  constant->add_option("hypergraph", hg_path)->required();
  constant->add_option("--weights,-w", w_path);

  auto* cone_cmd = app.add_subcommand("cone", "Cone C_t(H)");
  cone_cmd->add_option("hypergraph", hg_path)->required();
  cone_cmd->add_option("--t", t)->required();
  cone_cmd->add_option("--out,-o", out_path);

  auto* build = app.add_subcommand("build-config", "Generic, projected or axis-parallel configuration");
  build->add_option("--kind", kind)->check(CLI::IsMember({"generic", "projected", "axis"}));
  build->add_option("--host", host_path);
  build->add_option("--pattern", pattern_path);
  build->add_option("--functions", input_path, "Axis functions {d, s, functions: [{subset, values}]}");
  build->add_option("--t", t);
  build->add_option("--field", field_name)->check(CLI::IsMember({"prime", "rational"}));
  build->add_option("--modulus", modulus);
  build->add_option("--out,-o", out_path);

  auto* detect = app.add_subcommand("detect", "H-joints among candidate points");
  detect->add_option("--config", config_path)->required();
  detect->add_option("--pattern", pattern_path)->required();
  detect->add_flag("--auto", auto_candidates, "Generate candidates by intersecting flats");
  detect->add_option("--budget", candidate_budget);
  detect->add_option("--out,-o", out_path);

  auto* eta = app.add_subcommand("eta", "Multiplicity at one point");
  eta->add_option("--config", config_path)->required();
  eta->add_option("--pattern", pattern_path)->required();
  eta->add_option("--weights,-w", w_path);
  eta->add_option("--point", point);
  eta->add_option("--tol", tol);

  auto* shearer = app.add_subcommand("shearer", "Shearer inequality");
  shearer->add_option("--input", input_path, "{d, subsets, weights, outcomes, probs}");
  shearer->add_option("--random", random_count);
  auto* holder = app.add_subcommand("holder", "Generalized Hölder inequality");
  holder->add_option("--input", input_path, "{d, s, functions, weights}");
  holder->add_option("--random", random_count);
  auto* lw = app.add_subcommand("lw", "Loomis-Whitney inequality");
  lw->add_option("--input", input_path, "{d, s, points, subsets, weights}");
  lw->add_option("--random", random_count);

  auto* geo = app.add_subcommand("geo-shearer", "Geometric Shearer audit");
  geo->add_option("--config", config_path)->required();
  geo->add_option("--pattern", pattern_path)->required();
  geo->add_option("--weights,-w", w_path);
  geo->add_option("--random", random_count);

  auto* mcount = app.add_subcommand("mcount", "Sets inducing a copy of the pattern");
  mcount->add_option("--host", host_path)->required();
  mcount->add_option("--pattern", pattern_path)->required();

  auto* kk = app.add_subcommand("kk", "Colex clique count and Lovász bound");
  kk->add_option("--n", n_edges)->required();
  kk->add_option("--d", d)->required();

  auto* shadow = app.add_subcommand("shadow-check", "Partial shadow bound");
  shadow->add_option("--host", host_path)->required();
  shadow->add_option("--d", d)->required();
  shadow->add_option("--t", t);

  auto* search = app.add_subcommand("search-m", "Search hosts maximizing the inducing count");
  search->add_option("--pattern", pattern_path)->required();
  search->add_option("--n", n_edges)->required();
  search->add_option("--budget", budget);
  search->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "local"}));
  search->add_option("--restarts", restarts);
  search->add_option("--work-limit", work_limit);

  auto* vanishing = app.add_subcommand("vanishing", "B-table and lemma checks");
  vanishing->add_option("--config", config_path)->required();
  vanishing->add_option("--pattern", pattern_path)->required();
  vanishing->add_option("--weights,-w", w_path);
  vanishing->add_option("--alpha", alpha_spec, "zero | random:<seed> | file with {alpha: [...]}");
  vanishing->add_option("--n", n_deg)->required();
  vanishing->add_option("--cap", tuple_cap);

  auto* handicap = app.add_subcommand("handicap-run", "Handicap iteration and key-inequality certificate");
  handicap->add_option("--config", config_path)->required();
  handicap->add_option("--pattern", pattern_path)->required();
  handicap->add_option("--weights,-w", w_path);
  handicap->add_option("--n", n_deg);
  handicap->add_option("--delta", delta, "0 selects 1/ln n");
  handicap->add_option("--rounds", rounds);
  handicap->add_option("--W", w_spec, "uniform | file with {W: [...]}");
  handicap->add_option("--out,-o", out_path);

  auto* audit = app.add_subcommand("key-audit", "Audit a key-inequality certificate");
  audit->add_option("--certificate", cert_path)->required();
  audit->add_option("--factor", factor);
  audit->add_option("--additive", additive);

  auto* simple = app.add_subcommand("verify-simple-bound", "|J| against C prod |F_i|^wbar_i");
  simple->add_option("--config", config_path)->required();
  simple->add_option("--pattern", pattern_path)->required();
  simple->add_option("--weights,--w,-w", w_path);

  auto* mult = app.add_subcommand("verify-mult-bound", "sum of eta against C prod |F_i|^wbar_i");
  mult->add_option("--config", config_path)->required();
  mult->add_option("--pattern", pattern_path)->required();
  mult->add_option("--weights,--w,-w", w_path);

  auto* suite = app.add_subcommand("suite", "Full acceptance battery");
  suite->add_option("--only", only, "Run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Inputs inputs;
  VerificationReport report;
  report.command = app.get_subcommands().front()->get_name();

  try {
    if (*rho) {
      auto h = hypergraph_from_json(inputs.load(hg_path));
      auto sol = rho_star(h);
      auto rec = make_check("primal = dual", to_double(sol.value), to_double(sol.dual_value),
                            sol.value == sol.dual_value ? 0.0 : -1.0, 0.0, "rho* = " + format_rational(sol.value));
      json cert;
      cert["value"] = format_rational(sol.value);
      cert["weights"] = weights_to_json(sol.weights)["weights"];
      cert["tight_vertices"] = sol.tight_vertices;
      rec.certificate = cert;
      report.add(rec);
      auto cover = verify_cover(h, sol.weights);
      report.add(make_check("optimal weight covers", 1.0, 1.0, cover.covering ? 0.0 : -1.0));
      std::cout << cert.dump() << "\n";
      return finish(report, g, inputs, start);
    }
    if (*constant) {
      auto h = hypergraph_from_json(inputs.load(hg_path));
      auto w = weights_or_optimal(inputs, w_path, h);
      auto c = constant_C(h, w);
      auto rec = info("C_{H,w}", c.approx, 0.0, "log2 C = " + c.log2.to_string());
      rec.certificate = {{"value", c.value.str(30)}, {"log2", c.log2.to_string()}};
      report.add(rec);
      return finish(report, g, inputs, start);
    }
    if (*cone_cmd) {
      auto h = hypergraph_from_json(inputs.load(hg_path));
      emit_artifact(out_path, hypergraph_to_json(cone(h, t)));
      return 0;
    }
    if (*build) {
      if (kind == "axis") {
        if (input_path.empty()) throw Error(ErrorCode::InvalidArgument, "--functions is required for axis configurations");
        auto j = inputs.load(input_path);
        auto fs = functions_from_json(j);
        const unsigned dd = j.at("d").get<unsigned>(), s = j.at("s").get<unsigned>();
        auto h = axis_pattern(dd, fs);
        auto make = [&](auto field) {
          auto config = axis_parallel_from_functions(field, dd, s, fs);
          restrict_points(config, detect_joints(h, config, config.points, kDefaultTrials, g.seed));
          auto out = config_to_json(config);
          out["pattern"] = hypergraph_to_json(h);
          return out;
        };
        auto artifact = field_name == "rational" ? make(RationalField{}) : make(PrimeField(modulus));
        emit_artifact(out_path, artifact);
        report.add(info("joints", double(artifact["points"].size()), 0.0, "axis-parallel"));
        return finish(report, g, inputs, start, out_path.empty());
      }
      if (host_path.empty() || pattern_path.empty())
        throw Error(ErrorCode::InvalidArgument, "--host and --pattern are required");
      auto host = simple_from_json(inputs.load(host_path));
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      auto make = [&](auto field) {
        auto fam = generic_hyperplanes(field, host.n, h.d() + (kind == "projected" ? t : 0), g.seed);
        auto config = kind == "projected" ? projected_generically_induced(field, host, h, t, fam, derive_seed(g.seed, 1))
                                          : generically_induced(field, host, h, fam, true, g.seed);
        return config_to_json(config);
      };
      auto artifact = field_name == "rational" ? make(RationalField{}) : make(PrimeField(modulus));
      emit_artifact(out_path, artifact);
      report.add(info("joints", double(artifact["points"].size()), 0.0, kind));
      for (std::size_t c = 0; c < artifact["families"].size(); ++c)
        report.add(info("|F_" + std::to_string(c + 1) + "|", double(artifact["families"][c].size()), 0.0, ""));
      return finish(report, g, inputs, start, out_path.empty());
    }
    if (*detect) {
      auto cj = inputs.load(config_path);
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      return with_config(cj, [&](auto config) {
        auto candidates = auto_candidates || config.points.empty() ? intersection_candidates(config, candidate_budget)
                                                                    : config.points;
        auto hits = detect_joints(h, config, candidates, kDefaultTrials, g.seed);
        config.points.clear();
        for (auto i : hits) config.points.push_back(candidates[i]);
        if (!auto_candidates) {
          std::vector<VertexSet> labels;
          for (auto i : hits)
            if (i < config.point_labels.size()) labels.push_back(config.point_labels[i]);
          config.point_labels = labels;
        } else {
          config.point_labels.clear();
        }
        report.add(info("joints", double(hits.size()), double(candidates.size()), "of the candidates"));
        if (!out_path.empty()) write_json_file(out_path, config_to_json(config));
        return finish(report, g, inputs, start);
      });
    }
    if (*eta) {
      auto cj = inputs.load(config_path);
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      auto w = weights_or_optimal(inputs, w_path, h);
      return with_config(cj, [&](auto config) {
        if (point >= config.points.size()) throw Error(ErrorCode::InvalidArgument, "no such point");
        auto problem = make_eta_problem(h, w, tuple_lists(h, config, point, g.seed));
        auto r = eta_multiplicity(problem, tol);
        CheckRecord rec = info("eta(p)", r.eta, 0.0,
                               std::to_string(problem.tuples.size()) + " tuples, " + std::to_string(r.iterations) +
                                   " iterations");
        rec.slack = tol - r.gap;
        rec.status = r.converged ? CheckStatus::Pass : CheckStatus::Unconverged;
        rec.certificate = {{"eta", r.eta}, {"log2_eta", r.log2_eta}, {"gap", r.gap}, {"mu", r.mu}};
        report.add(rec);
        report.add(make_check("eta >= 1", r.eta, 1.0, r.eta - 1.0, 1e-9));
        return finish(report, g, inputs, start);
      });
    }
    if (*shearer || *holder || *lw) {
      std::mt19937_64 rng(g.seed);
      auto random_cover = [&](unsigned dd, std::vector<VertexSet>& subsets, std::vector<double>& weights) {
        subsets.clear();
        const VertexSet all = full_set(dd);
        for (unsigned i = 0; i < 3; ++i) subsets.push_back((rng() % (all - 1)) + 1);
        VertexSet covered = 0;
        for (auto s : subsets) covered |= s;
        for (unsigned j = 1; j <= dd; ++j)
          if (!(covered & vertex_bit(j))) subsets.push_back(vertex_bit(j));
        weights.assign(subsets.size(), 1.0);
      };
      if (!input_path.empty()) {
        auto j = inputs.load(input_path);
        const unsigned dd = j.at("d").get<unsigned>();
        InequalityResult r;
        if (*shearer) {
          JointLaw law{j.at("outcomes").get<std::vector<std::vector<int>>>(), j.at("probs").get<std::vector<double>>()};
          r = shearer_check(dd, subsets_from_json(j.at("subsets")), j.at("weights").get<std::vector<double>>(), law);
          report.add(make_check("Shearer", r.lhs, r.rhs, r.slack, 1e-9));
        } else if (*holder) {
          r = holder_check(dd, j.at("s").get<unsigned>(), functions_from_json(j), j.at("weights").get<std::vector<double>>());
          report.add(make_check("generalized Hölder", r.lhs, r.rhs, r.slack, 1e-9 * std::abs(r.rhs)));
        } else {
          const unsigned s = j.at("s").get<unsigned>();
          std::vector<std::size_t> pts;
          for (const auto& p : j.at("points")) pts.push_back(axis_index(p.get<std::vector<unsigned>>(), s));
          r = loomis_whitney_check(dd, s, pts, subsets_from_json(j.at("subsets")), j.at("weights").get<std::vector<double>>());
          report.add(make_check("Loomis-Whitney", r.lhs, r.rhs, r.slack, 1e-9 * std::abs(r.rhs)));
        }
        return finish(report, g, inputs, start);
      }
      if (random_count == 0) random_count = 100;
      inputs.note("random " + std::to_string(random_count));
      double worst = std::numeric_limits<double>::infinity();
      InequalityResult at;
      std::size_t failures = 0;
      for (std::size_t i = 0; i < random_count; ++i) {
        const unsigned dd = 2 + static_cast<unsigned>(rng() % 2);
        std::vector<VertexSet> subsets;
        std::vector<double> weights;
        random_cover(dd, subsets, weights);
        InequalityResult r;
        double tolerance = 1e-9;
        if (*shearer) {
          JointLaw law;
          std::vector<double> probs;
          double total = 0.0;
          for (int k = 0; k < 6; ++k) {
            std::vector<int> x(dd);
            for (auto& v : x) v = static_cast<int>(rng() % 2);
            law.outcomes.push_back(x);
            probs.push_back(double(1 + rng() % 9));
            total += probs.back();
          }
          for (auto& p : probs) p /= total;
          law.probs = probs;
          r = shearer_check(dd, subsets, weights, law);
        } else if (*holder) {
          std::vector<AxisFunction> fs;
          for (auto I : subsets) {
            AxisFunction f{I, {}};
            for (std::size_t c = 0; c < (std::size_t{1} << set_size(I)); ++c) f.values.push_back(1 + rng() % 5);
            fs.push_back(f);
          }
          r = holder_check(dd, 2, fs, weights);
          tolerance *= std::abs(r.rhs);
        } else {
          std::vector<std::size_t> pts;
          for (std::size_t x = 0; x < (std::size_t{1} << dd); ++x)
            if (rng() % 2) pts.push_back(x);
          r = loomis_whitney_check(dd, 2, pts, subsets, weights);
          tolerance *= std::abs(r.rhs);
        }
        if (r.slack < -tolerance) ++failures;
        if (r.slack < worst) {
          worst = r.slack;
          at = r;
        }
      }
      auto rec = make_check(report.command + " random audit", at.lhs, at.rhs, failures ? -1.0 : worst, 0.0,
                            std::to_string(random_count) + " instances, " + std::to_string(failures) + " failed");
      if (!failures) rec.slack = worst;
      report.add(rec);
      return finish(report, g, inputs, start);
    }
    if (*geo) {
      auto cj = inputs.load(config_path);
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      auto w = weights_or_optimal(inputs, w_path, h);
      return with_config(cj, [&](auto config) {
        std::vector<EtaProblem> problems;
        for (std::size_t p = 0; p < config.points.size(); ++p)
          problems.push_back(make_eta_problem(h, w, tuple_lists(h, config, p, g.seed)));
        std::vector<PointLaw> uniform, optimal;
        double total = 0.0;
        std::vector<EtaResult> etas;
        for (const auto& problem : problems) {
          etas.push_back(eta_multiplicity(problem));
          total += etas.back().eta;
        }
        for (std::size_t p = 0; p < problems.size(); ++p) {
          std::vector<double> first(problems[p].tuples.size(), 0.0);
          first[0] = 1.0;
          uniform.push_back(PointLaw{1.0 / double(problems.size()), problems[p], first});
          optimal.push_back(PointLaw{etas[p].eta / total, problems[p], etas[p].mu});
        }
        auto r1 = geometric_shearer_audit(h, w, uniform);
        report.add(make_check("uniform point, fixed tuples", r1.lhs, r1.rhs, r1.slack, 1e-9));
        auto r2 = geometric_shearer_audit(h, w, optimal);
        report.add(make_check("eta-optimal laws", r2.lhs, r2.rhs, r2.slack, 1e-9));
        report.add(make_check("eta-optimal lhs = log2 sum eta", r2.lhs, std::log2(total),
                              -std::abs(r2.lhs - std::log2(total)), 1e-6));
        std::mt19937_64 rng(g.seed);
        std::exponential_distribution<double> ex(1.0);
        for (std::size_t i = 0; i < random_count; ++i) {
          std::vector<PointLaw> laws;
          double sum = 0.0;
          for (std::size_t p = 0; p < problems.size(); ++p) {
            std::vector<double> mu(problems[p].tuples.size());
            double m = 0.0;
            for (auto& x : mu) m += x = ex(rng);
            for (auto& x : mu) x /= m;
            laws.push_back(PointLaw{ex(rng), problems[p], mu});
            sum += laws.back().weight;
          }
          for (auto& l : laws) l.weight /= sum;
          auto r = geometric_shearer_audit(h, w, laws);
          report.add(make_check("random laws " + std::to_string(i), r.lhs, r.rhs, r.slack, 1e-9));
        }
        return finish(report, g, inputs, start);
      });
    }
    if (*mcount) {
      auto host = simple_from_json(inputs.load(host_path));
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      auto count = count_inducing_sets(host, h);
      report.add(info("inducing sets", double(count), 0.0, ""));
      return finish(report, g, inputs, start);
    }
    if (*kk) {
      inputs.note("n=" + std::to_string(n_edges) + " d=" + std::to_string(d));
      auto count = kruskal_katona_count(n_edges, d);
      auto bound = lovasz_bound(n_edges, d);
      char detail[96];
      std::snprintf(detail, sizeof detail, "x = %.12g%s", bound.x, bound.clamped ? ", clamped" : "");
      report.add(make_check("colex count <= C(x,d)", double(count), bound.bound, bound.bound - double(count),
                            kBoundGuard * std::max(1.0, bound.bound), detail));
      return finish(report, g, inputs, start);
    }
    if (*shadow) {
      auto host = simple_from_json(inputs.load(host_path));
      inputs.note("d=" + std::to_string(d) + " t=" + std::to_string(t));
      auto r = partial_shadow_check(host, d, t);
      report.add(make_check("partial shadow", double(r.count), r.bound.bound, r.bound.bound - double(r.count),
                            kBoundGuard * std::max(1.0, r.bound.bound), "x = " + std::to_string(r.bound.x)));
      return finish(report, g, inputs, start);
    }
    if (*search) {
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      inputs.note("n=" + std::to_string(n_edges) + " budget=" + std::to_string(budget) + " mode=" + mode);
      SearchOptions so;
      so.mode = mode == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Local;
      so.vertex_budget = budget;
      so.restarts = restarts;
      so.work_limit = work_limit;
      so.seed = g.seed;
      auto r = search_M(h, n_edges, so);
      std::string host;
      for (auto e : r.best_host.edges) host += set_to_string(e);
      auto rec = info("best count", double(r.best_count), 0.0,
                      (r.certified ? "certified, " : "") + std::to_string(r.work) + " work units, host " + host);
      rec.certificate = {{"host", simple_to_json(r.best_host)}, {"restart_seeds", r.restart_seeds}};
      report.add(rec);
      return finish(report, g, inputs, start);
    }
    if (*vanishing) {
      auto cj = inputs.load(config_path);
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      auto w = weights_or_optimal(inputs, w_path, h);
      inputs.note("n=" + std::to_string(n_deg) + " alpha=" + alpha_spec);
      return with_config(cj, [&](auto config) {
        auto setup = make_vanishing_setup(h, config, tuple_cap, g.seed);
        auto alpha = parse_alpha(alpha_spec, config.points.size(), inputs);
        auto ledgers = compute_ledgers(setup, alpha, n_deg);
        json table = json::array();
        std::cout << "flat (color:index)  dim  B per joint\n";
        for (std::size_t f = 0; f < ledgers.size(); ++f) {
          const auto& l = ledgers[f];
          std::ostringstream row;
          row << setup.flats[f].color + 1 << ":" << setup.flats[f].index << "  " << l.k << " ";
          std::uint64_t total = 0;
          for (std::size_t j = 0; j < l.joint_ids.size(); ++j) {
            row << " p" << l.joint_ids[j] << "=" << l.b[j];
            total += l.b[j];
          }
          std::cout << "  " << row.str() << "\n";
          table.push_back({{"color", setup.flats[f].color + 1}, {"flat", setup.flats[f].index}, {"dim", l.k},
                           {"joints", l.joint_ids}, {"B", l.b}, {"B_r", l.b_r}});
          report.add(make_check("sum B = C(n+k,k) on flat " + std::to_string(f), double(total), double(l.full),
                                total == l.full ? 0.0 : -1.0));
        }
        auto gsets = build_G_sets(setup, ledgers, n_deg);
        std::vector<std::uint64_t> sizes;
        for (const auto& gp : gsets.g_p) sizes.push_back(gp.size());
        auto pc = param_counting_check(ledgers, sizes, h.d(), n_deg);
        auto rec = make_check("sum |G_p| >= C(n+d,d)", pc.lhs.template convert_to<double>(), pc.rhs.template convert_to<double>(),
                              pc.slack.template convert_to<double>());
        rec.certificate = {{"ledgers", table}};
        report.add(rec);
        for (std::size_t p = 0; p < sizes.size(); ++p) {
          std::vector<std::uint64_t> by_edge;
          for (const auto& ge : gsets.by_edge[p]) by_edge.push_back(ge.size());
          auto r = lw_step_check(h, w, sizes[p], by_edge, n_deg);
          report.add(make_check("LW-step joint " + std::to_string(p), r.lhs, r.rhs, r.slack, 1e-9));
        }
        auto shifted = alpha;
        for (auto& a : shifted) a += 7;
        auto moved = compute_ledgers(setup, shifted, n_deg);
        bool same = true;
        for (std::size_t f = 0; f < ledgers.size(); ++f) same = same && moved[f].b_r == ledgers[f].b_r;
        report.add(make_check("shift invariance", 1.0, 1.0, same ? 0.0 : -1.0));
        return finish(report, g, inputs, start);
      });
    }
    if (*handicap) {
      auto cj = inputs.load(config_path);
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      auto w = weights_or_optimal(inputs, w_path, h);
      inputs.note("n=" + std::to_string(n_deg) + " delta=" + std::to_string(delta) + " rounds=" + std::to_string(rounds));
      return with_config(cj, [&](auto config) {
        auto setup = make_vanishing_setup(h, config, kDefaultTupleCap, g.seed);
        std::vector<double> W;
        if (w_spec == "uniform")
          W = uniform_W(config.points.size(), h.d());
        else
          W = inputs.load(w_spec).at("W").template get<std::vector<double>>();
        HandicapOptions ho;
        ho.n = n_deg;
        ho.delta = delta;
        ho.max_rounds = rounds;
        auto r = handicap_iteration(setup, w, W, ho);
        CheckRecord dyn = info("handicap dynamic", double(r.rounds), r.delta,
                               to_string(r.status) + ", lambda " + std::to_string(r.lambda));
        dyn.status = r.status == HandicapStatus::MaxRounds ? CheckStatus::Unconverged : CheckStatus::Pass;
        json trace = json::array();
        for (const auto& round : r.trace)
          trace.push_back({{"alpha", round.alpha}, {"w_prime", round.w_prime}, {"block", round.block}});
        dyn.certificate = {{"trace", trace}};
        report.add(dyn);
        auto a = key_inequality_audit(h, w, r.certificate);
        report.add(make_check("condition (1)", 0.0, 0.0, a.worst_point_slack));
        report.add(make_check("condition (2)", 0.0, 0.0, a.worst_flat_slack));
        auto cert = certificate_to_json(r.certificate, h, w);
        if (out_path.empty())
          std::cout << cert.dump(2) << "\n";
        else
          write_json_file(out_path, cert);
        return finish(report, g, inputs, start, out_path.empty());
      });
    }
    if (*audit) {
      auto file = certificate_from_json(inputs.load(cert_path));
      auto a = key_inequality_audit(file.pattern, file.weights, file.certificate, KeyAuditOptions{factor, additive});
      report.add(make_check("condition (1)", 0.0, 0.0, a.worst_point_slack, 0.0,
                            "equalization residual " + std::to_string(a.equalization_residual)));
      report.add(make_check("condition (2)", 0.0, 0.0, a.worst_flat_slack, 0.0,
                            "excess over 1/k! " + std::to_string(a.flat_excess)));
      return finish(report, g, inputs, start);
    }
    if (*simple || *mult) {
      auto cj = inputs.load(config_path);
      auto h = hypergraph_from_json(inputs.load(pattern_path));
      auto w = weights_or_optimal(inputs, w_path, h);
      return with_config(cj, [&](auto config) {
        if (config.points.empty())
          config.points = intersection_candidates(config, candidate_budget);
        auto hits = detect_joints(h, config, config.points, kDefaultTrials, g.seed);
        const double rhs = log2_bound(h, w, config);
        if (*simple) {
          report.add(make_check("listed points are joints", double(hits.size()), double(config.points.size()),
                                hits.size() == config.points.size() ? 0.0 : -1.0));
          const double lhs = std::log2(double(hits.size()));
          report.add(make_check("|J| <= C prod |F_i|^wbar_i", std::exp2(lhs), std::exp2(rhs), rhs - lhs, 1e-9,
                                "log2 form: " + std::to_string(lhs) + " <= " + std::to_string(rhs)));
        } else {
          double total = 0.0;
          bool converged = true;
          for (auto p : hits) {
            auto r = eta_multiplicity(make_eta_problem(h, w, tuple_lists(h, config, p, g.seed)));
            total += r.eta;
            converged = converged && r.converged;
          }
          const double lhs = std::log2(total);
          auto rec = make_check("sum eta <= C prod |F_i|^wbar_i", total, std::exp2(rhs), rhs - lhs, 1e-9,
                                std::to_string(hits.size()) + " joints");
          if (!converged && rec.status == CheckStatus::Pass) rec.status = CheckStatus::Unconverged;
          report.add(rec);
        }
        return finish(report, g, inputs, start);
      });
    }
    if (*suite) {
      AcceptanceOptions o;
      o.seed = g.seed;
      if (only) o.only.insert(static_cast<int>(only));
      std::vector<CriterionResult> results;
      for (int id = 1; id <= kCriterionCount; ++id) {
        if (!o.only.empty() && !o.only.count(id)) continue;
        results.push_back(run_criterion(id, o));
        std::cout << criterion_line(results.back()) << std::endl;
      }
      auto rep = acceptance_report(results, g.seed);
      if (!g.json_path.empty()) write_json_file(g.json_path, report_to_json(rep));
      return rep.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
