#include "hjoints/io.hpp"

#include <fstream>

namespace hjoints {

namespace {

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return guarded([&] { return nlohmann::json::parse(in); });
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["d"] = h.d();
  j["edges"] = nlohmann::json::array();
  for (auto e : h.edges()) j["edges"].push_back(set_members(e));
  j["colors"] = h.colors();
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  return guarded([&] {
    auto edges = j.at("edges").get<std::vector<std::vector<unsigned>>>();
    std::vector<unsigned> colors;
    if (j.contains("colors")) colors = j.at("colors").get<std::vector<unsigned>>();
    return Hypergraph::from_lists(j.at("d").get<unsigned>(), edges, colors);
  });
}

nlohmann::json simple_to_json(const SimpleHypergraph& g) {
  nlohmann::json j;
  j["d"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (auto e : g.edges) j["edges"].push_back(set_members(e));
  return j;
}

SimpleHypergraph simple_from_json(const nlohmann::json& j) {
  return guarded([&] {
    return simple_from_lists(j.at("d").get<unsigned>(), j.at("edges").get<std::vector<std::vector<unsigned>>>());
  });
}

nlohmann::json weights_to_json(const WeightFunction& w) {
  nlohmann::json j;
  j["weights"] = nlohmann::json::array();
  for (const auto& x : w.weights) j["weights"].push_back(format_rational(x));
  return j;
}

WeightFunction weights_from_json(const nlohmann::json& j) {
  return guarded([&] {
    WeightFunction w;
    for (const auto& x : j.at("weights")) w.weights.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
    return w;
  });
}

nlohmann::json certificate_to_json(const KeyCertificate& cert, const Hypergraph& h, const WeightFunction& w) {
  nlohmann::json j;
  j["pattern"] = hypergraph_to_json(h);
  j["weights"] = weights_to_json(w)["weights"];
  j["n"] = cert.n;
  j["delta"] = cert.delta;
  j["lambda"] = cert.lambda;
  j["status"] = cert.status;
  j["W"] = cert.W;
  j["b"] = nlohmann::json::array();
  for (const auto& e : cert.b)
    j["b"].push_back({{"joint", e.joint}, {"color", e.color}, {"flat", e.flat}, {"dim", e.dim}, {"b", e.b}});
  j["tuples"] = cert.tuples;
  return j;
}

CertificateFile certificate_from_json(const nlohmann::json& j) {
  return guarded([&] {
    CertificateFile file;
    file.pattern = hypergraph_from_json(j.at("pattern"));
    nlohmann::json wj;
    wj["weights"] = j.at("weights");
    file.weights = weights_from_json(wj);
    auto& c = file.certificate;
    c.n = j.at("n").get<unsigned>();
    c.delta = j.value("delta", 0.0);
    c.lambda = j.value("lambda", 0.0);
    c.status = j.value("status", "");
    c.W = j.at("W").get<std::vector<double>>();
    for (const auto& e : j.at("b"))
      c.b.push_back({e.at("joint").get<std::size_t>(), e.at("color").get<unsigned>(), e.at("flat").get<std::size_t>(),
                     e.at("dim").get<unsigned>(), e.at("b").get<double>()});
    c.tuples = j.at("tuples").get<std::vector<std::vector<std::vector<std::size_t>>>>();
    return file;
  });
}

FieldSpec field_spec_of(const nlohmann::json& config) {
  return guarded([&] {
    FieldSpec spec;
    auto kind = config.value("field", "prime");
    if (kind == "rational") {
      spec.kind = FieldKind::Rational;
    } else if (kind == "prime") {
      spec.modulus = config.value("modulus", kDefaultPrime);
    } else {
      throw Error(ErrorCode::ParseError, "unknown field '" + kind + "'");
    }
    return spec;
  });
}

nlohmann::json field_spec_to_json(const PrimeField& f) { return {{"field", "prime"}, {"modulus", f.characteristic()}}; }

nlohmann::json field_spec_to_json(const RationalField&) { return {{"field", "rational"}}; }

PrimeField make_field(const FieldSpec& spec) { return PrimeField(spec.modulus); }

}  // namespace hjoints
