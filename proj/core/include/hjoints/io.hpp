#pragma once

#include "hjoints/extremal.hpp"
#include "hjoints/key_inequality.hpp"
#include "hjoints/witness.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace hjoints {

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

// {"d": 3, "edges": [[1,2],[1,3],[2,3]], "colors": [1,1,1]}
nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

// Hosts use the same layout without colors; edges may have any size up to d.
nlohmann::json simple_to_json(const SimpleHypergraph& g);
SimpleHypergraph simple_from_json(const nlohmann::json& j);

// {"weights": ["1/2", "1/2", "1/2"]}
nlohmann::json weights_to_json(const WeightFunction& w);
WeightFunction weights_from_json(const nlohmann::json& j);

struct CertificateFile {
  KeyCertificate certificate;
  Hypergraph pattern;
  WeightFunction weights;
};

nlohmann::json certificate_to_json(const KeyCertificate& cert, const Hypergraph& h, const WeightFunction& w);
CertificateFile certificate_from_json(const nlohmann::json& j);

enum class FieldKind { Prime, Rational };

struct FieldSpec {
  FieldKind kind = FieldKind::Prime;
  std::uint64_t modulus = kDefaultPrime;
};

FieldSpec field_spec_of(const nlohmann::json& config);
nlohmann::json field_spec_to_json(const PrimeField& f);
nlohmann::json field_spec_to_json(const RationalField& f);

PrimeField make_field(const FieldSpec& spec);

template <class Field>
nlohmann::json flat_to_json(const Field& field, const Flat<Field>& f) {
  nlohmann::json j;
  j["basepoint"] = nlohmann::json::array();
  for (const auto& x : f.basepoint) j["basepoint"].push_back(field.format(x));
  j["directions"] = nlohmann::json::array();
  for (const auto& row : f.directions) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(field.format(x));
    j["directions"].push_back(std::move(r));
  }
  return j;
}

template <class Field>
Vec<typename Field::value_type> vec_from_json(const Field& field, const nlohmann::json& j) {
  Vec<typename Field::value_type> v;
  for (const auto& x : j) v.push_back(field.parse(x.is_string() ? x.get<std::string>() : x.dump()));
  return v;
}

template <class Field>
Flat<Field> flat_from_json(const Field& field, const nlohmann::json& j) {
  auto base = vec_from_json(field, j.at("basepoint"));
  Mat<typename Field::value_type> dirs;
  for (const auto& r : j.at("directions")) dirs.push_back(vec_from_json(field, r));
  return make_flat(field, std::move(base), std::move(dirs));
}

template <class Field>
nlohmann::json config_to_json(const JointsConfiguration<Field>& c) {
  nlohmann::json j = field_spec_to_json(c.field);
  j["d"] = c.d;
  j["provenance"] = c.provenance;
  j["families"] = nlohmann::json::array();
  for (const auto& fam : c.families) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : fam) arr.push_back(flat_to_json(c.field, f));
    j["families"].push_back(std::move(arr));
  }
  j["points"] = nlohmann::json::array();
  for (const auto& p : c.points) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : p) r.push_back(c.field.format(x));
    j["points"].push_back(std::move(r));
  }
  if (!c.flat_labels.empty()) {
    j["flat_labels"] = nlohmann::json::array();
    for (const auto& fam : c.flat_labels) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto s : fam) arr.push_back(set_members(s));
      j["flat_labels"].push_back(std::move(arr));
    }
  }
  if (!c.point_labels.empty()) {
    j["point_labels"] = nlohmann::json::array();
    for (auto s : c.point_labels) j["point_labels"].push_back(set_members(s));
  }
  return j;
}

template <class Field>
JointsConfiguration<Field> config_from_json(const Field& field, const nlohmann::json& j) {
  try {
    JointsConfiguration<Field> c;
    c.field = field;
    c.d = j.at("d").get<std::size_t>();
    c.provenance = j.value("provenance", "custom");
    for (const auto& fam : j.at("families")) {
      std::vector<Flat<Field>> flats;
      for (const auto& f : fam) {
        flats.push_back(flat_from_json(field, f));
        if (flats.back().ambient != c.d) throw Error(ErrorCode::DimensionMismatch, "flat ambient differs from d");
      }
      c.families.push_back(std::move(flats));
    }
    for (const auto& p : j.value("points", nlohmann::json::array())) {
      c.points.push_back(vec_from_json(field, p));
      if (c.points.back().size() != c.d) throw Error(ErrorCode::DimensionMismatch, "point length differs from d");
    }
    if (j.contains("flat_labels"))
      for (const auto& fam : j.at("flat_labels")) {
        std::vector<VertexSet> labels;
        for (const auto& s : fam) labels.push_back(make_set(s.get<std::vector<unsigned>>()));
        c.flat_labels.push_back(std::move(labels));
      }
    if (j.contains("point_labels"))
      for (const auto& s : j.at("point_labels")) c.point_labels.push_back(make_set(s.get<std::vector<unsigned>>()));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace hjoints
