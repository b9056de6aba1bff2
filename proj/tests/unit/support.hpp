#pragma once

#include "hjoints/configuration.hpp"
#include "hjoints/fractional_cover.hpp"
#include "hjoints/vanishing.hpp"
#include "hjoints/witness.hpp"

#include <string>

namespace hjoints::testing {

inline SimpleHypergraph complete_host(unsigned m, unsigned s) {
  return make_simple(m, complete_hypergraph(m, s).edges());
}

// Generic configuration induced by K_m^{(d-1)} for the pattern h (edges of size d-1).
inline JointsConfiguration<PrimeField> generic_config(const Hypergraph& h, unsigned m, std::uint64_t seed = 7) {
  PrimeField field;
  auto fam = generic_hyperplanes(field, m, h.d(), seed);
  return generically_induced(field, complete_host(m, h.d() - 1), h, fam, true, seed);
}

template <class Field>
std::vector<std::vector<std::size_t>> tuple_lists(const Hypergraph& h, const JointsConfiguration<Field>& config,
                                                  std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& t : enumerate_witness_tuples(h, config, config.points[p], kDefaultTupleCap))
    out.push_back(std::move(t.flats));
  return out;
}

inline std::string fixture(const std::string& name) { return std::string(HJOINTS_FIXTURE_DIR) + "/" + name; }

}  // namespace hjoints::testing
