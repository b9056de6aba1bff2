#pragma once

#include "hjoints/error.hpp"
#include "hjoints/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hjoints {

// Candidate values b_{p,F} with the data needed to audit them without geometry.
struct KeyCertificate {
  struct Entry {
    std::size_t joint = 0;
    unsigned color = 0;  // 0-based family
    std::size_t flat = 0;
    unsigned dim = 0;
    double b = 0.0;
  };

  unsigned n = 0;
  double delta = 0.0;
  double lambda = 0.0;
  std::string status;
  std::vector<double> W;
  std::vector<Entry> b;
  // tuples[p][t][e]: flat index, in family c(e)-1, of tuple t in T_p.
  std::vector<std::vector<std::vector<std::size_t>>> tuples;
};

struct KeyAuditOptions {
  double factor = 0.8;
  double additive = 0.1;
};

struct PointAudit {
  std::size_t joint = 0;
  double min_product = 0.0;  // min over T_p of (prod_e b^{w(e)})^{1/(|w|-1)}
  double W = 0.0;
  double ratio = 0.0;        // min_product / W
  double slack = 0.0;        // min_product - factor * W
};

struct FlatAudit {
  unsigned color = 0;
  std::size_t flat = 0;
  unsigned dim = 0;
  double sum = 0.0;
  double cap = 0.0;    // 1/dim!
  double slack = 0.0;  // cap + additive - sum
};

struct KeyAuditReport {
  bool condition1 = false;
  bool condition2 = false;
  double worst_point_slack = 0.0;
  double worst_flat_slack = 0.0;
  // max over flats of sum - 1/dim!, the exact-form excess of condition (2).
  double flat_excess = 0.0;
  // max over joints of |ratio / mean ratio - 1|, the spread of condition (1) around lambda.
  double equalization_residual = 0.0;
  std::vector<PointAudit> points;
  std::vector<FlatAudit> flats;
};

KeyAuditReport key_inequality_audit(const Hypergraph& h, const WeightFunction& w, const KeyCertificate& cert,
                                    KeyAuditOptions options = {});

}  // namespace hjoints
