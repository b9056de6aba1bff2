#include "hjoints/key_inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace hjoints {

KeyAuditReport key_inequality_audit(const Hypergraph& h, const WeightFunction& w, const KeyCertificate& cert,
                                    KeyAuditOptions options) {
  check_weight_shape(h, w);
  const double excess = to_double(total_weight(w) - 1);
  if (excess <= 0.0) throw Error(ErrorCode::InvalidArgument, "|w| must exceed 1");
  if (cert.tuples.size() != cert.W.size()) throw Error(ErrorCode::SizeMismatch, "one W entry and tuple list per joint");

  std::map<std::tuple<std::size_t, unsigned, std::size_t>, double> lookup;
  std::map<std::pair<unsigned, std::size_t>, FlatAudit> flats;
  for (const auto& e : cert.b) {
    lookup[{e.joint, e.color, e.flat}] = e.b;
    auto& f = flats[{e.color, e.flat}];
    f.color = e.color;
    f.flat = e.flat;
    f.dim = e.dim;
    f.sum += e.b;
  }

  KeyAuditReport out;
  out.condition1 = true;
  out.condition2 = true;
  out.worst_point_slack = std::numeric_limits<double>::infinity();
  out.worst_flat_slack = std::numeric_limits<double>::infinity();
  out.flat_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < cert.W.size(); ++p) {
    PointAudit a;
    a.joint = p;
    a.W = cert.W[p];
    a.min_product = std::numeric_limits<double>::infinity();
    for (const auto& t : cert.tuples[p]) {
      if (t.size() != h.num_edges()) throw Error(ErrorCode::SizeMismatch, "tuple length differs from edge count");
      double log_prod = 0.0;
      for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const double we = to_double(w.weights[e]);
        if (we == 0.0) continue;
        auto it = lookup.find({p, h.color(e) - 1, t[e]});
        const double b = it == lookup.end() ? 0.0 : it->second;
        log_prod += b > 0.0 ? we * std::log(b) : -std::numeric_limits<double>::infinity();
      }
      a.min_product = std::min(a.min_product, std::exp(log_prod / excess));
    }
    if (cert.tuples[p].empty()) a.min_product = 0.0;
    a.ratio = a.W > 0.0 ? a.min_product / a.W : 0.0;
    a.slack = a.min_product - options.factor * a.W;
    out.condition1 = out.condition1 && a.slack >= 0.0;
    out.worst_point_slack = std::min(out.worst_point_slack, a.slack);
    out.points.push_back(a);
  }
  if (!out.points.empty()) {
    double mean = 0.0;
    for (const auto& a : out.points) mean += a.ratio;
    mean /= static_cast<double>(out.points.size());
    for (const auto& a : out.points)
      out.equalization_residual = std::max(out.equalization_residual, mean > 0.0 ? std::abs(a.ratio / mean - 1.0) : 0.0);
  }
  for (auto& [key, f] : flats) {
    f.cap = 1.0 / std::tgamma(static_cast<double>(f.dim) + 1.0);
    f.slack = f.cap + options.additive - f.sum;
    out.condition2 = out.condition2 && f.slack >= 0.0;
    out.worst_flat_slack = std::min(out.worst_flat_slack, f.slack);
    out.flat_excess = std::max(out.flat_excess, f.sum - f.cap);
    out.flats.push_back(f);
  }
  return out;
}

}  // namespace hjoints

#include "hjoints/handicap.hpp"

namespace hjoints {

std::string to_string(HandicapStatus status) {
  switch (status) {
    case HandicapStatus::Converged:
      return "converged";
    case HandicapStatus::Cycle:
      return "cycle";
    case HandicapStatus::MaxRounds:
      return "max-rounds";
  }
  return "unknown";
}

double default_delta(unsigned n) { return n > 1 ? 1.0 / std::log(static_cast<double>(n)) : 1.0; }

std::uint64_t handicap_hash(const std::vector<std::int64_t>& alpha) {
  std::int64_t low = alpha.empty() ? 0 : *std::min_element(alpha.begin(), alpha.end());
  std::uint64_t hash = 14695981039346656037ULL;
  for (auto a : alpha) {
    auto x = static_cast<std::uint64_t>(a - low);
    for (int i = 0; i < 8; ++i) {
      hash ^= (x >> (8 * i)) & 0xff;
      hash *= 1099511628211ULL;
    }
  }
  return hash;
}

std::vector<double> uniform_W(std::size_t joints, unsigned d) {
  return std::vector<double>(joints, 1.0 / (static_cast<double>(joints) * std::tgamma(d + 1.0)));
}

}  // namespace hjoints
