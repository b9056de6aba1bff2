#pragma once

#include "hjoints/witness.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace hjoints {

using Exponent = std::vector<unsigned>;

// Exponents of total degree r in k variables, decreasing lexicographic order.
std::vector<Exponent> compositions(unsigned k, unsigned r);

// All exponents of degree <= n, grouped by degree (0 first), each degree in
// decreasing lexicographic order.
struct MonomialBasis {
  unsigned k = 0;
  unsigned n = 0;
  std::vector<Exponent> exps;
  std::map<Exponent, std::size_t> index;
};
MonomialBasis monomial_basis(unsigned k, unsigned n);

// C(n, k) as an exact integer, 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

template <class Field>
using Polynomial = std::map<Exponent, typename Field::value_type>;

template <class Field>
typename Field::value_type field_binomial(const Field& field, unsigned a, unsigned b) {
  return field.from_rational(Rational(binomial(a, b)));
}

// x^beta -> prod_j C(beta_j, gamma_j) x^(beta - gamma), zero when some beta_j < gamma_j.
template <class Field>
Polynomial<Field> hasse_derivative(const Field& field, const Polynomial<Field>& poly, const Exponent& gamma) {
  Polynomial<Field> out;
  for (const auto& [beta, coef] : poly) {
    if (beta.size() != gamma.size()) throw Error(ErrorCode::DimensionMismatch, "exponent length differs");
    Exponent rest(beta.size());
    auto c = coef;
    bool vanish = false;
    for (std::size_t j = 0; j < beta.size() && !vanish; ++j) {
      if (beta[j] < gamma[j]) {
        vanish = true;
        break;
      }
      rest[j] = beta[j] - gamma[j];
      c *= field_binomial(field, beta[j], gamma[j]);
    }
    if (vanish || is_zero(c)) continue;
    auto [it, fresh] = out.emplace(rest, c);
    if (!fresh) it->second += c;
    if (is_zero(it->second)) out.erase(it);
  }
  return out;
}

// A(y) = origin + sum_m y_m columns[m], a bijection F^k -> F.
template <class Field>
struct Chart {
  Vec<typename Field::value_type> origin;
  Mat<typename Field::value_type> columns;
};

template <class Field>
Chart<Field> canonical_chart(const Flat<Field>& flat, const Vec<typename Field::value_type>& point) {
  return Chart<Field>{point, flat.directions};
}

// Reference coordinates of the flat are read off at its pivot columns. The
// chart in those coordinates is x = c + M y.
template <class Field>
struct ChartPullback {
  Vec<typename Field::value_type> c;
  Mat<typename Field::value_type> m;
};

template <class Field>
ChartPullback<Field> chart_pullback(const Field& field, const Flat<Field>& flat, const Chart<Field>& chart) {
  using T = typename Field::value_type;
  const std::size_t k = flat.dim();
  if (chart.columns.size() != k) throw Error(ErrorCode::ChartMissing, "chart has the wrong number of columns");
  if (!flat_contains(flat, chart.origin)) throw Error(ErrorCode::ChartMissing, "chart origin is not on the flat");
  ChartPullback<Field> out;
  out.c.assign(k, field.zero());
  out.m.assign(k, Vec<T>(k, field.zero()));
  for (std::size_t l = 0; l < k; ++l) {
    out.c[l] = chart.origin[flat.pivots[l]] - flat.basepoint[flat.pivots[l]];
    for (std::size_t m = 0; m < k; ++m) out.m[l][m] = chart.columns[m][flat.pivots[l]];
  }
  for (const auto& col : chart.columns)
    if (!in_direction_space(flat, col)) throw Error(ErrorCode::ChartMissing, "chart column leaves the flat");
  if (k > 0 && is_zero(determinant(field, out.m))) throw Error(ErrorCode::ChartMissing, "chart is not injective");
  return out;
}

// q[gamma][beta] = coefficient of y^gamma in (x^beta)(c + M y): the value of
// the functional g -> H^gamma(g o A)(0) on the monomial x^beta.
template <class Field>
Mat<typename Field::value_type> functional_matrix(const Field& field, const MonomialBasis& basis,
                                                  const ChartPullback<Field>& pb) {
  using T = typename Field::value_type;
  const std::size_t size = basis.exps.size();
  const unsigned k = basis.k;
  std::vector<std::vector<std::size_t>> up(size, std::vector<std::size_t>(k, size));
  for (std::size_t i = 0; i < size; ++i) {
    Exponent e = basis.exps[i];
    for (unsigned m = 0; m < k; ++m) {
      ++e[m];
      auto it = basis.index.find(e);
      if (it != basis.index.end()) up[i][m] = it->second;
      --e[m];
    }
  }
  // pullback[beta] holds coefficients over the y-monomials.
  Mat<T> pullback(size);
  Mat<T> q(size, Vec<T>(size, field.zero()));
  for (std::size_t b = 0; b < size; ++b) {
    const Exponent& beta = basis.exps[b];
    Vec<T> poly(size, field.zero());
    if (b == 0) {
      poly[0] = field.one();
    } else {
      unsigned l = 0;
      while (beta[l] == 0) ++l;
      Exponent lower = beta;
      --lower[l];
      const Vec<T>& prev = pullback[basis.index.at(lower)];
      for (std::size_t g = 0; g < size; ++g) {
        if (is_zero(prev[g])) continue;
        poly[g] += prev[g] * pb.c[l];
        for (unsigned m = 0; m < k; ++m) {
          if (is_zero(pb.m[l][m])) continue;
          if (up[g][m] == size) throw Error(ErrorCode::DegreeOverflow, "pullback degree exceeds n");
          poly[up[g][m]] += prev[g] * pb.m[l][m];
        }
      }
    }
    for (std::size_t g = 0; g < size; ++g) q[g][b] = poly[g];
    pullback[b] = std::move(poly);
  }
  return q;
}

template <class Field>
Vec<typename Field::value_type> functional_row(const Field& field, const Flat<Field>& flat, const Chart<Field>& chart,
                                               const Exponent& gamma, unsigned n) {
  unsigned total = 0;
  for (unsigned g : gamma) total += g;
  if (total > n) throw Error(ErrorCode::DegreeOverflow, "|gamma| exceeds n");
  if (gamma.size() != flat.dim()) throw Error(ErrorCode::DimensionMismatch, "gamma length differs from dim F");
  auto basis = monomial_basis(static_cast<unsigned>(flat.dim()), n);
  auto q = functional_matrix(field, basis, chart_pullback(field, flat, chart));
  return q[basis.index.at(gamma)];
}

// Incremental row echelon store; rows are reduced in insertion order.
template <class Field>
class EchelonStore {
 public:
  using T = typename Field::value_type;

  EchelonStore(const Field& field, std::size_t cols) : field_(field), cols_(cols) {}

  // True when the row is independent of the stored rows (and is then stored).
  bool add(Vec<T> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      T f = row[pivots_[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(rows_[i][j])) row[j] -= f * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < cols_ && is_zero(row[p])) ++p;
    if (p == cols_) return false;
    T inv = field_.one() / row[p];
    for (auto& x : row) x *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  Field field_;
  std::size_t cols_;
  Mat<T> rows_;
  std::vector<std::size_t> pivots_;
};

template <class Field>
struct LedgerJoint {
  std::size_t id = 0;
  std::size_t rank = 0;  // position in the preassigned order
  std::int64_t alpha = 0;
  Chart<Field> chart;
  int chart_edge = -1;  // edge whose witness chart was used, -1 for the canonical chart
};

// Outcome of the priority-order elimination on one flat.
struct BasisLedger {
  unsigned k = 0;
  unsigned n = 0;
  std::vector<std::size_t> joint_ids;
  std::vector<std::size_t> ranks;
  std::vector<std::int64_t> alphas;
  std::vector<int> chart_edges;
  std::vector<std::vector<std::uint64_t>> b_r;  // [joint][r]
  std::vector<std::uint64_t> b;                 // [joint]
  std::vector<std::vector<Exponent>> g;         // [joint] selected gammas in selection order
  std::uint64_t rank = 0;
  std::uint64_t full = 0;  // C(n + k, k)

  std::size_t local(std::size_t joint_id) const {
    auto it = std::find(joint_ids.begin(), joint_ids.end(), joint_id);
    if (it == joint_ids.end()) throw Error(ErrorCode::InvalidArgument, "joint not on this flat");
    return static_cast<std::size_t>(it - joint_ids.begin());
  }
};

// FNV-1a over every count and selected gamma.
std::uint64_t ledger_hash(const BasisLedger& ledger);

template <class Field>
BasisLedger compute_B_counts(const Field& field, const Flat<Field>& flat, const std::vector<LedgerJoint<Field>>& joints,
                             unsigned n) {
  const unsigned k = static_cast<unsigned>(flat.dim());
  auto basis = monomial_basis(k, n);
  const std::size_t size = basis.exps.size();
  BasisLedger ledger;
  ledger.k = k;
  ledger.n = n;
  ledger.full = size;
  const std::size_t count = joints.size();
  ledger.b_r.assign(count, std::vector<std::uint64_t>(n + 1, 0));
  ledger.b.assign(count, 0);
  ledger.g.assign(count, {});
  std::vector<Mat<typename Field::value_type>> tables(count);
  for (std::size_t j = 0; j < count; ++j) {
    ledger.joint_ids.push_back(joints[j].id);
    ledger.ranks.push_back(joints[j].rank);
    ledger.alphas.push_back(joints[j].alpha);
    ledger.chart_edges.push_back(joints[j].chart_edge);
  }
  std::vector<std::vector<std::size_t>> by_degree(n + 1);
  for (std::size_t i = 0; i < size; ++i) {
    unsigned deg = 0;
    for (unsigned x : basis.exps[i]) deg += x;
    by_degree[deg].push_back(i);
  }
  // (r - alpha, rank, joint, r)
  std::vector<std::tuple<std::int64_t, std::size_t, std::size_t, unsigned>> pairs;
  for (std::size_t j = 0; j < count; ++j)
    for (unsigned r = 0; r <= n; ++r) pairs.emplace_back(static_cast<std::int64_t>(r) - joints[j].alpha, joints[j].rank, j, r);
  std::sort(pairs.begin(), pairs.end());
  EchelonStore<Field> store(field, size);
  for (const auto& [key, rank, j, r] : pairs) {
    if (store.rank() == size) break;
    if (tables[j].empty()) tables[j] = functional_matrix(field, basis, chart_pullback(field, flat, joints[j].chart));
    for (std::size_t gi : by_degree[r]) {
      if (store.add(tables[j][gi])) {
        ++ledger.b_r[j][r];
        ++ledger.b[j];
        ledger.g[j].push_back(basis.exps[gi]);
      }
    }
  }
  ledger.rank = store.rank();
  return ledger;
}

// pi^(e): coordinates outside e, increasing.
Exponent project_exponent(const Exponent& gamma, VertexSet edge);

// All gamma in Z^d with |gamma| <= n whose projections lie in every G_{p,e}.
std::vector<Exponent> assemble_G_p(const Hypergraph& h, const std::vector<std::vector<Exponent>>& g_by_edge, unsigned n);

struct LogCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

// log2 |G_p| - d log2(n+1) <= sum_e sigma_e (log2 |G_{p,e}| - (d - |e|) log2(n+1)).
LogCheck lw_step_check(const Hypergraph& h, const WeightFunction& w, std::uint64_t g_p,
                       const std::vector<std::uint64_t>& g_by_edge, unsigned n);

struct CountCheck {
  BigInt lhs;
  BigInt rhs;
  BigInt slack;
};

// Verifies every ledger used the same preassigned order and handicap
// (InconsistentLedgers otherwise), then returns sum_p |G_p| - C(n + d, d).
CountCheck param_counting_check(const std::vector<BasisLedger>& ledgers, const std::vector<std::uint64_t>& g_sizes,
                                unsigned d, unsigned n);

struct FlatRef {
  unsigned color = 0;  // 0-based family
  std::size_t index = 0;
  friend auto operator<=>(const FlatRef&, const FlatRef&) = default;
};

// Everything the engine needs about a configuration, fixed once.
template <class Field>
struct VanishingSetup {
  Hypergraph h;
  JointsConfiguration<Field> config;
  std::vector<std::vector<WitnessTuple<Field>>> tuples;  // T_p per joint
  std::vector<std::size_t> fixed;                        // tuple index holding the fixed witness
  std::vector<std::size_t> rank;                         // preassigned order position per joint
  std::vector<FlatRef> flats;                            // flats used by some tuple
  std::vector<std::vector<std::size_t>> joints_on;       // per used flat, joints lying on it
  std::vector<std::vector<std::size_t>> used_by;         // per joint, used-flat indices
};

inline constexpr std::size_t kDefaultTupleCap = 100000;

template <class Field>
VanishingSetup<Field> make_vanishing_setup(const Hypergraph& h, const JointsConfiguration<Field>& config,
                                           std::size_t tuple_cap = kDefaultTupleCap, std::uint64_t seed = 0) {
  VanishingSetup<Field> s{h, config, {}, {}, {}, {}, {}, {}};
  const std::size_t count = config.points.size();
  s.tuples.resize(count);
  parallel_for(count, [&](std::size_t p) {
    s.tuples[p] = enumerate_witness_tuples(h, config, config.points[p], tuple_cap, kDefaultTrials, derive_seed(seed, p));
  });
  for (std::size_t p = 0; p < count; ++p) {
    if (s.tuples[p].empty()) throw Error(ErrorCode::EmptyTupleSet, "point " + std::to_string(p) + " is not a joint");
    std::size_t pick = 0;
    while (pick < s.tuples[p].size() && s.tuples[p][pick].columns.empty()) ++pick;
    if (pick == s.tuples[p].size()) throw Error(ErrorCode::ChartMissing, "no explicit witness at point " + std::to_string(p));
    s.fixed.push_back(pick);
  }
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t p = 0; p < count; ++p) keyed.emplace_back(vec_key(config.field, config.points[p]), p);
  std::sort(keyed.begin(), keyed.end());
  s.rank.assign(count, 0);
  for (std::size_t i = 0; i < keyed.size(); ++i) s.rank[keyed[i].second] = i;

  std::set<FlatRef> used;
  for (std::size_t p = 0; p < count; ++p)
    for (const auto& t : s.tuples[p])
      for (std::size_t e = 0; e < h.num_edges(); ++e) used.insert(FlatRef{h.color(e) - 1, t.flats[e]});
  s.flats.assign(used.begin(), used.end());
  s.joints_on.resize(s.flats.size());
  for (std::size_t f = 0; f < s.flats.size(); ++f) {
    const auto& flat = config.families[s.flats[f].color][s.flats[f].index];
    for (std::size_t p = 0; p < count; ++p)
      if (flat_contains(flat, config.points[p])) s.joints_on[f].push_back(p);
  }
  s.used_by.resize(count);
  for (std::size_t p = 0; p < count; ++p) {
    std::set<std::size_t> mine;
    for (const auto& t : s.tuples[p])
      for (std::size_t e = 0; e < h.num_edges(); ++e) {
        FlatRef ref{h.color(e) - 1, t.flats[e]};
        mine.insert(static_cast<std::size_t>(std::lower_bound(s.flats.begin(), s.flats.end(), ref) - s.flats.begin()));
      }
    s.used_by[p].assign(mine.begin(), mine.end());
  }
  return s;
}

template <class Field>
std::size_t flat_slot(const VanishingSetup<Field>& s, FlatRef ref) {
  auto it = std::lower_bound(s.flats.begin(), s.flats.end(), ref);
  if (it == s.flats.end() || !(*it == ref)) throw Error(ErrorCode::InvalidArgument, "flat is not used by any joint");
  return static_cast<std::size_t>(it - s.flats.begin());
}

// Chart for joint p on used flat f: the witness chart A_p o iota^(e) when the
// fixed tuple of p uses f for edge e, else the canonical chart at p.
template <class Field>
LedgerJoint<Field> ledger_joint(const VanishingSetup<Field>& s, std::size_t f, std::size_t p,
                                const std::vector<std::int64_t>& alpha) {
  const auto& flat = s.config.families[s.flats[f].color][s.flats[f].index];
  LedgerJoint<Field> j;
  j.id = p;
  j.rank = s.rank[p];
  j.alpha = alpha[p];
  j.chart = canonical_chart(flat, s.config.points[p]);
  const auto& t = s.tuples[p][s.fixed[p]];
  for (std::size_t e = 0; e < s.h.num_edges(); ++e) {
    if (s.h.color(e) - 1 != s.flats[f].color || t.flats[e] != s.flats[f].index) continue;
    Mat<typename Field::value_type> cols;
    for (unsigned v = 1; v <= s.h.d(); ++v)
      if (!contains_vertex(s.h.edge(e), v)) cols.push_back(t.columns[v - 1]);
    j.chart.columns = std::move(cols);
    j.chart_edge = static_cast<int>(e);
    break;
  }
  return j;
}

template <class Field>
std::vector<BasisLedger> compute_ledgers(const VanishingSetup<Field>& s, const std::vector<std::int64_t>& alpha,
                                         unsigned n) {
  if (alpha.size() != s.config.points.size()) throw Error(ErrorCode::SizeMismatch, "one handicap entry per joint");
  std::vector<BasisLedger> out(s.flats.size());
  parallel_for(s.flats.size(), [&](std::size_t f) {
    std::vector<LedgerJoint<Field>> joints;
    for (std::size_t p : s.joints_on[f]) joints.push_back(ledger_joint(s, f, p, alpha));
    const auto& flat = s.config.families[s.flats[f].color][s.flats[f].index];
    out[f] = compute_B_counts(s.config.field, flat, joints, n);
  });
  return out;
}

// G_{p,e} for the fixed tuple of every joint, then G_p.
template <class Field>
struct GSets {
  std::vector<std::vector<std::vector<Exponent>>> by_edge;  // [p][e]
  std::vector<std::vector<Exponent>> g_p;
};

template <class Field>
GSets<Field> build_G_sets(const VanishingSetup<Field>& s, const std::vector<BasisLedger>& ledgers, unsigned n) {
  GSets<Field> out;
  const std::size_t count = s.config.points.size();
  out.by_edge.resize(count);
  out.g_p.resize(count);
  for (std::size_t p = 0; p < count; ++p) {
    const auto& t = s.tuples[p][s.fixed[p]];
    for (std::size_t e = 0; e < s.h.num_edges(); ++e) {
      std::size_t f = flat_slot(s, FlatRef{s.h.color(e) - 1, t.flats[e]});
      const auto& ledger = ledgers[f];
      std::size_t local = ledger.local(p);
      if (ledger.chart_edges[local] != static_cast<int>(e))
        throw Error(ErrorCode::ChartMissing, "ledger for the fixed flat did not use the witness chart");
      out.by_edge[p].push_back(ledger.g[local]);
    }
    out.g_p[p] = assemble_G_p(s.h, out.by_edge[p], n);
  }
  return out;
}

template <class Field>
std::uint64_t b_value(const VanishingSetup<Field>& s, const std::vector<BasisLedger>& ledgers, std::size_t p, FlatRef ref) {
  const auto& ledger = ledgers[flat_slot(s, ref)];
  return ledger.b[ledger.local(p)];
}

// Joints sharing a used flat are adjacent; throws NotConnected otherwise.
template <class Field>
void check_connected(const VanishingSetup<Field>& s) {
  const std::size_t count = s.config.points.size();
  std::vector<std::size_t> parent(count);
  for (std::size_t i = 0; i < count; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::size_t>> users(s.flats.size());
  for (std::size_t p = 0; p < count; ++p)
    for (auto f : s.used_by[p]) users[f].push_back(p);
  for (const auto& u : users)
    for (std::size_t i = 1; i < u.size(); ++i) parent[find(u[i])] = find(u[0]);
  for (std::size_t p = 1; p < count; ++p)
    if (find(p) != find(0)) throw Error(ErrorCode::NotConnected, "configuration splits into separate components");
}

template <class Field>
BasisLedger single_ledger(const VanishingSetup<Field>& s, std::size_t f, const std::vector<std::int64_t>& alpha,
                          unsigned n) {
  std::vector<LedgerJoint<Field>> joints;
  for (std::size_t p : s.joints_on[f]) joints.push_back(ledger_joint(s, f, p, alpha));
  const auto& flat = s.config.families[s.flats[f].color][s.flats[f].index];
  return compute_B_counts(s.config.field, flat, joints, n);
}

// alpha1_p - alpha1_q <= alpha2_p - alpha2_q for every q on the flat.
bool mono_hypothesis(const std::vector<std::int64_t>& alpha1, const std::vector<std::int64_t>& alpha2, std::size_t p,
                     const std::vector<std::size_t>& on_flat);

// sum_q |(alpha1_q - alpha1_p) - (alpha2_q - alpha2_p)| over q on the flat.
std::int64_t lip_distance(const std::vector<std::int64_t>& alpha1, const std::vector<std::int64_t>& alpha2,
                          std::size_t p, const std::vector<std::size_t>& on_flat);

struct DomainSweep {
  std::int64_t threshold = -1;  // smallest gap with B = 0, -1 if never reached
  bool stays_zero = false;      // B stayed 0 on the extra gaps checked past the threshold
  std::vector<std::uint64_t> counts;
};

// Pushes alpha_p to (min over the other joints on the flat) - gap for
// gap = 0..max_gap and records B_{p,F}.
template <class Field>
DomainSweep bdd_domain_sweep(const VanishingSetup<Field>& s, std::size_t f, std::size_t p,
                             std::vector<std::int64_t> alpha, unsigned n, std::int64_t max_gap,
                             std::int64_t confirm = 3) {
  DomainSweep out;
  std::int64_t floor = std::numeric_limits<std::int64_t>::max();
  for (std::size_t q : s.joints_on[f])
    if (q != p) floor = std::min(floor, alpha[q]);
  if (floor == std::numeric_limits<std::int64_t>::max()) floor = alpha[p];
  for (std::int64_t gap = 0; gap <= max_gap; ++gap) {
    alpha[p] = floor - gap;
    auto ledger = single_ledger(s, f, alpha, n);
    out.counts.push_back(ledger.b[ledger.local(p)]);
    if (out.counts.back() == 0 && out.threshold < 0) {
      out.threshold = gap;
      out.stays_zero = true;
      for (std::int64_t extra = 1; extra <= confirm; ++extra) {
        alpha[p] = floor - gap - extra;
        auto more = single_ledger(s, f, alpha, n);
        if (more.b[more.local(p)] != 0) out.stays_zero = false;
      }
      break;
    }
  }
  return out;
}

}  // namespace hjoints
