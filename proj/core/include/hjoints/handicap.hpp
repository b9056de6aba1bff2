#pragma once

#include "hjoints/key_inequality.hpp"
#include "hjoints/vanishing.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace hjoints {

enum class HandicapStatus { Converged, Cycle, MaxRounds };

std::string to_string(HandicapStatus status);

struct HandicapRound {
  std::vector<std::int64_t> alpha;
  std::vector<double> w_prime;
  double spread = 0.0;
  std::size_t block = 0;  // joints decremented this round, 0 when flat
};

struct HandicapOptions {
  unsigned n = 24;
  double delta = 0.0;  // 0 selects 1/ln(n)
  std::size_t max_rounds = 5000;
};

struct HandicapResult {
  HandicapStatus status = HandicapStatus::MaxRounds;
  std::vector<std::int64_t> alpha;  // returned state
  std::vector<double> w_prime;
  std::vector<double> s;
  double lambda = 0.0;
  double delta = 0.0;
  std::size_t rounds = 0;
  std::size_t returned_round = 0;
  std::vector<HandicapRound> trace;
  KeyCertificate certificate;
};

inline constexpr std::size_t kCycleRing = 1024;

double default_delta(unsigned n);

// Hash of alpha minus its minimum.
std::uint64_t handicap_hash(const std::vector<std::int64_t>& alpha);

struct HandicapSnapshot {
  std::vector<double> w_prime;
  std::vector<double> s;
};

template <class Field>
HandicapSnapshot handicap_snapshot(const VanishingSetup<Field>& s, const std::vector<BasisLedger>& ledgers,
                                   const WeightFunction& w, const std::vector<double>& W, unsigned n) {
  const double excess = to_double(total_weight(w) - 1);
  const std::size_t count = s.config.points.size();
  HandicapSnapshot out;
  out.w_prime.assign(count, 0.0);
  out.s.assign(count, 0.0);
  for (std::size_t p = 0; p < count; ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : s.tuples[p]) {
      double log_prod = 0.0;
      for (std::size_t e = 0; e < s.h.num_edges(); ++e) {
        const double sigma = to_double(w.weights[e]) / excess;
        if (sigma == 0.0) continue;
        const auto& ledger = ledgers[flat_slot(s, FlatRef{s.h.color(e) - 1, t.flats[e]})];
        const auto b = ledger.b[ledger.local(p)];
        log_prod += b == 0 ? -std::numeric_limits<double>::infinity()
                           : sigma * (std::log(static_cast<double>(b)) - ledger.k * std::log(static_cast<double>(n)));
      }
      best = std::min(best, std::exp(log_prod));
    }
    out.w_prime[p] = best / W[p];
    for (auto f : s.used_by[p]) out.s[p] += static_cast<double>(ledgers[f].b[ledgers[f].local(p)]);
  }
  return out;
}

template <class Field>
KeyCertificate make_certificate(const VanishingSetup<Field>& s, const std::vector<BasisLedger>& ledgers,
                                const std::vector<double>& W, unsigned n) {
  KeyCertificate cert;
  cert.n = n;
  cert.W = W;
  for (std::size_t f = 0; f < s.flats.size(); ++f) {
    const auto& ledger = ledgers[f];
    for (std::size_t j = 0; j < ledger.joint_ids.size(); ++j)
      cert.b.push_back({ledger.joint_ids[j], s.flats[f].color, s.flats[f].index, ledger.k,
                        static_cast<double>(ledger.b[j]) / std::pow(static_cast<double>(n), ledger.k)});
  }
  for (const auto& tp : s.tuples) {
    std::vector<std::vector<std::size_t>> list;
    for (const auto& t : tp) list.push_back(t.flats);
    cert.tuples.push_back(std::move(list));
  }
  return cert;
}

// The decrement dynamic: while the sorted W' values have an adjacent gap
// above delta, lower alpha on every joint above the first such gap.
template <class Field>
HandicapResult handicap_iteration(const VanishingSetup<Field>& s, const WeightFunction& w, const std::vector<double>& W,
                                  HandicapOptions options = {}) {
  const std::size_t count = s.config.points.size();
  if (W.size() != count) throw Error(ErrorCode::SizeMismatch, "one W entry per joint");
  for (double x : W)
    if (!(x > 0.0)) throw Error(ErrorCode::NegativeValue, "W must be positive");
  if (total_weight(w) <= 1) throw Error(ErrorCode::InvalidArgument, "|w| must exceed 1");
  check_connected(s);
  HandicapResult out;
  out.delta = options.delta > 0.0 ? options.delta : default_delta(options.n);
  std::vector<std::int64_t> alpha(count, 0);
  std::deque<std::uint64_t> ring;
  std::unordered_set<std::uint64_t> seen;
  double best_spread = std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> best_alpha = alpha;
  std::size_t best_round = 0;
  out.status = HandicapStatus::MaxRounds;
  for (std::size_t round = 0; round < options.max_rounds; ++round) {
    auto ledgers = compute_ledgers(s, alpha, options.n);
    auto snap = handicap_snapshot(s, ledgers, w, W, options.n);
    HandicapRound rec;
    rec.alpha = alpha;
    rec.w_prime = snap.w_prime;
    auto [lo, hi] = std::minmax_element(snap.w_prime.begin(), snap.w_prime.end());
    rec.spread = *hi - *lo;
    if (rec.spread < best_spread) {
      best_spread = rec.spread;
      best_alpha = alpha;
      best_round = round;
    }
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (snap.w_prime[a] != snap.w_prime[b]) return snap.w_prime[a] > snap.w_prime[b];
      if (snap.s[a] != snap.s[b]) return snap.s[a] > snap.s[b];
      return s.rank[a] < s.rank[b];
    });
    std::size_t block = 0;
    for (std::size_t i = 0; i + 1 < count; ++i)
      if (snap.w_prime[order[i]] - snap.w_prime[order[i + 1]] > out.delta) {
        block = i + 1;
        break;
      }
    rec.block = block;
    out.trace.push_back(std::move(rec));
    out.rounds = round + 1;
    if (block == 0) {
      out.status = HandicapStatus::Converged;
      best_alpha = alpha;
      best_round = round;
      break;
    }
    const auto key = handicap_hash(alpha);
    if (seen.count(key)) {
      out.status = HandicapStatus::Cycle;
      break;
    }
    ring.push_back(key);
    seen.insert(key);
    if (ring.size() > kCycleRing) {
      seen.erase(ring.front());
      ring.pop_front();
    }
    for (std::size_t i = 0; i < block; ++i) --alpha[order[i]];
  }
  out.alpha = best_alpha;
  out.returned_round = best_round;
  auto ledgers = compute_ledgers(s, out.alpha, options.n);
  auto snap = handicap_snapshot(s, ledgers, w, W, options.n);
  out.w_prime = snap.w_prime;
  out.s = snap.s;
  out.lambda = std::accumulate(snap.w_prime.begin(), snap.w_prime.end(), 0.0) / static_cast<double>(count);
  out.certificate = make_certificate(s, ledgers, W, options.n);
  out.certificate.delta = out.delta;
  out.certificate.lambda = out.lambda;
  out.certificate.status = to_string(out.status);
  return out;
}

// W(p) = 1/(|J| d!) for every joint.
std::vector<double> uniform_W(std::size_t joints, unsigned d);

}  // namespace hjoints
