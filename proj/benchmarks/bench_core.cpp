#include "hjoints/configuration.hpp"
#include "hjoints/extremal.hpp"
#include "hjoints/fractional_cover.hpp"
#include "hjoints/multiplicity.hpp"
#include "hjoints/vanishing.hpp"

#include <benchmark/benchmark.h>

using namespace hjoints;

namespace {

JointsConfiguration<PrimeField> generic_triangle(unsigned m) {
  PrimeField field;
  auto h = complete_hypergraph(3, 2);
  auto fam = generic_hyperplanes(field, m, 3, 1);
  return generically_induced(field, make_simple(m, complete_hypergraph(m, 2).edges()), h, fam, false, 1);
}

void BM_RhoStar(benchmark::State& state) {
  auto h = complete_hypergraph(static_cast<unsigned>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rho_star(h).value);
}
BENCHMARK(BM_RhoStar)->Arg(5)->Arg(6)->Arg(7);

void BM_WitnessCheck(benchmark::State& state) {
  auto h = complete_hypergraph(4, 3);
  PrimeField field;
  auto fam = generic_hyperplanes(field, 6, 4, 2);
  auto config = generically_induced(field, make_simple(6, complete_hypergraph(6, 3).edges()), h, fam, false, 2);
  const auto& p = config.points[0];
  for (auto _ : state) benchmark::DoNotOptimize(is_joint(h, config, p));
}
BENCHMARK(BM_WitnessCheck);

void BM_Eta(benchmark::State& state) {
  auto h = complete_hypergraph(3, 2);
  auto w = rho_star(h).weights;
  auto config = generic_triangle(static_cast<unsigned>(state.range(0)));
  std::vector<std::vector<std::size_t>> tuples;
  for (auto& t : enumerate_witness_tuples(h, config, config.points[0], kDefaultTupleCap))
    tuples.push_back(t.flats);
  auto problem = make_eta_problem(h, w, tuples);
  for (auto _ : state) benchmark::DoNotOptimize(eta_multiplicity(problem).eta);
}
BENCHMARK(BM_Eta)->Arg(5)->Arg(7);

void BM_Ledgers(benchmark::State& state) {
  auto h = complete_hypergraph(3, 2);
  auto config = generic_triangle(6);
  auto setup = make_vanishing_setup(h, config);
  std::vector<std::int64_t> alpha(config.points.size(), 0);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_ledgers(setup, alpha, n));
}
BENCHMARK(BM_Ledgers)->Arg(8)->Arg(24)->Arg(48);

void BM_PlaneLedger(benchmark::State& state) {
  RationalField q;
  auto plane = make_flat(q, Vec<Rational>{0, 0, 0}, Mat<Rational>{{1, 0, 0}, {0, 1, 0}});
  std::vector<LedgerJoint<RationalField>> joints;
  for (int i = 0; i < 4; ++i) {
    LedgerJoint<RationalField> j;
    j.id = j.rank = static_cast<std::size_t>(i);
    j.chart = canonical_chart(plane, Vec<Rational>{i, i * i, 0});
    joints.push_back(j);
  }
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_B_counts(q, plane, joints, n));
}
BENCHMARK(BM_PlaneLedger)->Arg(4)->Arg(8);

void BM_SearchLocal(benchmark::State& state) {
  auto h = complete_hypergraph(4, 3);
  SearchOptions o;
  o.vertex_budget = 6;
  o.restarts = 20;
  for (auto _ : state) benchmark::DoNotOptimize(search_M(h, 7, o).best_count);
}
BENCHMARK(BM_SearchLocal);

void BM_KruskalKatona(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kruskal_katona_count(static_cast<std::uint64_t>(state.range(0)), 4));
}
BENCHMARK(BM_KruskalKatona)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
