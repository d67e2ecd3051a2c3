#include <benchmark/benchmark.h>

#include <random>

#include "qfano/eliminate.hpp"
#include "qfano/residue.hpp"

using namespace qfano;

namespace {

// Unsolvable systems exhaust the whole domain, which is the worst case.
ResidueConstraintSystem hard_system(long terms) {
  ResidueConstraintSystem s;
  s.constant = Rational(1, 2 * 3 * 5 * 7 * 11 * 13 + 1);
  const long moduli[] = {7, 11, 13, 17, 19, 23};
  for (long k = 0; k < terms; ++k) s.unknown_terms.push_back({Rational(-4), moduli[k], TermShape::Quadratic, "u"});
  return s;
}

}  // namespace

static void BM_Solver(benchmark::State& state) {
  auto s = hard_system(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exists_integral_solution(s));
  state.counters["domain"] = s.domain_size().get_d();
}
BENCHMARK(BM_Solver)->DenseRange(2, 6);

static void BM_DirectEnumeration(benchmark::State& state) {
  auto s = hard_system(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_directly(s));
  state.counters["domain"] = s.domain_size().get_d();
}
BENCHMARK(BM_DirectEnumeration)->DenseRange(2, 4);

static void BM_GroupCDerivation(benchmark::State& state) {
  auto c = candidate_for_case(21);
  for (auto _ : state) benchmark::DoNotOptimize(solve_group_c_residues(c));
}
BENCHMARK(BM_GroupCDerivation);

static void BM_EliminateCase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_case(state.range(0)));
}
BENCHMARK(BM_EliminateCase)->Arg(1)->Arg(24)->Arg(27)->Arg(35)->Arg(3);

BENCHMARK_MAIN();
