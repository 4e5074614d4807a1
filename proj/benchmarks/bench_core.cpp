#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "dcoset/coset.hpp"
#include "dcoset/coxeter.hpp"
#include "dcoset/expression.hpp"
#include "dcoset/io.hpp"
#include "dcoset/paths.hpp"
#include "dcoset/verify.hpp"

using namespace dcoset;

namespace {

const CoxeterGroup& cached(const std::string& preset) {
  static std::map<std::string, std::unique_ptr<CoxeterGroup>> groups;
  auto it = groups.find(preset);
  if (it == groups.end())
    it = groups
             .emplace(preset,
                      std::make_unique<CoxeterGroup>(preset_matrix(preset), 100000, preset))
             .first;
  return *it->second;
}

void BM_BuildGroup(benchmark::State& state, const char* preset) {
  const CoxeterMatrix m = preset_matrix(preset);
  for (auto _ : state) {
    CoxeterGroup g(m, 100000, preset);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK_CAPTURE(BM_BuildGroup, A3, "A3");
BENCHMARK_CAPTURE(BM_BuildGroup, B3, "B3");
BENCHMARK_CAPTURE(BM_BuildGroup, H3, "H3");

void BM_BruhatMatrix(benchmark::State& state) {
  const CoxeterMatrix m = preset_matrix("B3");
  for (auto _ : state) {
    CoxeterGroup g(m, 100000, "B3");
    benchmark::DoNotOptimize(g.bruhat_leq(g.identity(), g.element(47)));
  }
}
BENCHMARK(BM_BruhatMatrix);

void BM_Demazure(benchmark::State& state) {
  const CoxeterGroup& g = cached("H3");
  std::uint32_t x = 0, y = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.demazure(g.element(x), g.element(y)));
    x = (x + 37) % g.size();
    y = (y + 61) % g.size();
  }
}
BENCHMARK(BM_Demazure);

void BM_EnumerateCosets(benchmark::State& state) {
  const CoxeterMatrix m = preset_matrix("B3");
  for (auto _ : state) {
    CoxeterGroup g(m, 100000, "B3");
    benchmark::DoNotOptimize(
        enumerate_cosets(g, GenSet::single(0), GenSet::single(2)).size());
  }
}
BENCHMARK(BM_EnumerateCosets);

void BM_FindReducedExpression(benchmark::State& state) {
  const CoxeterGroup& g = cached("B3");
  const auto cosets = enumerate_cosets(g, GenSet::single(0), GenSet::single(2));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_reduced_expression(cosets[k % cosets.size()]));
    ++k;
  }
}
BENCHMARK(BM_FindReducedExpression);

void BM_TermSet(benchmark::State& state) {
  const CoxeterGroup& g = cached("B3");
  const SinglestepExpr e(g, {GenSet::single(1), GenSet::from_mask(3), GenSet::single(0),
                             GenSet::from_mask(5), GenSet::single(2)});
  for (auto _ : state) benchmark::DoNotOptimize(term_set(e).size());
}
BENCHMARK(BM_TermSet);

void BM_VerifySmall(benchmark::State& state) {
  const CoxeterGroup& g = cached("A2");
  SuiteOptions opts;
  opts.width_cap = 4;
  opts.checks = {"bruhat-equiv"};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(g, opts).size());
}
BENCHMARK(BM_VerifySmall);

}  // namespace

BENCHMARK_MAIN();
