// Microbenchmarks for the hot paths: free reduction, rewriting products of
// conjugated relators down to the identity, and the metric verifier.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "scg/encoder.hpp"
#include "scg/presentation.hpp"
#include "scg/profile.hpp"
#include "scg/structure.hpp"
#include "scg/words.hpp"

namespace {

using namespace scg;

// Three elements in a cycle under a unary function, the shape used by the
// heavier test scenarios.
fg_structure cycle_structure() {
  return parse_structure(
      "signature: m=1 kind=function name=s arity=1\n"
      "domain: a0 a1 a2\n"
      "fn s: (a0)->a1 (a1)->a2 (a2)->a0\n"
      "generators: a0\n");
}

construction_profile bench_profile() {
  construction_profile p;
  p.scale = "custom";
  p.ua = {1, 150};
  p.ub = {151, 300};
  p.uc = {301, 450};
  p.ud = {451, 600};
  p.v = {601, 750};
  p.w_block_len = 60;
  p.p1 = 22'500'011;
  p.p2 = 22'500'019;
  validate_profile(p);
  return p;
}

const group_of_structure& encoded() {
  static group_of_structure g = encode(cycle_structure(), bench_profile());
  return g;
}

void free_reduction(benchmark::State& state) {
  auto alph = std::make_shared<alphabet>();
  alph->add({"x", gen_role::generic});
  alph->add({"y", gen_role::generic});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gen(0, 1), sign(0, 1);
  std::vector<power_word> atoms;
  for (int i = 0; i < 4096; ++i)
    atoms.push_back(single_run(alph, static_cast<gen_index>(gen(rng)), sign(rng) ? 1 : -1));
  for (auto _ : state) {
    power_word w;
    for (const auto& a : atoms) w = concat(w, a);
    benchmark::DoNotOptimize(w);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(atoms.size()));
}
BENCHMARK(free_reduction);

void dehn_reduce_product(benchmark::State& state) {
  const auto& g = encoded();
  const auto& pool = g.pres.relators().list();
  const auto& alph = g.pres.alph();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<gen_index> pick_gen(0, static_cast<gen_index>(alph->size() - 1));
  std::uniform_int_distribution<int> sign(0, 1);

  power_word product;
  for (std::int64_t f = 0; f < state.range(0); ++f) {
    power_word c;
    for (int i = 0; i < 6; ++i)
      c = concat(c, single_run(alph, pick_gen(rng), sign(rng) ? 1 : -1));
    product = concat(product, concat(concat(c, pool[pick(rng)]), invert(c)));
  }
  for (auto _ : state) {
    auto result = dehn_reduce(product, g.pres);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(dehn_reduce_product)->Arg(1)->Arg(3)->Arg(5);

void metric_check(benchmark::State& state) {
  const auto& g = encoded();
  for (auto _ : state) {
    auto report = verify_metric(g.pres, {1, 20});
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(metric_check);

}  // namespace

BENCHMARK_MAIN();
