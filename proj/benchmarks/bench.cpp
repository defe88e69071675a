#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ranktwo/bounds.hpp"
#include "ranktwo/fixtures.hpp"
#include "ranktwo/tables.hpp"
#include "ranktwo/theorems.hpp"

using namespace ranktwo;

namespace {

std::vector<QuadraticValue> sample_values(int count) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> dR(0, 1000000);
  std::uniform_int_distribution<long long> dp(-1000, 1000);
  std::uniform_int_distribution<long long> dq(1, 100);
  std::vector<QuadraticValue> vs;
  vs.reserve(count);
  for (int i = 0; i < count; ++i)
    vs.emplace_back(Int(dR(rng)), Int(dp(rng)), Int(dq(rng)));
  return vs;
}

void BM_compare(benchmark::State& state) {
  auto vs = sample_values(256);
  std::size_t i = 0;
  for (auto _ : state) {
    auto ord = compare(vs[i % 256], vs[(i + 97) % 256]);
    benchmark::DoNotOptimize(ord);
    ++i;
  }
}
BENCHMARK(BM_compare);

void BM_qv_floor(benchmark::State& state) {
  auto vs = sample_values(256);
  std::size_t i = 0;
  for (auto _ : state) {
    Int k = qv_floor(vs[i % 256]);
    benchmark::DoNotOptimize(k);
    ++i;
  }
}
BENCHMARK(BM_qv_floor);

void BM_forced_stable(benchmark::State& state) {
  BundleProfile p = make_profile(ChernClasses(0, Int(47)), Int(1), Int(9));
  for (auto _ : state) {
    NonVanishingReport rep = forced_nonvanishing(p);
    benchmark::DoNotOptimize(rep.forced_hi);
  }
}
BENCHMARK(BM_forced_stable);

void BM_forced_negative_alpha(benchmark::State& state) {
  BundleProfile p = make_profile(ChernClasses(0, Int(9)), Int(-3), Int(9));
  for (auto _ : state) {
    NonVanishingReport rep = forced_nonvanishing(p);
    benchmark::DoNotOptimize(rep.forced_hi);
  }
}
BENCHMARK(BM_forced_negative_alpha);

void BM_verify_table(benchmark::State& state) {
  const Fixture& f = fixture_by_name("4.3A");
  for (auto _ : state) {
    auto results = verify_table(*f.table, f.profile);
    benchmark::DoNotOptimize(results.size());
  }
}
BENCHMARK(BM_verify_table);

void BM_parse_table(benchmark::State& state) {
  std::string text = serialize(*fixture_by_name("4.3A").table);
  for (auto _ : state) {
    CohomologyTable t = parse_table(text);
    benchmark::DoNotOptimize(t.rows.size());
  }
}
BENCHMARK(BM_parse_table);

}  // namespace

BENCHMARK_MAIN();
