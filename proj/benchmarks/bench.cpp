#include <benchmark/benchmark.h>

#include <shepkit/cccc.hpp>
#include <shepkit/classify.hpp>
#include <shepkit/davis.hpp>
#include <shepkit/diagram.hpp>
#include <shepkit/forms.hpp>
#include <shepkit/groups.hpp>
#include <shepkit/milnor.hpp>
#include <shepkit/polytopes.hpp>

namespace {

using namespace shepkit;

void bm_parse_inline(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_diagram("2[3]2[4]3[3]3[4]2"));
}
BENCHMARK(bm_parse_inline);

void bm_classify(benchmark::State& state) {
  auto d = parse_diagram("3[3]3[3]3[3]3");
  for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}
BENCHMARK(bm_classify);

void bm_hermitian_pd(benchmark::State& state) {
  auto d = parse_diagram("3[4]2[3]2[3]2");
  for (auto _ : state)
    benchmark::DoNotOptimize(is_positive_definite(hermitian_matrix(d)));
}
BENCHMARK(bm_hermitian_pd);

void bm_coset_enumeration(benchmark::State& state) {
  auto d = parse_diagram("3[3]3[3]3");
  for (auto _ : state) benchmark::DoNotOptimize(group_order(d));
}
BENCHMARK(bm_coset_enumeration);

void bm_milnor_complex(benchmark::State& state) {
  auto d = parse_diagram("3[3]3[3]3");
  for (auto _ : state) benchmark::DoNotOptimize(milnor_complex(d));
}
BENCHMARK(bm_milnor_complex);

void bm_certify_cubical(benchmark::State& state) {
  auto d = parse_diagram("2[3]2[4]3[inf]3[4]2");
  for (auto _ : state) benchmark::DoNotOptimize(certify_cubical(d));
}
BENCHMARK(bm_certify_cubical);

void bm_hessian_cat1(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_hessian_cat1(false));
}
BENCHMARK(bm_hessian_cat1);

}  // namespace

BENCHMARK_MAIN();
