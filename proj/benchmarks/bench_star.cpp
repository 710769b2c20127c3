#include <benchmark/benchmark.h>

#include "gcstar/fields.hpp"
#include "gcstar/form_text.hpp"
#include "gcstar/hodge.hpp"
#include "gcstar/polynomial.hpp"
#include "gcstar/structures.hpp"

namespace {

using namespace gcstar;

Form dense_form(int dim, int degree) {
  Form f = Form::zero(dim, degree);
  Rational v = 1;
  for_each_index_set(dim, degree, [&](MultiIndex m) {
    f.set_term(m, v);
    v += make_rational(1, 3);
  });
  return f;
}

void BM_MixedEpsilonBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpacetimeStructure s = make_minkowski(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_epsilon(s, StarVariant::MinkowskiMetric, 2));
  }
}
BENCHMARK(BM_MixedEpsilonBuild)->Arg(3)->Arg(4)->Arg(5);

void BM_StarOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpacetimeStructure s = make_galilean(n);
  const Form alpha = dense_form(n + 1, 2);
  StarCache cache(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cache.star(alpha, StarVariant::GalileanH));
  }
}
BENCHMARK(BM_StarOracle)->Arg(3)->Arg(5);

void BM_StarClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpacetimeStructure s = make_carrollian(n);
  const Form alpha = dense_form(n + 1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_closed(alpha, s, StarVariant::CarrollianH));
  }
}
BENCHMARK(BM_StarClosed)->Arg(3)->Arg(5);

void BM_ExteriorDerivative(benchmark::State& state) {
  const Polynomial x = Polynomial::variable(4, 1);
  const Polynomial y = Polynomial::variable(4, 2);
  const Polynomial z = Polynomial::variable(4, 3);
  PolyForm F = PolyForm::zero(4, 2);
  F.add_term(MultiIndex::from_indices({0, 1}), x * y * z);
  F.add_term(MultiIndex::from_indices({1, 2}), x * x * z - y);
  F.add_term(MultiIndex::from_indices({1, 3}), y * y * y);
  F.add_term(MultiIndex::from_indices({2, 3}), x + y + z);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exterior_derivative(F));
  }
}
BENCHMARK(BM_ExteriorDerivative);

void BM_Wedge(benchmark::State& state) {
  const Form a = dense_form(6, 2);
  const Form b = dense_form(6, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(a, b));
  }
}
BENCHMARK(BM_Wedge);

}  // namespace

BENCHMARK_MAIN();
