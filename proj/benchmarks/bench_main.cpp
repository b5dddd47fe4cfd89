#include <benchmark/benchmark.h>

#include "lieco/contact.hpp"
#include "lieco/liealg.hpp"
#include "lieco/prequant.hpp"
#include "lieco/sampling.hpp"

using namespace lieco;

static void BM_PolyMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Poly lin(n, GaussRational(1));
  for (int i = 0; i <= 2 * n; ++i) lin += Poly::variable(n, i);
  const Poly a = lin.pow(3), b = (lin - Poly::variable(n, 0)).pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(1)->Arg(2);

static void BM_SchoutenMuMu(benchmark::State& state) {
  const ContactSpace m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schouten(m.mu(), m.mu()));
}
BENCHMARK(BM_SchoutenMuMu)->Arg(1)->Arg(2)->Arg(3);

static void BM_HatBracket(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ContactSpace m(n);
  Sampler s(2);
  const MultiVec X = hat(m, s.basic_poly(n, 3)), Y = hat(m, s.basic_poly(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(schouten(X, Y));
}
BENCHMARK(BM_HatBracket)->Arg(1)->Arg(2);

static void BM_CohomologyAbelian(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const LieModule triv = LieModule::trivial(algebras::abelian(dim));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(triv, static_cast<int>(dim / 2)));
}
BENCHMARK(BM_CohomologyAbelian)->Arg(4)->Arg(6);

static void BM_CohomologySl2Adjoint(benchmark::State& state) {
  const LieModule ad = LieModule::adjoint(algebras::sl2());
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(ad, 1));
}
BENCHMARK(BM_CohomologySl2Adjoint);

static void BM_CharClassHeis(benchmark::State& state) {
  const Ideal center(algebras::heisenberg3(), {unit_vector(3, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(char_class(center));
}
BENCHMARK(BM_CharClassHeis);

static void BM_Defect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ContactSpace m(n);
  Sampler s(3);
  const Poly f = s.basic_poly(n, 3), g = s.basic_poly(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(homomorphism_defect(m, f, g, Rational(1, 2)));
}
BENCHMARK(BM_Defect)->Arg(1)->Arg(2);
BENCHMARK_MAIN();
