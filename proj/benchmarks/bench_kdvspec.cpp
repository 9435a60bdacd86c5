#include <benchmark/benchmark.h>

#include "kdvspec/matrix.hpp"
#include "kdvspec/param_solve.hpp"
#include "kdvspec/text.hpp"

using namespace kdvspec;

namespace {

// Sylvester determinant of L - lambda and A - mu for rational s: 2s+3 square.
void BM_ResultantRational(benchmark::State& state) {
  const unsigned s = static_cast<unsigned>(state.range(0));
  Potential p = family_potential(Family::Rational, s);
  LevelResult l = kdv_level(p);
  FieldOp a = schrodinger_minus(p.u, lambda_in(p.u.context()));
  FieldOp b = build_A(p, l) - FieldOp::constant(mu_in(p.u.context()));
  const DetMode mode = state.range(1) ? DetMode::Cofactor : DetMode::Bareiss;
  for (auto _ : state) benchmark::DoNotOptimize(diff_resultant(a, b, mode));
  state.SetLabel(mode == DetMode::Bareiss ? "bareiss" : "cofactor");
}
BENCHMARK(BM_ResultantRational)->Args({1, 0})->Args({2, 0})->Args({3, 0})->Args({4, 0})->Args({2, 1})
    ->Unit(benchmark::kMillisecond);

void BM_SymbolicDeterminant(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SymMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = parse_ratfun(i == j ? "x - lambda" : (i + j) % 2 ? "mu + 1" : "x*mu - 2");
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_SymbolicDeterminant)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

void BM_Gcd(benchmark::State& state) {
  MPoly a = parse_poly("(x + lambda)^4*(x - mu)^2*(lambda*mu + 3)*(x^2 + lambda + 1)");
  MPoly b = parse_poly("(x + lambda)^2*(x - mu)^3*(x^2 + 1)*(lambda*mu + 3)");
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Unit(benchmark::kMicrosecond);

// level -> curve -> factor -> parametrize -> solve for one family member.
void BM_Pipeline(benchmark::State& state) {
  const Family f = static_cast<Family>(state.range(0));
  const unsigned s = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    Potential p = family_potential(f, s);
    LevelResult l = kdv_level(p);
    CurvePoly c = spectral_curve(p, l);
    Factorization fac = factor_on_curve(p, l, c);
    Parametrization par = parametrize_curve(c);
    Elem phit = substitute_param(fac.phi_plus, par);
    benchmark::DoNotOptimize(hyperexponential_solve(phit));
  }
  state.SetLabel(std::string(family_name(f)) + " s=" + std::to_string(s));
}
BENCHMARK(BM_Pipeline)
    ->Args({static_cast<int>(Family::Rational), 1})
    ->Args({static_cast<int>(Family::Rational), 4})
    ->Args({static_cast<int>(Family::RosenMorse), 1})
    ->Args({static_cast<int>(Family::RosenMorse), 3})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
