// Parallel kernels against their serial references. Thread count follows
// OMP_NUM_THREADS; the Serial variants ignore it.

#include <benchmark/benchmark.h>

#include <random>

#include "skewlab/graded_linalg.hpp"

using namespace skewlab;

namespace {

AlgElem dense_elem(const AlgebraContext& ctx, int deg, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  AlgElem u(ctx);
  for (const auto& m : monomials_of_degree(ctx.n(), deg))
    u += AlgElem::monomial(ctx, m) * (ctx.omega(coeff(rng)) * Rational(coeff(rng)));
  return u;
}

SmashElem dense_smash(const AlgebraContext& ctx, int deg, std::uint32_t seed) {
  SmashElem u(ctx);
  for (int p = 0; p < ctx.n(); ++p)
    u += SmashElem::embed(dense_elem(ctx, deg, seed + p)) * SmashElem::group(ctx, p);
  return u;
}

void BM_MulParallel(benchmark::State& st) {
  const AlgebraContext ctx(static_cast<int>(st.range(0)));
  const AlgElem u = dense_elem(ctx, 3, 1), v = dense_elem(ctx, 3, 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul(u, v));
}

void BM_MulSerial(benchmark::State& st) {
  const AlgebraContext ctx(static_cast<int>(st.range(0)));
  const AlgElem u = dense_elem(ctx, 3, 1), v = dense_elem(ctx, 3, 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul_serial(u, v));
}

void BM_SmashMulParallel(benchmark::State& st) {
  const AlgebraContext ctx(static_cast<int>(st.range(0)));
  const SmashElem u = dense_smash(ctx, 2, 3), v = dense_smash(ctx, 2, 4);
  for (auto _ : st) benchmark::DoNotOptimize(smash_mul(u, v));
}

void BM_SmashMulSerial(benchmark::State& st) {
  const AlgebraContext ctx(static_cast<int>(st.range(0)));
  const SmashElem u = dense_smash(ctx, 2, 3), v = dense_smash(ctx, 2, 4);
  for (auto _ : st) benchmark::DoNotOptimize(smash_mul_serial(u, v));
}

template <bool Parallel>
void BM_IdealPiece(benchmark::State& st) {
  const AlgebraContext ctx(4);
  const PrimeField f(default_prime(4), 4);
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ideal_piece_e0(ctx, d, f, false, Parallel).rank());
}

template <bool Parallel>
void BM_IdealPieceExact(benchmark::State& st) {
  const AlgebraContext ctx(4);
  const CyclotomicField f(ctx.cyc());
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ideal_piece_e0(ctx, d, f, false, Parallel).rank());
}

}  // namespace

BENCHMARK(BM_MulParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmashMulParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmashMulSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_IdealPiece, true)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_IdealPiece, false)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_IdealPieceExact, true)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_IdealPieceExact, false)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
