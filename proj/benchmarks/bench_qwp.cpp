// Microbenchmarks for the hot paths: eigendecomposition, wp application,
// and the commutativity procedures.

#include <benchmark/benchmark.h>

#include "qwp/commutativity.hpp"

namespace {

using namespace qwp;

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  // spectrum in [0, 1]; good enough as a generic Hermitian workload
  return random_predicate(n, seed).matrix();
}

KrausChannel unitary_mix_channel(std::size_t n, std::size_t count) {
  std::vector<ComplexMatrix> ops;
  const Complex scale(1.0 / std::sqrt(static_cast<double>(count)), 0.0);
  for (std::size_t k = 0; k < count; ++k)
    ops.push_back(scale * hermitian_eig(random_hermitian(n, 100 + k)).unitary);
  return validate_channel(ops);
}

void BM_matmul(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const ComplexMatrix a = random_hermitian(n, 1);
  const ComplexMatrix b = random_hermitian(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_matmul)->Arg(8)->Arg(32)->Arg(128);

void BM_hermitian_eig(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const ComplexMatrix a = random_hermitian(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(a));
}
BENCHMARK(BM_hermitian_eig)->Arg(4)->Arg(16)->Arg(64);

void BM_wp(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const KrausChannel channel = unitary_mix_channel(n, 4);
  const QuantumPredicate m = random_predicate(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(wp(channel, m));
}
BENCHMARK(BM_wp)->Arg(2)->Arg(8)->Arg(32);

void BM_check_all_random(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const ComplexMatrix a = random_hermitian(n, 5);
  const ComplexMatrix b = random_hermitian(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(check_all(a, b));
}
BENCHMARK(BM_check_all_random)->Arg(4)->Arg(8);

void BM_check_all_commuting(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const ComplexMatrix u = hermitian_eig(random_hermitian(n, 7)).unitary;
  ComplexMatrix d1(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d1(i, i) = static_cast<double>(i);
    d2(i, i) = static_cast<double>((i * 7) % n);
  }
  const ComplexMatrix a = u * d1 * adjoint(u);
  const ComplexMatrix b = u * d2 * adjoint(u);
  for (auto _ : state) benchmark::DoNotOptimize(check_all(a, b));
}
BENCHMARK(BM_check_all_commuting)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
