#include <benchmark/benchmark.h>

#include <random>

#include "repstab/matrix.hpp"

using namespace repstab;

namespace {

// Deterministic pseudo-random matrix; rational entries get small
// denominators so the bignum layer does real work.
Matrix random_matrix(const FieldSpec& field, std::size_t rows,
                     std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, field.is_prime() ? make_rational(num(rng))
                                   : make_rational(num(rng), den(rng)));
  return m;
}

void BM_rref_rational(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(FieldSpec::rationals(), n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_rational)->Arg(8)->Arg(16)->Arg(32);

void BM_rref_prime(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(FieldSpec::prime(3), n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_prime)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_nullspace(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(FieldSpec::rationals(), n / 2, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_matrix(m));
}
BENCHMARK(BM_nullspace)->Arg(8)->Arg(16)->Arg(32);

void BM_mul(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_matrix(FieldSpec::rationals(), n, n, 1);
  Matrix b = random_matrix(FieldSpec::rationals(), n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_mul)->Arg(8)->Arg(16)->Arg(32);

void BM_column_space_basis(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(FieldSpec::prime(2), n, n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(column_space_basis(m));
}
BENCHMARK(BM_column_space_basis)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
