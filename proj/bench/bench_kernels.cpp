// Parallel kernels against their serial references.

#include "pcx/algebra.hpp"
#include "pcx/matrix.hpp"
#include "pcx/projective.hpp"

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

namespace {

using namespace pcx;

Matrix random_matrix(Field f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

Field bench_field(std::int64_t p) { return p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(p)); }

void BM_multiply(benchmark::State& st) {
  const Field f = bench_field(st.range(1));
  const Matrix a = random_matrix(f, st.range(0), 1), b = random_matrix(f, st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}

void BM_multiply_serial(benchmark::State& st) {
  const Field f = bench_field(st.range(1));
  const Matrix a = random_matrix(f, st.range(0), 1), b = random_matrix(f, st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(serial::multiply(a, b));
}

void BM_rref(benchmark::State& st) {
  const Matrix a = random_matrix(bench_field(st.range(1)), st.range(0), 3);
  for (auto _ : st) benchmark::DoNotOptimize(rref(a));
}

void BM_rref_serial(benchmark::State& st) {
  const Matrix a = random_matrix(bench_field(st.range(1)), st.range(0), 3);
  for (auto _ : st) benchmark::DoNotOptimize(serial::rref(a));
}

// Left multiplication by a fixed map on End(P), P a sum of indecomposables
// over the 4-cycle modulo gamma*beta*alpha.
struct EndFixture {
  AlgebraPtr A;
  ProjModule P;
  ProjMap g;

  explicit EndFixture(std::size_t copies) {
    Quiver q;
    for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
    const char* names[] = {"alpha", "beta", "gamma", "delta"};
    for (int v = 0; v < 4; ++v) q.add_arrow(names[v], v, (v + 1) % 4);
    Word rel = parse_word(q, "gamma*beta*alpha");
    A = std::make_shared<const PathAlgebra>(PathAlgebra::build(std::move(q), {rel}, Field::prime(5)));
    for (std::size_t k = 0; k < copies; ++k) P.summands.push_back(static_cast<int>(k % 4));
    const HomCoords H(A, P, P);
    Matrix v(A->field(), H.dim(), 1);
    std::mt19937_64 rng(4);
    for (std::size_t i = 0; i < H.dim(); ++i) v(i, 0) = A->field().from_int(static_cast<std::int64_t>(rng() % 5));
    g = H.from_vector(v);
  }

  CoordSpace space() const { return CoordSpace({HomCoords(A, P, P)}); }
  LinearFn fn() const {
    return [g = g](const std::vector<ProjMap>& x) { return std::vector<ProjMap>{g * x[0]}; };
  }
};

void BM_linear_operator(benchmark::State& st) {
  const EndFixture e(st.range(0));
  const CoordSpace S = e.space();
  const LinearFn fn = e.fn();
  for (auto _ : st) benchmark::DoNotOptimize(linear_operator(S, S, fn));
}

void BM_linear_operator_serial(benchmark::State& st) {
  const EndFixture e(st.range(0));
  const CoordSpace S = e.space();
  const LinearFn fn = e.fn();
  for (auto _ : st) benchmark::DoNotOptimize(serial::linear_operator(S, S, fn));
}

// second argument: 0 for Q, otherwise the characteristic; rationals grow, so they get smaller sizes
#define MATRIX_ARGS ->Args({64, 5})->Args({128, 5})->Args({256, 5})->Args({16, 0})->Args({32, 0})->Unit(benchmark::kMillisecond)
BENCHMARK(BM_multiply) MATRIX_ARGS;
BENCHMARK(BM_multiply_serial) MATRIX_ARGS;
BENCHMARK(BM_rref) MATRIX_ARGS;
BENCHMARK(BM_rref_serial) MATRIX_ARGS;
BENCHMARK(BM_linear_operator)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_linear_operator_serial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
