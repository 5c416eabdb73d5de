// Parallel kernels against their serial references, and the fast normal form
// under both power schedules against plain Macaulay reduction.

#include <random>

#include <benchmark/benchmark.h>

#include "projzero/graded_quotient.hpp"
#include "projzero/kernels.hpp"
#include "projzero/linalg.hpp"
#include "projzero/triplet.hpp"

using namespace projzero;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(static_cast<long long>(rng() % 21) - 10);
  return m;
}

Field field_for(std::int64_t code) { return code == 0 ? Field::rationals() : Field::prime(32003); }

void BM_rref_parallel(benchmark::State& st) {
  Matrix m = random_matrix(field_for(st.range(1)), static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m).rank);
}

void BM_rref_serial(benchmark::State& st) {
  Matrix m = random_matrix(field_for(st.range(1)), static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(reference::rref(m).rank);
}

void BM_multiply_parallel(benchmark::State& st) {
  Field f = field_for(st.range(1));
  auto n = static_cast<std::size_t>(st.range(0));
  Matrix a = random_matrix(f, n, 2), b = random_matrix(f, n, 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply(a, b).rows());
}

void BM_multiply_serial(benchmark::State& st) {
  Field f = field_for(st.range(1));
  auto n = static_cast<std::size_t>(st.range(0));
  Matrix a = random_matrix(f, n, 2), b = random_matrix(f, n, 3);
  for (auto _ : st) benchmark::DoNotOptimize(reference::multiply(a, b).rows());
}

IdealPresentation main_example() {
  Ring ring(Field::rationals(), {"x", "y", "z"});
  return IdealPresentation(ring, {parse_form("x*z + y*z - z^2", ring), parse_form("x^2 - y^2 + 2*y*z - z^2", ring),
                                  parse_form("x*y - y^2 + y*z", ring)});
}

void BM_fast_nf(benchmark::State& st, PowerSchedule schedule) {
  IdealPresentation I = main_example();
  TripletOptions opt;
  opt.linear = parse_form("y + z", I.ring);
  BuiltTriplet b = build_triplet(I, opt);
  Form f = parse_form("x^" + std::to_string(st.range(0)), I.ring);
  auto base = macaulay_base(b.triplet, b.lower, b.upper);
  for (auto _ : st) benchmark::DoNotOptimize(fast_normal_form(f, b.triplet, base, schedule).coordinates.size());
}

void BM_fast_nf_binary(benchmark::State& st) { BM_fast_nf(st, PowerSchedule::binary); }
void BM_fast_nf_linear(benchmark::State& st) { BM_fast_nf(st, PowerSchedule::linear); }

void BM_macaulay_nf(benchmark::State& st) {
  IdealPresentation I = main_example();
  auto d = static_cast<unsigned>(st.range(0));
  Form f = parse_form("x^" + std::to_string(d), I.ring);
  for (auto _ : st) benchmark::DoNotOptimize(normal_form_by_degree(f, ideal_piece(I, d)).terms().size());
}

}  // namespace

BENCHMARK(BM_rref_parallel)->ArgsProduct({{16, 48, 96}, {0, 1}});
BENCHMARK(BM_rref_serial)->ArgsProduct({{16, 48, 96}, {0, 1}});
BENCHMARK(BM_multiply_parallel)->ArgsProduct({{16, 48, 96}, {0, 1}});
BENCHMARK(BM_multiply_serial)->ArgsProduct({{16, 48, 96}, {0, 1}});
BENCHMARK(BM_fast_nf_binary)->Arg(17)->Arg(64)->Arg(256);
BENCHMARK(BM_fast_nf_linear)->Arg(17)->Arg(64)->Arg(256);
BENCHMARK(BM_macaulay_nf)->Arg(17)->Arg(32);

BENCHMARK_MAIN();
