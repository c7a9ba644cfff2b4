/*
 * Copyright 2026 The legvar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "legvar/geometry.hpp"
#include "legvar/prng.hpp"
#include "legvar/suites.hpp"

using namespace legvar;

namespace {

MatrixQ random_int_matrix(Prng& rng, std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.next_in_range(-9, 9));
    return m;
}

void BM_determinant(benchmark::State& state) {
    Prng rng(1);
    const MatrixQ m = random_int_matrix(rng, std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_determinant)->Arg(4)->Arg(5)->Arg(6);

void BM_rank_kernel(benchmark::State& state) {
    Prng rng(2);
    MatrixQ m(state.range(0), 2 * state.range(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rational(rng.next_in_range(-5, 5));
    for (auto _ : state) benchmark::DoNotOptimize(rank_and_kernel(m).rank);
}
BENCHMARK(BM_rank_kernel)->Arg(8)->Arg(16);

void BM_pfaffian(benchmark::State& state) {
    Prng rng(3);
    const std::size_t n = std::size_t(state.range(0));
    MatrixQ s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            s(i, j) = Rational(rng.next_in_range(-9, 9));
            s(j, i) = -s(i, j);
        }
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(s));
}
BENCHMARK(BM_pfaffian)->Arg(6)->Arg(8);

void BM_equations_xinv(benchmark::State& state) {
    const int m = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(equations_Xinv(m).generators.size());
}
BENCHMARK(BM_equations_xinv)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_codim_xinv3_corner(benchmark::State& state) {
    const EquationSet eqs = equations_Xinv(3);
    MatrixQ a(3, 3);
    a(2, 2) = Rational(1);
    const PhaseVector p1(a, MatrixQ(3, 3));
    for (auto _ : state) benchmark::DoNotOptimize(tangent_space_codim(eqs, p1));
}
BENCHMARK(BM_codim_xinv3_corner)->Unit(benchmark::kMillisecond);

void BM_rho_span_suite(benchmark::State& state) {
    const int m = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_suite("rho-span", m, 0).all_passed());
}
BENCHMARK(BM_rho_span_suite)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_singularity_m5(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(singularity_certificate(5, 7).verdict);
}
BENCHMARK(BM_singularity_m5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
