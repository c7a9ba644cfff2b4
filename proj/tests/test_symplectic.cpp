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

#include <doctest.h>

#include "legvar/geometry.hpp"
#include "legvar/prng.hpp"
#include "legvar/symplectic.hpp"
#include "legvar/varieties.hpp"

using namespace legvar;

namespace {

MatrixQ unit_matrix(int m, int i, int j) {
    MatrixQ e(m, m);
    e(i - 1, j - 1) = Rational(1);
    return e;
}

PhaseVector random_phase(Prng& rng, int m) {
    MatrixQ a(m, m), b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            a(i, j) = Rational(rng.next_in_range(-4, 4));
            b(i, j) = Rational(rng.next_in_range(-4, 4));
        }
    return PhaseVector(std::move(a), std::move(b));
}

// sum_k a[i,k] b[j,k] -- the row-product quadric.
Polynomial q_row(int m, int i, int j) {
    Polynomial q(m);
    for (int k = 1; k <= m; ++k)
        q += Polynomial::variable(m, var_a(i, k)) * Polynomial::variable(m, var_b(j, k));
    return q;
}

} // namespace

TEST_CASE("omega: identities and single-entry pairings") {
    const int m = 2;
    const PhaseVector id_zero(MatrixQ::identity(m), MatrixQ(m, m));
    const PhaseVector zero_id(MatrixQ(m, m), MatrixQ::identity(m));
    CHECK(omega(id_zero, zero_id) == Rational(2)); // tr Id_2

    const PhaseVector e12_a(unit_matrix(m, 1, 2), MatrixQ(m, m));
    const PhaseVector e12_b(MatrixQ(m, m), unit_matrix(m, 1, 2));
    CHECK(omega(e12_a, e12_b) == Rational(1));

    Prng rng(3);
    for (int t = 0; t < 20; ++t) {
        const PhaseVector v = random_phase(rng, 3);
        const PhaseVector w = random_phase(rng, 3);
        CHECK(omega(v, v).is_zero());
        CHECK(omega(v, w) == -omega(w, v));
    }
}

TEST_CASE("J matrix: block shape, square, and agreement with omega") {
    const int m = 2;
    const MatrixQ j = j_matrix(m);
    REQUIRE(j.rows() == 8);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(j(k, 4 + k) == Rational(1));
        CHECK(j(4 + k, k) == Rational(-1));
    }
    CHECK(j * j == Rational(-1) * MatrixQ::identity(8));

    Prng rng(5);
    for (int t = 0; t < 50; ++t) {
        const PhaseVector v = random_phase(rng, m);
        const PhaseVector w = random_phase(rng, m);
        const auto fv = v.flatten(), fw = w.flatten();
        Rational vjw(0);
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) vjw += fv[r] * j(r, c) * fw[c];
        CHECK(vjw == omega(v, w));
    }
}

TEST_CASE("rho recovers the elementary action on the quadric q_ij") {
    const int m = 2;
    // The action (A,B) -> (E_ij^T A, -E_ij B) as an operator matrix.
    auto expected = [m](int i, int j) {
        return pair_action_matrix(unit_matrix(m, i, j), MatrixQ(m, m));
    };
    CHECK(rho(Quadric::from_poly(q_row(m, 1, 2))) == expected(1, 2));
    CHECK(rho(Quadric::from_poly(q_row(m, 2, 1))) == expected(2, 1));

    CHECK(rho(Quadric::from_poly(Polynomial(m))) == MatrixQ(8, 8));
    CHECK_THROWS_AS(Quadric::from_poly(Polynomial::variable(m, var_a(1, 1))), degree_error);
    CHECK_THROWS_AS(
        Quadric::from_poly(q_row(m, 1, 2) * Polynomial::variable(m, var_a(1, 1))),
        degree_error);
}

TEST_CASE("quadric gram matrix reproduces the polynomial") {
    Prng rng(9);
    const int m = 2;
    for (int t = 0; t < 20; ++t) {
        Polynomial q(m);
        const auto vars = phase_vars(m);
        for (int terms = 0; terms < 4; ++terms) {
            const auto& v1 = vars[rng.next() % vars.size()];
            const auto& v2 = vars[rng.next() % vars.size()];
            q += Rational(rng.next_in_range(-3, 3)) * (Polynomial::variable(m, v1) *
                                                       Polynomial::variable(m, v2));
        }
        const Quadric quad = Quadric::from_poly(q);
        const PhaseVector x = random_phase(rng, m);
        const auto fx = x.flatten();
        Rational xtmx(0);
        for (std::size_t r = 0; r < fx.size(); ++r)
            for (std::size_t c = 0; c < fx.size(); ++c) xtmx += fx[r] * quad.gram(r, c) * fx[c];
        auto lookup = [&](VarId v) {
            const auto flat = x.flatten();
            std::size_t idx = (v.kind == VarKind::A ? 0 : std::size_t(m) * m) +
                              std::size_t(v.i - 1) * m + (v.j - 1);
            return flat[idx];
        };
        CHECK(xtmx == q.evaluate_rational(lookup));
    }
}

TEST_CASE("rho images satisfy the sp condition for all scale quadrics, m = 2..4") {
    for (int m = 2; m <= 4; ++m) {
        const MatrixQ j = j_matrix(m);
        for (const auto& [label, gen] : equations_Y(m).generators) {
            const MatrixQ x = rho(Quadric::from_poly(gen));
            CHECK((x.transpose() * j + j * x).is_zero());
        }
    }
}

TEST_CASE("is_lagrangian: coordinate subspaces and tangent spaces") {
    const int m = 2;
    // span{(E_ij, 0)}: the A-block coordinate subspace.
    std::vector<std::vector<Rational>> a_block;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            a_block.push_back(PhaseVector(unit_matrix(m, i, j), MatrixQ(m, m)).flatten());
    CHECK(is_lagrangian(LinearSubspace(m, a_block)));

    std::vector<std::vector<Rational>> bad = {
        PhaseVector(unit_matrix(m, 1, 1), MatrixQ(m, m)).flatten(),
        PhaseVector(MatrixQ(m, m), unit_matrix(m, 1, 1)).flatten()};
    CHECK(!is_lagrangian(bad, m)); // omega = 1 on the pair

    CHECK_THROWS_AS(LinearSubspace(m, {a_block[0], a_block[0]}), argument_error);

    // Tangent space to the invertible-pair cone at (Id, Id), via the Jacobian.
    const EquationSet eqs = equations_Xinv(3);
    const PhaseVector id3(MatrixQ::identity(3), MatrixQ::identity(3));
    const MatrixQ jac = jacobian_at(eqs.polys(), id3.flatten());
    const auto rk = rank_and_kernel(jac);
    REQUIRE(rk.rank == 9);
    CHECK(is_lagrangian(rk.kernel_basis, 3));
}

TEST_CASE("bracket: antisymmetry, commuting diagonals, span membership") {
    Prng rng(15);
    MatrixQ a(3, 3), d1(3, 3), d2(3, 3);
    for (int i = 0; i < 3; ++i) {
        d1(i, i) = Rational(rng.next_in_range(-3, 3));
        d2(i, i) = Rational(rng.next_in_range(-3, 3));
        for (int j = 0; j < 3; ++j) a(i, j) = Rational(rng.next_in_range(-3, 3));
    }
    CHECK(bracket(a, a).is_zero());
    CHECK(bracket(d1, d2).is_zero());

    // [rho(q_12), rho(q_21)] lies in the span of the rho images of the
    // scale quadrics (solved exactly).
    const int m = 2;
    const MatrixQ lhs = bracket(rho(Quadric::from_poly(q_row(m, 1, 2))),
                                rho(Quadric::from_poly(q_row(m, 2, 1))));
    const auto gens = equations_Y(m).generators;
    const std::size_t dim = 8 * 8;
    MatrixQ coeffs(dim, gens.size());
    std::vector<Rational> target;
    target.reserve(dim);
    std::vector<MatrixQ> images;
    for (const auto& [label, gen] : gens) images.push_back(rho(Quadric::from_poly(gen)));
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            for (std::size_t g = 0; g < images.size(); ++g)
                coeffs(r * 8 + c, g) = images[g](r, c);
            target.push_back(lhs(r, c));
        }
    CHECK(solve_linear(coeffs, target).has_value());
}

TEST_CASE("pair recovery: round trip and rejection") {
    Prng rng(21);
    for (int m = 2; m <= 3; ++m) {
        for (int t = 0; t < 10; ++t) {
            MatrixQ g(m, m), h(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    g(i, j) = Rational(rng.next_in_range(-3, 3));
                    h(i, j) = Rational(rng.next_in_range(-3, 3));
                }
            // tracelessify
            g(m - 1, m - 1) = g(m - 1, m - 1) - trace(g);
            h(m - 1, m - 1) = h(m - 1, m - 1) - trace(h);
            const auto rec = recover_traceless_pair(pair_action_matrix(g, h));
            REQUIRE(rec.has_value());
            CHECK(rec->first == g);
            CHECK(rec->second == h);
        }
    }
    CHECK(!recover_traceless_pair(MatrixQ::identity(8)).has_value());
}
