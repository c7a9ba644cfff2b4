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

#include "legvar/linalg.hpp"
#include "legvar/polynomial.hpp"
#include "legvar/prng.hpp"

using namespace legvar;

namespace {

Polynomial va(int m, int i, int j) { return Polynomial::variable(m, var_a(i, j)); }
Polynomial vb(int m, int i, int j) { return Polynomial::variable(m, var_b(i, j)); }

Polynomial random_sparse_poly(Prng& rng, int m, int max_terms = 6, int max_deg = 4) {
    Polynomial p(m);
    const int terms = 1 + int(rng.next_in_range(0, max_terms - 1));
    for (int t = 0; t < terms; ++t) {
        Polynomial term = Polynomial::constant(m, Rational(rng.next_nonzero(-5, 5)));
        const int deg = int(rng.next_in_range(0, max_deg));
        for (int d = 0; d < deg; ++d) {
            const VarId v{rng.next() % 2 ? VarKind::A : VarKind::B,
                          uint16_t(rng.next_in_range(1, m)), uint16_t(rng.next_in_range(1, m))};
            term = term * Polynomial::variable(m, v);
        }
        p += term;
    }
    return p;
}

std::vector<Rational> random_point(Prng& rng, int m) {
    std::vector<Rational> x;
    for (int i = 0; i < 2 * m * m; ++i) x.push_back(Rational(rng.next_in_range(-4, 4)));
    return x;
}

// Independent derivative oracle: interpolate q(h) = p(x + h e_i) at
// h = 0..deg(p) and read off the linear coefficient. No symbolic
// differentiation anywhere on this path.
Rational derivative_oracle(const Polynomial& p, const std::vector<VarId>& vars,
                           const std::vector<Rational>& x, std::size_t i) {
    const int d = int(p.degree());
    MatrixQ vand(d + 1, d + 1);
    std::vector<Rational> vals(d + 1);
    for (int node = 0; node <= d; ++node) {
        std::vector<Rational> shifted = x;
        shifted[i] += Rational(node);
        Rational hp(1);
        for (int c = 0; c <= d; ++c) {
            vand(node, c) = hp;
            hp *= Rational(node);
        }
        auto lookup = [&](VarId v) {
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (vars[k] == v) return shifted[k];
            throw dimension_error("oracle: unknown variable");
        };
        vals[node] = p.evaluate_rational(lookup);
    }
    auto coeffs = solve_linear(vand, vals);
    REQUIRE(coeffs.has_value());
    return d >= 1 ? (*coeffs)[1] : Rational(0);
}

} // namespace

TEST_CASE("canonical text form and parser") {
    const int m = 2;
    Polynomial p = Rational(3) * (va(m, 1, 1) * va(m, 1, 1) * vb(m, 2, 2)) -
                   Rational(1, 2) * vb(m, 1, 1);
    CHECK(p.to_string() == "3*a[1,1]^2*b[2,2] - 1/2*b[1,1]");
    CHECK(Polynomial::parse(m, p.to_string()) == p);

    CHECK(Polynomial(m).to_string() == "0");
    CHECK(Polynomial::parse(m, "0") == Polynomial(m));
    CHECK(Polynomial::parse(m, "a[1,2]") == va(m, 1, 2));
    CHECK(Polynomial::parse(m, "1*a[1,2]") == va(m, 1, 2));
    CHECK(Polynomial::parse(m, "-a[1,2] + a[1,2]") == Polynomial(m));
    CHECK_THROWS_AS(Polynomial::parse(m, "a[3,1]"), argument_error); // out of range
    CHECK_THROWS_AS(Polynomial::parse(m, "a[1,1]^0"), parse_error);
    CHECK_THROWS_AS(Polynomial::parse(m, "2**a[1,1]"), parse_error);
}

TEST_CASE("term order: total degree first, then variable order") {
    const int m = 2;
    const Polynomial p = va(m, 2, 2) + va(m, 1, 1) * va(m, 1, 1) + va(m, 1, 1) * vb(m, 1, 1);
    CHECK(p.to_string() == "1*a[1,1]^2 + 1*a[1,1]*b[1,1] + 1*a[2,2]");
}

TEST_CASE("property: parse(to_string(p)) == p for random polynomials") {
    Prng rng(101);
    for (int t = 0; t < 100; ++t) {
        const Polynomial p = random_sparse_poly(rng, 3);
        CHECK(Polynomial::parse(3, p.to_string()) == p);
    }
}

TEST_CASE("lowest degree part") {
    const int m = 2;
    const Polynomial p = va(m, 1, 1) + va(m, 1, 1) * va(m, 2, 2);
    CHECK(p.lowest_degree_part() == va(m, 1, 1));

    const Polynomial homog = va(m, 1, 1) * vb(m, 2, 2) - va(m, 1, 2) * vb(m, 2, 1);
    CHECK(homog.lowest_degree_part() == homog);

    CHECK_THROWS_AS(Polynomial(m).lowest_degree_part(), undefined_input_error);
}

TEST_CASE("lowest degree part of a chart-evaluated cubic is the expected linear form") {
    // det(A del 1,1) * a33 - b11 * det(B del 1,1), evaluated on the chart a33 = 1:
    // the linear part is the opposite interior entry a22.
    const int m = 3;
    const Polynomial det_a11 = va(m, 2, 2) * va(m, 3, 3) - va(m, 2, 3) * va(m, 3, 2);
    const Polynomial det_b11 = vb(m, 2, 2) * vb(m, 3, 3) - vb(m, 2, 3) * vb(m, 3, 2);
    const Polynomial cubic = det_a11 * va(m, 3, 3) - vb(m, 1, 1) * det_b11;
    const Polynomial chart = cubic.substitute(var_a(3, 3), Rational(1));
    CHECK(chart.lowest_degree_part() == va(m, 2, 2));
}

TEST_CASE("lowest parts multiply") {
    Prng rng(55);
    for (int t = 0; t < 50; ++t) {
        const Polynomial p = random_sparse_poly(rng, 2);
        const Polynomial q = random_sparse_poly(rng, 2);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).lowest_degree_part() ==
              p.lowest_degree_part() * q.lowest_degree_part());
    }
}

TEST_CASE("substitute, shift and the block involution") {
    const int m = 2;
    const Polynomial p = va(m, 1, 1) * vb(m, 2, 1) + va(m, 1, 2);
    CHECK(p.substitute(var_a(1, 1), Rational(2)) == Rational(2) * vb(m, 2, 1) + va(m, 1, 2));
    CHECK(p.swap_ab() == vb(m, 1, 1) * va(m, 2, 1) + vb(m, 1, 2));
    CHECK(p.swap_ab().swap_ab() == p);

    // shift x -> x + c agrees with evaluation
    Prng rng(77);
    for (int t = 0; t < 30; ++t) {
        const Polynomial q = random_sparse_poly(rng, 2);
        std::vector<std::pair<VarId, Rational>> deltas;
        for (const auto& v : phase_vars(2))
            deltas.emplace_back(v, Rational(rng.next_in_range(-2, 2)));
        const Polynomial shifted = q.shift(deltas);
        const auto x = random_point(rng, 2);
        const auto vars = phase_vars(2);
        auto at = [&](const std::vector<Rational>& pt) {
            return [&vars, pt](VarId v) {
                for (std::size_t k = 0; k < vars.size(); ++k)
                    if (vars[k] == v) return pt[k];
                return Rational(0);
            };
        };
        std::vector<Rational> moved = x;
        for (std::size_t k = 0; k < vars.size(); ++k) moved[k] += deltas[k].second;
        CHECK(shifted.evaluate_rational(at(x)) == q.evaluate_rational(at(moved)));
    }
}

TEST_CASE("jacobian entries: power rule and constants") {
    const int m = 2;
    std::vector<Rational> x(8, Rational(0));
    x[0] = Rational(3); // a[1,1]
    const MatrixQ jac = jacobian_at({va(m, 1, 1) * va(m, 1, 1)}, x);
    CHECK(jac.rows() == 1);
    CHECK(jac(0, 0) == Rational(6));
    for (std::size_t j = 1; j < 8; ++j) CHECK(jac(0, j).is_zero());

    const MatrixQ zero_row = jacobian_at({Polynomial::constant(m, Rational(5))}, x);
    CHECK(zero_row.rows() == 1);
    for (std::size_t j = 0; j < 8; ++j) CHECK(zero_row(0, j).is_zero());

    CHECK_THROWS_AS(jacobian_at({va(m, 1, 1)}, std::vector<Rational>(7, Rational(0))),
                    dimension_error);
}

TEST_CASE("jacobian agrees with the finite-difference interpolation oracle") {
    Prng rng(123);
    const auto vars = phase_vars(2);
    for (int t = 0; t < 100; ++t) {
        const Polynomial p = random_sparse_poly(rng, 2);
        const auto x = random_point(rng, 2);
        const MatrixQ jac = jacobian_at({p}, x);
        for (std::size_t i = 0; i < vars.size(); ++i)
            CHECK(jac(0, i) == derivative_oracle(p, vars, x, i));
    }
}

TEST_CASE("homogeneity bookkeeping") {
    const int m = 2;
    CHECK((va(m, 1, 1) * vb(m, 1, 1)).is_homogeneous());
    CHECK(!(va(m, 1, 1) + va(m, 1, 1) * vb(m, 1, 1)).is_homogeneous());
    CHECK(Polynomial(m).is_homogeneous());
    CHECK((va(m, 1, 1) * vb(m, 1, 1)).degree() == 2);
}
