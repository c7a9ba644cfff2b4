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

using namespace legvar;

namespace {

PhaseVector p1_point(int m) {
    MatrixQ a(m, m);
    a(m - 1, m - 1) = Rational(1);
    return PhaseVector(std::move(a), MatrixQ(m, m));
}

PhaseVector identity_pair(int m) {
    return PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m));
}

} // namespace

TEST_CASE("tangent-space codimension at the distinguished points") {
    const EquationSet xinv3 = equations_Xinv(3);
    CHECK(tangent_space_codim(xinv3, p1_point(3)) == 9);
    CHECK(tangent_space_codim(xinv3, swap_ab(p1_point(3))) == 9);
    CHECK(tangent_space_codim(xinv3, identity_pair(3)) == 9);

    // The certified quadric subset at m = 4 cuts codimension 16.
    const EquationSet xinv4 = equations_Xinv(4);
    EquationSet quads;
    quads.family = xinv4.family;
    quads.m = 4;
    quads.vars = xinv4.vars;
    for (const auto& [label, gen] : xinv4.generators)
        if (gen.degree() == 2) quads.generators.emplace_back(label, gen);
    REQUIRE(quads.generators.size() == 66);
    CHECK(tangent_space_codim(quads, p1_point(4)) == 16);

    CHECK(tangent_space_codim(equations_Xdeg(3, 1), p1_point(3)) == 9);

    Prng rng(1);
    MatrixQ junk(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) junk(i, j) = Rational(rng.next_in_range(1, 5));
    CHECK_THROWS_AS(tangent_space_codim(xinv3, PhaseVector(junk, junk)), membership_error);
}

TEST_CASE("codimension is constant along SL-pair orbits") {
    Prng rng(3);
    const EquationSet eqs = equations_Xinv(3);
    const PhaseVector p = identity_pair(3);
    const std::size_t base = tangent_space_codim(eqs, p);
    for (int t = 0; t < 3; ++t)
        CHECK(tangent_space_codim(eqs, act(random_sl_pair(3, rng.next()), p)) == base);
}

TEST_CASE("Legendrian checks at certified smooth points") {
    CHECK(legendrian_check_at(equations_Xinv(3), identity_pair(3)).lagrangian);
    CHECK(legendrian_check_at(equations_Xinv(4), identity_pair(4)).lagrangian);

    using A2 = std::array<Rational, 2>;
    const PhaseVector segre = segre_param(A2{Rational(1), Rational(2)},
                                          A2{Rational(3), Rational(1)},
                                          A2{Rational(1), Rational(-2)});
    CHECK(legendrian_check_at(equations_Xdeg(2, 1), segre).lagrangian);

    // At the corner of the m = 5 invertible family the codimension drops:
    // no smoothness certificate, hence inconclusive.
    CHECK_THROWS_AS(legendrian_check_at(equations_Xinv(5), p1_point(5)), inconclusive_error);
}

TEST_CASE("cone candidate at the corner: linear forms cut the tangent space") {
    const EquationSet xinv3 = equations_Xinv(3);
    const AffineChart chart = AffineChart::p1_chart(3);
    const EquationSet cone = cone_candidate(xinv3, chart);

    // The linear parts include the border coordinates of the second block
    // and the interior entries of the first.
    std::vector<Polynomial> expected_linear;
    for (int i = 1; i <= 3; ++i) {
        expected_linear.push_back(Polynomial::variable(3, var_b(i, 3)));
        expected_linear.push_back(Polynomial::variable(3, var_b(3, i)));
    }
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            expected_linear.push_back(Polynomial::variable(3, var_a(i, j)));
    for (const auto& want : expected_linear) {
        bool found = false;
        for (const auto& [label, gen] : cone.generators)
            if (gen == want || gen == -want) found = true;
        CHECK(found);
    }

    // Every cone generator vanishes on the 9-codimensional linear space the
    // linear forms cut: here the candidate scheme is the tangent space.
    std::vector<VarId> free_vars;
    for (const auto& v : cone.vars) {
        bool killed = false;
        for (const auto& want : expected_linear)
            if (Polynomial::variable(3, v) == want) killed = true;
        if (!killed) free_vars.push_back(v);
    }
    REQUIRE(free_vars.size() == cone.vars.size() - 9);
    Prng rng(5);
    for (int t = 0; t < 10; ++t) {
        std::map<VarId, Rational> point;
        for (const auto& v : cone.vars) point[v] = Rational(0);
        for (const auto& v : free_vars) point[v] = Rational(rng.next_in_range(-4, 4));
        for (const auto& [label, gen] : cone.generators)
            CHECK(gen.evaluate_rational([&](VarId v) { return point.at(v); }).is_zero());
    }
}

TEST_CASE("cone candidate for the rank family keeps border forms and block system") {
    const EquationSet cone = cone_candidate(equations_Xdeg(3, 1), AffineChart::p1_chart(3));
    // Border linear forms b[i,3], b[3,i].
    for (int i = 1; i <= 3; ++i) {
        bool found_col = false, found_row = false;
        for (const auto& [label, gen] : cone.generators) {
            if (gen == Polynomial::variable(3, var_b(i, 3))) found_col = true;
            if (gen == Polynomial::variable(3, var_b(3, i))) found_row = true;
        }
        CHECK(found_col);
        CHECK(found_row);
    }
    // The trailing-block linear forms a[i,j] (i,j <= 2) from the 2x2 minors.
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            bool found = false;
            for (const auto& [label, gen] : cone.generators)
                if (gen == Polynomial::variable(3, var_a(i, j)) ||
                    gen == -Polynomial::variable(3, var_a(i, j)))
                    found = true;
            CHECK(found);
        }
    CHECK_THROWS_AS(cone_candidate(equations_Xdeg(3, 0), AffineChart::p1_chart(3)),
                    membership_error);
}

TEST_CASE("curve limits: the diagonal curve through the middle stratum") {
    // (diag(t^2, t, 1), diag(1, t, t^2)) passes through ([E_33, E_11]).
    Matrix<UPoly> a(3, 3), b(3, 3);
    a(0, 0) = UPoly::t_power(2);
    a(1, 1) = UPoly::t_power(1);
    a(2, 2) = UPoly(Rational(1));
    b(0, 0) = UPoly(Rational(1));
    b(1, 1) = UPoly::t_power(1);
    b(2, 2) = UPoly::t_power(2);
    MatrixQ ca(3, 3), cb(3, 3);
    ca(2, 2) = Rational(1);
    cb(0, 0) = Rational(1);
    const PhaseVector center(ca, cb);

    const Stratum s = classify(center);
    CHECK(s.is_deg());
    CHECK(s.k == 1);
    CHECK(s.l == 1);

    Curve c{a, b, AffineChart{var_a(3, 3), center}};
    // The curve lies on the invertible-family equations for all t.
    const EquationSet eqs = equations_Xinv(3);
    for (const Rational& t :
         {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(5)})
        CHECK(vanishes_at(eqs, c.at(t)));

    const CurveLimit lim = curve_limit(c);
    CHECK(lim.order == 1);
    const PhaseVector v = PhaseVector::unflatten(3, lim.vec);
    CHECK(v.A(1, 1) == Rational(1));
    CHECK(v.B(1, 1) == Rational(1));
    CHECK(!lim.block_stratum); // the block is not an annihilating pair
}

TEST_CASE("curve limits: the contract example at m = 5") {
    const int m = 5;
    Matrix<UPoly> a(m, m), b(m, m);
    a(0, 0) = UPoly::t_power(1);
    for (int i = 1; i <= 3; ++i) a(i, i) = UPoly::t_power(3);
    a(4, 4) = UPoly(Rational(1));
    b(0, 0) = UPoly::t_power(3);
    for (int i = 1; i <= 3; ++i) b(i, i) = UPoly::t_power(1);
    b(4, 4) = UPoly::t_power(4); // exponent 2*alpha + beta with alpha=1, beta=2

    Curve c{a, b, AffineChart::p1_chart(m)};
    const CurveLimit lim = curve_limit(c);
    const PhaseVector v = PhaseVector::unflatten(m, lim.vec);
    CHECK(v.A(0, 0) == Rational(1));
    for (int i = 1; i <= 3; ++i) CHECK(v.B(i, i) == Rational(1));
    REQUIRE(lim.block_stratum.has_value());
    CHECK(lim.block_stratum->k == 1);
    CHECK(lim.block_stratum->l == 3);
}

TEST_CASE("curve limits: straight lines and degenerate curves") {
    const int m = 2;
    Matrix<UPoly> a(m, m), b(m, m);
    a(1, 1) = UPoly(Rational(1));
    a(0, 1) = UPoly::t_power(1, Rational(7));
    b(1, 0) = UPoly::t_power(1, Rational(-2));
    Curve line{a, b, AffineChart::p1_chart(m)};
    const CurveLimit lim = curve_limit(line);
    CHECK(lim.order == 1);
    const PhaseVector v = PhaseVector::unflatten(m, lim.vec);
    CHECK(v.A(0, 1) == Rational(7));
    CHECK(v.B(1, 0) == Rational(-2));

    Matrix<UPoly> ca(m, m), cb(m, m);
    ca(1, 1) = UPoly(Rational(1));
    Curve constant{ca, cb, AffineChart::p1_chart(m)};
    CHECK_THROWS_AS(curve_limit(constant), undefined_input_error);
}

TEST_CASE("cone candidate vanishes on limit vectors of curves inside the family") {
    // A rank-one curve through the corner: A(t) = (e3 + t u)(e3 + t v)^T, B = 0.
    const int m = 3;
    Matrix<UPoly> a(m, m), b(m, m);
    const UPoly t = UPoly::t_power(1);
    // u = e1, v = e2: A(t) = E33 + t(E13 + E32) + t^2 E12.
    a(2, 2) = UPoly(Rational(1));
    a(0, 2) = t;
    a(2, 1) = t;
    a(0, 1) = t * t;
    Curve c{a, b, AffineChart::p1_chart(m)};

    const EquationSet eqs = equations_Xdeg(m, 1);
    for (const Rational& tv :
         {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(5)})
        CHECK(vanishes_at(eqs, c.at(tv)));

    const CurveLimit lim = curve_limit(c);
    const EquationSet cone = cone_candidate(eqs, AffineChart::p1_chart(m));
    std::map<VarId, Rational> val;
    const auto vars = phase_vars(m);
    for (std::size_t i = 0; i < vars.size(); ++i) val[vars[i]] = lim.vec[i];
    for (const auto& [label, gen] : cone.generators)
        CHECK(gen.evaluate_rational([&](VarId v) { return val.at(v); }).is_zero());
}

TEST_CASE("dimension probe reproduces the closed-form values") {
    CHECK(dimension_probe(Family::Xdeg, 3, 1, 1, 3) == 7);
    CHECK(dimension_probe(Family::Xinv, 3, 0, 0, 3) == 8);
    CHECK(dimension_probe(Family::Xdeg, 4, 2, 2, 3) == 15);
    CHECK(dimension_probe(Family::Xdeg, 5, 1, 0, 3) == 8); // (k+l)(2m-k-l)-1 = 8
    CHECK_THROWS_AS(dimension_probe(Family::Y, 3, 0, 0, 0), argument_error);
}

TEST_CASE("singularity certificate: singular at m = 5, inconclusive below") {
    const Certificate c5 = singularity_certificate(5, 7);
    CHECK(c5.verdict == "SINGULAR");
    CHECK(c5.evidence.at("span_dim").get<std::size_t>() >= 25);
    for (const auto& entry : c5.evidence.at("curves")) {
        CHECK(entry.at("curve_in_inv").get<bool>());
        CHECK(entry.at("limit_in_zariski_tangent_space").get<bool>());
        CHECK(entry.at("cone_candidate_vanishes_on_limit").get<bool>());
    }

    const Certificate c3 = singularity_certificate(3, 7);
    CHECK(c3.verdict == "INCONCLUSIVE");
    CHECK(c3.evidence.at("span_dim").get<std::size_t>() < 9);

    const Certificate c4 = singularity_certificate(4, 7);
    CHECK(c4.verdict == "INCONCLUSIVE");
}

TEST_CASE("informational: omega between corner limit vectors at m = 5") {
    // The reduced tangent cone is expected to pair to zero under omega; this
    // is a spot check and not a gate.
    const int m = 5;
    std::vector<std::vector<Rational>> vecs;
    for (int k = 0; k <= 1; ++k) {
        const long alpha = m - 2 * k - 2;
        Matrix<UPoly> a(m, m), b(m, m);
        for (int i = 0; i < m; ++i) {
            const bool head = i < k;
            const bool last = i == m - 1;
            a(i, i) = UPoly::t_power(unsigned(last ? 0 : (head ? alpha : alpha + 2)));
            b(i, i) = UPoly::t_power(unsigned(last ? 2 * alpha + 2 : (head ? alpha + 2 : alpha)));
        }
        Curve c{a, b, AffineChart::p1_chart(m)};
        vecs.push_back(curve_limit(c).vec);
    }
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j)
            WARN(omega_flat(vecs[i], vecs[j]).is_zero());
}

TEST_CASE("block involution swaps the corner points and preserves codimension") {
    const EquationSet eqs = equations_Xinv(3);
    CHECK(swap_ab(p1_point(3)) == PhaseVector(MatrixQ(3, 3), p1_point(3).A));
    const EquationSet swapped = swap_ab(eqs);
    CHECK(tangent_space_codim(swapped, p1_point(3)) ==
          tangent_space_codim(eqs, swap_ab(p1_point(3))));
}
