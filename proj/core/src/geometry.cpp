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

#include "legvar/geometry.hpp"

#include <algorithm>
#include <map>

#include "legvar/prng.hpp"

namespace legvar {

AffineChart AffineChart::at_point(const PhaseVector& p) {
    const auto flat = p.flatten();
    const auto vars = phase_vars(p.m());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (flat[i].is_zero()) continue;
        const Rational inv = flat[i].inverse();
        return AffineChart{vars[i], PhaseVector(inv * p.A, inv * p.B)};
    }
    throw argument_error("chart at the zero point");
}

AffineChart AffineChart::p1_chart(int m) {
    MatrixQ a(m, m), b(m, m);
    a(m - 1, m - 1) = Rational(1);
    return AffineChart{var_a(m, m), PhaseVector(std::move(a), std::move(b))};
}

AffineChart AffineChart::p2_chart(int m) {
    MatrixQ a(m, m), b(m, m);
    b(m - 1, m - 1) = Rational(1);
    return AffineChart{var_b(m, m), PhaseVector(std::move(a), std::move(b))};
}

PhaseVector Curve::at(const Rational& t) const {
    const int n = m();
    MatrixQ a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a(i, j) = A(i, j).eval(t);
            b(i, j) = B(i, j).eval(t);
        }
    return PhaseVector(std::move(a), std::move(b));
}

std::size_t tangent_space_codim(const EquationSet& eqs, const PhaseVector& p) {
    const auto coords = coords_for(eqs, p);
    if (!vanishes_at_coords(eqs, coords))
        throw membership_error("tangent_space_codim: point is not on the scheme");
    return rank(jacobian_at(eqs.polys(), eqs.vars, coords));
}

namespace {

Rational pair_omega(const EquationSet& eqs, const std::vector<Rational>& u,
                    const std::vector<Rational>& v) {
    switch (eqs.family) {
        case Family::XinvSym: {
            const PhaseVector pu = unflatten_sym(eqs.m, u), pv = unflatten_sym(eqs.m, v);
            return omega(pu, pv);
        }
        case Family::XinvSkew: {
            const PhaseVector pu = unflatten_skew(eqs.m, u), pv = unflatten_skew(eqs.m, v);
            return omega(pu, pv);
        }
        default:
            return omega_flat(u, v);
    }
}

} // namespace

LegendrianCheck legendrian_check_at(const EquationSet& eqs, const PhaseVector& p) {
    const auto coords = coords_for(eqs, p);
    if (!vanishes_at_coords(eqs, coords))
        throw membership_error("legendrian_check_at: point is not on the scheme");
    const MatrixQ jac = jacobian_at(eqs.polys(), eqs.vars, coords);
    const RankKernel rk = rank_and_kernel(jac);
    const std::size_t half = eqs.vars.size() / 2;
    if (rk.rank != half)
        throw inconclusive_error("legendrian_check_at: tangent codimension " +
                                 std::to_string(rk.rank) + " != " + std::to_string(half) +
                                 "; not a smoothness certificate");
    LegendrianCheck out{true, rk.rank, half};
    for (std::size_t a = 0; a < rk.kernel_basis.size() && out.lagrangian; ++a)
        for (std::size_t b = a + 1; b < rk.kernel_basis.size(); ++b)
            if (!pair_omega(eqs, rk.kernel_basis[a], rk.kernel_basis[b]).is_zero()) {
                out.lagrangian = false;
                break;
            }
    return out;
}

EquationSet cone_candidate(const EquationSet& eqs, const AffineChart& chart) {
    const auto center_coords = coords_for(eqs, chart.center);
    if (!vanishes_at_coords(eqs, center_coords))
        throw membership_error("cone_candidate: chart center is not on the scheme");

    // Chart variables: everything except the pivot; translation by the center.
    std::vector<std::pair<VarId, Rational>> deltas;
    std::vector<VarId> chart_vars;
    bool pivot_found = false;
    for (std::size_t i = 0; i < eqs.vars.size(); ++i) {
        if (eqs.vars[i] == chart.pivot) {
            if (center_coords[i] != Rational(1))
                throw argument_error("cone_candidate: chart center pivot coordinate must be 1");
            pivot_found = true;
            continue;
        }
        chart_vars.push_back(eqs.vars[i]);
        if (!center_coords[i].is_zero()) deltas.emplace_back(eqs.vars[i], center_coords[i]);
    }
    if (!pivot_found) throw argument_error("cone_candidate: pivot outside the coordinate universe");

    EquationSet out;
    out.family = eqs.family;
    out.m = eqs.m;
    out.k = eqs.k;
    out.vars = chart_vars;
    for (const auto& [label, gen] : eqs.generators) {
        Polynomial local = gen.substitute(chart.pivot, Rational(1)).shift(deltas);
        if (local.is_zero()) continue;
        out.generators.emplace_back(label, local.lowest_degree_part());
    }
    return out;
}

CurveLimit curve_limit(const Curve& c) {
    const int m = c.m();
    const auto vars = phase_vars(m);
    const auto center = c.chart.center.flatten();

    // Collect the coordinate polynomials and check the chart invariants.
    std::vector<UPoly> coord(vars.size());
    for (std::size_t idx = 0; idx < vars.size(); ++idx) {
        const VarId v = vars[idx];
        const UPoly& entry = (v.kind == VarKind::A) ? c.A(v.i - 1, v.j - 1)
                                                    : c.B(v.i - 1, v.j - 1);
        coord[idx] = entry;
        if (v == c.chart.pivot && !(entry == UPoly(Rational(1))))
            throw argument_error("curve_limit: pivot coordinate of the curve must be 1");
        if (entry.eval(Rational(0)) != center[idx])
            throw argument_error("curve_limit: curve does not pass through the chart center");
    }

    std::size_t best = SIZE_MAX;
    for (std::size_t idx = 0; idx < vars.size(); ++idx) {
        const UPoly diff = coord[idx] - UPoly(center[idx]);
        if (diff.is_zero()) continue;
        best = std::min(best, diff.low_order());
    }
    if (best == SIZE_MAX) throw undefined_input_error("curve_limit: curve constant at center");

    CurveLimit out;
    out.order = best;
    out.vec.resize(vars.size(), Rational(0));
    for (std::size_t idx = 0; idx < vars.size(); ++idx) {
        const UPoly diff = coord[idx] - UPoly(center[idx]);
        out.vec[idx] = diff.coeff(best);
    }

    // Classify the trailing block of the limit vector when the chart sits at
    // one of the distinguished corner points.
    if ((c.chart.pivot == var_a(m, m) || c.chart.pivot == var_b(m, m)) && m >= 2) {
        const PhaseVector vpt = PhaseVector::unflatten(m, out.vec);
        MatrixQ ab(m - 1, m - 1), bb(m - 1, m - 1);
        for (int i = 0; i + 1 < m; ++i)
            for (int j = 0; j + 1 < m; ++j) {
                ab(i, j) = vpt.A(i, j);
                bb(i, j) = vpt.B(i, j);
            }
        try {
            out.block_stratum = classify(PhaseVector(std::move(ab), std::move(bb)));
        } catch (const error&) {
            out.block_stratum = std::nullopt;
        }
    }
    return out;
}

PhaseVector swap_ab(const PhaseVector& p) { return PhaseVector(p.B, p.A); }

EquationSet swap_ab(const EquationSet& eqs) {
    EquationSet out;
    out.family = eqs.family;
    out.m = eqs.m;
    out.k = eqs.k;
    out.vars = eqs.vars; // the universes used here are swap-stable
    for (const auto& [label, gen] : eqs.generators)
        out.generators.emplace_back(label + "~", gen.swap_ab());
    return out;
}

std::size_t dimension_probe(Family family, int m, int k, int l, uint64_t seed) {
    PhaseVector p(MatrixQ(m, m), MatrixQ(m, m));
    bool traceless_only = false;
    if (family == Family::Xinv) {
        p = sample_inv(m, seed);
        traceless_only = true;
    } else if (family == Family::Xdeg) {
        p = sample_deg(m, k, l, seed);
    } else {
        throw argument_error("dimension_probe supports the Xinv and Xdeg families");
    }

    SpanBuilder span(2 * std::size_t(m) * m);
    auto add_image = [&span, &p](const MatrixQ& g, const MatrixQ& h) {
        span.add(lie_act_pair(g, h, p).flatten());
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            MatrixQ e(m, m);
            e(i, j) = Rational(1);
            if (traceless_only && i == j) {
                if (i == 0) continue;
                e(0, 0) = Rational(-1); // E_ii - E_11
            }
            add_image(e, MatrixQ(m, m));
            add_image(MatrixQ(m, m), e);
        }
    span.add(p.flatten()); // radial direction
    return span.rank() - 1;
}

namespace {

struct DiagonalCurve {
    int k;
    long alpha, beta;
    Curve curve;
};

DiagonalCurve make_singularity_curve(int m, int k, long beta) {
    // alpha = (m/2 - k - 1) * beta, required positive and integral.
    const long twice_alpha = (m - 2 * k - 2) * beta;
    if (twice_alpha <= 0 || twice_alpha % 2 != 0)
        throw argument_error("inadmissible curve parameters");
    const long alpha = twice_alpha / 2;
    Matrix<UPoly> a(m, m), b(m, m);
    for (int i = 0; i < m; ++i) {
        const bool head = i < k;
        const bool last = i == m - 1;
        const long ea = last ? 0 : (head ? alpha : alpha + beta);
        const long eb = last ? 2 * alpha + beta : (head ? alpha + beta : alpha);
        a(i, i) = UPoly::t_power(unsigned(ea));
        b(i, i) = UPoly::t_power(unsigned(eb));
    }
    return DiagonalCurve{k, alpha, beta, Curve{std::move(a), std::move(b),
                                               AffineChart::p1_chart(m)}};
}

// Exact certificate that the diagonal curve lies in the invertible family
// for t != 0: on the product family with full rank, and the determinant
// matches the required power of the scale.
bool curve_on_inv(const Curve& c, const EquationSet& xinv_eqs) {
    const int m = c.m();
    std::map<VarId, UPoly> values;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            values[var_a(i, j)] = c.A(i - 1, j - 1);
            values[var_b(i, j)] = c.B(i - 1, j - 1);
        }
    auto lookup = [&values](VarId v) { return values.at(v); };

    // Product relations with one scale.
    Matrix<UPoly> a(m, m), b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) { a(i, j) = c.A(i, j); b(i, j) = c.B(i, j); }
    const Matrix<UPoly> abt = a * b.transpose();
    const Matrix<UPoly> bta = b.transpose() * a;
    const UPoly scale = abt(0, 0);
    if (scale.is_zero()) return false;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const UPoly expected = (i == j) ? scale : UPoly();
            if (!(abt(i, j) == expected) || !(bta(i, j) == expected)) return false;
        }

    // Ranks are full and the determinant matches the scale power, so each
    // t != 0 value is an invertible-family point.
    const UPoly det_a = det_expansion(a);
    const UPoly det_b = det_expansion(b);
    if (det_a.is_zero() || det_b.is_zero()) return false;
    UPoly scale_pow = UPoly(Rational(1));
    for (int t = 0; t < m; ++t) scale_pow = scale_pow * scale;
    if (m % 2 == 0) {
        UPoly half_pow = UPoly(Rational(1));
        for (int t = 0; t < m / 2; ++t) half_pow = half_pow * scale;
        if (!(det_a == half_pow)) return false;
    } else {
        if (!(det_a * det_a == scale_pow)) return false;
    }

    // Every known generator vanishes along the curve, symbolically in t.
    for (const auto& [label, gen] : xinv_eqs.generators)
        if (!gen.evaluate<UPoly>(lookup).is_zero()) return false;

    // Spot evaluations classify as invertible points.
    for (const Rational& t : {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(5)}) {
        const Stratum s = classify(c.at(t));
        if (!s.is_inv()) return false;
    }
    return true;
}

} // namespace

Certificate singularity_certificate(int m, uint64_t seed) {
    if (m < 3) throw argument_error("singularity_certificate needs m >= 3");
    Certificate cert;
    cert.claim = "xinv-singular-at-corner";
    cert.params = Json{{"m", m}};
    cert.seed = seed;

    const EquationSet eqs = equations_Xinv(m);
    const AffineChart chart = AffineChart::p1_chart(m);
    const EquationSet cone = cone_candidate(eqs, chart);

    std::vector<Polynomial> linear_parts;
    for (const auto& [label, gen] : cone.generators)
        if (gen.degree() == 1) linear_parts.push_back(gen);

    // Map from full coordinates to the chart coordinate list (pivot dropped).
    const auto vars = phase_vars(m);
    std::vector<std::size_t> chart_pos;
    std::size_t pivot_pos = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == chart.pivot) { pivot_pos = i; continue; }
        chart_pos.push_back(i);
    }
    auto chart_coords = [&](const std::vector<Rational>& full) {
        std::vector<Rational> out;
        out.reserve(chart_pos.size());
        for (auto i : chart_pos) out.push_back(full[i]);
        return out;
    };
    std::map<VarId, std::size_t> var_pos;
    for (std::size_t i = 0; i < vars.size(); ++i) var_pos[vars[i]] = i;
    auto kills_linear_parts = [&](const std::vector<Rational>& full) {
        for (const auto& lp : linear_parts) {
            auto lookup = [&](VarId v) { return full[var_pos.at(v)]; };
            if (!lp.evaluate_rational(lookup).is_zero()) return false;
        }
        return true;
    };
    auto kills_cone = [&](const std::vector<Rational>& full) {
        for (const auto& [label, gen] : cone.generators) {
            auto lookup = [&](VarId v) { return full[var_pos.at(v)]; };
            if (!gen.evaluate_rational(lookup).is_zero()) return false;
        }
        return true;
    };

    const int k_max = (m + 1) / 2 - 2;
    Json curves = Json::array();
    std::vector<std::vector<Rational>> base_vectors;
    bool all_certified = true;
    for (int k = 0; k <= k_max; ++k) {
        std::vector<long> betas = {2};
        if (m % 2 == 0) betas.push_back(1);
        for (long beta : betas) {
            DiagonalCurve dc = make_singularity_curve(m, k, beta);
            const bool on_inv = curve_on_inv(dc.curve, eqs);
            const CurveLimit lim = curve_limit(dc.curve);
            const bool lin_ok = kills_linear_parts(lim.vec);
            const bool cone_ok = kills_cone(lim.vec);
            all_certified = all_certified && on_inv && lin_ok && cone_ok;
            Json entry{{"k", k},
                       {"alpha", dc.alpha},
                       {"beta", dc.beta},
                       {"curve_in_inv", on_inv},
                       {"limit_order", lim.order},
                       {"limit_in_zariski_tangent_space", lin_ok},
                       {"cone_candidate_vanishes_on_limit", cone_ok}};
            if (lim.block_stratum && lim.block_stratum->is_deg())
                entry["block_stratum"] = Json{{"k", lim.block_stratum->k},
                                              {"l", lim.block_stratum->l}};
            curves.push_back(entry);
            if (on_inv && lin_ok && cone_ok) base_vectors.push_back(lim.vec);
        }
    }

    const std::size_t threshold = std::size_t(m) * m;
    SpanBuilder span(chart_pos.size());
    std::size_t transported = 0, rejected = 0;
    for (const auto& v : base_vectors) span.add(chart_coords(v));

    Prng rng(seed);
    const PhaseVector p1 = chart.center;
    const int budget = retry_budget();
    for (int round = 0; round < budget && span.rank() < threshold; ++round) {
        for (const auto& v : base_vectors) {
            if (span.rank() >= threshold) break;
            const GroupElement e = stabilizer_sample(p1, rng.next());
            const std::vector<Rational> w = act(e, PhaseVector::unflatten(m, v)).flatten();
            if (!kills_linear_parts(w) || !kills_cone(w)) {
                ++rejected;
                continue;
            }
            ++transported;
            span.add(chart_coords(w));
        }
    }

    cert.evidence = Json{{"chart_dim", chart_pos.size()},
                         {"threshold", threshold},
                         {"span_dim", span.rank()},
                         {"base_vectors", base_vectors.size()},
                         {"transported_vectors", transported},
                         {"rejected_vectors", rejected},
                         {"curves", curves}};
    cert.verdict =
        (all_certified && span.rank() >= threshold) ? "SINGULAR" : "INCONCLUSIVE";
    return cert;
}

} // namespace legvar
