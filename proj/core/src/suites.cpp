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

#include "legvar/suites.hpp"

#include "legvar/json_io.hpp"

#include <algorithm>
#include <map>

#include "legvar/prng.hpp"

namespace legvar {

bool SuiteResult::all_passed() const {
    for (const auto& c : certificates)
        if (!c.passed()) return false;
    return !certificates.empty();
}

bool SuiteResult::any_failed() const {
    for (const auto& c : certificates)
        if (c.verdict == "FAIL") return true;
    return false;
}

bool SuiteResult::any_inconclusive() const {
    for (const auto& c : certificates)
        if (c.verdict == "INCONCLUSIVE") return true;
    return false;
}

std::string SuiteResult::overall() const {
    if (any_failed()) return "FAIL";
    if (any_inconclusive()) return "INCONCLUSIVE";
    return "PASS";
}

namespace {

Certificate make_cert(std::string claim, Json params, uint64_t seed, bool pass,
                      Json evidence) {
    Certificate c;
    c.claim = std::move(claim);
    c.params = std::move(params);
    c.seed = seed;
    c.verdict = pass ? "PASS" : "FAIL";
    c.evidence = std::move(evidence);
    return c;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// ---------------------------------------------------------------------------
// Sparse matrices: the rho images are very sparse, and the bracket-closure
// computation is only affordable this way at m = 5.
// ---------------------------------------------------------------------------

using SparseMat = std::map<std::pair<int, int>, Rational>;

SparseMat sparse_from_dense(const MatrixQ& m) {
    SparseMat s;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) s[{int(i), int(j)}] = m(i, j);
    return s;
}

MatrixQ dense_from_sparse(const SparseMat& s, std::size_t dim) {
    MatrixQ m(dim, dim);
    for (const auto& [ij, v] : s) m(ij.first, ij.second) = v;
    return m;
}

SparseMat sparse_mul(const SparseMat& a, const SparseMat& b) {
    std::map<int, std::vector<std::pair<int, Rational>>> b_rows;
    for (const auto& [ij, v] : b) b_rows[ij.first].emplace_back(ij.second, v);
    SparseMat out;
    for (const auto& [ij, v] : a) {
        auto it = b_rows.find(ij.second);
        if (it == b_rows.end()) continue;
        for (const auto& [col, w] : it->second) {
            Rational& acc = out[{ij.first, col}];
            acc += v * w;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

SparseMat sparse_bracket(const SparseMat& a, const SparseMat& b) {
    SparseMat out = sparse_mul(a, b);
    for (const auto& [ij, v] : sparse_mul(b, a)) {
        Rational& acc = out[ij];
        acc -= v;
        if (acc.is_zero()) out.erase(ij);
    }
    return out;
}

// X^T J + J X = 0, checked sparsely. With J = [[0, I], [-I, 0]]:
// (J X)_{rj} picks up X_{r+half, j} for r < half and -X_{r-half, j} otherwise;
// the entry X_{ij} of the transpose contributes at (j, i +- half).
bool satisfies_sp_condition(const SparseMat& x, int m) {
    const int half = m * m;
    SparseMat acc;
    auto add = [&acc](int i, int j, const Rational& v) {
        Rational& slot = acc[{i, j}];
        slot += v;
        if (slot.is_zero()) acc.erase({i, j});
    };
    for (const auto& [ij, v] : x) {
        const auto [i, j] = ij;
        if (i >= half) add(i - half, j, v);
        else add(i + half, j, -v);
        if (i < half) add(j, i + half, v);
        else add(j, i - half, -v);
    }
    return acc.empty();
}

// ---------------------------------------------------------------------------
// Suite: rho-span
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_rho_span(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    const EquationSet y = equations_Y(m);
    const std::size_t dim = 2 * std::size_t(m) * m;
    const std::size_t expected_dim = 2 * (std::size_t(m) * m - 1);

    std::vector<MatrixQ> images;
    std::vector<SparseMat> sparse_images;
    bool sp_ok = true;
    for (const auto& [label, gen] : y.generators) {
        MatrixQ img = rho(Quadric::from_poly(gen));
        SparseMat s = sparse_from_dense(img);
        sp_ok = sp_ok && satisfies_sp_condition(s, m);
        images.push_back(std::move(img));
        sparse_images.push_back(std::move(s));
    }
    certs.push_back(make_cert("rho-images-in-sp", Json{{"m", m}}, seed, sp_ok,
                              Json{{"images", images.size()}}));

    SpanBuilder span(dim * dim);
    for (const auto& img : images) {
        std::vector<Rational> flat;
        flat.reserve(dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) flat.push_back(img(i, j));
        span.add(std::move(flat));
    }
    certs.push_back(make_cert("rho-span-dimension", Json{{"m", m}}, seed,
                              span.rank() == expected_dim,
                              Json{{"span_dim", span.rank()}, {"expected", expected_dim}}));

    // Each image is the action of a unique traceless pair.
    std::vector<std::pair<MatrixQ, MatrixQ>> pairs;
    bool recover_ok = span.rank() == images.size(); // independent => a basis
    for (const auto& img : images) {
        auto rec = recover_traceless_pair(img);
        if (!rec) { recover_ok = false; break; }
        pairs.push_back(std::move(*rec));
    }
    certs.push_back(make_cert("rho-traceless-recovery", Json{{"m", m}}, seed, recover_ok,
                              Json{{"recovered", pairs.size()}}));

    // Bracket closure: the bracket of two basis actions is again the action
    // of a traceless pair, namely the reversed pairwise bracket.
    bool closure_ok = recover_ok;
    std::size_t checked = 0;
    if (closure_ok) {
        for (std::size_t i = 0; i < sparse_images.size() && closure_ok; ++i)
            for (std::size_t j = i + 1; j < sparse_images.size() && closure_ok; ++j) {
                const SparseMat br = sparse_bracket(sparse_images[i], sparse_images[j]);
                const MatrixQ expected_g = bracket(pairs[j].first, pairs[i].first);
                const MatrixQ expected_h = bracket(pairs[j].second, pairs[i].second);
                if (br.empty()) {
                    closure_ok = expected_g.is_zero() && expected_h.is_zero();
                } else {
                    auto rec = recover_traceless_pair(dense_from_sparse(br, dim));
                    closure_ok = rec && rec->first == expected_g && rec->second == expected_h;
                }
                ++checked;
            }
    }
    certs.push_back(make_cert("rho-bracket-closure", Json{{"m", m}}, seed, closure_ok,
                              Json{{"brackets_checked", checked}}));
    return certs;
}

// ---------------------------------------------------------------------------
// Suite: legendrian
// ---------------------------------------------------------------------------

Certificate legendrian_family_cert(const std::string& claim, const EquationSet& eqs,
                                   const std::vector<PhaseVector>& points, Json params,
                                   uint64_t seed) {
    bool ok = true;
    Json checks = Json::array();
    for (const auto& p : points) {
        try {
            const LegendrianCheck c = legendrian_check_at(eqs, p);
            checks.push_back(Json{{"codim", c.codim}, {"lagrangian", c.lagrangian}});
            ok = ok && c.lagrangian;
        } catch (const inconclusive_error& e) {
            checks.push_back(Json{{"inconclusive", e.what()}});
            ok = false;
        }
    }
    Certificate cert = make_cert(claim, std::move(params), seed, ok,
                                 Json{{"points", points.size()}, {"checks", checks}});
    return cert;
}

std::vector<Certificate> suite_legendrian(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Prng rng(seed);

    if (m <= 4) {
        const EquationSet eqs = equations_Xinv(m);
        std::vector<PhaseVector> pts;
        pts.push_back(PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m)));
        for (int i = 0; i < 5; ++i)
            pts.push_back(act(random_sl_pair(m, rng.next()),
                              PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m))));
        certs.push_back(
            legendrian_family_cert("legendrian-xinv", eqs, pts, Json{{"m", m}}, seed));
    }

    for (int k = 1; k <= m - 1; ++k) {
        const EquationSet eqs = equations_Xdeg(m, k);
        std::vector<PhaseVector> pts;
        pts.push_back(deg_base_point(m, k, m - k));
        for (int i = 0; i < 2; ++i) pts.push_back(sample_deg(m, k, m - k, rng.next()));
        certs.push_back(legendrian_family_cert("legendrian-xdeg-k" + std::to_string(k), eqs,
                                               pts, Json{{"m", m}, {"k", k}}, seed));
    }

    if (m <= 3) {
        const EquationSet sym = equations_Xinv_sym(m);
        std::vector<PhaseVector> pts;
        pts.push_back(PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m)));
        for (int i = 0; i < 3; ++i) pts.push_back(sample_inv_sym(m, rng.next()));
        certs.push_back(legendrian_family_cert("legendrian-sym", sym, pts, Json{{"m", m}}, seed));

        const EquationSet skew = equations_Xinv_skew(m);
        const MatrixQ j0 = standard_skew_form(m);
        std::vector<PhaseVector> spts;
        spts.push_back(PhaseVector(j0, j0)); // -J0^-1 = J0
        for (int i = 0; i < 3; ++i) spts.push_back(sample_inv_skew(m, rng.next()));
        certs.push_back(
            legendrian_family_cert("legendrian-skew", skew, spts, Json{{"m", m}}, seed));
    }
    return certs;
}

// ---------------------------------------------------------------------------
// Suite: dimensions
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_dimensions(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Prng rng(seed);

    for (int k = 0; k <= m; ++k)
        for (int l = 0; k + l <= m; ++l) {
            if (k + l == 0) continue;
            const std::size_t expect = std::size_t((k + l) * (2 * m - k - l) - 1);
            const std::size_t got = dimension_probe(Family::Xdeg, m, k, l, rng.next());
            certs.push_back(make_cert(
                "deg-dimension-k" + std::to_string(k) + "-l" + std::to_string(l),
                Json{{"m", m}, {"k", k}, {"l", l}}, seed, got == expect,
                Json{{"dimension", got}, {"expected", expect}}));
        }

    const std::size_t inv_expect = std::size_t(m) * m - 1;
    const std::size_t inv_got = dimension_probe(Family::Xinv, m, 0, 0, rng.next());
    certs.push_back(make_cert("inv-dimension", Json{{"m", m}}, seed, inv_got == inv_expect,
                              Json{{"dimension", inv_got}, {"expected", inv_expect}}));

    // Closure order: (k',l') lies under (k,l) iff k' <= k and l' <= l; the
    // only nonempty strata with nothing under them are (1,0) and (0,1).
    bool ok = true;
    Json contained = Json::array();
    for (int k = 0; k <= m; ++k)
        for (int l = 0; k + l <= m; ++l) {
            if (k + l == 0) continue;
            bool minimal = true;
            for (int k2 = 0; k2 <= k && minimal; ++k2)
                for (int l2 = 0; l2 <= l; ++l2) {
                    if (k2 + l2 == 0 || (k2 == k && l2 == l)) continue;
                    minimal = false;
                    break;
                }
            const bool expect_minimal = (k == 1 && l == 0) || (k == 0 && l == 1);
            ok = ok && (minimal == expect_minimal);
            if (minimal) contained.push_back(Json{{"k", k}, {"l", l}});
        }
    // Containment sanity on samples: a point of (k', l') satisfies the rank
    // bounds of (k, l) iff k' <= k and l' <= l.
    for (int trial = 0; trial < 6 && ok; ++trial) {
        const int k = int(rng.next_in_range(0, m));
        const int l = int(rng.next_in_range(0, m - k));
        if (k + l == 0) continue;
        const int k2 = int(rng.next_in_range(0, m));
        const int l2 = int(rng.next_in_range(0, m - k2));
        if (k2 + l2 == 0) continue;
        const PhaseVector q = sample_deg(m, k2, l2, rng.next());
        const bool in_closure = rank(q.A) <= std::size_t(k) && rank(q.B) <= std::size_t(l) &&
                                (q.A * q.B.transpose()).is_zero() &&
                                (q.B.transpose() * q.A).is_zero();
        const bool expect = (k2 <= k) && (l2 <= l);
        ok = ok && (in_closure == expect);
    }
    certs.push_back(make_cert("closed-strata-minimality", Json{{"m", m}}, seed, ok,
                              Json{{"minimal_strata", contained}}));
    return certs;
}

// ---------------------------------------------------------------------------
// Suite: smoothness
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_smoothness(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Prng rng(seed);
    const std::size_t expect = std::size_t(m) * m;

    EquationSet eqs = equations_Xinv(m);
    if (m == 4) {
        // The certified quadric subset: scale quadrics plus half-size minors.
        EquationSet quads;
        quads.family = eqs.family;
        quads.m = eqs.m;
        quads.vars = eqs.vars;
        for (const auto& [label, gen] : eqs.generators)
            if (gen.degree() == 2) quads.generators.emplace_back(label, gen);
        certs.push_back(make_cert("xinv4-quadric-count", Json{{"m", m}}, seed,
                                  quads.generators.size() == 66,
                                  Json{{"count", quads.generators.size()}, {"expected", 66}}));
        eqs = std::move(quads);
    }

    const int samples = (m == 3) ? 10 : 5;
    Json checks = Json::array();
    bool ok = true;
    auto check_point = [&](const std::string& name, const PhaseVector& p) {
        const std::size_t codim = tangent_space_codim(eqs, p);
        checks.push_back(Json{{"point", name}, {"codim", codim}});
        ok = ok && codim == expect;
    };

    if (m >= 3) {
        MatrixQ a(m, m), b(m, m);
        a(m - 1, m - 1) = Rational(1);
        const PhaseVector p1(a, MatrixQ(m, m));
        const PhaseVector p2 = swap_ab(p1);
        check_point("p1", p1);
        check_point("p2", p2);
        // Corner consistency through the a<->b involution.
        const std::size_t via_involution = tangent_space_codim(swap_ab(eqs), p1);
        ok = ok && via_involution == tangent_space_codim(eqs, p2);
        checks.push_back(Json{{"point", "p2-via-involution"}, {"codim", via_involution}});
    }
    for (int i = 0; i < samples; ++i)
        check_point("sample" + std::to_string(i),
                    act(random_sl_pair(m, rng.next()),
                        PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m))));

    certs.push_back(make_cert("xinv-smooth-codim", Json{{"m", m}}, seed, ok,
                              Json{{"expected_codim", expect}, {"checks", checks}}));
    return certs;
}

// ---------------------------------------------------------------------------
// Suite: singularity
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_singularity(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Certificate cert = singularity_certificate(m, seed);
    if (m < 5 && cert.verdict == "SINGULAR") cert.verdict = "FAIL"; // must never happen
    certs.push_back(std::move(cert));
    return certs;
}

// ---------------------------------------------------------------------------
// Suite: minor-identity
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_minor_identity(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Prng rng(seed);

    bool ok = true;
    std::size_t checked = 0;
    for (int s = 0; s < 10 && ok; ++s) {
        const MatrixQ g = random_sl(m, rng.next());
        const MatrixQ b = inverse(g).transpose();
        for (std::size_t c = 1; c < std::size_t(m) && ok; ++c) {
            for (const auto& rows : subsets(std::size_t(m), c)) {
                for (const auto& cols : subsets(std::size_t(m), c)) {
                    long sum = 0;
                    for (auto i : rows) sum += long(i) + 1;
                    for (auto j : cols) sum += long(j) + 1;
                    const Rational lhs = minor_deleted(g, rows, cols);
                    Rational rhs = minor_deleted(b, complement_indices(m, rows),
                                                 complement_indices(m, cols));
                    if (sum % 2 != 0) rhs = -rhs;
                    ++checked;
                    if (lhs != rhs) { ok = false; break; }
                }
                if (!ok) break;
            }
        }
    }
    certs.push_back(make_cert("minor-complement-identity", Json{{"m", m}}, seed, ok,
                              Json{{"identities_checked", checked}}));

    if (m == 3 || m == 4) {
        // Compound iteration: the (m-c)-th compound of g equals, entry for
        // entry up to the complement signs, the c-th compound of the signed
        // reversal of the (m-1)-st compound.
        bool cok = true;
        std::size_t cchecked = 0;
        for (int s = 0; s < 5 && cok; ++s) {
            const MatrixQ g = random_sl(m, rng.next());
            const MatrixQ cm1 = compound_matrix(g, std::size_t(m - 1));
            // Rebuild the cofactor-transpose from the (m-1)-st compound.
            const auto sets_m1 = subsets(std::size_t(m), std::size_t(m - 1));
            std::map<std::vector<std::size_t>, std::size_t> pos;
            for (std::size_t i = 0; i < sets_m1.size(); ++i) pos[sets_m1[i]] = i;
            MatrixQ bt(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    const auto ri = complement_indices(m, {std::size_t(i)});
                    const auto cj = complement_indices(m, {std::size_t(j)});
                    Rational v = cm1(pos[ri], pos[cj]);
                    if ((i + j) % 2 != 0) v = -v;
                    bt(i, j) = v;
                }
            cok = cok && bt == inverse(g).transpose();
            for (std::size_t c = 1; c < std::size_t(m) && cok; ++c) {
                const MatrixQ lhs = compound_matrix(g, std::size_t(m) - c);
                const MatrixQ rhs = compound_matrix(bt, c);
                const auto big = subsets(std::size_t(m), std::size_t(m) - c);
                const auto small = subsets(std::size_t(m), c);
                std::map<std::vector<std::size_t>, std::size_t> spos;
                for (std::size_t i = 0; i < small.size(); ++i) spos[small[i]] = i;
                for (std::size_t i = 0; i < big.size() && cok; ++i)
                    for (std::size_t j = 0; j < big.size(); ++j) {
                        const auto ic = complement_indices(m, big[i]);
                        const auto jc = complement_indices(m, big[j]);
                        long sum = 0;
                        for (auto t : ic) sum += long(t) + 1;
                        for (auto t : jc) sum += long(t) + 1;
                        Rational v = rhs(spos[ic], spos[jc]);
                        if (sum % 2 != 0) v = -v;
                        ++cchecked;
                        if (lhs(i, j) != v) { cok = false; break; }
                    }
            }
        }
        certs.push_back(make_cert("compound-iteration-identity", Json{{"m", m}}, seed, cok,
                                  Json{{"entries_checked", cchecked}}));
    }
    return certs;
}

// ---------------------------------------------------------------------------
// Suite: segre (and the rank-degenerate boundary checks)
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_segre(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Prng rng(seed);

    if (m == 2) {
        const EquationSet eqs = equations_Xdeg(2, 1);
        bool ok = true;
        std::size_t tried = 0;
        for (int t = 0; t < 20; ++t) {
            auto pair = [&rng]() {
                std::array<Rational, 2> p;
                do {
                    p[0] = Rational(rng.next_in_range(-4, 4));
                    p[1] = Rational(rng.next_in_range(-4, 4));
                } while (p[0].is_zero() && p[1].is_zero());
                return p;
            };
            const PhaseVector p = segre_param(pair(), pair(), pair());
            ++tried;
            ok = ok && vanishes_at(eqs, p) && rank(p.A) <= 1 && rank(p.B) <= 1 &&
                 (p.A * p.B.transpose()).is_zero();
        }
        certs.push_back(make_cert("segre-on-xdeg21", Json{{"m", 2}, {"k", 1}}, seed, ok,
                                  Json{{"parameter_triples", tried}}));

        // The (2,1) family is smooth: full codimension at parametrized points.
        bool sok = true;
        for (int t = 0; t < 5; ++t) {
            const PhaseVector p = sample_deg(2, 1, 1, rng.next());
            sok = sok && tangent_space_codim(eqs, p) == 4;
        }
        certs.push_back(make_cert("xdeg21-smooth-codim", Json{{"m", 2}, {"k", 1}}, seed, sok,
                                  Json{{"expected_codim", 4}}));
    }

    // Linear cases: rank bound 0 or m cuts a linear space, smooth everywhere.
    {
        bool ok = true;
        Json checks = Json::array();
        for (int k : {0, m}) {
            const EquationSet eqs = equations_Xdeg(m, k);
            for (int t = 0; t < 3; ++t) {
                const int other = (k == 0) ? int(rng.next_in_range(1, m)) : 0;
                const PhaseVector p = (k == 0) ? sample_deg(m, 0, other, rng.next())
                                               : sample_deg(m, k, 0, rng.next());
                const std::size_t codim = tangent_space_codim(eqs, p);
                checks.push_back(Json{{"k", k}, {"codim", codim}});
                ok = ok && codim == std::size_t(m) * m;
            }
        }
        certs.push_back(make_cert("xdeg-linear-cases", Json{{"m", m}}, seed, ok,
                                  Json{{"checks", checks}}));
    }

    if (m >= 3) {
        // At the distinguished corner points the cone candidate keeps a
        // minor-derived generator with no linear term exactly in the
        // singular range.
        bool ok = true;
        Json checks = Json::array();
        for (int k = 1; k <= m - 1; ++k) {
            const EquationSet eqs = equations_Xdeg(m, k);
            if (k >= 2) {
                const EquationSet cone = cone_candidate(eqs, AffineChart::p1_chart(m));
                bool found = false;
                for (const auto& [label, gen] : cone.generators)
                    if (label.rfind("minorA", 0) == 0 && gen.lowest_degree() >= 2) found = true;
                checks.push_back(Json{{"k", k}, {"at", "p1"}, {"nonlinear_minor_part", found}});
                ok = ok && found;
            } else {
                // k = 1: the corner is a smooth point, full codimension.
                MatrixQ a(m, m);
                a(m - 1, m - 1) = Rational(1);
                const PhaseVector p1(a, MatrixQ(m, m));
                const std::size_t codim = tangent_space_codim(eqs, p1);
                checks.push_back(Json{{"k", k}, {"at", "p1"}, {"codim", codim}});
                ok = ok && codim == std::size_t(m) * m;
            }
            if (k <= m - 2) {
                const EquationSet cone = cone_candidate(eqs, AffineChart::p2_chart(m));
                bool found = false;
                for (const auto& [label, gen] : cone.generators)
                    if (label.rfind("minorB", 0) == 0 && gen.lowest_degree() >= 2) found = true;
                checks.push_back(Json{{"k", k}, {"at", "p2"}, {"nonlinear_minor_part", found}});
                ok = ok && found;
            } else {
                MatrixQ b(m, m);
                b(m - 1, m - 1) = Rational(1);
                const PhaseVector p2(MatrixQ(m, m), b);
                const std::size_t codim = tangent_space_codim(eqs, p2);
                checks.push_back(Json{{"k", k}, {"at", "p2"}, {"codim", codim}});
                ok = ok && codim == std::size_t(m) * m;
            }
        }
        certs.push_back(make_cert("xdeg-cone-boundary", Json{{"m", m}}, seed, ok,
                                  Json{{"checks", checks}}));
    }
    return certs;
}

// ---------------------------------------------------------------------------
// Suite: grassmann
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_grassmann(int m, uint64_t seed) {
    if (m != 3) throw argument_error("grassmann suite runs at m = 3");
    std::vector<Certificate> certs;
    Prng rng(seed);
    const EquationSet slice = equations_gr36_slice();
    const EquationSet xinv3 = equations_Xinv(3);

    bool plucker_ok = true, slice_ok = true, proj_ok = true;
    for (int t = 0; t < 20; ++t) {
        const MatrixQ g = random_sl(3, rng.next());
        const auto lift = gr36_lift(g);
        slice_ok = slice_ok && lift.front() == Rational(1) && lift.back() == Rational(1);
        plucker_ok = plucker_ok && vanishes_at_coords(slice, lift);
        proj_ok = proj_ok && vanishes_at(xinv3, gr36_project(lift));
    }
    certs.push_back(make_cert("gr36-plucker-vanishing", Json{{"m", 3}}, seed, plucker_ok,
                              Json{{"lifts", 20}, {"relations", slice.generators.size()}}));
    certs.push_back(make_cert("gr36-slice-membership", Json{{"m", 3}}, seed, slice_ok,
                              Json{{"lifts", 20}}));
    certs.push_back(make_cert("gr36-projection-on-xinv3", Json{{"m", 3}}, seed, proj_ok,
                              Json{{"lifts", 20}}));

    // Off-slice example: determinant 2 is visible in the last coordinate.
    MatrixQ g(3, 3);
    g(0, 0) = Rational(1);
    g(1, 1) = Rational(1);
    g(2, 2) = Rational(2);
    const auto lift = gr36_lift(g);
    certs.push_back(make_cert("gr36-off-slice-detects-det", Json{{"m", 3}}, seed,
                              lift.back() == Rational(2),
                              Json{{"last_coordinate", lift.back().to_string()}}));
    return certs;
}

// ---------------------------------------------------------------------------
// Suites: sym and skew variants
// ---------------------------------------------------------------------------

std::vector<Certificate> suite_sym(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Prng rng(seed);
    const EquationSet eqs = equations_Xinv_sym(m);
    const std::size_t half = std::size_t(m) * (m + 1) / 2;

    bool vanish_ok = true;
    for (int t = 0; t < 20; ++t)
        vanish_ok = vanish_ok && vanishes_at(eqs, sample_inv_sym(m, rng.next()));
    vanish_ok = vanish_ok &&
                vanishes_at(eqs, PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m)));
    certs.push_back(make_cert("sym-vanishing", Json{{"m", m}}, seed, vanish_ok,
                              Json{{"samples", 20}, {"generators", eqs.generators.size()}}));

    bool codim_ok = true;
    Json checks = Json::array();
    std::vector<PhaseVector> pts = {PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m)),
                                    sample_inv_sym(m, rng.next()),
                                    sample_inv_sym(m, rng.next())};
    for (const auto& p : pts) {
        const std::size_t codim = tangent_space_codim(eqs, p);
        checks.push_back(codim);
        codim_ok = codim_ok && codim == half;
    }
    certs.push_back(make_cert("sym-smooth-codim", Json{{"m", m}}, seed, codim_ok,
                              Json{{"expected", half}, {"codims", checks}}));

    if (m == 2) {
        SpanBuilder span(eqs.vars.size());
        for (const auto& [label, gen] : eqs.generators) {
            if (gen.degree() != 1) continue;
            std::vector<Rational> row(eqs.vars.size(), Rational(0));
            for (const auto& [mono, c] : gen.terms())
                for (std::size_t i = 0; i < eqs.vars.size(); ++i)
                    if (mono.factors[0].first == eqs.vars[i]) row[i] = c;
            span.add(std::move(row));
        }
        certs.push_back(make_cert("sym-linear-subspace", Json{{"m", 2}}, seed,
                                  span.rank() == half,
                                  Json{{"linear_rank", span.rank()}, {"expected", half}}));
    }
    return certs;
}

std::vector<Certificate> suite_skew(int m, uint64_t seed) {
    std::vector<Certificate> certs;
    Prng rng(seed);
    const EquationSet eqs = equations_Xinv_skew(m);
    const int n = 2 * m;
    const std::size_t half = std::size_t(n) * (n - 1) / 2;

    bool vanish_ok = true;
    for (int t = 0; t < 20; ++t)
        vanish_ok = vanish_ok && vanishes_at(eqs, sample_inv_skew(m, rng.next()));
    const MatrixQ j0 = standard_skew_form(m);
    vanish_ok = vanish_ok && vanishes_at(eqs, PhaseVector(j0, j0));
    certs.push_back(make_cert("skew-vanishing", Json{{"m", m}}, seed, vanish_ok,
                              Json{{"samples", 20}, {"generators", eqs.generators.size()}}));

    bool codim_ok = true;
    Json checks = Json::array();
    std::vector<PhaseVector> pts = {PhaseVector(j0, j0), sample_inv_skew(m, rng.next()),
                                    sample_inv_skew(m, rng.next())};
    for (const auto& p : pts) {
        const std::size_t codim = tangent_space_codim(eqs, p);
        checks.push_back(codim);
        codim_ok = codim_ok && codim == half;
    }
    certs.push_back(make_cert("skew-smooth-codim", Json{{"m", m}}, seed, codim_ok,
                              Json{{"expected", half}, {"codims", checks}}));

    if (m == 2) {
        SpanBuilder span(eqs.vars.size());
        for (const auto& [label, gen] : eqs.generators) {
            if (gen.degree() != 1) continue;
            std::vector<Rational> row(eqs.vars.size(), Rational(0));
            for (const auto& [mono, c] : gen.terms())
                for (std::size_t i = 0; i < eqs.vars.size(); ++i)
                    if (mono.factors[0].first == eqs.vars[i]) row[i] = c;
            span.add(std::move(row));
        }
        certs.push_back(make_cert("skew-linear-subspace", Json{{"m", 2}}, seed,
                                  span.rank() == half,
                                  Json{{"linear_rank", span.rank()}, {"expected", half}}));
    }
    return certs;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "rho-span", "legendrian", "dimensions", "smoothness", "singularity",
        "minor-identity", "segre", "grassmann", "sym", "skew"};
    return names;
}

SuiteResult run_suite(const std::string& name, int m, uint64_t seed) {
    SuiteResult result;
    result.suite = name;
    result.m = m;
    result.seed = seed;
    if (name == "rho-span") result.certificates = suite_rho_span(m, seed);
    else if (name == "legendrian") result.certificates = suite_legendrian(m, seed);
    else if (name == "dimensions") result.certificates = suite_dimensions(m, seed);
    else if (name == "smoothness") result.certificates = suite_smoothness(m, seed);
    else if (name == "singularity") result.certificates = suite_singularity(m, seed);
    else if (name == "minor-identity") result.certificates = suite_minor_identity(m, seed);
    else if (name == "segre") result.certificates = suite_segre(m, seed);
    else if (name == "grassmann") result.certificates = suite_grassmann(m, seed);
    else if (name == "sym") result.certificates = suite_sym(m, seed);
    else if (name == "skew") result.certificates = suite_skew(m, seed);
    else throw argument_error("unknown suite: " + name);
    return result;
}

Json generator_count_table(int m) {
    Json t;
    t["Y"] = 2 * m * m - 2;
    Json xdeg = Json::object();
    for (int k = 0; k <= m; ++k) {
        const long count = 2L * m * m + binom(m, k + 1) * binom(m, k + 1) +
                           binom(m, m - k + 1) * binom(m, m - k + 1);
        xdeg["k" + std::to_string(k)] = count;
    }
    t["Xdeg"] = std::move(xdeg);
    long xinv = 2L * m * m - 2 + 1L * m * m * m * m;
    if (m % 2 == 0) xinv += binom(m, m / 2) * binom(m, m / 2);
    for (int k = 0; 2 * k < m; ++k) xinv += binom(m, k) * binom(m, k);
    t["Xinv"] = xinv;
    return t;
}

Json suite_report(const SuiteResult& result) {
    Json certs = Json::array();
    for (const auto& c : result.certificates) certs.push_back(certificate_to_json(c));
    return Json{{"suite", result.suite},
                {"m", result.m},
                {"seed", result.seed},
                {"generator_counts", generator_count_table(result.m)},
                {"certificates", std::move(certs)},
                {"overall", result.overall()}};
}

} // namespace legvar
