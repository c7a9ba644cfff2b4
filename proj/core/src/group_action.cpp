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

#include "legvar/group_action.hpp"

#include <cstdlib>

#include "legvar/linalg.hpp"
#include "legvar/prng.hpp"

namespace legvar {

GroupElement::GroupElement(MatrixQ g_, MatrixQ h_, PairConstraint tag_)
    : g(std::move(g_)), h(std::move(h_)), tag(tag_) {
    if (!g.is_square() || !h.is_square() || g.rows() != h.rows())
        throw dimension_error("group element needs equal square matrices");
    const Rational dg = determinant(g), dh = determinant(h);
    if (dg.is_zero() || dh.is_zero())
        throw argument_error("group element with singular matrix");
    if (tag == PairConstraint::SL && (dg != Rational(1) || dh != Rational(1)))
        throw argument_error("SL pair must have det g = det h = 1");
}

GroupElement GroupElement::identity(int m, PairConstraint tag) {
    return GroupElement(MatrixQ::identity(m), MatrixQ::identity(m), tag);
}

LieElement::LieElement(MatrixQ g_, MatrixQ h_) : g(std::move(g_)), h(std::move(h_)) {
    if (!g.is_square() || !h.is_square() || g.rows() != h.rows())
        throw dimension_error("Lie element needs equal square matrices");
    if (!trace(g).is_zero() || !trace(h).is_zero())
        throw argument_error("Lie element must be a traceless pair");
}

PhaseVector act(const GroupElement& e, const PhaseVector& p) {
    if (int(e.g.rows()) != p.m()) throw dimension_error("act size mismatch");
    const MatrixQ gi = inverse(e.g);
    const MatrixQ hi = inverse(e.h);
    return PhaseVector(e.g.transpose() * p.A * e.h, gi * p.B * hi.transpose());
}

PhaseVector lie_act_pair(const MatrixQ& g, const MatrixQ& h, const PhaseVector& p) {
    if (int(g.rows()) != p.m() || int(h.rows()) != p.m())
        throw dimension_error("lie_act size mismatch");
    return PhaseVector(g.transpose() * p.A + p.A * h, -(g * p.B) - p.B * h.transpose());
}

PhaseVector lie_act(const LieElement& x, const PhaseVector& p) {
    return lie_act_pair(x.g, x.h, p);
}

PhaseVector psi(const Rational& mu, const PhaseVector& p) {
    if (mu.is_zero()) throw argument_error("psi needs mu != 0");
    return PhaseVector(mu * p.A, mu.inverse() * p.B);
}

namespace {

// A B^T = B^T A = lambda^2 Id with one shared scalar; equivalent to the
// scale-eliminated quadric family.
bool on_y(const PhaseVector& p, Rational& lambda_sq) {
    const int m = p.m();
    const MatrixQ abt = p.A * p.B.transpose();
    const MatrixQ bta = p.B.transpose() * p.A;
    lambda_sq = abt(0, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Rational expected = (i == j) ? lambda_sq : Rational(0);
            if (abt(i, j) != expected || bta(i, j) != expected) return false;
        }
    return true;
}

} // namespace

Stratum classify(const PhaseVector& p) {
    if (p.is_zero()) throw argument_error("classify: zero point");
    Rational lambda_sq;
    if (!on_y(p, lambda_sq)) throw membership_error("classify: point is not on Y");
    const int m = p.m();
    const std::size_t rank_a = rank(p.A), rank_b = rank(p.B);

    Stratum s{};
    if (rank_a == std::size_t(m) && rank_b == std::size_t(m)) {
        s.kind = Stratum::Kind::INV;
        s.lambda_sq = lambda_sq;
        s.det_A = determinant(p.A);
        if (p.B != lambda_sq * inverse(p.A).transpose())
            throw membership_error("classify: B != lambda^2 (A^-1)^T");
        // mu = (det A)^{1/m} / lambda when both roots are rational.
        const auto lambda = lambda_sq.sqrt_exact();
        const auto root_m = s.det_A.nth_root_exact(static_cast<unsigned long>(m));
        if (lambda && root_m && !lambda->is_zero())
            s.mu_witness = *root_m / *lambda;
        return s;
    }
    s.kind = Stratum::Kind::DEG;
    s.k = int(rank_a);
    s.l = int(rank_b);
    if (!lambda_sq.is_zero() || !(p.A * p.B.transpose()).is_zero() ||
        !(p.B.transpose() * p.A).is_zero())
        throw membership_error("classify: degenerate point with nonzero products");
    if (m % 2 == 0 && s.k == s.l && 2 * s.k == m) s.g_orbit_undecided = true;
    return s;
}

namespace {

// P M Q = diag(Id_r, 0) with P, Q invertible; returns (P, Q, r).
struct RankNormal {
    MatrixQ p, q;
    std::size_t rank;
};

RankNormal rank_normal_form(const MatrixQ& m_in) {
    const std::size_t n = m_in.rows();
    MatrixQ w = m_in;
    MatrixQ p = MatrixQ::identity(n);
    MatrixQ q = MatrixQ::identity(n);
    std::size_t t = 0;
    for (; t < n; ++t) {
        // locate a pivot in the trailing block
        std::size_t pi = n, pj = n;
        for (std::size_t i = t; i < n && pi == n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (!w(i, j).is_zero()) { pi = i; pj = j; break; }
        if (pi == n) break;
        w.swap_rows(pi, t); p.swap_rows(pi, t);
        w.swap_cols(pj, t); q.swap_cols(pj, t);
        const Rational inv_piv = w(t, t).inverse();
        for (std::size_t j = 0; j < n; ++j) { w(t, j) *= inv_piv; }
        for (std::size_t j = 0; j < n; ++j) { p(t, j) *= inv_piv; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == t || w(i, t).is_zero()) continue;
            const Rational f = w(i, t);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(t, j);
                p(i, j) -= f * p(t, j);
            }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (w(t, j).is_zero()) continue;
            const Rational f = w(t, j);
            for (std::size_t i = 0; i < n; ++i) {
                w(i, j) -= f * w(i, t);
                q(i, j) -= f * q(i, t);
            }
        }
    }
    return RankNormal{std::move(p), std::move(q), t};
}

MatrixQ block_diag(const MatrixQ& top, const MatrixQ& bottom) {
    const std::size_t k = top.rows(), r = bottom.rows();
    MatrixQ out(k + r, k + r);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out(k + i, k + j) = bottom(i, j);
    return out;
}

} // namespace

CanonicalForm canonical_form(const PhaseVector& p, bool want_sl) {
    const Stratum s = classify(p);
    if (s.is_inv()) throw stratum_error("canonical_form: point is invertible, not degenerate");
    const int m = p.m();
    const int k = s.k, l = s.l, r = m - k - l;

    // Stage 1: bring A to diag(Id_k, 0).
    const RankNormal na = rank_normal_form(p.A);
    MatrixQ g = na.p.transpose();
    MatrixQ h = na.q;
    PhaseVector cur = act(GroupElement(g, h, PairConstraint::GL), p);

    // The annihilation relations force B into the trailing block now.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if ((i < k || j < k) && !cur.B(i, j).is_zero())
                throw membership_error("canonical_form: point violates the product relations");

    // Stage 2: bring the B block to diag(Id_l, 0) without touching A.
    if (l > 0) {
        MatrixQ b_block(m - k, m - k);
        for (int i = 0; i < m - k; ++i)
            for (int j = 0; j < m - k; ++j) b_block(i, j) = cur.B(k + i, k + j);
        const RankNormal nb = rank_normal_form(b_block);
        const MatrixQ g2 = block_diag(MatrixQ::identity(k), inverse(nb.p));
        const MatrixQ h2 = block_diag(MatrixQ::identity(k), inverse(nb.q).transpose());
        g = g * g2;
        h = h * h2;
        cur = act(GroupElement(g, h, PairConstraint::GL), p);
    }

    PhaseVector canonical(MatrixQ(m, m), MatrixQ(m, m));
    for (int i = 0; i < k; ++i) canonical.A(i, i) = Rational(1);
    for (int i = k; i < k + l; ++i) canonical.B(i, i) = Rational(1);
    if (cur != canonical)
        throw error("canonical_form: reduction did not reach the canonical pair");

    CanonicalForm out{canonical, GroupElement(g, h, PairConstraint::GL), want_sl, false};
    if (!want_sl) return out;

    const Rational d1 = determinant(g), d2 = determinant(h);
    if (r > 0) {
        // Free scalings on the common zero block fix both determinants.
        MatrixQ u = MatrixQ::identity(m), v = MatrixQ::identity(m);
        u(k + l, k + l) = d1.inverse();
        v(k + l, k + l) = d2.inverse();
        out.witness = GroupElement(g * u, h * v, PairConstraint::SL);
        out.sl_achieved = true;
        return out;
    }
    // k + l = m: the obstruction is a rational |k-l|-th root of 1/(d1 d2).
    const Rational prod = d1 * d2;
    std::optional<Rational> c;
    if (k == l) {
        if (prod == Rational(1)) c = Rational(1);
    } else {
        const int d = k - l;
        c = (d > 0) ? prod.inverse().nth_root_exact(static_cast<unsigned long>(d))
                    : prod.nth_root_exact(static_cast<unsigned long>(-d));
    }
    if (!c) return out; // invertible-pair witness with sl_achieved = false
    MatrixQ v2 = MatrixQ::identity(l);
    if (l > 0) v2(0, 0) = d2.inverse();
    MatrixQ u = block_diag(*c * MatrixQ::identity(k), c->inverse() * inverse(v2));
    MatrixQ v = block_diag(MatrixQ::identity(k), v2);
    out.witness = GroupElement(g * u, h * v, PairConstraint::SL);
    out.sl_achieved = true;
    if (!projectively_equal(act(out.witness, p), canonical))
        throw error("canonical_form: SL witness lost the canonical pair");
    return out;
}

MatrixQ random_sl(int m, uint64_t seed) {
    if (m < 0) throw argument_error("random_sl needs m >= 0");
    MatrixQ out = MatrixQ::identity(std::size_t(m));
    if (m < 2) return out;
    Prng rng(seed);
    for (int t = 0; t < 2 * m; ++t) {
        const int i = int(rng.next_in_range(0, m - 1));
        int j = int(rng.next_in_range(0, m - 2));
        if (j >= i) ++j;
        const long c = rng.next_nonzero(-3, 3);
        MatrixQ shear = MatrixQ::identity(std::size_t(m));
        shear(i, j) = Rational(c);
        out = out * shear;
    }
    return out;
}

MatrixQ random_gl(int m, uint64_t seed) {
    Prng rng(seed);
    MatrixQ out = random_sl(m, rng.next());
    for (int i = 0; i < m; ++i) {
        const long d = rng.next_nonzero(-3, 3);
        for (int j = 0; j < m; ++j) out(i, j) *= Rational(d);
    }
    return out;
}

GroupElement random_sl_pair(int m, uint64_t seed) {
    Prng rng(seed);
    return GroupElement(random_sl(m, rng.next()), random_sl(m, rng.next()), PairConstraint::SL);
}

GroupElement random_gl_pair(int m, uint64_t seed) {
    Prng rng(seed);
    return GroupElement(random_gl(m, rng.next()), random_gl(m, rng.next()), PairConstraint::GL);
}

int retry_budget() {
    if (const char* env = std::getenv("LEGVAR_RETRY_BUDGET")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 200;
}

namespace {

MatrixQ random_block(Prng& rng, int rows, int cols) {
    MatrixQ b(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) b(i, j) = Rational(rng.next_in_range(-2, 2));
    return b;
}

// SL pair fixing the canonical pair (diag(Id_k,0), diag(0,Id_l,0)) exactly.
GroupElement canonical_stabilizer_sample(int m, int k, int l, Prng& rng) {
    const int r = m - k - l;
    const MatrixQ p = random_sl(k, rng.next());
    const MatrixQ r1 = random_sl(l, rng.next());
    const MatrixQ r3 = random_sl(r, rng.next());
    const MatrixQ s3 = random_sl(r, rng.next());

    MatrixQ g(m, m), h(m, m);
    auto put = [](MatrixQ& dst, const MatrixQ& src, int i0, int j0) {
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j) dst(i0 + i, j0 + j) = src(i, j);
    };
    put(g, p, 0, 0);
    put(h, inverse(p).transpose(), 0, 0);
    put(g, r1, k, k);
    put(h, inverse(r1).transpose(), k, k);
    put(g, r3, k + l, k + l);
    put(h, s3, k + l, k + l);
    // Lower-left blocks and the upper strips of the trailing square are free.
    put(g, random_block(rng, m - k, k), k, 0);
    put(h, random_block(rng, m - k, k), k, 0);
    if (l > 0 && r > 0) {
        put(g, random_block(rng, l, r), k, k + l);
        put(h, random_block(rng, l, r), k, k + l);
    }
    return GroupElement(g, h, PairConstraint::SL);
}

} // namespace

GroupElement stabilizer_sample(const PhaseVector& p, uint64_t seed) {
    const Stratum s = classify(p);
    if (!s.is_deg()) throw stratum_error("stabilizer_sample: point must be degenerate");
    const int m = p.m();
    const CanonicalForm cf = canonical_form(p);
    const MatrixQ gw = cf.witness.g, hw = cf.witness.h;
    const MatrixQ gwi = inverse(gw), hwi = inverse(hw);

    Prng rng(seed);
    const int budget = retry_budget();
    for (int attempt = 0; attempt < budget; ++attempt) {
        const GroupElement cs = canonical_stabilizer_sample(m, s.k, s.l, rng);
        GroupElement t(gw * cs.g * gwi, hw * cs.h * hwi, PairConstraint::SL);
        if (projectively_equal(act(t, p), p)) return t;
    }
    throw sampling_exhausted_error("stabilizer_sample: no stabilizer element found");
}

bool projectively_equal(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (u.size() != v.size()) return false;
    std::size_t iu = u.size(), iv = v.size();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) { iu = i; break; }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) { iv = i; break; }
    if (iu != iv) return false;
    if (iu == u.size()) return true; // both zero
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] * v[iu] != v[i] * u[iu]) return false;
    return true;
}

bool projectively_equal(const PhaseVector& p, const PhaseVector& q) {
    return projectively_equal(p.flatten(), q.flatten());
}

} // namespace legvar
