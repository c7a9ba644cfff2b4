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

#include "legvar/symplectic.hpp"

namespace legvar {

PhaseVector::PhaseVector(MatrixQ a, MatrixQ b) : A(std::move(a)), B(std::move(b)) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
        throw dimension_error("phase vector needs two square matrices of equal size");
}

std::vector<Rational> PhaseVector::flatten() const {
    const int n = m();
    std::vector<Rational> x;
    x.reserve(2 * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.push_back(A(i, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.push_back(B(i, j));
    return x;
}

PhaseVector PhaseVector::unflatten(int m, const std::vector<Rational>& x) {
    if (x.size() != std::size_t(2 * m * m))
        throw dimension_error("unflatten expects 2m^2 coordinates");
    MatrixQ a(m, m), b(m, m);
    std::size_t k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = x[k++];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b(i, j) = x[k++];
    return PhaseVector(std::move(a), std::move(b));
}

Rational omega(const PhaseVector& v, const PhaseVector& w) {
    if (v.m() != w.m()) throw dimension_error("omega size mismatch");
    Rational acc(0);
    const int n = v.m();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += v.A(i, j) * w.B(i, j) - w.A(i, j) * v.B(i, j);
    return acc;
}

Rational omega_flat(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw dimension_error("omega_flat size mismatch");
    const std::size_t h = u.size() / 2;
    Rational acc(0);
    for (std::size_t k = 0; k < h; ++k)
        acc += u[k] * v[h + k] - v[k] * u[h + k];
    return acc;
}

MatrixQ j_matrix(int m) {
    const std::size_t h = std::size_t(m) * m;
    MatrixQ j(2 * h, 2 * h);
    for (std::size_t k = 0; k < h; ++k) {
        j(k, h + k) = Rational(1);
        j(h + k, k) = Rational(-1);
    }
    return j;
}

namespace {

std::size_t flat_index(const VarId& v, int m) {
    if (v.kind == VarKind::X) throw degree_error("auxiliary variable in a phase-space quadric");
    const std::size_t base = v.kind == VarKind::A ? 0 : std::size_t(m) * m;
    return base + std::size_t(v.i - 1) * m + (v.j - 1);
}

} // namespace

Quadric Quadric::from_poly(const Polynomial& p) {
    const int m = p.m();
    if (m < 2) throw degree_error("quadric needs ambient size m >= 2");
    const std::size_t dim = 2 * std::size_t(m) * m;
    MatrixQ gram(dim, dim);
    for (const auto& [mono, c] : p.terms()) {
        if (mono.degree() != 2) throw degree_error("quadric must be homogeneous of degree 2");
        if (mono.factors.size() == 1) {
            const std::size_t k = flat_index(mono.factors[0].first, m);
            gram(k, k) += c;
        } else {
            const std::size_t k1 = flat_index(mono.factors[0].first, m);
            const std::size_t k2 = flat_index(mono.factors[1].first, m);
            const Rational half = c / Rational(2);
            gram(k1, k2) += half;
            gram(k2, k1) += half;
        }
    }
    return Quadric{p, std::move(gram)};
}

MatrixQ rho(const Quadric& q) {
    const int m = q.poly.m();
    return Rational(2) * (j_matrix(m) * q.gram);
}

LinearSubspace::LinearSubspace(int m_, std::vector<std::vector<Rational>> basis_vectors)
    : m(m_), basis(std::move(basis_vectors)) {
    const std::size_t dim = 2 * std::size_t(m) * m;
    MatrixQ rows(basis.size(), dim);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (basis[r].size() != dim)
            throw dimension_error("subspace basis vector of wrong length");
        for (std::size_t c = 0; c < dim; ++c) rows(r, c) = basis[r][c];
    }
    if (rank(rows) != basis.size())
        throw argument_error("subspace basis is linearly dependent");
}

bool is_lagrangian(const std::vector<std::vector<Rational>>& basis, int m) {
    const std::size_t half = std::size_t(m) * m;
    MatrixQ rows(basis.size(), 2 * half);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (basis[r].size() != 2 * half) throw dimension_error("basis vector of wrong length");
        for (std::size_t c = 0; c < 2 * half; ++c) rows(r, c) = basis[r][c];
    }
    if (rank(rows) != half) return false;
    for (std::size_t p = 0; p < basis.size(); ++p)
        for (std::size_t q = p + 1; q < basis.size(); ++q)
            if (!omega_flat(basis[p], basis[q]).is_zero()) return false;
    return true;
}

bool is_lagrangian(const LinearSubspace& w) { return is_lagrangian(w.basis, w.m); }

MatrixQ pair_action_matrix(const MatrixQ& g, const MatrixQ& h) {
    if (!g.is_square() || !h.is_square() || g.rows() != h.rows())
        throw dimension_error("pair action needs equal square matrices");
    const int m = int(g.rows());
    const std::size_t half = std::size_t(m) * m;
    MatrixQ x(2 * half, 2 * half);
    auto a_idx = [m](int i, int j) { return std::size_t(i) * m + j; };
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            // (g^T A)_{uv} = sum_r g_{ru} A_{rv}; (A h)_{uv} = sum_s A_{us} h_{sv}.
            for (int r = 0; r < m; ++r) x(a_idx(u, v), a_idx(r, v)) += g(r, u);
            for (int s = 0; s < m; ++s) x(a_idx(u, v), a_idx(u, s)) += h(s, v);
            // (-g B)_{uv} = -sum_r g_{ur} B_{rv}; (-B h^T)_{uv} = -sum_s B_{us} h_{vs}.
            for (int r = 0; r < m; ++r)
                x(half + a_idx(u, v), half + a_idx(r, v)) -= g(u, r);
            for (int s = 0; s < m; ++s)
                x(half + a_idx(u, v), half + a_idx(u, s)) -= h(v, s);
        }
    return x;
}

std::optional<std::pair<MatrixQ, MatrixQ>> recover_traceless_pair(const MatrixQ& x) {
    const std::size_t dim = x.rows();
    if (!x.is_square() || dim % 2 != 0) return std::nullopt;
    const std::size_t half = dim / 2;
    int m = 0;
    while (std::size_t(m) * m < half) ++m;
    if (std::size_t(m) * m != half) return std::nullopt;

    auto a_idx = [m](int i, int j) { return std::size_t(i) * m + j; };
    MatrixQ g(m, m), h(m, m);
    // X[a(u,v), a(r,s)] = g_{ru} delta_{vs} + h_{sv} delta_{ur}.
    for (int u = 0; u < m; ++u)
        for (int r = 0; r < m; ++r)
            if (u != r) g(r, u) = x(a_idx(u, 0), a_idx(r, 0));
    for (int v = 0; v < m; ++v)
        for (int s = 0; s < m; ++s)
            if (v != s) h(s, v) = x(a_idx(0, v), a_idx(0, s));
    // Diagonals: X[a(u,v),a(u,v)] = g_uu + h_vv; fix the shared constant by
    // the traceless normalization.
    Rational col_sum(0);
    for (int u = 0; u < m; ++u) col_sum += x(a_idx(u, 0), a_idx(u, 0));
    const Rational h00 = col_sum / Rational(m); // = h_00 since tr g = 0
    h(0, 0) = h00;
    for (int u = 0; u < m; ++u) g(u, u) = x(a_idx(u, 0), a_idx(u, 0)) - h00;
    for (int v = 1; v < m; ++v) h(v, v) = x(a_idx(0, v), a_idx(0, v)) - g(0, 0);

    if (!trace(g).is_zero() || !trace(h).is_zero()) return std::nullopt;
    if (pair_action_matrix(g, h) != x) return std::nullopt;
    return std::make_pair(std::move(g), std::move(h));
}

} // namespace legvar
