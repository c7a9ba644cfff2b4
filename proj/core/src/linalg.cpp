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

#include "legvar/linalg.hpp"

namespace legvar {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        if (k == 0) break;
        std::size_t i = k;
        while (i-- > 0) {
            if (cur[i] != n - k + i) break;
            if (i == 0) return out;
        }
        if (cur[i] == n - k + i) return out;
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& idx) {
    std::vector<bool> used(n, false);
    for (auto i : idx) {
        if (i >= n) throw dimension_error("index out of range");
        used[i] = true;
    }
    std::vector<std::size_t> out;
    out.reserve(n - idx.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

namespace {

// Size heuristic for pivot choice: smaller operands keep Bareiss entries small.
std::size_t entry_weight(const Rational& r) {
    return mpz_size(r.num().get_mpz_t()) + mpz_size(r.den().get_mpz_t());
}

} // namespace

Rational determinant(const MatrixQ& m) {
    if (!m.is_square()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    MatrixQ a = m;
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Full pivoting: pick the lightest nonzero entry of the trailing block.
        std::size_t pr = n, pc = n;
        std::size_t best = 0;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (a(i, j).is_zero()) continue;
                std::size_t w = entry_weight(a(i, j));
                if (pr == n || w < best) {
                    pr = i; pc = j; best = w;
                }
            }
        if (pr == n) return Rational(0);
        if (pr != k) { a.swap_rows(pr, k); sign = -sign; }
        if (pc != k) { a.swap_cols(pc, k); sign = -sign; }
        const Rational pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
            a(i, k) = Rational(0);
        }
        prev = pivot;
    }
    Rational d = a(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

Rational minor_deleted(const MatrixQ& m, const std::vector<std::size_t>& del_rows,
                       const std::vector<std::size_t>& del_cols) {
    if (!m.is_square()) throw dimension_error("minor of non-square matrix");
    if (del_rows.size() != del_cols.size())
        throw dimension_error("minor needs |I| = |J|");
    return determinant(delete_rows_cols(m, del_rows, del_cols));
}

Rational pfaffian(const MatrixQ& m) { return pfaffian_expansion(m); }

namespace {

// Fraction-free forward elimination with full pivoting.
// Returns rank; records the column permutation and leaves `a` in echelon form
// with pivots on the diagonal of the leading rank x rank block.
std::size_t forward_eliminate(MatrixQ& a, std::vector<std::size_t>& col_perm) {
    const std::size_t nr = a.rows(), nc = a.cols();
    col_perm.resize(nc);
    for (std::size_t j = 0; j < nc; ++j) col_perm[j] = j;
    Rational prev(1);
    std::size_t r = 0;
    while (r < nr && r < nc) {
        std::size_t pr = nr, pc = nc, best = 0;
        for (std::size_t i = r; i < nr; ++i)
            for (std::size_t j = r; j < nc; ++j) {
                if (a(i, j).is_zero()) continue;
                std::size_t w = entry_weight(a(i, j));
                if (pr == nr || w < best) { pr = i; pc = j; best = w; }
            }
        if (pr == nr) break;
        a.swap_rows(pr, r);
        if (pc != r) { a.swap_cols(pc, r); std::swap(col_perm[pc], col_perm[r]); }
        const Rational pivot = a(r, r);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = r + 1; j < nc; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, r) * a(r, j)) / prev;
            a(i, r) = Rational(0);
        }
        prev = pivot;
        ++r;
    }
    return r;
}

} // namespace

RankKernel rank_and_kernel(const MatrixQ& m) {
    MatrixQ a = m;
    std::vector<std::size_t> col_perm;
    const std::size_t r = forward_eliminate(a, col_perm);
    const std::size_t nc = m.cols();

    // Back-substitute to reduced form on the pivot block (exact divisions).
    for (std::size_t i = r; i-- > 0;) {
        const Rational pivot = a(i, i);
        for (std::size_t j = i; j < nc; ++j) a(i, j) /= pivot;
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = a(k, i);
            if (f.is_zero()) continue;
            for (std::size_t j = i; j < nc; ++j) a(k, j) -= f * a(i, j);
        }
    }

    RankKernel out;
    out.rank = r;
    // Permuted system: x_pivot = -F x_free. One basis vector per free column.
    for (std::size_t f = r; f < nc; ++f) {
        std::vector<Rational> v(nc, Rational(0));
        v[col_perm[f]] = Rational(1);
        for (std::size_t i = 0; i < r; ++i) v[col_perm[i]] = -a(i, f);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const MatrixQ& m) {
    MatrixQ a = m;
    std::vector<std::size_t> col_perm;
    return forward_eliminate(a, col_perm);
}

std::optional<std::vector<Rational>> solve_linear(const MatrixQ& m,
                                                  const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw dimension_error("solve_linear shape mismatch");
    const std::size_t nc = m.cols(), nr = m.rows();
    MatrixQ a = m;
    std::vector<Rational> rhs = b;
    std::vector<std::size_t> col_perm(nc);
    for (std::size_t j = 0; j < nc; ++j) col_perm[j] = j;

    // Fraction-free elimination mirrored on the right-hand side; pivots are
    // never taken from the rhs column.
    Rational prev(1);
    std::size_t r = 0;
    while (r < nr && r < nc) {
        std::size_t pr = nr, pc = nc, best = 0;
        for (std::size_t i = r; i < nr; ++i)
            for (std::size_t j = r; j < nc; ++j) {
                if (a(i, j).is_zero()) continue;
                std::size_t w = entry_weight(a(i, j));
                if (pr == nr || w < best) { pr = i; pc = j; best = w; }
            }
        if (pr == nr) break;
        a.swap_rows(pr, r);
        std::swap(rhs[pr], rhs[r]);
        if (pc != r) { a.swap_cols(pc, r); std::swap(col_perm[pc], col_perm[r]); }
        const Rational pivot = a(r, r);
        for (std::size_t i = r + 1; i < nr; ++i) {
            rhs[i] = (rhs[i] * pivot - a(i, r) * rhs[r]) / prev;
            for (std::size_t j = r + 1; j < nc; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, r) * a(r, j)) / prev;
            a(i, r) = Rational(0);
        }
        prev = pivot;
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;

    // Back substitution, free variables set to zero.
    std::vector<Rational> y(nc, Rational(0));
    for (std::size_t i = r; i-- > 0;) {
        Rational s = rhs[i];
        for (std::size_t j = i + 1; j < nc; ++j) s -= a(i, j) * y[j];
        y[i] = s / a(i, i);
    }
    std::vector<Rational> x(nc, Rational(0));
    for (std::size_t j = 0; j < nc; ++j) x[col_perm[j]] = y[j];
    return x;
}

MatrixQ inverse(const MatrixQ& m) {
    if (!m.is_square()) throw dimension_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    MatrixQ inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> e(n, Rational(0));
        e[c] = Rational(1);
        auto x = solve_linear(m, e);
        if (!x) throw argument_error("matrix not invertible");
        for (std::size_t i = 0; i < n; ++i) inv(i, c) = (*x)[i];
    }
    return inv;
}

bool SpanBuilder::add(std::vector<Rational> v) {
    if (v.size() != dim_) throw dimension_error("SpanBuilder dimension mismatch");
    v = reduce(std::move(v));
    std::size_t lead = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) { lead = j; break; }
    if (lead == dim_) return false;
    const Rational pivot = v[lead];
    for (std::size_t j = lead; j < dim_; ++j) v[j] /= pivot;
    // Keep earlier rows reduced against the new one.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][lead];
        if (f.is_zero()) continue;
        for (std::size_t j = lead; j < dim_; ++j) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
}

std::vector<Rational> SpanBuilder::reduce(std::vector<Rational> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = v[lead_[r]];
        if (f.is_zero()) continue;
        for (std::size_t j = lead_[r]; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

} // namespace legvar
