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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "legvar/matrix.hpp"

namespace legvar {

/// Lex-ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// Complement of a sorted index subset inside {0, ..., n-1}.
std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& idx);

/// Exact determinant by fraction-free (Bareiss) elimination with full pivoting.
Rational determinant(const MatrixQ& m);

/// Determinant of the submatrix of a square matrix obtained by *removing*
/// rows `del_rows` and columns `del_cols` (0-based, equal cardinality).
/// Removing nothing gives the full determinant; removing everything gives 1.
Rational minor_deleted(const MatrixQ& m, const std::vector<std::size_t>& del_rows,
                       const std::vector<std::size_t>& del_cols);

/// Exact Pfaffian of an even-size skew-symmetric matrix; pf(M)^2 = det(M).
Rational pfaffian(const MatrixQ& m);

struct RankKernel {
    std::size_t rank;
    std::vector<std::vector<Rational>> kernel_basis; // each v satisfies M v = 0
};

/// Exact rank and a kernel basis over the rationals.
RankKernel rank_and_kernel(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

/// One solution of M x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(const MatrixQ& m,
                                                  const std::vector<Rational>& b);

/// Exact inverse; throws argument_error when singular.
MatrixQ inverse(const MatrixQ& m);

/// Incremental exact row-space tracker (used for span-dimension certificates).
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

    /// Returns true when the vector enlarged the span.
    bool add(std::vector<Rational> v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    /// Residual of v after reduction against the current basis (zero iff v in span).
    std::vector<Rational> reduce(std::vector<Rational> v) const;

private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_; // reduced, each with leading 1
    std::vector<std::size_t> lead_;
};

// ---------------------------------------------------------------------------
// Generic (division-free) routines, usable with polynomial entries.
// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
T det_laplace_rec(const Matrix<T>& m, std::size_t row, uint32_t col_mask,
                  std::unordered_map<uint32_t, T>& memo) {
    const std::size_t n = m.rows();
    if (row == n) return RingOne<T>::value();
    auto it = memo.find(col_mask);
    if (it != memo.end()) return it->second;
    T acc{};
    std::size_t parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (col_mask & (uint32_t(1) << j)) continue;
        const T& a = m(row, j);
        if (!(a == T())) {
            T sub = det_laplace_rec(m, row + 1, col_mask | (uint32_t(1) << j), memo);
            T term = a * sub;
            if (parity % 2 == 1) acc -= term;
            else acc += term;
        }
        ++parity;
    }
    memo.emplace(col_mask, acc);
    return memo[col_mask];
}

} // namespace detail

/// Division-free determinant by expansion with memoization over column sets.
/// Works over any commutative ring (polynomials included); intended for n <= 8.
template <typename T>
T det_expansion(const Matrix<T>& m) {
    if (!m.is_square()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return RingOne<T>::value();
    if (n > 31) throw dimension_error("det_expansion limited to n <= 31");
    std::unordered_map<uint32_t, T> memo;
    return detail::det_laplace_rec(m, 0, 0, memo);
}

namespace detail {

template <typename T>
T pfaffian_rec(const Matrix<T>& m, std::vector<std::size_t>& idx) {
    if (idx.empty()) return RingOne<T>::value();
    const std::size_t i0 = idx[0];
    T acc{};
    for (std::size_t p = 1; p < idx.size(); ++p) {
        const std::size_t j = idx[p];
        const T& a = m(i0, j);
        if (a == T()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != p) rest.push_back(idx[q]);
        T sub = pfaffian_rec(m, rest);
        T term = a * sub;
        if (p % 2 == 1) acc += term;
        else acc -= term;
    }
    return acc;
}

} // namespace detail

/// Pfaffian over any commutative ring by expansion along the first row.
/// The matrix must be skew-symmetric of even size (checked).
template <typename T>
T pfaffian_expansion(const Matrix<T>& m) {
    if (!m.is_square()) throw structure_error("pfaffian of non-square matrix");
    const std::size_t n = m.rows();
    if (n % 2 != 0) throw structure_error("pfaffian of odd-size matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(m(i, j) == -m(j, i)))
                throw structure_error("pfaffian of non-skew matrix");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return detail::pfaffian_rec(m, idx);
}

/// Matrix with rows/columns `del` removed (0-based); generic entry type.
template <typename T>
Matrix<T> delete_rows_cols(const Matrix<T>& m, const std::vector<std::size_t>& del_rows,
                           const std::vector<std::size_t>& del_cols) {
    std::vector<std::size_t> keep_r = complement_indices(m.rows(), del_rows);
    std::vector<std::size_t> keep_c = complement_indices(m.cols(), del_cols);
    return m.select(keep_r, keep_c);
}

/// c-th compound: matrix of all c x c minors, rows/cols indexed by lex c-subsets.
template <typename T>
Matrix<T> compound_matrix(const Matrix<T>& m, std::size_t c) {
    if (!m.is_square()) throw dimension_error("compound of non-square matrix");
    auto row_sets = subsets(m.rows(), c);
    auto col_sets = subsets(m.cols(), c);
    Matrix<T> r(row_sets.size(), col_sets.size());
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j)
            r(i, j) = det_expansion(m.select(row_sets[i], col_sets[j]));
    return r;
}

} // namespace legvar
