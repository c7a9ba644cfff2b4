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

#include <optional>
#include <utility>
#include <vector>

#include "legvar/linalg.hpp"
#include "legvar/matrix.hpp"
#include "legvar/polynomial.hpp"

namespace legvar {

/// A point (A, B) of the phase space: a pair of m x m rational matrices.
/// Flattening follows the canonical coordinate order a11..amm, b11..bmm.
struct PhaseVector {
    MatrixQ A, B;

    PhaseVector() = default;
    PhaseVector(MatrixQ a, MatrixQ b);

    int m() const { return int(A.rows()); }

    std::vector<Rational> flatten() const;
    static PhaseVector unflatten(int m, const std::vector<Rational>& x);

    bool is_zero() const { return A.is_zero() && B.is_zero(); }

    friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
    friend PhaseVector operator+(const PhaseVector& a, const PhaseVector& b) {
        return PhaseVector(a.A + b.A, a.B + b.B);
    }
    friend PhaseVector operator-(const PhaseVector& a, const PhaseVector& b) {
        return PhaseVector(a.A - b.A, a.B - b.B);
    }
    friend PhaseVector operator*(const Rational& s, const PhaseVector& p) {
        return PhaseVector(s * p.A, s * p.B);
    }
};

/// The symplectic form: omega((A,B),(A',B')) = tr(A B'^T - A' B^T).
Rational omega(const PhaseVector& v, const PhaseVector& w);

/// omega on flattened 2m^2 coordinate vectors.
Rational omega_flat(const std::vector<Rational>& u, const std::vector<Rational>& v);

/// The 2m^2 x 2m^2 matrix of omega: [[0, Id],[-Id, 0]] in m^2-blocks.
MatrixQ j_matrix(int m);

/// Homogeneous quadric together with its symmetric matrix: q(x) = x^T gram x.
/// Off-diagonal coefficients split in halves across the two symmetric slots.
struct Quadric {
    Polynomial poly;
    MatrixQ gram;

    /// Builds the Gram matrix; rejects anything that is not a (possibly zero)
    /// homogeneous quadric in the matrix-block coordinates.
    static Quadric from_poly(const Polynomial& p);
};

/// The quadric-to-endomorphism map: rho(q) = 2 J M(q), an element of sp(V).
MatrixQ rho(const Quadric& q);

/// Linear subspace of the phase space given by an independent basis.
struct LinearSubspace {
    int m = 0;
    std::vector<std::vector<Rational>> basis;

    /// Validates exact linear independence of the basis.
    LinearSubspace(int m, std::vector<std::vector<Rational>> basis_vectors);
};

/// True iff dim W = m^2 and omega vanishes on all basis pairs.
bool is_lagrangian(const LinearSubspace& w);
bool is_lagrangian(const std::vector<std::vector<Rational>>& basis, int m);

/// Matrix of the infinitesimal action (A,B) -> (g^T A + A h, -g B - B h^T)
/// as an operator on flattened coordinates.
MatrixQ pair_action_matrix(const MatrixQ& g, const MatrixQ& h);

/// Recovers the unique traceless (g, h) with pair_action_matrix(g,h) == X,
/// or nullopt when X is not such an action.
std::optional<std::pair<MatrixQ, MatrixQ>> recover_traceless_pair(const MatrixQ& x);

} // namespace legvar
