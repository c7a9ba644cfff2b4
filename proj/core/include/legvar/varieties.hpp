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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "legvar/polynomial.hpp"
#include "legvar/symplectic.hpp"
#include "legvar/univariate.hpp"

namespace legvar {

enum class Family { Y, Xdeg, Xinv, XinvSym, XinvSkew, Gr36Slice };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A named family of generators for one variety, together with the ordered
/// coordinate universe the generators live in.
struct EquationSet {
    Family family;
    int m = 0;  // matrix size parameter (skew: matrices are 2m x 2m)
    int k = -1; // rank bound, Xdeg only
    std::vector<std::pair<std::string, Polynomial>> generators;
    std::vector<VarId> vars;

    std::vector<Polynomial> polys() const;
};

// --- generator factories ----------------------------------------------------

/// The quadrics eliminating the scale from A B^T = B^T A = lambda^2 Id.
EquationSet equations_Y(int m);

/// Entries of A B^T and B^T A plus the (k+1)-minors of A and (m-k+1)-minors
/// of B: the full known generator list for the rank-bounded family.
EquationSet equations_Xdeg(int m, int k);

/// Every certified equation family for the invertible-pair variety: the Y
/// quadrics, the degree-m minor/entry pair products, the half-size minor
/// quadrics (m even), and the squared-minor equations for each 0 <= k < m/2.
EquationSet equations_Xinv(int m);

/// Symmetric-pair variant, in the binom(m+1,2)*2 canonical coordinates.
EquationSet equations_Xinv_sym(int m);

/// Skew-pair variant (2m x 2m matrices), strictly-upper coordinates. The
/// Pfaffian pair relations carry signs calibrated by the adjugate oracle.
EquationSet equations_Xinv_skew(int m);

/// Plucker quadrics of Gr(3,6) in the 20 lifted coordinates plus the linear
/// slice form; coordinates ordered (front, a-block, b-block, back).
EquationSet equations_gr36_slice();

// --- coordinate universes and flattening ------------------------------------

std::vector<VarId> sym_vars(int m);
std::vector<VarId> skew_vars(int m);

std::vector<Rational> flatten_sym(const PhaseVector& p);
std::vector<Rational> flatten_skew(const PhaseVector& p);
PhaseVector unflatten_sym(int m, const std::vector<Rational>& coords);
PhaseVector unflatten_skew(int m, const std::vector<Rational>& coords);

/// Flattens a point into the coordinate order of the given equation set
/// (main families: 2m^2 coords; sym/skew: triangular coords).
std::vector<Rational> coords_for(const EquationSet& set, const PhaseVector& p);

/// Values of all generators at explicit coordinates (order = set.vars).
std::vector<Rational> evaluate_at_coords(const EquationSet& set,
                                         const std::vector<Rational>& coords);

bool vanishes_at(const EquationSet& set, const PhaseVector& p);
bool vanishes_at_coords(const EquationSet& set, const std::vector<Rational>& coords);

// --- symbolic matrices -------------------------------------------------------

Matrix<Polynomial> symbolic_matrix(int m, VarKind kind);
Matrix<Polynomial> symbolic_matrix_sym(int m, VarKind kind);
Matrix<Polynomial> symbolic_matrix_skew(int m, VarKind kind); // size 2m

// --- samplers ----------------------------------------------------------------

/// (g, (g^-1)^T) for g a product of 2m random integer shears; det g = 1.
PhaseVector sample_inv(int m, uint64_t seed);

/// Canonical diagonal pair of the (k,l) stratum moved by a random invertible
/// pair. (k,l) = (1,0) and (0,1) use the distinguished representatives
/// [E_mm, 0] and [0, E_mm] as base points.
PhaseVector sample_deg(int m, int k, int l, uint64_t seed);

/// Base (unmoved) representative used by sample_deg.
PhaseVector deg_base_point(int m, int k, int l);

/// (A, A^-1) with A = L^T L symmetric of determinant 1.
PhaseVector sample_inv_sym(int m, uint64_t seed);

/// (A, -A^-1) with A = g^T J0 g skew of Pfaffian 1 (size 2m).
PhaseVector sample_inv_skew(int m, uint64_t seed);

/// The standard skew block matrix diag([[0,1],[-1,0]], ...), Pfaffian 1.
MatrixQ standard_skew_form(int m);

/// The three-line parametrization of the (2,1) rank-degenerate family.
PhaseVector segre_param(const std::array<Rational, 2>& mu,
                        const std::array<Rational, 2>& nu,
                        const std::array<Rational, 2>& xi);

// --- Grassmannian lift --------------------------------------------------------

/// 20-vector (1, g, cofactor(g), det g) in the coordinate order of
/// equations_gr36_slice().
std::vector<Rational> gr36_lift(const MatrixQ& g);

/// Drops the first and last lift coordinates, yielding the matrix pair.
PhaseVector gr36_project(const std::vector<Rational>& lift);

// --- skew sign calibration ------------------------------------------------------

/// Sign data relating -A^-1 to the codimension-2 principal Pfaffians:
/// (-A^-1)_{ij} = sign(i,j) * pf(A del {i,j}) / pf(A), and eps = pf(-A^-1)
/// on the pf A = 1 family. Calibrated once per m from random samples.
struct SkewSignPattern {
    int m; // matrices are 2m x 2m
    std::map<std::pair<int, int>, int> sign; // keys (i,j), 1-based, i < j
    int eps = 1;
};

SkewSignPattern calibrate_skew_signs(int m);

} // namespace legvar
