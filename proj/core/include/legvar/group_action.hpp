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

#include <cstdint>
#include <optional>
#include <string>

#include "legvar/symplectic.hpp"

namespace legvar {

enum class PairConstraint { SL, GL };

/// An element (g, h) of the matrix pair group acting by
/// (A, B) -> (g^T A h, g^-1 B (h^-1)^T). SL pairs have det g = det h = 1.
struct GroupElement {
    MatrixQ g, h;
    PairConstraint tag;

    GroupElement(MatrixQ g_, MatrixQ h_, PairConstraint tag_);

    static GroupElement identity(int m, PairConstraint tag = PairConstraint::SL);
};

/// A traceless pair (g, h) acting infinitesimally by
/// (A, B) -> (g^T A + A h, -g B - B h^T).
struct LieElement {
    MatrixQ g, h;

    LieElement(MatrixQ g_, MatrixQ h_);
};

/// Classification of a nonzero point of the lambda-scaled product family:
/// either an invertible pair (with exact scale data) or a rank-(k,l)
/// annihilating pair.
struct Stratum {
    enum class Kind { INV, DEG };
    Kind kind;

    // INV data
    Rational lambda_sq;
    Rational det_A;
    std::optional<Rational> mu_witness;

    // DEG data
    int k = 0, l = 0;
    // Set for the even-size middle stratum k = l = m/2, whose decomposition
    // into SL-pair orbits is not resolved here (classification is under the
    // full invertible-pair group).
    bool g_orbit_undecided = false;

    bool is_inv() const { return kind == Kind::INV; }
    bool is_deg() const { return kind == Kind::DEG; }
};

PhaseVector act(const GroupElement& e, const PhaseVector& p);

/// Infinitesimal action without the traceless constraint (gl + gl version).
PhaseVector lie_act_pair(const MatrixQ& g, const MatrixQ& h, const PhaseVector& p);

PhaseVector lie_act(const LieElement& x, const PhaseVector& p);

/// The scaling automorphism (A, B) -> (mu A, mu^-1 B), mu != 0.
PhaseVector psi(const Rational& mu, const PhaseVector& p);

/// Classifies a nonzero point lying on the lambda-family quadrics.
/// Throws membership_error off the family and argument_error for zero input.
Stratum classify(const PhaseVector& p);

struct CanonicalForm {
    PhaseVector diag_pair;   // the canonical diagonal representative
    GroupElement witness;    // act(witness, p) is projectively the canonical pair
    bool sl_requested = false;
    bool sl_achieved = false; // witness is an SL pair
};

/// Constructive normal form of a rank-degenerate point. With want_sl the
/// witness is det-normalized when the required rational root exists;
/// otherwise the invertible-pair witness is returned with sl_achieved=false.
CanonicalForm canonical_form(const PhaseVector& p, bool want_sl = false);

/// Product of 2m random integer shears; determinant exactly 1.
MatrixQ random_sl(int m, uint64_t seed);

/// random_sl times a random diagonal with small nonzero entries.
MatrixQ random_gl(int m, uint64_t seed);

GroupElement random_sl_pair(int m, uint64_t seed);
GroupElement random_gl_pair(int m, uint64_t seed);

/// A random SL pair fixing the given degenerate point projectively.
GroupElement stabilizer_sample(const PhaseVector& p, uint64_t seed);

/// Retry bound for randomized searches (LEGVAR_RETRY_BUDGET, default 200).
int retry_budget();

bool projectively_equal(const std::vector<Rational>& u, const std::vector<Rational>& v);
bool projectively_equal(const PhaseVector& p, const PhaseVector& q);

} // namespace legvar
