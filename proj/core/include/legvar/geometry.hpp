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
#include <vector>

#include <json.hpp>

#include "legvar/group_action.hpp"
#include "legvar/univariate.hpp"
#include "legvar/varieties.hpp"

namespace legvar {

using Json = nlohmann::ordered_json;

/// Affine chart of projective space: one coordinate pinned to 1, centered at
/// a point whose pivot coordinate is normalized to 1.
struct AffineChart {
    VarId pivot;
    PhaseVector center;

    static AffineChart at_point(const PhaseVector& p); // pivot = first nonzero coord
    static AffineChart p1_chart(int m);                // pivot a[m,m], center [E_mm, 0]
    static AffineChart p2_chart(int m);                // pivot b[m,m], center [0, E_mm]
};

/// A curve with univariate polynomial entries, living in an affine chart
/// (the pivot coordinate must be identically 1).
struct Curve {
    Matrix<UPoly> A, B;
    AffineChart chart;

    int m() const { return int(A.rows()); }
    PhaseVector at(const Rational& t) const;
};

/// Structured verification report; re-running with the same inputs must
/// reproduce the verdict and evidence byte for byte.
struct Certificate {
    std::string claim;
    Json params = Json::object();
    uint64_t seed = 0;
    std::string verdict; // PASS | FAIL | SINGULAR | INCONCLUSIVE
    Json evidence = Json::object();

    bool passed() const { return verdict == "PASS" || verdict == "SINGULAR"; }
};

/// Codimension of the Jacobian kernel of the generator scheme at p
/// (= exact rank of the Jacobian over the set's coordinate universe).
/// Throws membership_error when p does not satisfy all generators.
std::size_t tangent_space_codim(const EquationSet& eqs, const PhaseVector& p);

struct LegendrianCheck {
    bool lagrangian;
    std::size_t codim;
    std::size_t half_dim;
};

/// At a point certified smooth of expected dimension (codim = half the
/// ambient dimension), tests whether the Jacobian-kernel tangent space is
/// Lagrangian. A codimension mismatch throws inconclusive_error.
LegendrianCheck legendrian_check_at(const EquationSet& eqs, const PhaseVector& p);

/// Lowest-degree parts of the generators after restricting to the chart and
/// translating the center to the origin: equations cutting a scheme that
/// contains the tangent cone.
EquationSet cone_candidate(const EquationSet& eqs, const AffineChart& chart);

struct CurveLimit {
    std::vector<Rational> vec;  // full-coordinate vector; pivot component is 0
    std::size_t order;          // t-order of the first nonzero coefficient
    std::optional<Stratum> block_stratum; // classification of the trailing block
};

/// First nonzero Taylor coefficient of (curve - center) in the chart.
CurveLimit curve_limit(const Curve& c);

/// The coordinate involution exchanging the two matrix blocks.
PhaseVector swap_ab(const PhaseVector& p);
EquationSet swap_ab(const EquationSet& eqs);

/// Projective dimension of a stratum: rank of the span of infinitesimal
/// action images at a sampled point (full pair algebra for degenerate
/// strata, traceless pairs for the invertible one) plus the radial
/// direction, minus one.
std::size_t dimension_probe(Family family, int m, int k, int l, uint64_t seed);

/// The limit-vector span certificate at the distinguished degenerate point:
/// constructs the diagonal curves for every admissible rank parameter,
/// certifies each lies in the invertible family for t != 0, transports the
/// limit vectors by stabilizer samples, and reports SINGULAR exactly when
/// the chart span of certified tangent-cone vectors reaches m^2.
Certificate singularity_certificate(int m, uint64_t seed);

} // namespace legvar
