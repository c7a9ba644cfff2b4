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

#include "legvar/json_io.hpp"

#include <fstream>

namespace legvar {

Json matrix_to_json(const MatrixQ& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixQ matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix JSON must be a nonempty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    MatrixQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw parse_error("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = Rational::parse(j[i][c].get<std::string>());
    }
    return m;
}

Json point_to_json(const PhaseVector& p) {
    return Json{{"m", p.m()}, {"A", matrix_to_json(p.A)}, {"B", matrix_to_json(p.B)}};
}

PhaseVector point_from_json(const Json& j) {
    if (!j.contains("m") || !j.contains("A") || !j.contains("B"))
        throw parse_error("point JSON needs fields m, A, B");
    const int m = j["m"].get<int>();
    PhaseVector p(matrix_from_json(j["A"]), matrix_from_json(j["B"]));
    if (p.m() != m) throw parse_error("point JSON: matrix size disagrees with m");
    return p;
}

Json stratum_to_json(const Stratum& s) {
    if (s.is_inv()) {
        Json j{{"kind", "INV"},
               {"lambda_sq", s.lambda_sq.to_string()},
               {"det_A", s.det_A.to_string()}};
        if (s.mu_witness) j["mu_witness"] = s.mu_witness->to_string();
        else j["mu_witness"] = nullptr;
        return j;
    }
    Json j{{"kind", "DEG"}, {"k", s.k}, {"l", s.l}};
    if (s.g_orbit_undecided) j["g_orbit_undecided"] = true;
    return j;
}

Json equation_set_to_json(const EquationSet& set) {
    Json j{{"family", family_name(set.family)}, {"m", set.m}};
    if (set.family == Family::Xdeg) j["k"] = set.k;
    Json gens = Json::array();
    for (const auto& [label, poly] : set.generators)
        gens.push_back(Json{{"label", label}, {"poly", poly.to_string()}});
    j["generators"] = std::move(gens);
    return j;
}

EquationSet equation_set_from_json(const Json& j) {
    const Family family = family_from_name(j.at("family").get<std::string>());
    const int m = j.at("m").get<int>();

    EquationSet set;
    set.family = family;
    set.m = m;
    switch (family) {
        case Family::XinvSym: set.vars = sym_vars(m); break;
        case Family::XinvSkew: set.vars = skew_vars(m); break;
        case Family::Gr36Slice: set = equations_gr36_slice(); set.generators.clear(); break;
        default: set.vars = phase_vars(m); break;
    }
    if (family == Family::Xdeg) set.k = j.at("k").get<int>();
    const int poly_m = (family == Family::XinvSkew) ? 2 * m : m;
    for (const auto& gen : j.at("generators"))
        set.generators.emplace_back(gen.at("label").get<std::string>(),
                                    Polynomial::parse(poly_m, gen.at("poly").get<std::string>()));
    return set;
}

Json certificate_to_json(const Certificate& c) {
    return Json{{"claim", c.claim},
                {"params", c.params},
                {"seed", c.seed},
                {"verdict", c.verdict},
                {"evidence", c.evidence}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open for writing: " + path);
    out << dump_json(j);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open for reading: " + path);
    Json j;
    in >> j;
    return j;
}

} // namespace legvar
