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

#include <string>

#include "legvar/geometry.hpp"
#include "legvar/varieties.hpp"

namespace legvar {

Json matrix_to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const Json& j);

/// Point files: {"m": 3, "A": [["1","0",...],...], "B": [[...]]}.
Json point_to_json(const PhaseVector& p);
PhaseVector point_from_json(const Json& j);

Json stratum_to_json(const Stratum& s);

/// {"family","m","k"?,"generators":[{"label","poly"},...]}.
Json equation_set_to_json(const EquationSet& set);
EquationSet equation_set_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);

/// Canonical file serialization: two-space indent, trailing newline.
std::string dump_json(const Json& j);
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

} // namespace legvar
