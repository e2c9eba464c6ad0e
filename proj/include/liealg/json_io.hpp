/*
 * Copyright 2026 the lie-frattini authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "liealg/classify.hpp"
#include "liealg/lattice.hpp"

namespace liealg {

/// Reports use insertion-ordered JSON so repeated runs serialize
/// byte-identically.
using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lie-frattini/1";

json field_to_json(Field f);
Field field_from_json(const json& j);

/// Scalar encodings: rationals are "num/den" strings, prime-field values
/// integers, extension values coefficient arrays [c0..c_{k-1}].
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Field f);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, Field f, int n);

json subspace_to_json(const Subspace& s);

/// Algebra files: {"field", "dim", "labels"?, "brackets": [{"i","j","value"}]}
/// listing only nonzero i<j brackets; omitted pairs are zero. Emission is
/// bit-exact reproducible.
json algebra_to_json(const LieAlgebra& l);
json draft_to_json(const StructureTableDraft& d);
StructureTableDraft draft_from_json(const json& j);
LieAlgebra algebra_from_json(const json& j);

json analysis_to_json(const AnalysisReport& r);
json search_to_json(const SearchReport& r);
json lattice_to_json(const SubalgebraLattice& lat);

std::string render_analysis_text(const AnalysisReport& r);
std::string render_search_text(const SearchReport& r);
std::string render_lattice_text(const SubalgebraLattice& lat);

} // namespace liealg
