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
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

/// The three-dimensional family on x, y, z with [x,y] = αy + z,
/// [x,z] = αz, [y,z] = 0.
LieAlgebra make_theorem2(Field f, const Scalar& alpha);

/// [x,y] = z, z central. Identical table to make_theorem2 at α = 0.
LieAlgebra make_heisenberg(Field f);

/// Basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h. In
/// characteristic 2 the h-action degenerates ([h,e] = [h,f] = 0).
LieAlgebra make_sl2(Field f);

/// The five-dimensional algebra on e1..e5 with [e1,e2] = e3+e4,
/// [e1,e3] = -e2+e5, [e1,e4] = e5, [e1,e5] = -e4, all other products
/// zero (integer table, valid over Q and every GF(p)).
LieAlgebra make_example5(Field f);

LieAlgebra make_abelian(Field f, int n);

/// [x,y] = y.
LieAlgebra make_two_dim_nonabelian(Field f);

/// Abelian F^m extended by x acting as d (alias of semidirect_by_matrix,
/// with x,a1..am labels attached).
LieAlgebra make_semidirect(const Matrix& d);

struct FamilyInstance {
    LieAlgebra algebra;
    std::vector<std::string> notes;
};

/// Parses family spec strings: a '+' separated list of terms, each
/// "name" or "name:key=value,...". Names: theorem2 (alpha), heisenberg,
/// sl2, example5, abelian (n), two-dim-nonabelian / nonabelian2,
/// theorem5i / semidirect (d=[[...],[...]]). '+' builds direct sums.
FamilyInstance parse_family(const std::string& spec, Field f);

} // namespace liealg
