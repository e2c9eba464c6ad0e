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

#include <optional>
#include <string>
#include <vector>

#include "liealg/linalg.hpp"

namespace liealg {

/// Unvalidated structure table: for each basis pair i < j the bracket
/// [b_i, b_j] as a coordinate vector. Antisymmetry is structural (j > i
/// is the negated entry, the diagonal is zero), so only Jacobi can fail.
struct StructureTableDraft {
    Field field;
    int dim = 0;
    std::vector<Vec> table;            // index pair_index(i,j), each Vec of length dim
    std::vector<std::string> labels;   // optional, size dim when present

    static StructureTableDraft zeros(Field f, int n);

    static int pair_index(int i, int j, int n) { return (2 * n - i - 1) * i / 2 + (j - i - 1); }
    Vec& at(int i, int j) { return table[static_cast<size_t>(pair_index(i, j, dim))]; }
    const Vec& at(int i, int j) const { return table[static_cast<size_t>(pair_index(i, j, dim))]; }

    std::string label(int i) const;
};

struct JacobiViolation {
    int i, j, k;
    Vec defect; // [[i,j],k] + [[j,k],i] + [[k,i],j], nonzero
};

/// A validated Lie algebra given by structure constants. Immutable;
/// construct via validate().
class LieAlgebra {
public:
    Field field() const { return t_.field; }
    int dim() const { return t_.dim; }
    const std::vector<std::string>& labels() const { return t_.labels; }
    std::string label(int i) const { return t_.label(i); }
    const StructureTableDraft& table() const { return t_; }

    /// [b_i, b_j] for any pair; handles antisymmetry and the diagonal.
    Vec basis_bracket(int i, int j) const;

private:
    explicit LieAlgebra(StructureTableDraft t) : t_(std::move(t)) {}
    StructureTableDraft t_;

    friend LieAlgebra validate(StructureTableDraft draft);
    friend LieAlgebra validate_unchecked(StructureTableDraft draft);
};

/// Jacobi defect scan over all basis triples i < j < k; nullopt iff the
/// table is a Lie algebra.
std::optional<JacobiViolation> jacobi_violation(const StructureTableDraft& d);

/// Throws input_error naming the failing triple when Jacobi fails.
LieAlgebra validate(StructureTableDraft draft);

/// For callers that already ran jacobi_violation (the table search).
LieAlgebra validate_unchecked(StructureTableDraft draft);

Vec bracket(const LieAlgebra& l, const Vec& u, const Vec& v);
Subspace bracket_spaces(const LieAlgebra& l, const Subspace& u, const Subspace& v);

/// Matrix of ad u: column j is [u, b_j].
Matrix ad_matrix(const LieAlgebra& l, const Vec& u);

/// Derived series L ⊇ L² ⊇ (L²)² ⊇ …, emitted until it stabilizes (the
/// stable term appears once). Same for the lower central series
/// L ⊇ L² ⊇ [L,L²] ⊇ ….
std::vector<Subspace> derived_series(const LieAlgebra& l);
std::vector<Subspace> lower_central_series(const LieAlgebra& l);

bool is_solvable(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
bool is_abelian(const LieAlgebra& l);

/// Subspace variants, computed in ambient coordinates (no restriction
/// needed): series of the subalgebra U within L.
bool is_solvable_subspace(const LieAlgebra& l, const Subspace& u);
bool is_nilpotent_subspace(const LieAlgebra& l, const Subspace& u);
bool is_abelian_subspace(const LieAlgebra& l, const Subspace& u);

/// Smallest subalgebra containing U: iterate U ← U + [U,U].
Subspace subalgebra_closure(const LieAlgebra& l, const Subspace& u);
bool is_subalgebra(const LieAlgebra& l, const Subspace& u);
bool is_ideal(const LieAlgebra& l, const Subspace& u);

/// The abstract algebra on a subalgebra's canonical basis, with maps back
/// and forth between its coordinates and the ambient space.
struct RestrictedAlgebra {
    LieAlgebra algebra;
    Subspace domain;

    Vec to_ambient(const Vec& sub) const;
    Vec to_sub(const Vec& ambient) const; // requires membership
    Subspace lift(const Subspace& sub) const;
};

RestrictedAlgebra subalgebra_restrict(const LieAlgebra& l, const Subspace& s);

/// Quotient by an ideal; the complement basis is the ideal's non-pivot
/// coordinates, so tables are reproducible.
struct QuotientAlgebra {
    LieAlgebra algebra;
    Subspace ideal;
    std::vector<int> complement; // ambient columns carried to quotient coordinates

    Vec project(const Vec& ambient) const;
};

QuotientAlgebra quotient(const LieAlgebra& l, const Subspace& ideal);

Subspace center(const LieAlgebra& l);
Subspace centralizer(const LieAlgebra& l, const Subspace& u);
Subspace normalizer(const LieAlgebra& l, const Subspace& u);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Abelian F^m extended by one generator x acting as the matrix d:
/// [x, a_j] = Σ_i d(i,j) a_i, with x first in the basis. Jacobi is
/// automatic (the acted-on part is abelian) but revalidated.
LieAlgebra semidirect_by_matrix(const Matrix& d);

/// Entrywise reduction of an integer table over Q; requires every entry
/// to have denominator 1.
LieAlgebra reduce_mod_p(const LieAlgebra& l, std::int64_t p);

/// Same table over GF(p^k) via the canonical embedding.
LieAlgebra extend_scalars(const LieAlgebra& l, Field target);
Subspace extend_subspace(const Subspace& u, Field target);

} // namespace liealg
