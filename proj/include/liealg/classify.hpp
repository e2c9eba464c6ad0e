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

#include "liealg/lattice.hpp"

namespace liealg {

/// A predicate verdict with a concrete witness on failure (a subalgebra
/// that breaks the property), when one exists.
struct Verdict {
    bool value;
    std::optional<Subspace> witness;
};

/// Every subalgebra has trivial Frattini ideal.
Verdict is_elementary(const SubalgebraLattice& lat);

/// Not elementary, but every proper subalgebra is.
Verdict is_minimal_non_elementary(const SubalgebraLattice& lat);

/// φ(S) ⊆ φ(L) for every subalgebra S.
Verdict is_E_algebra(const SubalgebraLattice& lat);

/// Every nilpotent subalgebra is abelian.
Verdict is_A_algebra(const SubalgebraLattice& lat);

/// Structural classification of a solvable algebra:
///  - Heisenberg: three-dimensional, nilpotent of class two, with
///    one-dimensional derived algebra equal to the center;
///  - SplitAbelian: abelian derived algebra of codimension one, with the
///    Frattini ideal nonzero, equal to the abelian socle, and the biggest
///    ideal properly contained in the derived algebra.
enum class Shape { None, SplitAbelian, Heisenberg };

std::string shape_name(Shape s);

/// Requires a solvable algebra (throws input_error otherwise).
Shape classify_solvable_shape(const SubalgebraLattice& lat);

/// Chain of ideals with one-dimensional quotients, found by backtracking
/// over invariant lines. Finite fields only.
bool is_supersolvable(const LieAlgebra& l);

struct IsomorphismOptions {
    std::uint64_t max_gl_order = 10'000'000;
};

struct IsomorphismResult {
    bool isomorphic;
    /// Change of basis P with P·[u,v]_1 = [P·u, P·v]_2, when isomorphic.
    std::optional<Matrix> map;
};

/// |GL(n, q)| = Π (q^n - q^i).
mpz_class gl_order(int n, std::int64_t q);

/// Brute-force bracket-preserving bijection search over GL(n, q), pruned
/// by cheap invariants. Refuses when |GL(n, q)| exceeds the cap.
IsomorphismResult is_isomorphic(const LieAlgebra& a, const LieAlgebra& b,
                                const IsomorphismOptions& opt = {});

// ---------------------------------------------------------------------------
// Exhaustive structure-table search

struct SearchOptions {
    std::uint64_t max_tables = 20'000'000;
    std::uint64_t max_gl_order = 10'000'000;
    int threads = 0; // 0 = hardware concurrency
};

/// One isomorphism class of minimal non-elementary algebras found by the
/// search; the representative is the lexicographically least table
/// encountered in the class.
struct SearchClass {
    StructureTableDraft representative;
    std::uint64_t count = 0;
    bool solvable = false;
    bool nilpotent = false;
    Shape shape = Shape::None;     // meaningful for solvable classes
    int frattini_ideal_dim = 0;
};

struct SearchReport {
    Field field;
    int dim = 0;
    std::uint64_t tables_scanned = 0;
    std::uint64_t jacobi_valid = 0;
    std::uint64_t mne_tables = 0;
    /// Solvable, Jacobi-valid tables where the minimal-non-elementary
    /// verdict disagrees with the structural shape. Must be zero.
    std::uint64_t discrepancies = 0;
    std::vector<SearchClass> classes;
};

/// Scans every antisymmetric structure table on n basis vectors over a
/// finite field (q^(n·C(n,2)) candidates), Jacobi-filters, evaluates the
/// minimal-non-elementary predicate on each valid table and the solvable
/// shape on each valid solvable table, and reports isomorphism-class
/// representatives of the minimal non-elementary algebras.
SearchReport exhaustive_search(int dim, Field f, const SearchOptions& opt = {});

// ---------------------------------------------------------------------------
// Aggregated analysis

struct LatticeSummary {
    std::uint64_t node_count = 0;
    std::vector<std::uint64_t> nodes_by_dim;
};

/// Tri-state predicate entry for reports: over Q the lattice-based fields
/// cannot be computed and say so instead of guessing.
struct PredicateEntry {
    enum class Status { True, False, NotComputed };
    Status status = Status::NotComputed;
    std::optional<Subspace> witness;
    std::string reason;

    static PredicateEntry from(const Verdict& v) {
        return PredicateEntry{v.value ? Status::True : Status::False, v.witness, ""};
    }
    static PredicateEntry not_computed(std::string why) {
        return PredicateEntry{Status::NotComputed, std::nullopt, std::move(why)};
    }
};

struct AnalysisReport {
    // always computed
    Field field;
    int dim = 0;
    std::vector<std::string> labels;
    StructureTableDraft table;
    std::vector<int> derived_dims;
    std::vector<int> lower_central_dims;
    bool abelian = false, solvable = false, nilpotent = false;
    Subspace center_space;

    // finite-field lattice block
    std::optional<LatticeSummary> lattice;
    std::optional<Subspace> frattini_subalgebra;
    std::optional<Subspace> frattini_ideal;
    std::optional<Subspace> abelian_socle;
    std::optional<Subspace> nilradical;
    std::optional<Subspace> radical;
    std::string lattice_skip_reason; // set when the block is absent

    PredicateEntry elementary, minimal_non_elementary, e_algebra, a_algebra, supersolvable;
    std::optional<Shape> shape; // solvable finite-field algebras only

    std::vector<std::string> notes;
    std::vector<std::pair<std::int64_t, AnalysisReport>> companions; // mod-p reductions

    AnalysisReport(Field f, StructureTableDraft t, Subspace c)
        : field(f), table(std::move(t)), center_space(std::move(c)) {}
};

struct AnalyzeOptions {
    std::vector<std::int64_t> companion_primes;
    LatticeOptions lattice;
    std::vector<std::string> notes;
};

AnalysisReport analyze(const LieAlgebra& l, const AnalyzeOptions& opt = {});

} // namespace liealg
