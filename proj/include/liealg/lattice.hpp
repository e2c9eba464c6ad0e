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

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

struct LatticeOptions {
    /// Refuse enumerations with more subspaces than this (explicit error,
    /// never silent truncation).
    std::uint64_t max_subspaces = 2'000'000;
};

/// Gaussian binomial [n choose d]_q via the recurrence
/// [n,d]_q = [n-1,d-1]_q + q^d [n-1,d]_q.
mpz_class gaussian_binomial(int n, int d, std::int64_t q);

/// Σ_d [n choose d]_q — the number of subspaces of F_q^n.
mpz_class total_subspace_count(int n, std::int64_t q);

struct CostEstimate {
    mpz_class subspace_count;
    bool admissible;
};

CostEstimate estimate_subspace_count(Field f, int n, const LatticeOptions& opt = {});

/// Streams every subspace of F_q^n exactly once, in canonical order:
/// dimension ascending, pivot-column sets lexicographic, free entries as a
/// base-q odometer. Throws cost_error when the count exceeds the cap.
void for_each_subspace(Field f, int n, const LatticeOptions& opt,
                       const std::function<void(const Subspace&)>& fn);

std::vector<Subspace> all_subspaces(Field f, int n, const LatticeOptions& opt = {});

/// The full subalgebra lattice of a finite-field Lie algebra: every
/// bracket-closed subspace, the inclusion relation, ideal flags, and the
/// Frattini machinery on top. Node order is the canonical enumeration
/// order (dimension ascending), so node 0 is the zero subspace and the
/// last node is the whole space.
class SubalgebraLattice {
public:
    const LieAlgebra& algebra() const { return algebra_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const Subspace& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
    int node_dim(int i) const { return nodes_[static_cast<size_t>(i)].dim(); }
    int zero_node() const { return 0; }
    int full_node() const { return size() - 1; }

    /// Index of an exactly-matching node, or -1.
    int index_of(const Subspace& s) const;

    bool leq(int a, int b) const;       // node a ⊆ node b
    bool node_is_ideal(int i) const { return ideal_flag_[static_cast<size_t>(i)]; }

    /// Maximal proper subalgebras of node s (its covers from below).
    std::vector<int> maximal_subalgebras(int s) const;

    /// Hasse diagram edges (sub, super), deterministic order.
    std::vector<std::pair<int, int>> cover_edges() const;

    /// Intersection of the maximal subalgebras of s (0 for the zero node).
    const Subspace& frattini_subalgebra(int s) const;
    /// φ(s): the largest ideal of s contained in its Frattini subalgebra.
    const Subspace& frattini_ideal(int s) const;

    std::vector<int> ideals() const;
    std::vector<int> minimal_ideals() const;

    /// Sum of the minimal abelian ideals.
    Subspace abelian_socle() const;
    /// Largest nilpotent ideal (sum of all nilpotent ideals, verified).
    Subspace nilradical() const;
    /// Largest solvable ideal (sum of all solvable ideals, verified).
    Subspace radical() const;

    /// Node counts indexed by dimension.
    std::vector<std::uint64_t> dim_histogram() const;

private:
    friend SubalgebraLattice build_lattice(const LieAlgebra&, const LatticeOptions&);

    LieAlgebra algebra_;
    std::vector<Subspace> nodes_;
    std::vector<bool> ideal_flag_;
    int words_ = 0;
    std::vector<std::uint64_t> down_, up_; // inclusion bitsets, stride words_

    mutable std::vector<std::optional<Subspace>> frat_sub_, frat_ideal_;

    explicit SubalgebraLattice(LieAlgebra l) : algebra_(std::move(l)) {}
    std::uint64_t word(const std::vector<std::uint64_t>& m, int row, int w) const {
        return m[static_cast<size_t>(row) * words_ + w];
    }
};

SubalgebraLattice build_lattice(const LieAlgebra& l, const LatticeOptions& opt = {});

} // namespace liealg
