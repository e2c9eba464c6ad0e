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

#include "liealg/classify.hpp"

#include <algorithm>

namespace liealg {

Verdict is_elementary(const SubalgebraLattice& lat) {
    for (int s = 0; s < lat.size(); ++s)
        if (!lat.frattini_ideal(s).is_zero())
            return Verdict{false, lat.node(s)};
    return Verdict{true, std::nullopt};
}

Verdict is_minimal_non_elementary(const SubalgebraLattice& lat) {
    // proper subalgebras all elementary <=> every proper node has trivial
    // Frattini ideal (subalgebras of a proper node are proper nodes)
    for (int s = 0; s < lat.size(); ++s) {
        if (s == lat.full_node()) continue;
        if (!lat.frattini_ideal(s).is_zero())
            return Verdict{false, lat.node(s)};
    }
    if (lat.frattini_ideal(lat.full_node()).is_zero())
        return Verdict{false, std::nullopt}; // elementary, no witness applies
    return Verdict{true, std::nullopt};
}

Verdict is_E_algebra(const SubalgebraLattice& lat) {
    const Subspace& phi_l = lat.frattini_ideal(lat.full_node());
    for (int s = 0; s < lat.size(); ++s)
        if (!phi_l.contains(lat.frattini_ideal(s)))
            return Verdict{false, lat.node(s)};
    return Verdict{true, std::nullopt};
}

Verdict is_A_algebra(const SubalgebraLattice& lat) {
    for (int s = 0; s < lat.size(); ++s) {
        const Subspace& node = lat.node(s);
        if (is_nilpotent_subspace(lat.algebra(), node) &&
            !is_abelian_subspace(lat.algebra(), node))
            return Verdict{false, node};
    }
    return Verdict{true, std::nullopt};
}

std::string shape_name(Shape s) {
    switch (s) {
    case Shape::None: return "none";
    case Shape::SplitAbelian: return "split-abelian";
    case Shape::Heisenberg: return "heisenberg";
    }
    return "?";
}

Shape classify_solvable_shape(const SubalgebraLattice& lat) {
    const LieAlgebra& l = lat.algebra();
    if (!is_solvable(l)) throw input_error("shape classification requires a solvable algebra");
    const int n = l.dim();
    Subspace full = Subspace::full(l.field(), n);
    Subspace l2 = bracket_spaces(l, full, full);

    if (n == 3 && is_nilpotent(l) && l2.dim() == 1 &&
        bracket_spaces(l, full, l2).is_zero() && l2 == center(l))
        return Shape::Heisenberg;

    if (l2.dim() != n - 1) return Shape::None;
    if (!is_abelian_subspace(l, l2)) return Shape::None;
    const Subspace& phi = lat.frattini_ideal(lat.full_node());
    if (phi.is_zero()) return Shape::None;
    if (phi != lat.abelian_socle()) return Shape::None;
    if (!(l2.contains(phi) && phi != l2)) return Shape::None;
    // phi must be the biggest ideal properly contained in L²
    for (int k : lat.ideals()) {
        const Subspace& km = lat.node(k);
        if (l2.contains(km) && km != l2 && !phi.contains(km)) return Shape::None;
    }
    return Shape::SplitAbelian;
}

namespace {

bool supersolvable_rec(const LieAlgebra& l) {
    const int n = l.dim();
    if (n == 0) return true;
    // invariant lines: Fv with [L, v] ⊆ Fv
    bool found = false;
    // enumerate lines via pivot patterns of dimension 1
    const std::int64_t q = l.field().order();
    for (int pivot = 0; pivot < n && !found; ++pivot) {
        // v = e_pivot + free entries in columns > pivot
        std::int64_t combos = 1;
        for (int c = pivot + 1; c < n; ++c) combos *= q;
        for (std::int64_t idx = 0; idx < combos && !found; ++idx) {
            Vec v = unit_vec(l.field(), n, pivot);
            std::int64_t rem = idx;
            for (int c = pivot + 1; c < n; ++c) {
                v[static_cast<size_t>(c)] = l.field().element(rem % q);
                rem /= q;
            }
            Subspace line = Subspace::span(l.field(), n, {v});
            bool invariant = true;
            for (int i = 0; i < n && invariant; ++i)
                if (!line.contains(bracket(l, unit_vec(l.field(), n, i), v))) invariant = false;
            if (!invariant) continue;
            QuotientAlgebra qa = quotient(l, line);
            if (supersolvable_rec(qa.algebra)) found = true;
        }
    }
    return found;
}

} // namespace

bool is_supersolvable(const LieAlgebra& l) {
    if (!l.field().is_finite())
        throw input_error("supersolvability search requires a finite field");
    return supersolvable_rec(l);
}

mpz_class gl_order(int n, std::int64_t q) {
    mpz_class qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    mpz_class out = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        out *= (qn - qi);
        qi *= q;
    }
    return out;
}

namespace {

// cheap isomorphism invariants; equal for isomorphic algebras
std::vector<int> invariant_signature(const LieAlgebra& l) {
    std::vector<int> sig;
    for (const auto& s : derived_series(l)) sig.push_back(s.dim());
    sig.push_back(-1);
    for (const auto& s : lower_central_series(l)) sig.push_back(s.dim());
    sig.push_back(-1);
    sig.push_back(center(l).dim());
    return sig;
}

} // namespace

IsomorphismResult is_isomorphic(const LieAlgebra& a, const LieAlgebra& b,
                                const IsomorphismOptions& opt) {
    if (a.field() != b.field())
        throw input_error("isomorphism test requires a common field");
    if (!a.field().is_finite())
        throw input_error("isomorphism search requires a finite field");
    if (a.dim() != b.dim()) return IsomorphismResult{false, std::nullopt};
    const int n = a.dim();

    const std::int64_t q = a.field().order();
    mpz_class order = gl_order(n, q);
    if (order > static_cast<unsigned long>(opt.max_gl_order))
        throw cost_error("|GL(" + std::to_string(n) + ", " + std::to_string(q) +
                             ")| = " + order.get_str() + " exceeds the cap " +
                             std::to_string(opt.max_gl_order),
                         order.get_str());

    if (n == 0 || a.table().table == b.table().table)
        return IsomorphismResult{true, Matrix::identity(a.field(), n)};

    if (invariant_signature(a) != invariant_signature(b))
        return IsomorphismResult{false, std::nullopt};

    // iterate all matrices (base-q odometer over the n² entries), skip the
    // singular ones, and test bracket preservation on basis pairs
    std::vector<Scalar> elems;
    for (std::int64_t i = 0; i < q; ++i) elems.push_back(a.field().element(i));
    std::vector<std::int64_t> odo(static_cast<size_t>(n) * n, 0);
    Matrix p(a.field(), n, n);
    while (true) {
        // columns of p are the images of a's basis in b's coordinates
        bool preserves = true;
        for (int i = 0; i < n && preserves; ++i)
            for (int j = i + 1; j < n && preserves; ++j) {
                Vec lhs = mul(p, a.table().at(i, j));
                Vec rhs = bracket(b, p.col_vec(i), p.col_vec(j));
                if (lhs != rhs) preserves = false;
            }
        if (preserves && rref(p).rank == n)
            return IsomorphismResult{true, p};

        // advance
        size_t pos = odo.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++odo[pos] < q) {
                p.at(static_cast<int>(pos) / n, static_cast<int>(pos) % n) =
                    elems[static_cast<size_t>(odo[pos])];
                done = false;
                break;
            }
            odo[pos] = 0;
            p.at(static_cast<int>(pos) / n, static_cast<int>(pos) % n) = elems[0];
        }
        if (done) break;
    }
    return IsomorphismResult{false, std::nullopt};
}

AnalysisReport analyze(const LieAlgebra& l, const AnalyzeOptions& opt) {
    AnalysisReport rep(l.field(), l.table(), center(l));
    rep.dim = l.dim();
    rep.labels = l.labels();
    for (const auto& s : derived_series(l)) rep.derived_dims.push_back(s.dim());
    for (const auto& s : lower_central_series(l)) rep.lower_central_dims.push_back(s.dim());
    rep.abelian = is_abelian(l);
    rep.solvable = rep.derived_dims.back() == 0;
    rep.nilpotent = rep.lower_central_dims.back() == 0;
    rep.notes = opt.notes;

    if (l.field().is_finite()) {
        SubalgebraLattice lat = build_lattice(l, opt.lattice);
        LatticeSummary summary;
        summary.node_count = static_cast<std::uint64_t>(lat.size());
        summary.nodes_by_dim = lat.dim_histogram();
        rep.lattice = std::move(summary);
        rep.frattini_subalgebra = lat.frattini_subalgebra(lat.full_node());
        rep.frattini_ideal = lat.frattini_ideal(lat.full_node());
        rep.abelian_socle = lat.abelian_socle();
        rep.nilradical = lat.nilradical();
        rep.radical = lat.radical();
        rep.elementary = PredicateEntry::from(is_elementary(lat));
        rep.minimal_non_elementary = PredicateEntry::from(is_minimal_non_elementary(lat));
        rep.e_algebra = PredicateEntry::from(is_E_algebra(lat));
        rep.a_algebra = PredicateEntry::from(is_A_algebra(lat));
        rep.supersolvable =
            PredicateEntry{is_supersolvable(l) ? PredicateEntry::Status::True
                                               : PredicateEntry::Status::False,
                           std::nullopt, ""};
        if (rep.solvable) rep.shape = classify_solvable_shape(lat);
    } else {
        const std::string why = "infinite field: maximal subalgebras are not enumerable";
        rep.lattice_skip_reason = why;
        rep.elementary = PredicateEntry::not_computed(why);
        rep.minimal_non_elementary = PredicateEntry::not_computed(why);
        rep.e_algebra = PredicateEntry::not_computed(why);
        rep.a_algebra = PredicateEntry::not_computed(why);
        rep.supersolvable = PredicateEntry::not_computed(why);
        for (std::int64_t prime : opt.companion_primes) {
            AnalyzeOptions sub;
            sub.lattice = opt.lattice;
            rep.companions.emplace_back(prime, analyze(reduce_mod_p(l, prime), sub));
        }
    }
    return rep;
}

} // namespace liealg
