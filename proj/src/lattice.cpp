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

#include "liealg/lattice.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace liealg {

mpz_class gaussian_binomial(int n, int d, std::int64_t q) {
    if (d < 0 || d > n) return 0;
    // [n,d] = [n-1,d-1] + q^d [n-1,d], row by row
    std::vector<mpz_class> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::vector<mpz_class> next(static_cast<size_t>(n) + 1, 0);
        next[0] = 1;
        mpz_class qk = 1;
        for (int k = 1; k <= m; ++k) {
            qk *= q;
            next[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + qk * row[static_cast<size_t>(k)];
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(d)];
}

mpz_class total_subspace_count(int n, std::int64_t q) {
    mpz_class total = 0;
    for (int d = 0; d <= n; ++d) total += gaussian_binomial(n, d, q);
    return total;
}

CostEstimate estimate_subspace_count(Field f, int n, const LatticeOptions& opt) {
    if (!f.is_finite()) throw input_error("subspace enumeration requires a finite field");
    mpz_class count = total_subspace_count(n, f.order());
    bool ok = count <= static_cast<unsigned long>(opt.max_subspaces);
    return CostEstimate{std::move(count), ok};
}

void for_each_subspace(Field f, int n, const LatticeOptions& opt,
                       const std::function<void(const Subspace&)>& fn) {
    CostEstimate cost = estimate_subspace_count(f, n, opt);
    if (!cost.admissible)
        throw cost_error("subspace count " + cost.subspace_count.get_str() +
                             " exceeds the cap " + std::to_string(opt.max_subspaces) +
                             " for " + f.name() + "^" + std::to_string(n),
                         cost.subspace_count.get_str());
    const std::int64_t q = f.order();
    // scalars by enumeration index, reused across patterns
    std::vector<Scalar> elems;
    elems.reserve(static_cast<size_t>(q));
    for (std::int64_t i = 0; i < q; ++i) elems.push_back(f.element(i));

    for (int d = 0; d <= n; ++d) {
        // pivot-column combinations in lexicographic order
        std::vector<int> piv(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) piv[static_cast<size_t>(i)] = i;
        while (true) {
            // free positions: (r, c) with c > piv[r] and c not a pivot column
            std::uint32_t pivot_mask = 0;
            for (int c : piv) pivot_mask |= (std::uint32_t(1) << c);
            std::vector<std::pair<int, int>> free_pos;
            for (int r = 0; r < d; ++r)
                for (int c = piv[static_cast<size_t>(r)] + 1; c < n; ++c)
                    if (!(pivot_mask & (std::uint32_t(1) << c)))
                        free_pos.emplace_back(r, c);

            Matrix basis(f, d, n);
            for (int r = 0; r < d; ++r) basis.at(r, piv[static_cast<size_t>(r)]) = f.one();
            std::vector<std::int64_t> odo(free_pos.size(), 0);
            while (true) {
                fn(Subspace::from_canonical(f, n, basis, piv));
                // advance the odometer (last position fastest)
                size_t pos = free_pos.size();
                while (pos > 0) {
                    --pos;
                    auto [r, c] = free_pos[pos];
                    if (++odo[pos] < q) {
                        basis.at(r, c) = elems[static_cast<size_t>(odo[pos])];
                        break;
                    }
                    odo[pos] = 0;
                    basis.at(r, c) = elems[0];
                    if (pos == 0) { pos = SIZE_MAX; break; }
                }
                if (free_pos.empty() || pos == SIZE_MAX) break;
            }

            // next pivot combination
            int i = d - 1;
            while (i >= 0 && piv[static_cast<size_t>(i)] == n - d + i) --i;
            if (i < 0) break;
            ++piv[static_cast<size_t>(i)];
            for (int j = i + 1; j < d; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
        }
    }
}

std::vector<Subspace> all_subspaces(Field f, int n, const LatticeOptions& opt) {
    std::vector<Subspace> out;
    for_each_subspace(f, n, opt, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

namespace {

bool closed_under_bracket(const LieAlgebra& l, const Subspace& u) {
    for (int i = 0; i < u.dim(); ++i) {
        Vec ui = u.basis_row(i);
        for (int j = i + 1; j < u.dim(); ++j)
            if (!u.contains(bracket(l, ui, u.basis_row(j)))) return false;
    }
    return true;
}

bool ideal_in(const LieAlgebra& l, const Subspace& u) {
    for (int i = 0; i < l.dim(); ++i) {
        Vec ei = unit_vec(l.field(), l.dim(), i);
        for (int j = 0; j < u.dim(); ++j)
            if (!u.contains(bracket(l, ei, u.basis_row(j)))) return false;
    }
    return true;
}

} // namespace

SubalgebraLattice build_lattice(const LieAlgebra& l, const LatticeOptions& opt) {
    if (!l.field().is_finite())
        throw input_error("subalgebra lattices require a finite field");
    SubalgebraLattice lat(l);
    for_each_subspace(l.field(), l.dim(), opt, [&](const Subspace& s) {
        if (closed_under_bracket(l, s)) lat.nodes_.push_back(s);
    });

    const int count = lat.size();
    lat.words_ = (count + 63) / 64;
    lat.down_.assign(static_cast<size_t>(count) * lat.words_, 0);
    lat.up_.assign(static_cast<size_t>(count) * lat.words_, 0);
    auto set_bit = [&](std::vector<std::uint64_t>& m, int row, int col) {
        m[static_cast<size_t>(row) * lat.words_ + col / 64] |= (std::uint64_t(1) << (col % 64));
    };
    for (int i = 0; i < count; ++i) {
        set_bit(lat.down_, i, i);
        set_bit(lat.up_, i, i);
        const Subspace& si = lat.nodes_[static_cast<size_t>(i)];
        for (int j = i + 1; j < count; ++j) {
            const Subspace& sj = lat.nodes_[static_cast<size_t>(j)];
            if (si.dim() >= sj.dim()) continue; // enumeration is dim-ascending
            if ((si.pivot_mask() & sj.pivot_mask()) != si.pivot_mask()) continue;
            if (sj.contains(si)) {
                set_bit(lat.down_, j, i);
                set_bit(lat.up_, i, j);
            }
        }
    }

    lat.ideal_flag_.resize(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        lat.ideal_flag_[static_cast<size_t>(i)] = ideal_in(l, lat.nodes_[static_cast<size_t>(i)]);

    lat.frat_sub_.assign(static_cast<size_t>(count), std::nullopt);
    lat.frat_ideal_.assign(static_cast<size_t>(count), std::nullopt);
    return lat;
}

int SubalgebraLattice::index_of(const Subspace& s) const {
    for (int i = 0; i < size(); ++i)
        if (nodes_[static_cast<size_t>(i)] == s) return i;
    return -1;
}

bool SubalgebraLattice::leq(int a, int b) const {
    return (word(down_, b, a / 64) >> (a % 64)) & 1;
}

std::vector<int> SubalgebraLattice::maximal_subalgebras(int s) const {
    std::vector<int> out;
    for (int t = 0; t < size(); ++t) {
        if (t == s || !leq(t, s)) continue;
        // t is maximal in s iff nothing lies strictly between: the interval
        // [t, s] has exactly the two endpoints
        int between = 0;
        for (int w = 0; w < words_; ++w)
            between += std::popcount(word(up_, t, w) & word(down_, s, w));
        if (between == 2) out.push_back(t);
    }
    return out;
}

std::vector<std::pair<int, int>> SubalgebraLattice::cover_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < size(); ++s)
        for (int t : maximal_subalgebras(s)) out.emplace_back(t, s);
    std::sort(out.begin(), out.end());
    return out;
}

const Subspace& SubalgebraLattice::frattini_subalgebra(int s) const {
    auto& slot = frat_sub_[static_cast<size_t>(s)];
    if (!slot) {
        std::vector<int> maxes = maximal_subalgebras(s);
        if (maxes.empty()) {
            slot = Subspace::zero(algebra_.field(), algebra_.dim());
        } else {
            Subspace acc = nodes_[static_cast<size_t>(maxes.front())];
            for (size_t i = 1; i < maxes.size() && !acc.is_zero(); ++i)
                acc = intersect(acc, nodes_[static_cast<size_t>(maxes[i])]);
            slot = std::move(acc);
        }
    }
    return *slot;
}

const Subspace& SubalgebraLattice::frattini_ideal(int s) const {
    auto& slot = frat_ideal_[static_cast<size_t>(s)];
    if (!slot) {
        const Subspace& w = frattini_subalgebra(s);
        if (w.is_zero()) {
            slot = w;
        } else {
            const Subspace& sub = nodes_[static_cast<size_t>(s)];
            std::vector<Matrix> actions;
            actions.reserve(static_cast<size_t>(sub.dim()));
            for (int i = 0; i < sub.dim(); ++i)
                actions.push_back(ad_matrix(algebra_, sub.basis_row(i)));
            slot = invariant_core(w, actions);
        }
    }
    return *slot;
}

std::vector<int> SubalgebraLattice::ideals() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (ideal_flag_[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<int> SubalgebraLattice::minimal_ideals() const {
    std::vector<int> out;
    for (int i : ideals()) {
        if (node_dim(i) == 0) continue;
        bool minimal = true;
        for (int j : ideals()) {
            if (j == i || node_dim(j) == 0) continue;
            if (leq(j, i)) { minimal = false; break; }
        }
        if (minimal) out.push_back(i);
    }
    return out;
}

Subspace SubalgebraLattice::abelian_socle() const {
    Subspace acc = Subspace::zero(algebra_.field(), algebra_.dim());
    for (int i : minimal_ideals())
        if (is_abelian_subspace(algebra_, nodes_[static_cast<size_t>(i)]))
            acc = sum(acc, nodes_[static_cast<size_t>(i)]);
    return acc;
}

Subspace SubalgebraLattice::nilradical() const {
    Subspace acc = Subspace::zero(algebra_.field(), algebra_.dim());
    for (int i : ideals())
        if (is_nilpotent_subspace(algebra_, nodes_[static_cast<size_t>(i)]))
            acc = sum(acc, nodes_[static_cast<size_t>(i)]);
    if (!is_nilpotent_subspace(algebra_, acc) || !is_ideal(algebra_, acc))
        throw std::logic_error("nilradical candidate failed verification");
    return acc;
}

Subspace SubalgebraLattice::radical() const {
    Subspace acc = Subspace::zero(algebra_.field(), algebra_.dim());
    for (int i : ideals())
        if (is_solvable_subspace(algebra_, nodes_[static_cast<size_t>(i)]))
            acc = sum(acc, nodes_[static_cast<size_t>(i)]);
    if (!is_solvable_subspace(algebra_, acc) || !is_ideal(algebra_, acc))
        throw std::logic_error("radical candidate failed verification");
    return acc;
}

std::vector<std::uint64_t> SubalgebraLattice::dim_histogram() const {
    std::vector<std::uint64_t> h(static_cast<size_t>(algebra_.dim()) + 1, 0);
    for (int i = 0; i < size(); ++i) ++h[static_cast<size_t>(node_dim(i))];
    return h;
}

} // namespace liealg
