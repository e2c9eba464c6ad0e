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

#include "liealg/algebra.hpp"

#include <cassert>

namespace liealg {

StructureTableDraft StructureTableDraft::zeros(Field f, int n) {
    StructureTableDraft d{f, n, {}, {}};
    d.table.assign(static_cast<size_t>(n) * (n - 1) / 2, zero_vec(f, n));
    return d;
}

std::string StructureTableDraft::label(int i) const {
    if (static_cast<size_t>(i) < labels.size()) return labels[static_cast<size_t>(i)];
    return "b" + std::to_string(i + 1);
}

Vec LieAlgebra::basis_bracket(int i, int j) const {
    if (i == j) return zero_vec(field(), dim());
    if (i < j) return t_.at(i, j);
    return neg_vec(t_.at(j, i));
}

namespace {

// [u, v] for a draft table; used both for validation and by the algebra.
Vec draft_bracket(const StructureTableDraft& t, const Vec& u, const Vec& v) {
    const int n = t.dim;
    Vec out = zero_vec(t.field, n);
    for (int i = 0; i < n; ++i) {
        if (u[static_cast<size_t>(i)].is_zero() && v[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = i + 1; j < n; ++j) {
            // coefficient of [b_i, b_j]: u_i v_j - u_j v_i
            Scalar c = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)] -
                       u[static_cast<size_t>(j)] * v[static_cast<size_t>(i)];
            if (c.is_zero()) continue;
            const Vec& bij = t.at(i, j);
            for (int m = 0; m < n; ++m)
                if (!bij[static_cast<size_t>(m)].is_zero())
                    out[static_cast<size_t>(m)] += c * bij[static_cast<size_t>(m)];
        }
    }
    return out;
}

} // namespace

std::optional<JacobiViolation> jacobi_violation(const StructureTableDraft& d) {
    const int n = d.dim;
    for (size_t idx = 0; idx < d.table.size(); ++idx)
        if (static_cast<int>(d.table[idx].size()) != n)
            throw input_error("bracket vector length mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec defect = draft_bracket(d, d.at(i, j), unit_vec(d.field, n, k));
                defect = add_vec(defect, draft_bracket(d, d.at(j, k), unit_vec(d.field, n, i)));
                defect = add_vec(defect, draft_bracket(d, neg_vec(d.at(i, k)), unit_vec(d.field, n, j)));
                if (!is_zero_vec(defect))
                    return JacobiViolation{i, j, k, std::move(defect)};
            }
    return std::nullopt;
}

LieAlgebra validate(StructureTableDraft draft) {
    if (auto v = jacobi_violation(draft)) {
        std::string msg = "Jacobi identity fails on (" + draft.label(v->i) + ", " +
                          draft.label(v->j) + ", " + draft.label(v->k) + "), defect (";
        for (size_t m = 0; m < v->defect.size(); ++m) {
            if (m) msg += ", ";
            msg += v->defect[m].str();
        }
        msg += ")";
        throw input_error(msg);
    }
    return LieAlgebra(std::move(draft));
}

LieAlgebra validate_unchecked(StructureTableDraft draft) {
    assert(!jacobi_violation(draft));
    return LieAlgebra(std::move(draft));
}

Vec bracket(const LieAlgebra& l, const Vec& u, const Vec& v) {
    if (static_cast<int>(u.size()) != l.dim() || static_cast<int>(v.size()) != l.dim())
        throw input_error("bracket operand dimension mismatch");
    return draft_bracket(l.table(), u, v);
}

Subspace bracket_spaces(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
    if (u.ambient() != l.dim() || v.ambient() != l.dim())
        throw input_error("subspace ambient mismatch");
    std::vector<Vec> gens;
    gens.reserve(static_cast<size_t>(u.dim()) * v.dim());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j)
            gens.push_back(bracket(l, u.basis_row(i), v.basis_row(j)));
    return Subspace::span(l.field(), l.dim(), gens);
}

Matrix ad_matrix(const LieAlgebra& l, const Vec& u) {
    const int n = l.dim();
    Matrix m(l.field(), n, n);
    for (int j = 0; j < n; ++j) {
        Vec col = bracket(l, u, unit_vec(l.field(), n, j));
        for (int i = 0; i < n; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
    }
    return m;
}

namespace {

std::vector<Subspace> series(const LieAlgebra& l, const Subspace& start, bool lower_central) {
    std::vector<Subspace> out{start};
    while (true) {
        const Subspace& last = out.back();
        Subspace next = lower_central ? bracket_spaces(l, start, last)
                                      : bracket_spaces(l, last, last);
        if (next.dim() == last.dim()) break; // next ⊆ last always, so equal
        out.push_back(std::move(next));
        if (out.back().is_zero()) break;
    }
    return out;
}

} // namespace

std::vector<Subspace> derived_series(const LieAlgebra& l) {
    return series(l, Subspace::full(l.field(), l.dim()), false);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
    return series(l, Subspace::full(l.field(), l.dim()), true);
}

bool is_solvable(const LieAlgebra& l) { return derived_series(l).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).back().is_zero(); }
bool is_abelian(const LieAlgebra& l) {
    return bracket_spaces(l, Subspace::full(l.field(), l.dim()),
                          Subspace::full(l.field(), l.dim())).is_zero();
}

bool is_solvable_subspace(const LieAlgebra& l, const Subspace& u) {
    return series(l, u, false).back().is_zero();
}

bool is_nilpotent_subspace(const LieAlgebra& l, const Subspace& u) {
    return series(l, u, true).back().is_zero();
}

bool is_abelian_subspace(const LieAlgebra& l, const Subspace& u) {
    return bracket_spaces(l, u, u).is_zero();
}

Subspace subalgebra_closure(const LieAlgebra& l, const Subspace& u) {
    Subspace s = u;
    while (true) {
        Subspace next = sum(s, bracket_spaces(l, s, s));
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& u) {
    return u.contains(bracket_spaces(l, u, u));
}

bool is_ideal(const LieAlgebra& l, const Subspace& u) {
    return u.contains(bracket_spaces(l, Subspace::full(l.field(), l.dim()), u));
}

Vec RestrictedAlgebra::to_ambient(const Vec& sub) const {
    Vec out = zero_vec(domain.field(), domain.ambient());
    for (int i = 0; i < domain.dim(); ++i)
        if (!sub[static_cast<size_t>(i)].is_zero())
            out = add_vec(out, scale_vec(sub[static_cast<size_t>(i)], domain.basis_row(i)));
    return out;
}

Vec RestrictedAlgebra::to_sub(const Vec& ambient) const {
    if (!domain.contains(ambient))
        throw input_error("vector not in the subalgebra");
    return domain.coordinates(ambient);
}

Subspace RestrictedAlgebra::lift(const Subspace& sub) const {
    std::vector<Vec> rows;
    for (int i = 0; i < sub.dim(); ++i) rows.push_back(to_ambient(sub.basis_row(i)));
    return Subspace::span(domain.field(), domain.ambient(), rows);
}

RestrictedAlgebra subalgebra_restrict(const LieAlgebra& l, const Subspace& s) {
    if (!is_subalgebra(l, s))
        throw input_error("subspace is not closed under the bracket");
    const int d = s.dim();
    StructureTableDraft t = StructureTableDraft::zeros(l.field(), d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vec w = bracket(l, s.basis_row(i), s.basis_row(j));
            t.at(i, j) = s.coordinates(w);
        }
    return RestrictedAlgebra{validate(std::move(t)), s};
}

Vec QuotientAlgebra::project(const Vec& ambient) const {
    Vec r = ideal.reduce(ambient);
    Vec out;
    out.reserve(complement.size());
    for (int c : complement) out.push_back(r[static_cast<size_t>(c)]);
    return out;
}

QuotientAlgebra quotient(const LieAlgebra& l, const Subspace& ideal) {
    if (!is_ideal(l, ideal)) throw input_error("quotient requires an ideal");
    const int n = l.dim();
    std::vector<int> comp;
    for (int c = 0; c < n; ++c)
        if (!(ideal.pivot_mask() & (std::uint32_t(1) << c))) comp.push_back(c);
    const int d = static_cast<int>(comp.size());
    QuotientAlgebra q{validate(StructureTableDraft::zeros(l.field(), d)), ideal, comp};
    StructureTableDraft t = StructureTableDraft::zeros(l.field(), d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vec w = l.basis_bracket(comp[static_cast<size_t>(i)], comp[static_cast<size_t>(j)]);
            t.at(i, j) = q.project(w);
        }
    if (!l.labels().empty()) {
        for (int c : comp) t.labels.push_back(l.label(c));
    }
    q.algebra = validate(std::move(t)); // Jacobi descends to quotients
    return q;
}

Subspace center(const LieAlgebra& l) {
    return centralizer(l, Subspace::full(l.field(), l.dim()));
}

Subspace centralizer(const LieAlgebra& l, const Subspace& u) {
    const int n = l.dim();
    if (u.dim() == 0) return Subspace::full(l.field(), n);
    Matrix m(l.field(), u.dim() * n, n);
    for (int i = 0; i < u.dim(); ++i) {
        Matrix ad = ad_matrix(l, u.basis_row(i));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(i * n + r, c) = ad.at(r, c);
    }
    return kernel(m);
}

Subspace normalizer(const LieAlgebra& l, const Subspace& u) {
    const int n = l.dim();
    if (u.dim() == 0) return Subspace::full(l.field(), n);
    // x with [x, u_i] ∈ U for every basis u_i: residual after reduction by U
    // is linear in x.
    Matrix m(l.field(), u.dim() * n, n);
    for (int i = 0; i < u.dim(); ++i) {
        Vec ui = u.basis_row(i);
        for (int c = 0; c < n; ++c) {
            Vec res = u.reduce(bracket(l, unit_vec(l.field(), n, c), ui));
            for (int r = 0; r < n; ++r) m.at(i * n + r, c) = res[static_cast<size_t>(r)];
        }
    }
    return kernel(m);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.field() != b.field()) throw input_error("direct sum requires one field");
    const int na = a.dim(), nb = b.dim(), n = na + nb;
    StructureTableDraft t = StructureTableDraft::zeros(a.field(), n);
    for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j) {
            const Vec& v = a.table().at(i, j);
            for (int m = 0; m < na; ++m) t.at(i, j)[static_cast<size_t>(m)] = v[static_cast<size_t>(m)];
        }
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            const Vec& v = b.table().at(i, j);
            for (int m = 0; m < nb; ++m)
                t.at(na + i, na + j)[static_cast<size_t>(na + m)] = v[static_cast<size_t>(m)];
        }
    if (!a.labels().empty() || !b.labels().empty()) {
        for (int i = 0; i < na; ++i) t.labels.push_back(a.label(i));
        for (int i = 0; i < nb; ++i) t.labels.push_back(b.label(i));
    }
    return validate(std::move(t));
}

LieAlgebra semidirect_by_matrix(const Matrix& d) {
    if (d.rows() != d.cols()) throw input_error("action matrix must be square");
    const int m = d.rows(), n = m + 1;
    StructureTableDraft t = StructureTableDraft::zeros(d.field(), n);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            t.at(0, j + 1)[static_cast<size_t>(i + 1)] = d.at(i, j);
    return validate(std::move(t));
}

LieAlgebra reduce_mod_p(const LieAlgebra& l, std::int64_t p) {
    if (l.field().kind() != FieldKind::Rationals)
        throw input_error("mod-p reduction applies to algebras over Q");
    Field gf = Field::prime(p);
    StructureTableDraft t = StructureTableDraft::zeros(gf, l.dim());
    for (size_t idx = 0; idx < l.table().table.size(); ++idx)
        for (size_t m = 0; m < l.table().table[idx].size(); ++m) {
            const Scalar& s = l.table().table[idx][m];
            if (!s.is_integer())
                throw input_error("table entry " + s.str() + " is not an integer");
            mpz_class num = s.rational().get_num();
            mpz_class r = num % p;
            if (r < 0) r += p;
            t.table[idx][m] = gf.from_integer(r.get_si());
        }
    t.labels = l.labels();
    return validate(std::move(t)); // Jacobi over Z descends mod p
}

LieAlgebra extend_scalars(const LieAlgebra& l, Field target) {
    if (l.field().kind() != FieldKind::PrimeField)
        throw input_error("scalar extension applies to algebras over GF(p)");
    StructureTableDraft t = StructureTableDraft::zeros(target, l.dim());
    for (size_t idx = 0; idx < l.table().table.size(); ++idx)
        for (size_t m = 0; m < l.table().table[idx].size(); ++m)
            t.table[idx][m] = embed(l.table().table[idx][m], target);
    t.labels = l.labels();
    return validate(std::move(t));
}

Subspace extend_subspace(const Subspace& u, Field target) {
    std::vector<Vec> rows;
    for (int i = 0; i < u.dim(); ++i) {
        Vec row;
        row.reserve(static_cast<size_t>(u.ambient()));
        for (int c = 0; c < u.ambient(); ++c) row.push_back(embed(u.basis().at(i, c), target));
        rows.push_back(std::move(row));
    }
    return Subspace::span(target, u.ambient(), rows);
}

} // namespace liealg
