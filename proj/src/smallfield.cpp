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

#include "liealg/smallfield.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>

#include "liealg/lattice.hpp"

namespace liealg::smallfield {

bool applicable(Field f, int n) {
    if (!f.is_finite() || n > kMaxDim) return false;
    std::int64_t qn = 1;
    for (int i = 0; i < n; ++i) {
        qn *= f.order();
        if (qn > kMaxElements) return false;
    }
    return true;
}

int Context::dim_of_mask(std::uint64_t m) const {
    int count = std::popcount(m);
    int d = 0;
    std::int64_t v = 1;
    while (v < count) { v *= q; ++d; }
    return d;
}

const Context& Context::get(Field f, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::unique_ptr<Context>>* registry =
        new std::map<std::pair<std::string, int>, std::unique_ptr<Context>>();
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(f.spec().key(), n);
    auto it = registry->find(key);
    if (it != registry->end()) return *it->second;

    if (!applicable(f, n)) throw std::logic_error("packed context not applicable");
    auto ctx = std::make_unique<Context>(f);
    ctx->n = n;
    ctx->q = f.order();
    ctx->qn = 1;
    for (int i = 0; i < n; ++i) ctx->qn *= static_cast<int>(ctx->q);
    const int q = static_cast<int>(ctx->q), qn = ctx->qn;

    std::vector<Scalar> elems;
    for (int i = 0; i < q; ++i) elems.push_back(f.element(i));
    ctx->fmul.assign(static_cast<size_t>(q) * q, 0);
    ctx->fsub.assign(static_cast<size_t>(q) * q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            ctx->fmul[static_cast<size_t>(a) * q + b] =
                static_cast<std::uint8_t>(f.index_of(elems[static_cast<size_t>(a)] * elems[static_cast<size_t>(b)]));
            ctx->fsub[static_cast<size_t>(a) * q + b] =
                static_cast<std::uint8_t>(f.index_of(elems[static_cast<size_t>(a)] - elems[static_cast<size_t>(b)]));
        }

    // element <-> coordinate tables
    ctx->digit.assign(static_cast<size_t>(qn), {});
    for (int v = 0; v < qn; ++v) {
        int rem = v;
        for (int i = 0; i < n; ++i) {
            ctx->digit[static_cast<size_t>(v)][static_cast<size_t>(i)] = static_cast<std::uint8_t>(rem % q);
            rem /= q;
        }
    }
    auto index_of_digits = [&](const std::array<std::uint8_t, kMaxDim>& d) {
        int idx = 0, scale = 1;
        for (int i = 0; i < n; ++i) { idx += d[static_cast<size_t>(i)] * scale; scale *= q; }
        return static_cast<std::uint16_t>(idx);
    };
    ctx->vadd.assign(static_cast<size_t>(qn) * qn, 0);
    for (int a = 0; a < qn; ++a)
        for (int b = 0; b < qn; ++b) {
            std::array<std::uint8_t, kMaxDim> d{};
            for (int i = 0; i < n; ++i) {
                Scalar x = elems[ctx->digit[static_cast<size_t>(a)][static_cast<size_t>(i)]] +
                           elems[ctx->digit[static_cast<size_t>(b)][static_cast<size_t>(i)]];
                d[static_cast<size_t>(i)] = static_cast<std::uint8_t>(f.index_of(x));
            }
            ctx->vadd[static_cast<size_t>(a) * qn + b] = index_of_digits(d);
        }
    ctx->vscale.assign(static_cast<size_t>(q) * qn, 0);
    for (int c = 0; c < q; ++c)
        for (int v = 0; v < qn; ++v) {
            std::array<std::uint8_t, kMaxDim> d{};
            for (int i = 0; i < n; ++i) {
                Scalar x = elems[static_cast<size_t>(c)] * elems[ctx->digit[static_cast<size_t>(v)][static_cast<size_t>(i)]];
                d[static_cast<size_t>(i)] = static_cast<std::uint8_t>(f.index_of(x));
            }
            ctx->vscale[static_cast<size_t>(c) * qn + v] = index_of_digits(d);
        }
    for (int i = 0; i < n; ++i) {
        std::array<std::uint8_t, kMaxDim> d{};
        d[static_cast<size_t>(i)] = 1;
        ctx->unit[static_cast<size_t>(i)] = index_of_digits(d);
    }

    // subspace list from the canonical enumeration
    LatticeOptions opt;
    opt.max_subspaces = 1'000'000;
    for_each_subspace(f, n, opt, [&](const Subspace& s) {
        ctx->mask.push_back(pack_subspace(*ctx, s));
        ctx->sdim.push_back(static_cast<std::uint8_t>(s.dim()));
        std::array<std::uint16_t, kMaxDim> rows{};
        for (int r = 0; r < s.dim(); ++r) rows[static_cast<size_t>(r)] = pack_vec(*ctx, s.basis_row(r));
        ctx->sbasis.push_back(rows);
    });
    ctx->space_count = static_cast<int>(ctx->mask.size());

    auto pos = registry->emplace(key, std::move(ctx)).first;
    return *pos->second;
}

std::uint16_t pack_vec(const Context& ctx, const Vec& v) {
    int idx = 0, scale = 1;
    for (int i = 0; i < ctx.n; ++i) {
        idx += static_cast<int>(ctx.field.index_of(v[static_cast<size_t>(i)])) * scale;
        scale *= static_cast<int>(ctx.q);
    }
    return static_cast<std::uint16_t>(idx);
}

std::uint64_t pack_subspace(const Context& ctx, const Subspace& s) {
    // span closure over the basis rows
    std::uint64_t m = 1; // the zero vector
    for (int r = 0; r < s.dim(); ++r) {
        std::uint16_t g = pack_vec(ctx, s.basis_row(r));
        std::uint64_t acc = 0;
        for (int c = 0; c < ctx.q; ++c) {
            std::uint16_t off = ctx.vscale[static_cast<size_t>(c) * ctx.qn + g];
            std::uint64_t bits = m;
            while (bits) {
                int x = std::countr_zero(bits);
                bits &= bits - 1;
                acc |= std::uint64_t(1) << ctx.vadd[static_cast<size_t>(x) * ctx.qn + off];
            }
        }
        m = acc;
    }
    return m;
}

PackedTable pack_table(const Context& ctx, const StructureTableDraft& d) {
    PackedTable t;
    t.reserve(d.table.size());
    for (const auto& v : d.table) t.push_back(pack_vec(ctx, v));
    return t;
}

StructureTableDraft unpack_table(const Context& ctx, const PackedTable& t) {
    StructureTableDraft d = StructureTableDraft::zeros(ctx.field, ctx.n);
    for (size_t idx = 0; idx < t.size(); ++idx) {
        Vec v;
        v.reserve(static_cast<size_t>(ctx.n));
        for (int i = 0; i < ctx.n; ++i)
            v.push_back(ctx.field.element(ctx.digit[t[idx]][static_cast<size_t>(i)]));
        d.table[idx] = std::move(v);
    }
    return d;
}

namespace {

struct Calc {
    const Context& ctx;
    const PackedTable& tab;

    std::uint16_t pair_entry(int i, int j) const {
        // antisymmetry: entry for i<j, negated for j<i, zero on the diagonal
        if (i == j) return 0;
        if (i < j) return tab[static_cast<size_t>(StructureTableDraft::pair_index(i, j, ctx.n))];
        std::uint16_t v = tab[static_cast<size_t>(StructureTableDraft::pair_index(j, i, ctx.n))];
        return neg(v);
    }

    std::uint16_t neg(std::uint16_t v) const {
        // -v = 0 - v coordinatewise; use scale by -1 = fsub(0,1) index
        std::uint8_t m1 = ctx.fsub[0 * ctx.q + 1];
        return ctx.vscale[static_cast<size_t>(m1) * ctx.qn + v];
    }

    // [u, v] by bilinear expansion over coordinates
    std::uint16_t brk(std::uint16_t u, std::uint16_t v) const {
        const auto& du = ctx.digit[u];
        const auto& dv = ctx.digit[v];
        std::uint16_t res = 0;
        for (int i = 0; i < ctx.n; ++i) {
            if (du[static_cast<size_t>(i)] == 0 && dv[static_cast<size_t>(i)] == 0) continue;
            for (int j = i + 1; j < ctx.n; ++j) {
                std::uint8_t c = ctx.fsub[static_cast<size_t>(
                                     ctx.fmul[static_cast<size_t>(du[static_cast<size_t>(i)]) * ctx.q +
                                              dv[static_cast<size_t>(j)]]) * ctx.q +
                                 ctx.fmul[static_cast<size_t>(du[static_cast<size_t>(j)]) * ctx.q +
                                          dv[static_cast<size_t>(i)]]];
                if (c == 0) continue;
                std::uint16_t e = tab[static_cast<size_t>(StructureTableDraft::pair_index(i, j, ctx.n))];
                res = ctx.vadd[static_cast<size_t>(res) * ctx.qn +
                               ctx.vscale[static_cast<size_t>(c) * ctx.qn + e]];
            }
        }
        return res;
    }

    bool in(std::uint64_t mask, std::uint16_t v) const { return (mask >> v) & 1; }

    // span(mask ∪ {g}) for a subspace mask
    std::uint64_t span_insert(std::uint64_t m, std::uint16_t g) const {
        if (in(m, g)) return m;
        std::uint64_t acc = 0;
        for (int c = 0; c < ctx.q; ++c) {
            std::uint16_t off = ctx.vscale[static_cast<size_t>(c) * ctx.qn + g];
            std::uint64_t bits = m;
            while (bits) {
                int x = std::countr_zero(bits);
                bits &= bits - 1;
                acc |= std::uint64_t(1) << ctx.vadd[static_cast<size_t>(x) * ctx.qn + off];
            }
        }
        return acc;
    }

    // greedy basis extraction from a subspace mask
    int basis_of(std::uint64_t m, std::array<std::uint16_t, kMaxDim>& out) const {
        std::uint64_t have = 1;
        int d = 0;
        std::uint64_t bits = m & ~std::uint64_t(1);
        while (bits && have != m) {
            int x = std::countr_zero(bits);
            bits &= bits - 1;
            if (!in(have, static_cast<std::uint16_t>(x))) {
                out[static_cast<size_t>(d++)] = static_cast<std::uint16_t>(x);
                have = span_insert(have, static_cast<std::uint16_t>(x));
            }
        }
        return d;
    }

    // span of pairwise brackets of two masks
    std::uint64_t bracket_span(std::uint64_t a, std::uint64_t b) const {
        std::array<std::uint16_t, kMaxDim> ba{}, bb{};
        int da = basis_of(a, ba), db = basis_of(b, bb);
        std::uint64_t m = 1;
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j)
                m = span_insert(m, brk(ba[static_cast<size_t>(i)], bb[static_cast<size_t>(j)]));
        return m;
    }
};

} // namespace

bool jacobi_valid(const Context& ctx, const PackedTable& t) {
    Calc c{ctx, t};
    const int n = ctx.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint16_t tij = t[static_cast<size_t>(StructureTableDraft::pair_index(i, j, n))];
            for (int k = j + 1; k < n; ++k) {
                std::uint16_t tjk = t[static_cast<size_t>(StructureTableDraft::pair_index(j, k, n))];
                std::uint16_t tik = t[static_cast<size_t>(StructureTableDraft::pair_index(i, k, n))];
                std::uint16_t d = c.brk(tij, ctx.unit[static_cast<size_t>(k)]);
                d = ctx.vadd[static_cast<size_t>(d) * ctx.qn + c.brk(tjk, ctx.unit[static_cast<size_t>(i)])];
                d = ctx.vadd[static_cast<size_t>(d) * ctx.qn + c.brk(c.neg(tik), ctx.unit[static_cast<size_t>(j)])];
                if (d != 0) return false;
            }
        }
    return true;
}

Info analyze_table(const Context& ctx, const PackedTable& t) {
    Info info;
    if (!jacobi_valid(ctx, t)) return info;
    info.valid = true;

    Calc c{ctx, t};
    const int n = ctx.n;
    const std::uint64_t full_mask = ctx.mask[static_cast<size_t>(ctx.space_count - 1)];

    // closure flags over the canonical subspace list
    std::vector<char> closed(static_cast<size_t>(ctx.space_count), 0);
    std::vector<int> closed_by_dim(static_cast<size_t>(n + 1), 0);
    for (int s = 0; s < ctx.space_count; ++s) {
        const int d = ctx.sdim[static_cast<size_t>(s)];
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            for (int j = i + 1; j < d; ++j)
                if (!c.in(ctx.mask[static_cast<size_t>(s)],
                          c.brk(ctx.sbasis[static_cast<size_t>(s)][static_cast<size_t>(i)],
                                ctx.sbasis[static_cast<size_t>(s)][static_cast<size_t>(j)]))) {
                    ok = false;
                    break;
                }
        closed[static_cast<size_t>(s)] = ok ? 1 : 0;
        if (ok) ++closed_by_dim[static_cast<size_t>(d)];
    }

    // Frattini ideal of the subalgebra at node s, as a mask
    auto phi_of = [&](int s) -> std::uint64_t {
        const std::uint64_t sm = ctx.mask[static_cast<size_t>(s)];
        const int sd = ctx.sdim[static_cast<size_t>(s)];
        // maximal proper subalgebras
        std::uint64_t w = sm;
        bool any = false;
        for (int tnode = 0; tnode < ctx.space_count; ++tnode) {
            if (!closed[static_cast<size_t>(tnode)] || tnode == s) continue;
            const std::uint64_t tm = ctx.mask[static_cast<size_t>(tnode)];
            if ((tm & sm) != tm) continue; // not contained
            const int td = ctx.sdim[static_cast<size_t>(tnode)];
            bool maximal = true;
            if (td < sd - 1) {
                for (int r = 0; r < ctx.space_count && maximal; ++r) {
                    if (!closed[static_cast<size_t>(r)] || r == s || r == tnode) continue;
                    const int rd = ctx.sdim[static_cast<size_t>(r)];
                    if (rd <= td || rd >= sd) continue;
                    const std::uint64_t rm = ctx.mask[static_cast<size_t>(r)];
                    if ((tm & rm) == tm && (rm & sm) == rm) maximal = false;
                }
            }
            if (maximal) { w &= tm; any = true; }
        }
        if (!any) w = 1; // no maximal subalgebras: the zero node
        // largest ideal of s inside w
        std::uint64_t k = w;
        while (k != 1) {
            std::uint64_t next = 1;
            std::uint64_t bits = k & ~std::uint64_t(1);
            while (bits) {
                int x = std::countr_zero(bits);
                bits &= bits - 1;
                bool keep = true;
                for (int b = 0; b < sd; ++b)
                    if (!c.in(k, c.brk(ctx.sbasis[static_cast<size_t>(s)][static_cast<size_t>(b)],
                                       static_cast<std::uint16_t>(x)))) {
                        keep = false;
                        break;
                    }
                if (keep) next |= std::uint64_t(1) << x;
            }
            if (next == k) break;
            k = next;
        }
        return k;
    };

    // minimal-non-elementary scan: all proper subalgebras must have trivial
    // Frattini ideal, and the algebra itself must not
    bool proper_clean = true;
    for (int s = 0; s < ctx.space_count - 1 && proper_clean; ++s) {
        if (!closed[static_cast<size_t>(s)]) continue;
        if (phi_of(s) != 1) proper_clean = false;
    }
    const std::uint64_t phi_full = phi_of(ctx.space_count - 1);
    info.phi_dim = ctx.dim_of_mask(phi_full);
    info.elementary = proper_clean && phi_full == 1;
    info.mne = proper_clean && phi_full != 1;

    // series
    std::uint64_t l2 = c.bracket_span(full_mask, full_mask);
    info.abelian = l2 == 1;
    std::vector<std::int32_t> derived_dims, lcs_dims;
    {
        std::uint64_t d = full_mask;
        derived_dims.push_back(ctx.dim_of_mask(d));
        while (true) {
            std::uint64_t nd = c.bracket_span(d, d);
            if (nd == d) break;
            d = nd;
            derived_dims.push_back(ctx.dim_of_mask(d));
            if (d == 1) break;
        }
        info.solvable = d == 1;
        std::uint64_t lc = full_mask;
        lcs_dims.push_back(ctx.dim_of_mask(lc));
        while (true) {
            std::uint64_t nd = c.bracket_span(full_mask, lc);
            if (nd == lc) break;
            lc = nd;
            lcs_dims.push_back(ctx.dim_of_mask(lc));
            if (lc == 1) break;
        }
        info.nilpotent = lc == 1;
    }

    // ideal flags and the abelian socle
    std::vector<char> ideal(static_cast<size_t>(ctx.space_count), 0);
    for (int s = 0; s < ctx.space_count; ++s) {
        if (!closed[static_cast<size_t>(s)]) continue;
        const int d = ctx.sdim[static_cast<size_t>(s)];
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int b = 0; b < d; ++b)
                if (!c.in(ctx.mask[static_cast<size_t>(s)],
                          c.brk(ctx.unit[static_cast<size_t>(i)],
                                ctx.sbasis[static_cast<size_t>(s)][static_cast<size_t>(b)]))) {
                    ok = false;
                    break;
                }
        ideal[static_cast<size_t>(s)] = ok ? 1 : 0;
    }
    std::uint64_t asoc = 1;
    for (int s = 0; s < ctx.space_count; ++s) {
        if (!ideal[static_cast<size_t>(s)] || ctx.sdim[static_cast<size_t>(s)] == 0) continue;
        bool minimal = true;
        for (int r = 0; r < ctx.space_count && minimal; ++r) {
            if (r == s || !ideal[static_cast<size_t>(r)] || ctx.sdim[static_cast<size_t>(r)] == 0) continue;
            const std::uint64_t rm = ctx.mask[static_cast<size_t>(r)];
            if ((rm & ctx.mask[static_cast<size_t>(s)]) == rm) minimal = false;
        }
        if (!minimal) continue;
        if (c.bracket_span(ctx.mask[static_cast<size_t>(s)], ctx.mask[static_cast<size_t>(s)]) != 1) continue;
        // sum with the accumulator
        std::array<std::uint16_t, kMaxDim> rows{};
        int d = c.basis_of(ctx.mask[static_cast<size_t>(s)], rows);
        for (int i = 0; i < d; ++i) asoc = c.span_insert(asoc, rows[static_cast<size_t>(i)]);
    }

    // shape of a solvable algebra
    if (info.solvable) {
        info.shape = 0;
        const int l2dim = ctx.dim_of_mask(l2);
        if (n == 3 && info.nilpotent && l2dim == 1) {
            // center: kernel of every ad(e_i)
            std::uint64_t center = 0;
            for (int v = 0; v < ctx.qn; ++v) {
                bool central = true;
                for (int i = 0; i < n && central; ++i)
                    if (c.brk(ctx.unit[static_cast<size_t>(i)], static_cast<std::uint16_t>(v)) != 0)
                        central = false;
                if (central) center |= std::uint64_t(1) << v;
            }
            bool class_two = c.bracket_span(full_mask, l2) == 1;
            if (class_two && center == l2) info.shape = 2;
        }
        if (info.shape == 0 && l2dim == n - 1 && c.bracket_span(l2, l2) == 1 &&
            phi_full != 1 && phi_full == asoc && phi_full != l2 && (phi_full & l2) == phi_full) {
            // biggest ideal properly contained in L²: every ideal strictly
            // inside L² must lie inside phi
            bool biggest = true;
            for (int s = 0; s < ctx.space_count && biggest; ++s) {
                if (!ideal[static_cast<size_t>(s)]) continue;
                const std::uint64_t km = ctx.mask[static_cast<size_t>(s)];
                if ((km & l2) == km && km != l2 && (km & phi_full) != km) biggest = false;
            }
            if (biggest) info.shape = 1;
        }
        info.discrepancy = info.mne != (info.shape != 0);
    } else {
        info.shape = -1;
    }

    // cheap invariants for isomorphism-class bucketing
    info.signature.push_back(info.solvable ? 1 : 0);
    info.signature.push_back(info.nilpotent ? 1 : 0);
    info.signature.push_back(info.phi_dim);
    info.signature.push_back(ctx.dim_of_mask(asoc));
    info.signature.push_back(-1);
    for (auto d : derived_dims) info.signature.push_back(d);
    info.signature.push_back(-1);
    for (auto d : lcs_dims) info.signature.push_back(d);
    info.signature.push_back(-1);
    for (int d = 0; d <= n; ++d) info.signature.push_back(closed_by_dim[static_cast<size_t>(d)]);

    return info;
}

} // namespace liealg::smallfield
