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

#include <algorithm>
#include <atomic>
#include <thread>

#include "liealg/classify.hpp"
#include "liealg/smallfield.hpp"

namespace liealg {

namespace {

// Canonical numeric encoding of a table, matching the JSON serialization
// order: pairs in (i, j) order, each coordinate as its coefficient digits.
std::vector<std::int64_t> table_sort_key(const StructureTableDraft& d) {
    std::vector<std::int64_t> key;
    for (const auto& vec : d.table)
        for (const auto& s : vec) {
            switch (d.field.kind()) {
            case FieldKind::PrimeField: key.push_back(s.residue()); break;
            case FieldKind::ExtensionField:
                for (int i = 0; i < d.field.spec().k; ++i) key.push_back(s.coefficients()[static_cast<size_t>(i)]);
                break;
            case FieldKind::Rationals: throw std::logic_error("search over Q");
            }
        }
    return key;
}

struct PendingClass {
    std::vector<std::int64_t> key;
    StructureTableDraft rep;
    LieAlgebra alg;
    std::uint64_t count = 0;
    bool solvable = false, nilpotent = false;
    Shape shape = Shape::None;
    int phi_dim = 0;
    std::vector<std::int32_t> signature;
};

struct Accumulator {
    std::uint64_t scanned = 0, valid = 0, mne = 0, disc = 0;
    std::vector<PendingClass> classes;
};

void admit_mne(Accumulator& acc, StructureTableDraft draft, bool solvable, bool nilpotent,
               Shape shape, int phi_dim, std::vector<std::int32_t> signature,
               std::uint64_t count, const SearchOptions& opt,
               std::vector<std::int64_t> key) {
    LieAlgebra alg = validate_unchecked(draft);
    IsomorphismOptions iso_opt{opt.max_gl_order};
    for (auto& cls : acc.classes) {
        if (cls.signature != signature) continue;
        if (!is_isomorphic(cls.alg, alg, iso_opt).isomorphic) continue;
        cls.count += count;
        if (key < cls.key) {
            cls.key = std::move(key);
            cls.rep = std::move(draft);
            cls.alg = std::move(alg);
        }
        return;
    }
    PendingClass cls{std::move(key), std::move(draft), std::move(alg), count,
                     solvable,       nilpotent,        shape,          phi_dim,
                     std::move(signature)};
    acc.classes.push_back(std::move(cls));
}

// Verdicts for one Jacobi-valid table via the generic lattice machinery
// (fallback when the packed engine does not apply).
struct GenericVerdicts {
    bool mne, solvable, nilpotent;
    Shape shape;
    int phi_dim;
    bool discrepancy;
    std::vector<std::int32_t> signature;
};

GenericVerdicts generic_verdicts(const LieAlgebra& l) {
    SubalgebraLattice lat = build_lattice(l);
    GenericVerdicts v{};
    v.mne = is_minimal_non_elementary(lat).value;
    v.solvable = is_solvable(l);
    v.nilpotent = is_nilpotent(l);
    v.phi_dim = lat.frattini_ideal(lat.full_node()).dim();
    v.shape = v.solvable ? classify_solvable_shape(lat) : Shape::None;
    v.discrepancy = v.solvable && (v.mne != (v.shape != Shape::None));
    for (const auto& s : derived_series(l)) v.signature.push_back(s.dim());
    v.signature.push_back(-1);
    for (const auto& s : lower_central_series(l)) v.signature.push_back(s.dim());
    v.signature.push_back(-1);
    v.signature.push_back(center(l).dim());
    v.signature.push_back(v.phi_dim);
    auto hist = lat.dim_histogram();
    for (auto h : hist) v.signature.push_back(static_cast<std::int32_t>(h));
    return v;
}

} // namespace

SearchReport exhaustive_search(int dim, Field f, const SearchOptions& opt) {
    if (!f.is_finite()) throw input_error("exhaustive search requires a finite field");
    if (dim < 1) throw input_error("search dimension must be positive");
    const int pairs = dim * (dim - 1) / 2;
    const std::int64_t q = f.order();
    std::int64_t qn = 1;
    for (int i = 0; i < dim; ++i) qn *= q;

    mpz_class total = 1;
    for (int i = 0; i < pairs; ++i) total *= qn;
    if (total > static_cast<unsigned long>(opt.max_tables))
        throw cost_error("table count " + total.get_str() + " exceeds the cap " +
                             std::to_string(opt.max_tables),
                         total.get_str());
    const std::uint64_t total_u = total.get_ui();

    int threads = opt.threads > 0 ? opt.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    // partition on a prefix of pair vectors so workers stay balanced and the
    // merge order is fixed
    int prefix = pairs == 0 ? 0 : 1;
    std::uint64_t partitions = pairs == 0 ? 1 : static_cast<std::uint64_t>(qn);
    while (prefix < pairs && partitions < static_cast<std::uint64_t>(8 * threads)) {
        ++prefix;
        partitions *= static_cast<std::uint64_t>(qn);
    }
    const std::uint64_t suffix_count = total_u / partitions;

    const bool packed = smallfield::applicable(f, dim);
    const smallfield::Context* ctx = packed ? &smallfield::Context::get(f, dim) : nullptr;

    std::vector<Accumulator> results(partitions);

    auto run_partition = [&](std::uint64_t part) {
        Accumulator& acc = results[part];
        if (packed) {
            smallfield::PackedTable tab(static_cast<size_t>(pairs), 0);
            std::uint64_t rem = part;
            for (int i = 0; i < prefix; ++i) {
                tab[static_cast<size_t>(i)] = static_cast<std::uint16_t>(rem % static_cast<std::uint64_t>(qn));
                rem /= static_cast<std::uint64_t>(qn);
            }
            for (std::uint64_t suffix = 0; suffix < suffix_count; ++suffix) {
                std::uint64_t s = suffix;
                for (int i = prefix; i < pairs; ++i) {
                    tab[static_cast<size_t>(i)] = static_cast<std::uint16_t>(s % static_cast<std::uint64_t>(qn));
                    s /= static_cast<std::uint64_t>(qn);
                }
                ++acc.scanned;
                smallfield::Info info = smallfield::analyze_table(*ctx, tab);
                if (!info.valid) continue;
                ++acc.valid;
                if (info.discrepancy) ++acc.disc;
                if (!info.mne) continue;
                ++acc.mne;
                StructureTableDraft draft = smallfield::unpack_table(*ctx, tab);
                Shape shape = info.shape == 1   ? Shape::SplitAbelian
                              : info.shape == 2 ? Shape::Heisenberg
                                                : Shape::None;
                std::vector<std::int64_t> key = table_sort_key(draft);
                admit_mne(acc, std::move(draft), info.solvable, info.nilpotent, shape,
                          info.phi_dim, info.signature, 1, opt, std::move(key));
            }
        } else {
            StructureTableDraft draft = StructureTableDraft::zeros(f, dim);
            std::uint64_t rem = part;
            auto set_pair = [&](int idx, std::uint64_t elem_index) {
                Vec& v = draft.table[static_cast<size_t>(idx)];
                std::uint64_t e = elem_index;
                for (int c = 0; c < dim; ++c) {
                    v[static_cast<size_t>(c)] = f.element(static_cast<std::int64_t>(e % static_cast<std::uint64_t>(q)));
                    e /= static_cast<std::uint64_t>(q);
                }
            };
            for (int i = 0; i < prefix; ++i) {
                set_pair(i, rem % static_cast<std::uint64_t>(qn));
                rem /= static_cast<std::uint64_t>(qn);
            }
            for (std::uint64_t suffix = 0; suffix < suffix_count; ++suffix) {
                std::uint64_t s = suffix;
                for (int i = prefix; i < pairs; ++i) {
                    set_pair(i, s % static_cast<std::uint64_t>(qn));
                    s /= static_cast<std::uint64_t>(qn);
                }
                ++acc.scanned;
                if (jacobi_violation(draft)) continue;
                ++acc.valid;
                LieAlgebra l = validate_unchecked(draft);
                GenericVerdicts v = generic_verdicts(l);
                if (v.discrepancy) ++acc.disc;
                if (!v.mne) continue;
                ++acc.mne;
                admit_mne(acc, draft, v.solvable, v.nilpotent, v.shape, v.phi_dim,
                          v.signature, 1, opt, table_sort_key(draft));
            }
        }
    };

    if (threads == 1 || partitions == 1) {
        for (std::uint64_t part = 0; part < partitions; ++part) run_partition(part);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::uint64_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                while (true) {
                    std::uint64_t part = next.fetch_add(1);
                    if (part >= partitions) break;
                    run_partition(part);
                }
            });
        for (auto& th : pool) th.join();
    }

    // fold partitions in index order; class identity via signature + the
    // isomorphism search
    SearchReport report{f, dim, 0, 0, 0, 0, {}};
    Accumulator global;
    for (auto& acc : results) {
        report.tables_scanned += acc.scanned;
        report.jacobi_valid += acc.valid;
        report.mne_tables += acc.mne;
        report.discrepancies += acc.disc;
        for (auto& cls : acc.classes)
            admit_mne(global, std::move(cls.rep), cls.solvable, cls.nilpotent, cls.shape,
                      cls.phi_dim, std::move(cls.signature), cls.count, opt,
                      std::move(cls.key));
    }
    std::sort(global.classes.begin(), global.classes.end(),
              [](const PendingClass& a, const PendingClass& b) { return a.key < b.key; });
    for (auto& cls : global.classes) {
        SearchClass out{std::move(cls.rep), cls.count, cls.solvable, cls.nilpotent,
                        cls.shape, cls.phi_dim};
        report.classes.push_back(std::move(out));
    }
    return report;
}

} // namespace liealg
