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

#include <array>
#include <cstdint>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg::smallfield {

/// Packed engine for tiny finite vector spaces (q^n <= 64): vectors are
/// mixed-radix element indices, subspaces are 64-bit membership masks, and
/// all field/vector arithmetic is table lookups. The exhaustive table
/// search runs on this representation; tests pin it against the generic
/// Subspace machinery, which stays the source of truth.
inline constexpr int kMaxElements = 64;
inline constexpr int kMaxDim = 6;

bool applicable(Field f, int n);

struct Context {
    explicit Context(Field f) : field(f) {}

    Field field;
    int n = 0;
    std::int64_t q = 0;
    int qn = 0;

    // field tables on element indices 0..q-1
    std::vector<std::uint8_t> fmul, fsub;

    // vector tables on element indices 0..qn-1
    std::vector<std::uint16_t> vadd;        // qn * qn
    std::vector<std::uint16_t> vscale;      // q * qn
    std::array<std::uint16_t, kMaxDim> unit{};
    std::vector<std::array<std::uint8_t, kMaxDim>> digit; // coordinates of each element

    // every subspace in canonical enumeration order
    int space_count = 0;
    std::vector<std::uint64_t> mask;
    std::vector<std::uint8_t> sdim;
    std::vector<std::array<std::uint16_t, kMaxDim>> sbasis;

    int dim_of_mask(std::uint64_t m) const;

    /// Memoized per (field, n); the returned reference lives forever.
    static const Context& get(Field f, int n);
};

/// A structure table as element indices, pair order matching
/// StructureTableDraft::pair_index.
using PackedTable = std::vector<std::uint16_t>;

PackedTable pack_table(const Context& ctx, const StructureTableDraft& d);
StructureTableDraft unpack_table(const Context& ctx, const PackedTable& t);

std::uint16_t pack_vec(const Context& ctx, const Vec& v);
std::uint64_t pack_subspace(const Context& ctx, const Subspace& s);

bool jacobi_valid(const Context& ctx, const PackedTable& t);

struct Info {
    bool valid = false;
    bool abelian = false, solvable = false, nilpotent = false;
    bool elementary = false, mne = false;
    int shape = 0;     // 0 none, 1 split-abelian, 2 heisenberg; -1 not evaluated
    int phi_dim = 0;   // dim of the Frattini ideal of the whole algebra
    bool discrepancy = false; // solvable and (mne xor shape-matched)
    std::vector<std::int32_t> signature; // cheap isomorphism invariants
};

/// Full verdict set for one Jacobi-valid table (Info.valid=false otherwise).
Info analyze_table(const Context& ctx, const PackedTable& t);

} // namespace liealg::smallfield
