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
#include <span>
#include <string>
#include <vector>

#include "liealg/field.hpp"

namespace liealg {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, int n);
Vec unit_vec(Field f, int n, int i);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);
Vec neg_vec(const Vec& v);

/// Dense matrix over one field, row-major. Dimensions here stay tiny
/// (ambient <= ~8), so no sparsity and no pivoting heuristics.
class Matrix {
public:
    Matrix(Field f, int rows, int cols);               // zero-filled
    static Matrix identity(Field f, int n);
    static Matrix from_rows(Field f, int cols, const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    std::span<const Scalar> row(int r) const {
        return {e_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }
    Vec row_vec(int r) const;
    Vec col_vec(int c) const;
    void set_row(int r, const Vec& v);

    bool operator==(const Matrix& o) const;

private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Vec mul(const Matrix& a, const Vec& v);

struct RrefResult {
    Matrix mat;
    int rank;
    std::vector<int> pivots;
};

/// Fully reduced row-echelon form: pivots are 1, pivot columns otherwise
/// zero, pivot columns strictly increasing. Canonical for the row space.
/// Over Q, elimination runs fraction-free on denominator-cleared rows and
/// normalizes pivots at the end.
RrefResult rref(const Matrix& m);

class Subspace;

/// Solution space of m x = 0.
Subspace kernel(const Matrix& m);

/// A subspace of F^n held in canonical RREF form; two Subspaces are equal
/// as sets iff their basis matrices are entrywise identical.
class Subspace {
public:
    static Subspace zero(Field f, int ambient);
    static Subspace full(Field f, int ambient);
    static Subspace span(Field f, int ambient, const std::vector<Vec>& generators);
    /// Trusted constructor for a basis already in canonical RREF with the
    /// given pivot columns (the subspace enumerator emits these directly).
    static Subspace from_canonical(Field f, int ambient, Matrix basis, std::vector<int> pivots);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    Field field() const { return field_; }
    const Matrix& basis() const { return basis_; }
    Vec basis_row(int i) const { return basis_.row_vec(i); }
    const std::vector<int>& pivots() const { return pivots_; }
    std::uint32_t pivot_mask() const { return pivot_mask_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Residual of v after elimination against the basis; zero iff v is a
    /// member. Linear in v for a fixed subspace.
    Vec reduce(const Vec& v) const;
    /// Coordinates of a member in the canonical basis (entries at the
    /// pivot columns).
    Vec coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Canonical byte key; equal iff the subspaces are equal.
    std::string key() const;

private:
    Subspace(Field f, int ambient, Matrix basis, std::vector<int> pivots);

    Field field_;
    int ambient_;
    Matrix basis_;
    std::vector<int> pivots_;
    std::uint32_t pivot_mask_ = 0;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

inline bool member(const Vec& v, const Subspace& u) { return u.contains(v); }
inline bool subspace_eq(const Subspace& u, const Subspace& v) { return u == v; }
inline bool is_subspace_of(const Subspace& u, const Subspace& v) { return v.contains(u); }

/// Largest subspace K of W with A*K ⊆ K for every action matrix A,
/// computed by shrinking to a fixed point.
Subspace invariant_core(const Subspace& w, std::span<const Matrix> actions);

} // namespace liealg
