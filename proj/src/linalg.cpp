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

#include "liealg/linalg.hpp"

#include <algorithm>

namespace liealg {

Vec zero_vec(Field f, int n) { return Vec(static_cast<size_t>(n), f.zero()); }

Vec unit_vec(Field f, int n, int i) {
    Vec v = zero_vec(f, n);
    v[static_cast<size_t>(i)] = f.one();
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vector dimension mismatch");
    Vec out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vector dimension mismatch");
    Vec out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

Vec scale_vec(const Scalar& c, const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(c * x);
    return out;
}

Vec neg_vec(const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(-x);
    return out;
}

Matrix::Matrix(Field f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, f.zero()) {}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(Field f, int cols, const std::vector<Vec>& rows) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw input_error("row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row_vec(int r) const {
    auto s = row(r);
    return Vec(s.begin(), s.end());
}

Vec Matrix::col_vec(int c) const {
    Vec out;
    out.reserve(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

void Matrix::set_row(int r, const Vec& v) {
    if (static_cast<int>(v.size()) != cols_) throw input_error("row length mismatch");
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.cols() != b.rows())
        throw input_error("matrix product shape mismatch");
    Matrix out(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Vec mul(const Matrix& a, const Vec& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw input_error("matrix-vector shape mismatch");
    Vec out = zero_vec(a.field(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) out[static_cast<size_t>(i)] += a.at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

namespace {

// Rescales a rational row to a primitive integer vector; keeps entries
// small during fraction-free elimination. Row scaling preserves the row
// space.
void make_row_primitive(Matrix& m, int r) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (int c = 0; c < m.cols(); ++c) {
        const mpq_class& q = m.at(r, c).rational();
        if (sgn(q) == 0) continue;
        mpz_class den = q.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        den_lcm = den_lcm / g * den;
    }
    if (den_lcm == 0) return;
    for (int c = 0; c < m.cols(); ++c) {
        const mpq_class& q = m.at(r, c).rational();
        if (sgn(q) == 0) continue;
        mpz_class num = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    if (num_gcd == 0) return;
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    Scalar f(m.field(), factor);
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) * f;
}

} // namespace

RrefResult rref(const Matrix& input) {
    Matrix m = input;
    const bool rational = m.field().kind() == FieldKind::Rationals;
    if (rational)
        for (int r = 0; r < m.rows(); ++r) make_row_primitive(m, r);

    std::vector<int> pivots;
    int pr = 0; // next pivot row
    for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
        int sel = -1;
        for (int r = pr; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(sel, j));
        if (rational) {
            // fraction-free: row_r <- pivot*row_r - coeff*row_pr, then re-primitivize
            for (int r = 0; r < m.rows(); ++r) {
                if (r == pr || m.at(r, c).is_zero()) continue;
                Scalar piv = m.at(pr, c), coeff = m.at(r, c);
                for (int j = 0; j < m.cols(); ++j)
                    m.at(r, j) = piv * m.at(r, j) - coeff * m.at(pr, j);
                make_row_primitive(m, r);
            }
        } else {
            Scalar inv = m.at(pr, c).inverse();
            for (int j = c; j < m.cols(); ++j) m.at(pr, j) = inv * m.at(pr, j);
            for (int r = 0; r < m.rows(); ++r) {
                if (r == pr || m.at(r, c).is_zero()) continue;
                Scalar coeff = m.at(r, c);
                for (int j = c; j < m.cols(); ++j)
                    m.at(r, j) = m.at(r, j) - coeff * m.at(pr, j);
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    if (rational) {
        // normalize pivots to 1
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
            Scalar inv = m.at(r, pivots[static_cast<size_t>(r)]).inverse();
            for (int j = 0; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        }
    }
    return RrefResult{std::move(m), static_cast<int>(pivots.size()), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field f, int ambient, Matrix basis, std::vector<int> pivots)
    : field_(f), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {
    for (int c : pivots_) pivot_mask_ |= (std::uint32_t(1) << c);
}

Subspace Subspace::zero(Field f, int ambient) {
    return Subspace(f, ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(Field f, int ambient) {
    std::vector<int> piv(static_cast<size_t>(ambient));
    for (int i = 0; i < ambient; ++i) piv[static_cast<size_t>(i)] = i;
    return Subspace(f, ambient, Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::from_canonical(Field f, int ambient, Matrix basis, std::vector<int> pivots) {
    return Subspace(f, ambient, std::move(basis), std::move(pivots));
}

Subspace Subspace::span(Field f, int ambient, const std::vector<Vec>& generators) {
    if (ambient > 30) throw input_error("ambient dimension too large");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient) throw input_error("generator dimension mismatch");
        if (!g.empty() && g.front().field() != f) throw input_error("generator field mismatch");
    }
    if (generators.empty()) return zero(f, ambient);
    RrefResult r = rref(Matrix::from_rows(f, ambient, generators));
    Matrix basis(f, r.rank, ambient);
    for (int i = 0; i < r.rank; ++i)
        for (int c = 0; c < ambient; ++c) basis.at(i, c) = r.mat.at(i, c);
    return Subspace(f, ambient, std::move(basis), std::move(r.pivots));
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw input_error("vector dimension mismatch");
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
        const Scalar& c = r[static_cast<size_t>(pivots_[static_cast<size_t>(i)])];
        if (c.is_zero()) continue;
        Scalar coeff = c; // copy: r is mutated below
        for (int j = 0; j < ambient_; ++j)
            r[static_cast<size_t>(j)] = r[static_cast<size_t>(j)] - coeff * basis_.at(i, j);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_ || other.field_ != field_)
        throw input_error("subspace ambient mismatch");
    if (other.dim() > dim()) return false;
    // pivot columns of a subset are pivot columns of the superset
    if ((other.pivot_mask_ & pivot_mask_) != other.pivot_mask_) return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

Vec Subspace::coordinates(const Vec& v) const {
    Vec coords;
    coords.reserve(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i)
        coords.push_back(v[static_cast<size_t>(pivots_[static_cast<size_t>(i)])]);
    return coords;
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && pivots_ == o.pivots_ &&
           basis_ == o.basis_;
}

std::string Subspace::key() const {
    std::string out = std::to_string(ambient_) + "|" + std::to_string(dim()) + "|";
    for (int p : pivots_) out += std::to_string(p) + ",";
    out += "|";
    for (int i = 0; i < dim(); ++i)
        for (int c = 0; c < ambient_; ++c) basis_.at(i, c).append_key(out);
    return out;
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const int n = m.cols();
    Field f = m.field();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : r.pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        Vec v = zero_vec(f, n);
        v[static_cast<size_t>(c)] = f.one();
        for (int i = 0; i < r.rank; ++i)
            v[static_cast<size_t>(r.pivots[static_cast<size_t>(i)])] = -r.mat.at(i, c);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, n, basis);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.field() != v.field())
        throw input_error("subspace ambient mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis_row(i));
    for (int i = 0; i < v.dim(); ++i) rows.push_back(v.basis_row(i));
    return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.field() != v.field())
        throw input_error("subspace ambient mismatch");
    const int n = u.ambient();
    Field f = u.field();
    const int a = u.dim(), b = v.dim();
    if (a == 0 || b == 0) return Subspace::zero(f, n);
    // x in U∩V iff x = λU = μV; solve for (λ,μ) in the kernel of [Uᵀ | -Vᵀ]
    Matrix m(f, n, a + b);
    for (int i = 0; i < a; ++i)
        for (int c = 0; c < n; ++c) m.at(c, i) = u.basis().at(i, c);
    for (int i = 0; i < b; ++i)
        for (int c = 0; c < n; ++c) m.at(c, a + i) = -v.basis().at(i, c);
    Subspace k = kernel(m);
    std::vector<Vec> rows;
    for (int i = 0; i < k.dim(); ++i) {
        Vec w = k.basis_row(i);
        Vec x = zero_vec(f, n);
        for (int j = 0; j < a; ++j)
            if (!w[static_cast<size_t>(j)].is_zero())
                x = add_vec(x, scale_vec(w[static_cast<size_t>(j)], u.basis_row(j)));
        rows.push_back(std::move(x));
    }
    return Subspace::span(f, n, rows);
}

Subspace invariant_core(const Subspace& w, std::span<const Matrix> actions) {
    Subspace k = w;
    const int n = w.ambient();
    Field f = w.field();
    for (const auto& a : actions)
        if (a.rows() != n || a.cols() != n) throw input_error("action matrix shape mismatch");
    while (k.dim() > 0) {
        const int d = k.dim();
        // x = Σ c_i k_i stays in K under every action iff the residuals of
        // the transported basis vectors cancel: Σ c_i reduce(A k_i) = 0.
        Matrix constraints(f, static_cast<int>(actions.size()) * n, d);
        for (size_t ai = 0; ai < actions.size(); ++ai)
            for (int i = 0; i < d; ++i) {
                Vec res = k.reduce(mul(actions[ai], k.basis_row(i)));
                for (int r = 0; r < n; ++r)
                    constraints.at(static_cast<int>(ai) * n + r, i) = res[static_cast<size_t>(r)];
            }
        Subspace c = kernel(constraints);
        if (c.dim() == d) break; // fixed point
        std::vector<Vec> rows;
        for (int i = 0; i < c.dim(); ++i) {
            Vec coeff = c.basis_row(i);
            Vec x = zero_vec(f, n);
            for (int j = 0; j < d; ++j)
                if (!coeff[static_cast<size_t>(j)].is_zero())
                    x = add_vec(x, scale_vec(coeff[static_cast<size_t>(j)], k.basis_row(j)));
            rows.push_back(std::move(x));
        }
        k = Subspace::span(f, n, rows);
    }
    return k;
}

} // namespace liealg
