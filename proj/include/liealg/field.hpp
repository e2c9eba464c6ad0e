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
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "liealg/errors.hpp"

namespace liealg {

class Scalar;

enum class FieldKind { Rationals, PrimeField, ExtensionField };

/// Maximum supported extension degree. Enough for the scalar-extension
/// tests (GF(p) -> GF(p^k)) while keeping the default-modulus search and
/// irreducibility checks exhaustive.
inline constexpr int kMaxExtensionDegree = 4;

/// An exact ground field: Q, GF(p) or GF(p^k). Immutable; instances are
/// interned, so identical specifications share one object and field
/// equality is pointer equality.
class FieldSpec {
public:
    FieldKind kind;
    std::int64_t p = 0;               // characteristic (finite kinds)
    int k = 1;                        // extension degree
    std::vector<std::int64_t> modulus; // monic, degree k, ExtensionField only

    bool is_finite() const { return kind != FieldKind::Rationals; }
    /// Field order p^k; only valid for finite kinds.
    std::int64_t order() const;
    std::string name() const;  // "Q", "GF(7)", "GF(3^2)"
    std::string key() const;   // canonical interning/serialization key

private:
    FieldSpec() = default;
    friend class Field;
};

/// Cheap-to-copy handle to an interned FieldSpec.
class Field {
public:
    static Field rationals();
    static Field prime(std::int64_t p);
    static Field extension(std::int64_t p, int k);
    static Field extension(std::int64_t p, int k, std::vector<std::int64_t> modulus);

    /// Parses "q", "rationals", "gf7", "gf(7)", "gf(2^3)", "gf8", "gf(9)".
    /// Prime-power shorthand resolves to the extension field with the
    /// default modulus.
    static Field parse(const std::string& text);

    const FieldSpec& spec() const { return *spec_; }
    FieldKind kind() const { return spec_->kind; }
    bool is_finite() const { return spec_->is_finite(); }
    std::int64_t characteristic() const { return spec_->p; }
    std::int64_t order() const { return spec_->order(); }
    std::string name() const { return spec_->name(); }

    bool operator==(const Field& o) const { return spec_ == o.spec_; }
    bool operator!=(const Field& o) const { return spec_ != o.spec_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(std::int64_t n) const;
    Scalar from_rational(const mpq_class& q) const;           // Rationals only
    Scalar from_coefficients(const std::vector<std::int64_t>& c) const; // ExtensionField only

    /// The i-th field element, 0 <= i < order(). element(0) is zero,
    /// element(1) is one; extension elements use base-p digits with the
    /// constant coefficient least significant. Finite kinds only.
    Scalar element(std::int64_t index) const;
    std::int64_t index_of(const Scalar& s) const;

private:
    explicit Field(const FieldSpec* s) : spec_(s) {}
    static Field intern(FieldSpec spec);

    const FieldSpec* spec_;
    friend class Scalar;
};

/// One exact field element, tagged with its owning field. All arithmetic
/// is exact; operands must belong to the same field.
class Scalar {
public:
    Scalar(Field f, std::int64_t residue);             // prime-field fast path
    Scalar(Field f, mpq_class q);                      // rationals
    Scalar(Field f, std::array<std::int64_t, kMaxExtensionDegree> coeffs); // extension

    Field field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Prime-field residue in [0, p).
    std::int64_t residue() const { return std::get<std::int64_t>(rep_); }
    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
    const std::array<std::int64_t, kMaxExtensionDegree>& coefficients() const {
        return std::get<std::array<std::int64_t, kMaxExtensionDegree>>(rep_);
    }

    /// True for rationals with denominator 1 (used by mod-p reduction).
    bool is_integer() const;

    std::string str() const;
    /// Appends a canonical byte encoding (used for hashing and
    /// deterministic ordering).
    void append_key(std::string& out) const;

private:
    Field field_;
    std::variant<std::int64_t, mpq_class, std::array<std::int64_t, kMaxExtensionDegree>> rep_;

    void check_same_field(const Scalar& o) const;
};

/// Canonical inclusion GF(p) -> GF(p^k) (constant polynomials).
Scalar embed(const Scalar& s, Field target);

/// Trial-division primality check, p < 2^31.
bool is_prime(std::int64_t p);

} // namespace liealg
