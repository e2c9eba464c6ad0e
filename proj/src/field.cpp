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

#include "liealg/field.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace liealg {

namespace {

constexpr std::int64_t kMaxPrime = (std::int64_t(1) << 31) - 1;
constexpr std::int64_t kMaxExtensionOrder = std::int64_t(1) << 20;

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t add_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t s = a + b;
    return s >= p ? s - p : s;
}

std::int64_t sub_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t s = a - b;
    return s < 0 ? s + p : s;
}

// p < 2^31, so the product fits in int64.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return (a * b) % p;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    if (a == 0) throw input_error("inversion of zero in GF(" + std::to_string(p) + ")");
    // extended Euclid
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return mod_pos(s0, p);
}

using Poly = std::array<std::int64_t, kMaxExtensionDegree>;

Poly zero_poly() { return {0, 0, 0, 0}; }

// Multiplication in GF(p)[t] / (modulus), deg < k. Schoolbook product
// followed by reduction against the monic modulus.
Poly poly_mul_mod(const Poly& a, const Poly& b, const FieldSpec& spec) {
    const std::int64_t p = spec.p;
    const int k = spec.k;
    std::array<std::int64_t, 2 * kMaxExtensionDegree - 1> prod{};
    for (int i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = 2 * k - 2; d >= k; --d) {
        std::int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // subtract c * t^(d-k) * modulus
        for (int j = 0; j < k; ++j)
            prod[d - k + j] = mod_pos(prod[d - k + j] - c * spec.modulus[j], p);
    }
    Poly out = zero_poly();
    for (int i = 0; i < k; ++i) out[i] = prod[i];
    return out;
}

int poly_degree(const std::vector<std::int64_t>& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d] != 0) return d;
    return -1;
}

// Remainder of f by monic g over GF(p); vectors store coefficient i at index i.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> f,
                                   const std::vector<std::int64_t>& g, std::int64_t p) {
    int dg = poly_degree(g);
    for (int d = poly_degree(f); d >= dg; d = poly_degree(f)) {
        std::int64_t c = f[d];
        for (int j = 0; j <= dg; ++j)
            f[d - dg + j] = mod_pos(f[d - dg + j] - c * g[j], p);
    }
    return f;
}

// Extended Euclid in GF(p)[t]: returns u with u*a ≡ 1 (mod modulus).
// The modulus is irreducible, so the gcd of a nonzero a with it is a
// nonzero constant.
Poly poly_inv_mod(const Poly& a, const FieldSpec& spec) {
    const std::int64_t p = spec.p;
    const int k = spec.k;
    const int cap = 2 * k + 2;
    std::vector<std::int64_t> r0(spec.modulus.begin(), spec.modulus.end());
    r0.resize(cap, 0);
    std::vector<std::int64_t> r1(a.begin(), a.begin() + k);
    r1.resize(cap, 0);
    std::vector<std::int64_t> s0(cap, 0), s1(cap, 0);
    s1[0] = 1;
    if (poly_degree(r1) < 0)
        throw input_error("inversion of zero in " + spec.name());
    while (poly_degree(r1) > 0) {
        const int d1 = poly_degree(r1);
        const std::int64_t lead_inv = inv_mod(r1[d1], p);
        while (poly_degree(r0) >= d1) {
            const int d0 = poly_degree(r0);
            const int shift = d0 - d1;
            const std::int64_t c = mul_mod(r0[d0], lead_inv, p);
            for (int j = 0; j <= d1; ++j)
                r0[j + shift] = mod_pos(r0[j + shift] - c * r1[j], p);
            for (int j = 0; j + shift < cap; ++j)
                s0[j + shift] = mod_pos(s0[j + shift] - c * s1[j], p);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    // r1 is a nonzero constant; scale its cofactor by the inverse
    const std::int64_t c = inv_mod(r1[0], p);
    for (auto& v : s1) v = mul_mod(v, c, p);
    s1 = poly_rem(std::move(s1),
                  std::vector<std::int64_t>(spec.modulus.begin(), spec.modulus.end()), p);
    Poly out = zero_poly();
    for (int i = 0; i < k; ++i) out[i] = s1[i];
    return out;
}

// Irreducibility over GF(p) for degree <= 4: no roots, and for degree 4 no
// monic irreducible quadratic divisor. Exhaustive, fine for the supported
// field sizes.
bool is_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
    int deg = poly_degree(f);
    if (deg < 1) return false;
    if (deg == 1) return true;
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t v = 0;
        for (int j = deg; j >= 0; --j) v = mod_pos(v * x + f[j], p);
        if (v == 0) return false;
    }
    if (deg <= 3) return true;
    // degree 4: trial division by monic quadratics t^2 + b t + c
    for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c) {
            std::vector<std::int64_t> g = {c, b, 1};
            if (poly_degree(poly_rem(f, g, p)) < 0) return false;
        }
    return true;
}

// Lexicographically least monic irreducible of degree k, comparing
// coefficients from degree k-1 down to the constant term.
std::vector<std::int64_t> default_modulus(std::int64_t p, int k) {
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (std::int64_t m = 0; m < total; ++m) {
        std::vector<std::int64_t> f(k + 1, 0);
        f[k] = 1;
        std::int64_t rem = m;
        for (int d = k - 1; d >= 0; --d) {
            std::int64_t scale = 1;
            for (int i = 0; i < d; ++i) scale *= p;
            f[d] = rem / scale;
            rem %= scale;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

} // namespace

bool is_prime(std::int64_t p) {
    if (p < 2 || p > kMaxPrime) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t FieldSpec::order() const {
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    return q;
}

std::string FieldSpec::name() const {
    switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "GF(" + std::to_string(p) + ")";
    case FieldKind::ExtensionField:
        return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    }
    return "?";
}

std::string FieldSpec::key() const {
    std::ostringstream os;
    switch (kind) {
    case FieldKind::Rationals: os << "Q"; break;
    case FieldKind::PrimeField: os << "P" << p; break;
    case FieldKind::ExtensionField:
        os << "E" << p << "," << k << ":";
        for (auto c : modulus) os << c << ",";
        break;
    }
    return os.str();
}

Field Field::intern(FieldSpec spec) {
    static std::mutex mu;
    static std::unordered_map<std::string, std::unique_ptr<FieldSpec>>* registry =
        new std::unordered_map<std::string, std::unique_ptr<FieldSpec>>();
    std::lock_guard<std::mutex> lock(mu);
    std::string key = spec.key();
    auto it = registry->find(key);
    if (it == registry->end())
        it = registry->emplace(key, std::make_unique<FieldSpec>(std::move(spec))).first;
    return Field(it->second.get());
}

Field Field::rationals() {
    FieldSpec s;
    s.kind = FieldKind::Rationals;
    return intern(std::move(s));
}

Field Field::prime(std::int64_t p) {
    if (!is_prime(p))
        throw input_error("not a prime (or out of range): " + std::to_string(p));
    FieldSpec s;
    s.kind = FieldKind::PrimeField;
    s.p = p;
    return intern(std::move(s));
}

Field Field::extension(std::int64_t p, int k) {
    if (!is_prime(p))
        throw input_error("not a prime (or out of range): " + std::to_string(p));
    if (k < 2 || k > kMaxExtensionDegree)
        throw input_error("extension degree must be in [2, " +
                          std::to_string(kMaxExtensionDegree) + "], got " + std::to_string(k));
    return extension(p, k, default_modulus(p, k));
}

Field Field::extension(std::int64_t p, int k, std::vector<std::int64_t> modulus) {
    if (!is_prime(p))
        throw input_error("not a prime (or out of range): " + std::to_string(p));
    if (k < 2 || k > kMaxExtensionDegree)
        throw input_error("extension degree must be in [2, " +
                          std::to_string(kMaxExtensionDegree) + "], got " + std::to_string(k));
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxExtensionOrder)
            throw input_error("extension field too large: p^k exceeds 2^20");
    }
    if (static_cast<int>(modulus.size()) != k + 1)
        throw input_error("modulus must have degree exactly k");
    for (auto& c : modulus) c = mod_pos(c, p);
    if (modulus[k] != 1) throw input_error("modulus must be monic");
    if (!is_irreducible(modulus, p)) {
        std::ostringstream os;
        os << "modulus is reducible over GF(" << p << ")";
        throw input_error(os.str());
    }
    FieldSpec s;
    s.kind = FieldKind::ExtensionField;
    s.p = p;
    s.k = k;
    s.modulus = std::move(modulus);
    return intern(std::move(s));
}

Field Field::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += static_cast<char>(tolower(c));
    if (t == "q" || t == "qq" || t == "rationals") return rationals();
    if (t.rfind("gf", 0) != 0) throw input_error("cannot parse field: " + text);
    std::string body = t.substr(2);
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::int64_t p = 0;
    int k = 1;
    auto caret = body.find('^');
    try {
        if (caret != std::string::npos) {
            p = std::stoll(body.substr(0, caret));
            k = std::stoi(body.substr(caret + 1));
        } else {
            std::int64_t q = std::stoll(body);
            // factor prime powers so "gf4" means GF(2^2)
            p = q;
            for (std::int64_t d = 2; d * d <= q; ++d) {
                if (q % d == 0) {
                    p = d;
                    std::int64_t r = q;
                    k = 0;
                    while (r % d == 0) { r /= d; ++k; }
                    if (r != 1) throw input_error("field order is not a prime power: " + text);
                    break;
                }
            }
        }
    } catch (const std::logic_error&) {
        throw input_error("cannot parse field: " + text);
    }
    if (k == 1) return prime(p);
    return extension(p, k);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Field f, std::int64_t residue) : field_(f), rep_(residue) {
    if (f.kind() != FieldKind::PrimeField)
        throw std::logic_error("residue constructor requires a prime field");
}

Scalar::Scalar(Field f, mpq_class q) : field_(f), rep_(std::move(q)) {
    if (f.kind() != FieldKind::Rationals)
        throw std::logic_error("rational constructor requires Q");
    std::get<mpq_class>(rep_).canonicalize();
}

Scalar::Scalar(Field f, std::array<std::int64_t, kMaxExtensionDegree> coeffs)
    : field_(f), rep_(coeffs) {
    if (f.kind() != FieldKind::ExtensionField)
        throw std::logic_error("coefficient constructor requires an extension field");
}

Scalar Field::zero() const {
    switch (kind()) {
    case FieldKind::Rationals: return Scalar(*this, mpq_class(0));
    case FieldKind::PrimeField: return Scalar(*this, std::int64_t(0));
    case FieldKind::ExtensionField: return Scalar(*this, zero_poly());
    }
    throw std::logic_error("bad field kind");
}

Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(std::int64_t n) const {
    switch (kind()) {
    case FieldKind::Rationals: return Scalar(*this, mpq_class(static_cast<long>(n)));
    case FieldKind::PrimeField: return Scalar(*this, mod_pos(n, spec().p));
    case FieldKind::ExtensionField: {
        Poly c = zero_poly();
        c[0] = mod_pos(n, spec().p);
        return Scalar(*this, c);
    }
    }
    throw std::logic_error("bad field kind");
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (kind() != FieldKind::Rationals)
        throw input_error("rational value supplied for " + name());
    return Scalar(*this, q);
}

Scalar Field::from_coefficients(const std::vector<std::int64_t>& c) const {
    if (kind() != FieldKind::ExtensionField)
        throw input_error("coefficient vector supplied for " + name());
    if (static_cast<int>(c.size()) != spec().k)
        throw input_error("coefficient vector must have length k");
    Poly out = zero_poly();
    for (int i = 0; i < spec().k; ++i) out[i] = mod_pos(c[i], spec().p);
    return Scalar(*this, out);
}

Scalar Field::element(std::int64_t index) const {
    if (!is_finite()) throw input_error("element enumeration requires a finite field");
    switch (kind()) {
    case FieldKind::PrimeField: return Scalar(*this, index);
    case FieldKind::ExtensionField: {
        Poly c = zero_poly();
        std::int64_t rem = index;
        for (int i = 0; i < spec().k; ++i) {
            c[i] = rem % spec().p;
            rem /= spec().p;
        }
        return Scalar(*this, c);
    }
    default: throw std::logic_error("bad field kind");
    }
}

std::int64_t Field::index_of(const Scalar& s) const {
    switch (kind()) {
    case FieldKind::PrimeField: return s.residue();
    case FieldKind::ExtensionField: {
        std::int64_t idx = 0, scale = 1;
        for (int i = 0; i < spec().k; ++i) {
            idx += s.coefficients()[i] * scale;
            scale *= spec().p;
        }
        return idx;
    }
    default: throw input_error("element indexing requires a finite field");
    }
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw input_error("cross-field operation: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
    case FieldKind::Rationals: return sgn(rational()) == 0;
    case FieldKind::PrimeField: return residue() == 0;
    case FieldKind::ExtensionField: {
        for (auto c : coefficients())
            if (c != 0) return false;
        return true;
    }
    }
    return false;
}

bool Scalar::is_one() const { return *this == field_.one(); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, rational() + o.rational());
    case FieldKind::PrimeField:
        return Scalar(field_, add_mod(residue(), o.residue(), field_.spec().p));
    case FieldKind::ExtensionField: {
        Poly c = coefficients();
        for (int i = 0; i < field_.spec().k; ++i)
            c[i] = add_mod(c[i], o.coefficients()[i], field_.spec().p);
        return Scalar(field_, c);
    }
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, rational() - o.rational());
    case FieldKind::PrimeField:
        return Scalar(field_, sub_mod(residue(), o.residue(), field_.spec().p));
    case FieldKind::ExtensionField: {
        Poly c = coefficients();
        for (int i = 0; i < field_.spec().k; ++i)
            c[i] = sub_mod(c[i], o.coefficients()[i], field_.spec().p);
        return Scalar(field_, c);
    }
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, rational() * o.rational());
    case FieldKind::PrimeField:
        return Scalar(field_, mul_mod(residue(), o.residue(), field_.spec().p));
    case FieldKind::ExtensionField:
        return Scalar(field_, poly_mul_mod(coefficients(), o.coefficients(), field_.spec()));
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator-() const {
    switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, -rational());
    case FieldKind::PrimeField:
        return Scalar(field_, residue() == 0 ? 0 : field_.spec().p - residue());
    case FieldKind::ExtensionField: {
        Poly c = coefficients();
        for (int i = 0; i < field_.spec().k; ++i)
            c[i] = c[i] == 0 ? 0 : field_.spec().p - c[i];
        return Scalar(field_, c);
    }
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::inverse() const {
    switch (field_.kind()) {
    case FieldKind::Rationals:
        if (is_zero()) throw input_error("inversion of zero in Q");
        return Scalar(field_, 1 / rational());
    case FieldKind::PrimeField:
        return Scalar(field_, inv_mod(residue(), field_.spec().p));
    case FieldKind::ExtensionField:
        return Scalar(field_, poly_inv_mod(coefficients(), field_.spec()));
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return rep_ == o.rep_;
}

bool Scalar::is_integer() const {
    return field_.kind() == FieldKind::Rationals && rational().get_den() == 1;
}

std::string Scalar::str() const {
    switch (field_.kind()) {
    case FieldKind::Rationals: return rational().get_str();
    case FieldKind::PrimeField: return std::to_string(residue());
    case FieldKind::ExtensionField: {
        // polynomial form in t, low degree first
        std::string out;
        const auto& c = coefficients();
        for (int i = 0; i < field_.spec().k; ++i) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) out += std::to_string(c[i]);
            else {
                if (c[i] != 1) out += std::to_string(c[i]) + "*";
                out += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }
    }
    return "?";
}

void Scalar::append_key(std::string& out) const {
    switch (field_.kind()) {
    case FieldKind::Rationals:
        out += rational().get_str();
        break;
    case FieldKind::PrimeField:
        out += std::to_string(residue());
        break;
    case FieldKind::ExtensionField:
        for (int i = 0; i < field_.spec().k; ++i) {
            out += std::to_string(coefficients()[i]);
            out += '.';
        }
        break;
    }
    out += ';';
}

Scalar embed(const Scalar& s, Field target) {
    if (s.field().kind() != FieldKind::PrimeField ||
        target.kind() != FieldKind::ExtensionField)
        throw input_error("embed maps GF(p) into GF(p^k)");
    if (s.field().characteristic() != target.characteristic())
        throw input_error("embed: characteristic mismatch (" + s.field().name() +
                          " into " + target.name() + ")");
    std::array<std::int64_t, kMaxExtensionDegree> c{0, 0, 0, 0};
    c[0] = s.residue();
    return Scalar(target, c);
}

} // namespace liealg
