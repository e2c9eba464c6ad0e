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

#include <doctest.h>

#include <random>

#include "liealg/field.hpp"

using namespace liealg;

TEST_CASE("field construction and validation") {
    Field f2 = Field::prime(2);
    CHECK(f2.order() == 2);
    CHECK(f2.name() == "GF(2)");

    CHECK_THROWS_AS(Field::prime(4), input_error);
    CHECK_THROWS_AS(Field::prime(1), input_error);
    CHECK_THROWS_AS(Field::prime(-7), input_error);

    // the only irreducible monic quadratic over GF(2) is t^2 + t + 1
    Field f4 = Field::extension(2, 2);
    CHECK(f4.spec().modulus == std::vector<std::int64_t>{1, 1, 1});
    CHECK(f4.order() == 4);

    CHECK_THROWS_AS(Field::extension(2, 1), input_error);
    CHECK_THROWS_AS(Field::extension(2, 5), input_error);
    // t^2 + 1 = (t+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::extension(2, 2, {1, 0, 1}), input_error);
    CHECK_THROWS_AS(Field::extension(2, 2, {1, 1, 2}), input_error); // non-monic (2 ≡ 0)

    // interning: equal specifications share the object
    CHECK(Field::prime(7) == Field::prime(7));
    CHECK(Field::prime(7) != Field::prime(5));
    CHECK(Field::extension(2, 2) == Field::extension(2, 2, {1, 1, 1}));
}

TEST_CASE("default moduli are the least irreducible in high-to-low coefficient order") {
    CHECK(Field::extension(2, 3).spec().modulus == std::vector<std::int64_t>{1, 1, 0, 1}); // t^3+t+1
    CHECK(Field::extension(3, 2).spec().modulus == std::vector<std::int64_t>{1, 0, 1});    // t^2+1
    CHECK(Field::extension(2, 4).spec().modulus ==
          std::vector<std::int64_t>{1, 1, 0, 0, 1}); // t^4+t+1
}

TEST_CASE("field parsing") {
    CHECK(Field::parse("q") == Field::rationals());
    CHECK(Field::parse("rationals") == Field::rationals());
    CHECK(Field::parse("gf2") == Field::prime(2));
    CHECK(Field::parse("gf(7)") == Field::prime(7));
    CHECK(Field::parse("gf(2^2)") == Field::extension(2, 2));
    CHECK(Field::parse("gf4") == Field::extension(2, 2));
    CHECK(Field::parse("gf9") == Field::extension(3, 2));
    CHECK_THROWS_AS(Field::parse("gf6"), input_error);
    CHECK_THROWS_AS(Field::parse("banana"), input_error);
}

TEST_CASE("scalar arithmetic examples") {
    Field f7 = Field::prime(7);
    CHECK(f7.from_integer(3).inverse() == f7.from_integer(5)); // 3*5 = 15 ≡ 1 (mod 7)

    Field q = Field::rationals();
    Scalar half = q.from_rational(mpq_class(1, 2));
    Scalar third = q.from_rational(mpq_class(1, 3));
    CHECK((half + third) == q.from_rational(mpq_class(5, 6)));

    // GF(4) under t^2 + t + 1: t * t = t + 1
    Field f4 = Field::extension(2, 2);
    Scalar t = f4.from_coefficients({0, 1});
    CHECK(t * t == f4.from_coefficients({1, 1}));

    CHECK_THROWS_AS(f7.zero().inverse(), input_error);
    CHECK_THROWS_AS((void)(f7.one() + Field::prime(5).one()), input_error);
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Field q = Field::rationals();
    Scalar a = q.from_rational(mpq_class(2, -4));
    CHECK(a.rational().get_den() == 2);
    CHECK(a.rational().get_num() == -1);
    Scalar b = q.from_rational(mpq_class(6, 4)) * q.from_rational(mpq_class(2, 3));
    CHECK(b == q.one());
}

TEST_CASE("embed is the canonical inclusion") {
    Field f2 = Field::prime(2), f3 = Field::prime(3);
    Field f4 = Field::extension(2, 2), f9 = Field::extension(3, 2);
    CHECK(embed(f2.one(), f4) == f4.one());
    CHECK(embed(f3.from_integer(2), f9) == f9.from_coefficients({2, 0}));
    CHECK_THROWS_AS(embed(f2.one(), f9), input_error);

    // field homomorphism, exhaustively over GF(2)->GF(4) and GF(3)->GF(9)
    for (auto [base, ext] : {std::pair{f2, f4}, std::pair{f3, f9}}) {
        for (std::int64_t a = 0; a < base.order(); ++a)
            for (std::int64_t b = 0; b < base.order(); ++b) {
                Scalar sa = base.element(a), sb = base.element(b);
                CHECK(embed(sa + sb, ext) == embed(sa, ext) + embed(sb, ext));
                CHECK(embed(sa * sb, ext) == embed(sa, ext) * embed(sb, ext));
            }
    }
}

namespace {

Scalar random_scalar(Field f, std::mt19937& rng) {
    if (f.is_finite())
        return f.element(static_cast<std::int64_t>(rng() % static_cast<unsigned>(f.order())));
    std::int64_t num = static_cast<std::int64_t>(rng() % 41) - 20;
    std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 9);
    return f.from_rational(mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

} // namespace

TEST_CASE("field axioms hold exactly on random triples") {
    std::mt19937 rng(20260810);
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(31),
                    Field::extension(2, 2), Field::extension(3, 2), Field::extension(2, 4)}) {
        for (int trial = 0; trial < 64; ++trial) {
            Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + f.zero() == a);
            CHECK(a * f.one() == a);
            CHECK(a - a == f.zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
        }
    }
}

TEST_CASE("every nonzero element inverts, exhaustively in small fields") {
    for (Field f : {Field::prime(7), Field::prime(13), Field::extension(2, 2),
                    Field::extension(3, 2), Field::extension(2, 3)}) {
        for (std::int64_t i = 1; i < f.order(); ++i) {
            Scalar a = f.element(i);
            CHECK(a * a.inverse() == f.one());
        }
    }
}

TEST_CASE("element indexing round-trips") {
    for (Field f : {Field::prime(5), Field::extension(2, 2), Field::extension(3, 2)}) {
        CHECK(f.element(0).is_zero());
        CHECK(f.element(1).is_one());
        for (std::int64_t i = 0; i < f.order(); ++i)
            CHECK(f.index_of(f.element(i)) == i);
    }
}
