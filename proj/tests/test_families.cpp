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

#include "liealg/families.hpp"

using namespace liealg;

namespace {

Vec vec_of(Field f, std::vector<std::int64_t> entries) {
    Vec v;
    for (auto e : entries) v.push_back(f.from_integer(e));
    return v;
}

} // namespace

TEST_CASE("three-dimensional family tables") {
    Field f3 = Field::prime(3);
    LieAlgebra l1 = make_theorem2(f3, f3.one());
    CHECK(l1.table().at(0, 1) == vec_of(f3, {0, 1, 1})); // [x,y] = y + z
    CHECK(l1.table().at(0, 2) == vec_of(f3, {0, 0, 1})); // [x,z] = z
    CHECK(is_zero_vec(l1.table().at(1, 2)));             // [y,z] = 0
    CHECK(l1.labels() == std::vector<std::string>{"x", "y", "z"});

    // alpha = 0 is exactly the heisenberg table
    Field f2 = Field::prime(2);
    CHECK(make_theorem2(f2, f2.zero()).table().table == make_heisenberg(f2).table().table);

    // valid for every alpha in small fields
    for (std::int64_t p : {2, 3, 5}) {
        Field f = Field::prime(p);
        for (std::int64_t a = 0; a < p; ++a) CHECK(make_theorem2(f, f.from_integer(a)).dim() == 3);
    }
    CHECK_THROWS_AS(make_theorem2(f3, Field::prime(5).one()), input_error);
}

TEST_CASE("sl2 tables as cited") {
    Field f5 = Field::prime(5);
    LieAlgebra sl2 = make_sl2(f5);
    // basis order e, f, h
    CHECK(bracket(sl2, vec_of(f5, {0, 0, 1}), vec_of(f5, {1, 0, 0})) ==
          vec_of(f5, {2, 0, 0})); // [h,e] = 2e
    CHECK(bracket(sl2, vec_of(f5, {0, 0, 1}), vec_of(f5, {0, 1, 0})) ==
          vec_of(f5, {0, 3, 0})); // [h,f] = -2f = 3f
    CHECK(bracket(sl2, vec_of(f5, {1, 0, 0}), vec_of(f5, {0, 1, 0})) ==
          vec_of(f5, {0, 0, 1})); // [e,f] = h
    CHECK(make_sl2(Field::rationals()).dim() == 3); // validates over Q

    // characteristic-2 degeneracy is permitted and flagged by the parser
    FamilyInstance deg = parse_family("sl2", Field::prime(2));
    REQUIRE(deg.notes.size() == 1);
    CHECK(deg.notes[0].find("characteristic 2") != std::string::npos);
    CHECK(parse_family("sl2", f5).notes.empty());
}

TEST_CASE("five-dimensional example") {
    Field q = Field::rationals();
    LieAlgebra ex5 = make_example5(q);
    Subspace full = Subspace::full(q, 5);
    Subspace l2 = bracket_spaces(ex5, full, full);
    CHECK(l2 == Subspace::span(q, 5, {vec_of(q, {0, 1, 0, 0, 0}), vec_of(q, {0, 0, 1, 0, 0}),
                                      vec_of(q, {0, 0, 0, 1, 0}), vec_of(q, {0, 0, 0, 0, 1})}));
    CHECK(is_abelian_subspace(ex5, l2));
    CHECK(bracket(ex5, vec_of(q, {1, 0, 0, 0, 0}), vec_of(q, {0, 0, 0, 0, 1})) ==
          vec_of(q, {0, 0, 0, -1, 0})); // [e1,e5] = -e4
    CHECK(make_example5(Field::prime(3)).dim() == 5);
}

TEST_CASE("semidirect family") {
    Field f3 = Field::prime(3);
    Matrix zero(f3, 2, 2);
    LieAlgebra flat = make_semidirect(zero);
    CHECK(flat.dim() == 3);
    CHECK(is_abelian(flat));

    Matrix d(f3, 2, 2);
    d.at(0, 0) = f3.one();
    d.at(1, 1) = f3.one();
    d.at(1, 0) = f3.one();
    CHECK(make_semidirect(d).table().table == make_theorem2(f3, f3.one()).table().table);
}

TEST_CASE("family spec parsing") {
    Field f3 = Field::prime(3);
    CHECK(parse_family("heisenberg", f3).algebra.dim() == 3);
    CHECK(parse_family("theorem2:alpha=2", f3).algebra.table().at(0, 2) == vec_of(f3, {0, 0, 2}));
    CHECK(parse_family("abelian:n=4", f3).algebra.dim() == 4);
    CHECK(parse_family("two-dim-nonabelian", f3).algebra.dim() == 2);
    CHECK(parse_family("nonabelian2", f3).algebra.dim() == 2);
    CHECK(parse_family("example5", Field::rationals()).algebra.dim() == 5);

    LieAlgebra semi = parse_family("theorem5i:d=[[1,0],[1,1]]", f3).algebra;
    CHECK(semi.dim() == 3);
    CHECK(semi.table().at(0, 1) == vec_of(f3, {0, 1, 1}));

    LieAlgebra composite = parse_family("sl2+abelian:n=1", Field::prime(5)).algebra;
    CHECK(composite.dim() == 4);
    CHECK(center(composite).dim() == 1);

    CHECK(parse_family("heisenberg+heisenberg", Field::prime(2)).algebra.dim() == 6);

    CHECK_THROWS_AS(parse_family("unknown", f3), input_error);
    CHECK_THROWS_AS(parse_family("abelian", f3), input_error);          // missing n
    CHECK_THROWS_AS(parse_family("theorem5i:d=[[1,0]]", f3), input_error); // non-square
    CHECK_THROWS_AS(parse_family("theorem2:alpha=1/2", f3), input_error); // fraction over GF(3)
}

TEST_CASE("rational parameters parse over Q") {
    Field q = Field::rationals();
    LieAlgebra l = parse_family("theorem2:alpha=1/2", q).algebra;
    CHECK(l.table().at(0, 2)[2] == q.from_rational(mpq_class(1, 2)));
    LieAlgebra semi = parse_family("semidirect:d=[[1/3,0],[0,2]]", q).algebra;
    CHECK(semi.table().at(0, 1)[1] == q.from_rational(mpq_class(1, 3)));
}
