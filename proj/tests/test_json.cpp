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
#include "liealg/json_io.hpp"

using namespace liealg;

TEST_CASE("field round trips") {
    for (Field f : {Field::rationals(), Field::prime(7), Field::extension(2, 2),
                    Field::extension(3, 2)}) {
        CHECK(field_from_json(field_to_json(f)) == f);
    }
    CHECK_THROWS_AS(field_from_json(json::parse("{\"kind\":\"real\"}")), input_error);
}

TEST_CASE("scalar encodings per field kind") {
    Field q = Field::rationals();
    CHECK(scalar_to_json(q.from_rational(mpq_class(-2, 3))) == json("-2/3"));
    CHECK(scalar_to_json(q.from_integer(3)) == json("3/1"));
    CHECK(scalar_from_json(json("3"), q) == q.from_integer(3));
    CHECK(scalar_from_json(json("6/4"), q) == q.from_rational(mpq_class(3, 2)));

    Field f7 = Field::prime(7);
    CHECK(scalar_to_json(f7.from_integer(5)) == json(5));
    CHECK(scalar_from_json(json(5), f7) == f7.from_integer(5));
    CHECK_THROWS_AS(scalar_from_json(json("5"), f7), input_error);

    Field f4 = Field::extension(2, 2);
    CHECK(scalar_to_json(f4.from_coefficients({1, 1})) == json::parse("[1,1]"));
    CHECK(scalar_from_json(json::parse("[0,1]"), f4) == f4.from_coefficients({0, 1}));
}

TEST_CASE("algebra JSON round trip is bit-exact") {
    for (Field f : {Field::rationals(), Field::prime(3), Field::extension(2, 2)}) {
        LieAlgebra l = make_heisenberg(f);
        json j = algebra_to_json(l);
        LieAlgebra back = algebra_from_json(j);
        CHECK(algebra_to_json(back).dump() == j.dump());
        CHECK(back.table().table == l.table().table);
        CHECK(back.labels() == l.labels());
    }

    // omitted pairs are zero brackets
    json sparse = json::parse(R"({"field":{"kind":"prime","p":5},"dim":3,
        "brackets":[{"i":0,"j":1,"value":[0,0,1]}]})");
    LieAlgebra l = algebra_from_json(sparse);
    CHECK(is_zero_vec(l.table().at(0, 2)));
    CHECK(is_zero_vec(l.table().at(1, 2)));
}

TEST_CASE("algebra JSON validation errors") {
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim":2})")), input_error);
    // bad indices
    CHECK_THROWS_AS(algebra_from_json(json::parse(
                        R"({"field":{"kind":"prime","p":3},"dim":2,
                            "brackets":[{"i":1,"j":1,"value":[0,0]}]})")),
                    input_error);
    // label count mismatch
    CHECK_THROWS_AS(algebra_from_json(json::parse(
                        R"({"field":{"kind":"prime","p":3},"dim":2,"labels":["x"],
                            "brackets":[]})")),
                    input_error);
    // Jacobi violation surfaces as input_error naming the triple
    json bad = json::parse(R"({"field":{"kind":"rationals"},"dim":3,
        "brackets":[{"i":0,"j":1,"value":["0","0","1"]},
                    {"i":1,"j":2,"value":["1","0","0"]},
                    {"i":0,"j":2,"value":["1","0","0"]}]})");
    CHECK_THROWS_WITH_AS(algebra_from_json(bad),
                         doctest::Contains("Jacobi identity fails"), input_error);
}

TEST_CASE("subspace JSON shape") {
    Field f2 = Field::prime(2);
    Subspace u = Subspace::span(
        f2, 3, {Vec{f2.one(), f2.one(), f2.zero()}, Vec{f2.zero(), f2.zero(), f2.one()}});
    json j = subspace_to_json(u);
    CHECK(j["ambient"] == 3);
    CHECK(j["dim"] == 2);
    CHECK(j["basis"].size() == 2);
}

TEST_CASE("reports carry the schema tag and stable ordering") {
    AnalysisReport rep = analyze(make_heisenberg(Field::prime(2)));
    json j = analysis_to_json(rep);
    CHECK(j["schema"] == "lie-frattini/1");
    CHECK(j["kind"] == "analysis");
    CHECK(j["predicates"]["minimal_non_elementary"]["value"] == true);
    CHECK(j["shape"] == "heisenberg");

    SearchReport sr = exhaustive_search(3, Field::prime(2));
    json js = search_to_json(sr);
    CHECK(js["schema"] == "lie-frattini/1");
    CHECK(js["tables_scanned"] == 512);
    CHECK(js["discrepancies"] == 0);

    // byte-identical rendering across repeated computations
    SearchReport sr2 = exhaustive_search(3, Field::prime(2));
    CHECK(search_to_json(sr2).dump() == js.dump());
    AnalysisReport rep2 = analyze(make_heisenberg(Field::prime(2)));
    CHECK(analysis_to_json(rep2).dump() == j.dump());
}

TEST_CASE("lattice export") {
    SubalgebraLattice lat = build_lattice(make_heisenberg(Field::prime(2)));
    json j = lattice_to_json(lat);
    CHECK(j["node_count"] == 12);
    CHECK(j["nodes"].size() == 12);
    CHECK(j["cover_edges"].size() == 19);
    int ideal_count = 0;
    for (const auto& node : j["nodes"])
        if (node["ideal"].get<bool>()) ++ideal_count;
    // ideals of heisenberg/GF(2): 0, span(z), the three planes containing z, L
    CHECK(ideal_count == 6);
}
