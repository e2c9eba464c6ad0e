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

#include "liealg/families.hpp"

#include <algorithm>
#include <sstream>

namespace liealg {

LieAlgebra make_theorem2(Field f, const Scalar& alpha) {
    if (alpha.field() != f) throw input_error("alpha must lie in the ground field");
    StructureTableDraft t = StructureTableDraft::zeros(f, 3);
    t.labels = {"x", "y", "z"};
    t.at(0, 1)[1] = alpha;
    t.at(0, 1)[2] = f.one();
    t.at(0, 2)[2] = alpha;
    return validate(std::move(t));
}

LieAlgebra make_heisenberg(Field f) {
    StructureTableDraft t = StructureTableDraft::zeros(f, 3);
    t.labels = {"x", "y", "z"};
    t.at(0, 1)[2] = f.one();
    return validate(std::move(t));
}

LieAlgebra make_sl2(Field f) {
    StructureTableDraft t = StructureTableDraft::zeros(f, 3);
    t.labels = {"e", "f", "h"};
    t.at(0, 1)[2] = f.one();              // [e,f] = h
    t.at(0, 2)[0] = f.from_integer(-2);   // [e,h] = -2e
    t.at(1, 2)[1] = f.from_integer(2);    // [f,h] = 2f
    return validate(std::move(t));
}

LieAlgebra make_example5(Field f) {
    StructureTableDraft t = StructureTableDraft::zeros(f, 5);
    t.labels = {"e1", "e2", "e3", "e4", "e5"};
    t.at(0, 1)[2] = f.one();              // [e1,e2] = e3 + e4
    t.at(0, 1)[3] = f.one();
    t.at(0, 2)[1] = f.from_integer(-1);   // [e1,e3] = -e2 + e5
    t.at(0, 2)[4] = f.one();
    t.at(0, 3)[4] = f.one();              // [e1,e4] = e5
    t.at(0, 4)[3] = f.from_integer(-1);   // [e1,e5] = -e4
    return validate(std::move(t));
}

LieAlgebra make_abelian(Field f, int n) {
    if (n < 0) throw input_error("abelian dimension must be nonnegative");
    return validate(StructureTableDraft::zeros(f, n));
}

LieAlgebra make_two_dim_nonabelian(Field f) {
    StructureTableDraft t = StructureTableDraft::zeros(f, 2);
    t.labels = {"x", "y"};
    t.at(0, 1)[1] = f.one(); // [x,y] = y
    return validate(std::move(t));
}

LieAlgebra make_semidirect(const Matrix& d) {
    LieAlgebra l = semidirect_by_matrix(d);
    StructureTableDraft t = l.table();
    t.labels = {"x"};
    for (int i = 1; i <= d.rows(); ++i) t.labels.push_back("a" + std::to_string(i));
    return validate_unchecked(std::move(t));
}

namespace {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Scalar parse_scalar(const std::string& text, Field f) {
    std::string t = strip(text);
    if (t.empty()) throw input_error("empty scalar");
    if (t.find('/') != std::string::npos) {
        if (f.kind() != FieldKind::Rationals)
            throw input_error("fractional values require the rational field");
        try {
            mpq_class q(t);
            q.canonicalize();
            return f.from_rational(q);
        } catch (const std::invalid_argument&) {
            throw input_error("cannot parse scalar: " + text);
        }
    }
    try {
        return f.from_integer(std::stoll(t));
    } catch (const std::logic_error&) {
        throw input_error("cannot parse scalar: " + text);
    }
}

Matrix parse_matrix(const std::string& text, Field f) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw input_error("matrix must look like [[a,b],[c,d]]");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row_text : split_top_level(t.substr(1, t.size() - 2), ',')) {
        std::string r = strip(row_text);
        if (r.size() < 2 || r.front() != '[' || r.back() != ']')
            throw input_error("matrix row must look like [a,b]");
        std::vector<Scalar> row;
        for (const auto& cell : split_top_level(r.substr(1, r.size() - 2), ','))
            row.push_back(parse_scalar(cell, f));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw input_error("empty matrix");
    const int cols = static_cast<int>(rows.front().size());
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw input_error("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    }
    return m;
}

FamilyInstance parse_term(const std::string& term, Field f) {
    std::string t = strip(term);
    std::string name = t, args;
    auto colon = t.find(':');
    if (colon != std::string::npos) {
        name = strip(t.substr(0, colon));
        args = t.substr(colon + 1);
    }
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(tolower(c)); });

    std::vector<std::pair<std::string, std::string>> params;
    if (!args.empty())
        for (const auto& kv : split_top_level(args, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw input_error("family parameter must be key=value: " + kv);
            params.emplace_back(strip(kv.substr(0, eq)), strip(kv.substr(eq + 1)));
        }
    auto param = [&](const std::string& key) -> const std::string* {
        for (const auto& [k, v] : params)
            if (k == key) return &v;
        return nullptr;
    };

    FamilyInstance out{make_abelian(f, 0), {}};
    if (name == "theorem2") {
        const std::string* a = param("alpha");
        Scalar alpha = a ? parse_scalar(*a, f) : f.zero();
        out.algebra = make_theorem2(f, alpha);
    } else if (name == "heisenberg") {
        out.algebra = make_heisenberg(f);
    } else if (name == "sl2") {
        out.algebra = make_sl2(f);
        if (f.is_finite() && f.characteristic() == 2)
            out.notes.push_back("sl2 degenerates in characteristic 2: [h,e] = [h,f] = 0");
    } else if (name == "example5") {
        out.algebra = make_example5(f);
    } else if (name == "abelian") {
        const std::string* nstr = param("n");
        if (!nstr) throw input_error("abelian requires n=<dim>");
        out.algebra = make_abelian(f, std::stoi(*nstr));
    } else if (name == "two-dim-nonabelian" || name == "nonabelian2") {
        out.algebra = make_two_dim_nonabelian(f);
    } else if (name == "theorem5i" || name == "semidirect") {
        const std::string* dstr = param("d");
        if (!dstr) throw input_error(name + " requires d=[[...],[...]]");
        Matrix d = parse_matrix(*dstr, f);
        if (d.rows() != d.cols()) throw input_error("action matrix must be square");
        out.algebra = make_semidirect(d);
    } else {
        throw input_error("unknown family: " + name);
    }
    return out;
}

} // namespace

FamilyInstance parse_family(const std::string& spec, Field f) {
    std::vector<std::string> terms = split_top_level(spec, '+');
    if (terms.empty()) throw input_error("empty family spec");
    FamilyInstance acc = parse_term(terms.front(), f);
    for (size_t i = 1; i < terms.size(); ++i) {
        FamilyInstance next = parse_term(terms[i], f);
        acc.algebra = direct_sum(acc.algebra, next.algebra);
        for (auto& note : next.notes) acc.notes.push_back(std::move(note));
    }
    return acc;
}

} // namespace liealg
