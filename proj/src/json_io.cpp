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

#include "liealg/json_io.hpp"

#include <sstream>

namespace liealg {

json field_to_json(Field f) {
    json j;
    switch (f.kind()) {
    case FieldKind::Rationals:
        j["kind"] = "rationals";
        break;
    case FieldKind::PrimeField:
        j["kind"] = "prime";
        j["p"] = f.spec().p;
        break;
    case FieldKind::ExtensionField:
        j["kind"] = "extension";
        j["p"] = f.spec().p;
        j["k"] = f.spec().k;
        j["modulus"] = f.spec().modulus;
        break;
    }
    return j;
}

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw input_error("field object must carry a \"kind\"");
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "rationals") return Field::rationals();
        if (kind == "prime") return Field::prime(j.at("p").get<std::int64_t>());
        if (kind == "extension") {
            std::int64_t p = j.at("p").get<std::int64_t>();
            int k = j.at("k").get<int>();
            if (j.contains("modulus"))
                return Field::extension(p, k, j.at("modulus").get<std::vector<std::int64_t>>());
            return Field::extension(p, k);
        }
        throw input_error("unknown field kind: " + kind);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed field JSON: ") + e.what());
    }
}

json scalar_to_json(const Scalar& s) {
    switch (s.field().kind()) {
    case FieldKind::Rationals: {
        const mpq_class& q = s.rational();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case FieldKind::PrimeField:
        return s.residue();
    case FieldKind::ExtensionField: {
        json arr = json::array();
        for (int i = 0; i < s.field().spec().k; ++i) arr.push_back(s.coefficients()[static_cast<size_t>(i)]);
        return arr;
    }
    }
    throw std::logic_error("bad field kind");
}

Scalar scalar_from_json(const json& j, Field f) {
    switch (f.kind()) {
    case FieldKind::Rationals: {
        if (j.is_number_integer()) return f.from_integer(j.get<std::int64_t>());
        if (!j.is_string()) throw input_error("rational scalar must be a \"num/den\" string");
        try {
            mpq_class q(j.get<std::string>());
            q.canonicalize();
            return f.from_rational(q);
        } catch (const std::invalid_argument&) {
            throw input_error("cannot parse rational: " + j.dump());
        }
    }
    case FieldKind::PrimeField:
        if (!j.is_number_integer()) throw input_error("prime-field scalar must be an integer");
        return f.from_integer(j.get<std::int64_t>());
    case FieldKind::ExtensionField:
        if (!j.is_array()) throw input_error("extension scalar must be a coefficient array");
        return f.from_coefficients(j.get<std::vector<std::int64_t>>());
    }
    throw std::logic_error("bad field kind");
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

Vec vec_from_json(const json& j, Field f, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw input_error("vector must be an array of length " + std::to_string(n));
    Vec v;
    v.reserve(static_cast<size_t>(n));
    for (const auto& cell : j) v.push_back(scalar_from_json(cell, f));
    return v;
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (int i = 0; i < s.dim(); ++i) basis.push_back(vec_to_json(s.basis_row(i)));
    json j;
    j["ambient"] = s.ambient();
    j["dim"] = s.dim();
    j["basis"] = basis;
    return j;
}

json draft_to_json(const StructureTableDraft& d) {
    json j;
    j["field"] = field_to_json(d.field);
    j["dim"] = d.dim;
    if (!d.labels.empty()) j["labels"] = d.labels;
    json brackets = json::array();
    for (int i = 0; i < d.dim; ++i)
        for (int k = i + 1; k < d.dim; ++k) {
            const Vec& v = d.at(i, k);
            if (is_zero_vec(v)) continue;
            json entry;
            entry["i"] = i;
            entry["j"] = k;
            entry["value"] = vec_to_json(v);
            brackets.push_back(std::move(entry));
        }
    j["brackets"] = std::move(brackets);
    return j;
}

json algebra_to_json(const LieAlgebra& l) { return draft_to_json(l.table()); }

StructureTableDraft draft_from_json(const json& j) {
    if (!j.is_object()) throw input_error("algebra JSON must be an object");
    try {
        Field f = field_from_json(j.at("field"));
        int n = j.at("dim").get<int>();
        if (n < 0 || n > 30) throw input_error("dimension out of range");
        StructureTableDraft d = StructureTableDraft::zeros(f, n);
        if (j.contains("labels")) {
            d.labels = j.at("labels").get<std::vector<std::string>>();
            if (static_cast<int>(d.labels.size()) != n)
                throw input_error("labels must match the dimension");
        }
        if (j.contains("brackets"))
            for (const auto& entry : j.at("brackets")) {
                int i = entry.at("i").get<int>();
                int k = entry.at("j").get<int>();
                if (i < 0 || k <= i || k >= n)
                    throw input_error("bracket indices must satisfy 0 <= i < j < dim");
                d.at(i, k) = vec_from_json(entry.at("value"), f, n);
            }
        return d;
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed algebra JSON: ") + e.what());
    }
}

LieAlgebra algebra_from_json(const json& j) { return validate(draft_from_json(j)); }

namespace {

json predicate_to_json(const PredicateEntry& p) {
    json j;
    switch (p.status) {
    case PredicateEntry::Status::True:
        j["value"] = true;
        break;
    case PredicateEntry::Status::False:
        j["value"] = false;
        if (p.witness) j["witness"] = subspace_to_json(*p.witness);
        break;
    case PredicateEntry::Status::NotComputed:
        j["status"] = "not_computed";
        j["reason"] = p.reason;
        break;
    }
    return j;
}

json subspace_or_skip(const std::optional<Subspace>& s, const std::string& reason) {
    if (s) return subspace_to_json(*s);
    json j;
    j["status"] = "not_computed";
    j["reason"] = reason;
    return j;
}

} // namespace

json analysis_to_json(const AnalysisReport& r) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "analysis";
    j["field"] = field_to_json(r.field);
    j["dim"] = r.dim;
    if (!r.labels.empty()) j["labels"] = r.labels;
    j["table"] = draft_to_json(r.table)["brackets"];
    j["derived_dims"] = r.derived_dims;
    j["lower_central_dims"] = r.lower_central_dims;
    j["abelian"] = r.abelian;
    j["solvable"] = r.solvable;
    j["nilpotent"] = r.nilpotent;
    j["center"] = subspace_to_json(r.center_space);
    if (r.lattice) {
        json lat;
        lat["node_count"] = r.lattice->node_count;
        lat["nodes_by_dim"] = r.lattice->nodes_by_dim;
        j["lattice"] = std::move(lat);
    } else {
        j["lattice"] = json{{"status", "not_computed"}, {"reason", r.lattice_skip_reason}};
    }
    j["frattini_subalgebra"] = subspace_or_skip(r.frattini_subalgebra, r.lattice_skip_reason);
    j["frattini_ideal"] = subspace_or_skip(r.frattini_ideal, r.lattice_skip_reason);
    j["abelian_socle"] = subspace_or_skip(r.abelian_socle, r.lattice_skip_reason);
    j["nilradical"] = subspace_or_skip(r.nilradical, r.lattice_skip_reason);
    j["radical"] = subspace_or_skip(r.radical, r.lattice_skip_reason);
    json preds;
    preds["elementary"] = predicate_to_json(r.elementary);
    preds["minimal_non_elementary"] = predicate_to_json(r.minimal_non_elementary);
    preds["e_algebra"] = predicate_to_json(r.e_algebra);
    preds["a_algebra"] = predicate_to_json(r.a_algebra);
    preds["supersolvable"] = predicate_to_json(r.supersolvable);
    j["predicates"] = std::move(preds);
    if (r.shape) j["shape"] = shape_name(*r.shape);
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.companions.empty()) {
        json comps = json::array();
        for (const auto& [p, sub] : r.companions) {
            json c;
            c["prime"] = p;
            c["report"] = analysis_to_json(sub);
            comps.push_back(std::move(c));
        }
        j["companions"] = std::move(comps);
    }
    return j;
}

json search_to_json(const SearchReport& r) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "search";
    j["field"] = field_to_json(r.field);
    j["dim"] = r.dim;
    j["tables_scanned"] = r.tables_scanned;
    j["jacobi_valid"] = r.jacobi_valid;
    j["minimal_non_elementary_tables"] = r.mne_tables;
    j["discrepancies"] = r.discrepancies;
    json classes = json::array();
    for (const auto& cls : r.classes) {
        json c;
        c["representative"] = draft_to_json(cls.representative);
        c["count"] = cls.count;
        c["solvable"] = cls.solvable;
        c["nilpotent"] = cls.nilpotent;
        c["shape"] = cls.solvable ? shape_name(cls.shape) : "not-applicable";
        c["frattini_ideal_dim"] = cls.frattini_ideal_dim;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    return j;
}

json lattice_to_json(const SubalgebraLattice& lat) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "lattice";
    j["algebra"] = algebra_to_json(lat.algebra());
    j["node_count"] = lat.size();
    j["nodes_by_dim"] = lat.dim_histogram();
    json nodes = json::array();
    for (int i = 0; i < lat.size(); ++i) {
        json node;
        node["index"] = i;
        node["dim"] = lat.node_dim(i);
        node["ideal"] = lat.node_is_ideal(i);
        node["basis"] = subspace_to_json(lat.node(i))["basis"];
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& [a, b] : lat.cover_edges()) edges.push_back(json::array({a, b}));
    j["cover_edges"] = std::move(edges);
    j["frattini_subalgebra"] = subspace_to_json(lat.frattini_subalgebra(lat.full_node()));
    j["frattini_ideal"] = subspace_to_json(lat.frattini_ideal(lat.full_node()));
    return j;
}

// ---------------------------------------------------------------------------
// text rendering

namespace {

std::string vec_text(const Vec& v, const std::vector<std::string>& labels) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string label = i < labels.size() ? labels[i] : "b" + std::to_string(i + 1);
        std::string coeff = v[i].str();
        if (!out.empty()) out += " + ";
        if (coeff == "1") out += label;
        else out += coeff + "*" + label;
    }
    return out.empty() ? "0" : out;
}

std::string subspace_text(const Subspace& s, const std::vector<std::string>& labels) {
    if (s.dim() == 0) return "0";
    std::string out = "span(";
    for (int i = 0; i < s.dim(); ++i) {
        if (i) out += ", ";
        out += vec_text(s.basis_row(i), labels);
    }
    return out + ")";
}

std::string predicate_text(const PredicateEntry& p, const std::vector<std::string>& labels) {
    switch (p.status) {
    case PredicateEntry::Status::True: return "true";
    case PredicateEntry::Status::False: {
        std::string out = "false";
        if (p.witness) out += "  [witness: " + subspace_text(*p.witness, labels) + "]";
        return out;
    }
    case PredicateEntry::Status::NotComputed: return "not computed (" + p.reason + ")";
    }
    return "?";
}

std::string dims_text(const std::vector<int>& dims) {
    std::string out;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) out += " > ";
        out += std::to_string(dims[i]);
    }
    return out;
}

void render_analysis_into(std::ostringstream& os, const AnalysisReport& r, int indent_level) {
    std::string ind(static_cast<size_t>(indent_level) * 2, ' ');
    const auto& lab = r.labels;
    os << ind << "algebra over " << r.field.name() << ", dim " << r.dim << "\n";
    for (int i = 0; i < r.dim; ++i)
        for (int j = i + 1; j < r.dim; ++j) {
            const Vec& v = r.table.at(i, j);
            if (is_zero_vec(v)) continue;
            os << ind << "  [" << r.table.label(i) << ", " << r.table.label(j)
               << "] = " << vec_text(v, lab) << "\n";
        }
    os << ind << "derived series dims: " << dims_text(r.derived_dims) << "\n";
    os << ind << "lower central dims:  " << dims_text(r.lower_central_dims) << "\n";
    os << ind << "abelian: " << (r.abelian ? "true" : "false")
       << ", solvable: " << (r.solvable ? "true" : "false")
       << ", nilpotent: " << (r.nilpotent ? "true" : "false") << "\n";
    os << ind << "center: " << subspace_text(r.center_space, lab) << "\n";
    if (r.lattice) {
        os << ind << "subalgebra lattice: " << r.lattice->node_count << " nodes by dim [";
        for (size_t d = 0; d < r.lattice->nodes_by_dim.size(); ++d) {
            if (d) os << ", ";
            os << r.lattice->nodes_by_dim[d];
        }
        os << "]\n";
        os << ind << "frattini subalgebra: " << subspace_text(*r.frattini_subalgebra, lab) << "\n";
        os << ind << "frattini ideal:      " << subspace_text(*r.frattini_ideal, lab) << "\n";
        os << ind << "abelian socle:       " << subspace_text(*r.abelian_socle, lab) << "\n";
        os << ind << "nilradical:          " << subspace_text(*r.nilradical, lab) << "\n";
        os << ind << "radical:             " << subspace_text(*r.radical, lab) << "\n";
    } else {
        os << ind << "lattice block: not computed (" << r.lattice_skip_reason << ")\n";
    }
    os << ind << "elementary:             " << predicate_text(r.elementary, lab) << "\n";
    os << ind << "minimal non-elementary: " << predicate_text(r.minimal_non_elementary, lab) << "\n";
    os << ind << "E-algebra:              " << predicate_text(r.e_algebra, lab) << "\n";
    os << ind << "A-algebra:              " << predicate_text(r.a_algebra, lab) << "\n";
    os << ind << "supersolvable:          " << predicate_text(r.supersolvable, lab) << "\n";
    if (r.shape) os << ind << "shape: " << shape_name(*r.shape) << "\n";
    for (const auto& note : r.notes) os << ind << "note: " << note << "\n";
    for (const auto& [p, sub] : r.companions) {
        os << ind << "companion mod " << p << ":\n";
        render_analysis_into(os, sub, indent_level + 1);
    }
}

} // namespace

std::string render_analysis_text(const AnalysisReport& r) {
    std::ostringstream os;
    render_analysis_into(os, r, 0);
    return os.str();
}

std::string render_search_text(const SearchReport& r) {
    std::ostringstream os;
    os << "exhaustive search: dim " << r.dim << " over " << r.field.name() << "\n";
    os << "tables scanned:          " << r.tables_scanned << "\n";
    os << "jacobi valid:            " << r.jacobi_valid << "\n";
    os << "minimal non-elementary:  " << r.mne_tables << " tables, "
       << r.classes.size() << " isomorphism classes\n";
    os << "shape discrepancies:     " << r.discrepancies << "\n";
    for (size_t c = 0; c < r.classes.size(); ++c) {
        const auto& cls = r.classes[c];
        os << "class " << c + 1 << " (" << cls.count << " tables, "
           << (cls.solvable ? "solvable" : "non-solvable")
           << (cls.nilpotent ? ", nilpotent" : "") << ", shape "
           << (cls.solvable ? shape_name(cls.shape) : std::string("not-applicable"))
           << ", dim phi " << cls.frattini_ideal_dim << ")\n";
        const auto& d = cls.representative;
        for (int i = 0; i < d.dim; ++i)
            for (int j = i + 1; j < d.dim; ++j)
                if (!is_zero_vec(d.at(i, j)))
                    os << "  [" << d.label(i) << ", " << d.label(j)
                       << "] = " << vec_text(d.at(i, j), d.labels) << "\n";
    }
    return os.str();
}

std::string render_lattice_text(const SubalgebraLattice& lat) {
    std::ostringstream os;
    const auto& lab = lat.algebra().labels();
    os << "subalgebra lattice over " << lat.algebra().field().name() << ", dim "
       << lat.algebra().dim() << ": " << lat.size() << " nodes\n";
    auto hist = lat.dim_histogram();
    os << "nodes by dim: [";
    for (size_t d = 0; d < hist.size(); ++d) {
        if (d) os << ", ";
        os << hist[d];
    }
    os << "]\n";
    os << "ideals: " << lat.ideals().size()
       << ", minimal ideals: " << lat.minimal_ideals().size() << "\n";
    os << "frattini subalgebra: "
       << subspace_text(lat.frattini_subalgebra(lat.full_node()), lab) << "\n";
    os << "frattini ideal:      " << subspace_text(lat.frattini_ideal(lat.full_node()), lab)
       << "\n";
    os << "abelian socle:       " << subspace_text(lat.abelian_socle(), lab) << "\n";
    os << "cover edges: " << lat.cover_edges().size() << "\n";
    return os.str();
}

} // namespace liealg
