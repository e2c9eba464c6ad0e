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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "liealg/families.hpp"
#include "liealg/json_io.hpp"

namespace {

using namespace liealg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCost = 3;

struct CommonOpts {
    std::string field_text = "q";
    std::string format = "text";
    std::string output;
    std::uint64_t max_subspaces = 2'000'000;
};

void emit(const CommonOpts& common, const std::string& text) {
    if (common.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(common.output);
        if (!out) throw input_error("cannot open output file: " + common.output);
        out << text;
    }
}

struct LoadedAlgebra {
    StructureTableDraft draft;
    std::vector<std::string> notes;
};

enum class SourceKind { Auto, Family, File, Inline };

/// An algebra argument is inline JSON (starts with '{'), a path to a JSON
/// file, or a family spec string; explicit source flags pin the kind.
LoadedAlgebra load_draft(const std::string& input, Field field,
                         SourceKind kind = SourceKind::Auto) {
    if (kind == SourceKind::Auto) {
        if (!input.empty() && input.front() == '{') kind = SourceKind::Inline;
        else if (std::filesystem::exists(input)) kind = SourceKind::File;
        else kind = SourceKind::Family;
    }
    switch (kind) {
    case SourceKind::Inline:
        return LoadedAlgebra{draft_from_json(json::parse(input, nullptr, true, true)), {}};
    case SourceKind::File: {
        std::ifstream in(input);
        if (!in) throw input_error("cannot open file: " + input);
        json j;
        try {
            j = json::parse(in, nullptr, true, true);
        } catch (const json::parse_error& e) {
            throw input_error("cannot parse " + input + ": " + e.what());
        }
        return LoadedAlgebra{draft_from_json(j), {}};
    }
    default: {
        FamilyInstance fam = parse_family(input, field);
        return LoadedAlgebra{fam.algebra.table(), std::move(fam.notes)};
    }
    }
}

LieAlgebra load_algebra(const std::string& input, Field field,
                        SourceKind kind = SourceKind::Auto) {
    return validate(load_draft(input, field, kind).draft);
}

int run(int argc, char** argv) {
    CLI::App app{"exact structure-constant engine for finite-dimensional Lie algebras"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string input, input_b;
    std::string family_arg, file_arg, json_arg;
    std::string primes_text;
    int search_dim = 3;
    std::uint64_t max_tables = 20'000'000;
    std::uint64_t max_gl_order = 10'000'000;
    int threads = 0;
    std::int64_t reduce_prime = 0;

    auto add_common = [&](CLI::App* cmd, bool with_caps = true) {
        cmd->add_option("--field", common.field_text,
                        "ground field: q, gf<p>, gf(p), gf(p^k)");
        cmd->add_option("--format", common.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", common.output, "write the report to a file");
        if (with_caps)
            cmd->add_option("--max-subspaces", common.max_subspaces,
                            "subspace-enumeration cost cap");
    };
    // one algebra input: positional (auto-detected) or an explicit source flag
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "algebra file, inline JSON, or family spec");
        cmd->add_option("--family", family_arg, "family spec, e.g. theorem2:alpha=1");
        cmd->add_option("--file", file_arg, "path to an algebra JSON file");
        cmd->add_option("--json", json_arg, "inline algebra JSON");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "Jacobi-check a structure table");
    add_input(c_validate);
    add_common(c_validate, false);

    CLI::App* c_analyze = app.add_subcommand("analyze", "full invariant and predicate report");
    add_input(c_analyze);
    add_common(c_analyze);
    c_analyze->add_option("--companion-primes", primes_text,
                          "comma-separated primes for mod-p companions of a Q algebra");

    CLI::App* c_classify = app.add_subcommand("classify", "predicates and shape (finite fields)");
    add_input(c_classify);
    add_common(c_classify);

    CLI::App* c_lattice = app.add_subcommand("lattice", "subalgebra lattice summary/export");
    add_input(c_lattice);
    add_common(c_lattice);

    CLI::App* c_search = app.add_subcommand("search", "exhaustive structure-table search");
    c_search->add_option("--dim", search_dim, "basis dimension")->required();
    add_common(c_search, false);
    c_search->add_option("--max-tables", max_tables, "table-count cost cap");
    c_search->add_option("--max-gl-order", max_gl_order, "|GL(n,q)| cap for deduplication");
    c_search->add_option("--threads", threads, "worker count (0 = machine parallelism)");

    CLI::App* c_family = app.add_subcommand("family", "emit a family's algebra JSON");
    c_family->add_option("input", input, "family spec, e.g. theorem2:alpha=1")->required();
    add_common(c_family, false);

    CLI::App* c_reduce = app.add_subcommand("reduce", "mod-p reduction of an integer Q-algebra");
    c_reduce->add_option("input", input)->required();
    c_reduce->add_option("--prime", reduce_prime, "reduction prime")->required();
    add_common(c_reduce, false);

    CLI::App* c_iso = app.add_subcommand("isomorphic", "brute-force isomorphism test");
    c_iso->add_option("input", input, "first algebra")->required();
    c_iso->add_option("input_b", input_b, "second algebra")->required();
    add_common(c_iso, false);
    c_iso->add_option("--max-gl-order", max_gl_order, "|GL(n,q)| cap");

    CLI11_PARSE(app, argc, argv);

    Field field = Field::parse(common.field_text);
    const bool as_json = common.format == "json";

    // resolve explicit source flags; exactly one source per algebra argument
    SourceKind source = SourceKind::Auto;
    {
        int sources = (input.empty() ? 0 : 1) + (family_arg.empty() ? 0 : 1) +
                      (file_arg.empty() ? 0 : 1) + (json_arg.empty() ? 0 : 1);
        if (sources > 1) throw input_error("give exactly one input source per algebra");
        if (!family_arg.empty()) { input = family_arg; source = SourceKind::Family; }
        if (!file_arg.empty())   { input = file_arg;   source = SourceKind::File; }
        if (!json_arg.empty())   { input = json_arg;   source = SourceKind::Inline; }
        bool needs_input = c_validate->parsed() || c_analyze->parsed() ||
                           c_classify->parsed() || c_lattice->parsed();
        if (needs_input && input.empty())
            throw input_error("an algebra input is required (positional, --family, --file or --json)");
    }

    if (c_validate->parsed()) {
        LoadedAlgebra loaded = load_draft(input, field, source);
        auto violation = jacobi_violation(loaded.draft);
        if (!violation) {
            json j{{"schema", kSchema}, {"kind", "validate"}, {"valid", true}};
            emit(common, as_json ? j.dump(2) : std::string("valid Lie algebra, dim ") +
                                                   std::to_string(loaded.draft.dim));
            return kExitOk;
        }
        const auto& v = *violation;
        if (as_json) {
            json j{{"schema", kSchema},
                   {"kind", "validate"},
                   {"valid", false},
                   {"triple", {v.i, v.j, v.k}},
                   {"defect", vec_to_json(v.defect)}};
            emit(common, j.dump(2));
        } else {
            std::ostringstream os;
            os << "Jacobi identity fails on (" << loaded.draft.label(v.i) << ", "
               << loaded.draft.label(v.j) << ", " << loaded.draft.label(v.k) << ")";
            emit(common, os.str());
        }
        return kExitInput;
    }

    if (c_analyze->parsed() || c_classify->parsed()) {
        LoadedAlgebra loaded = load_draft(input, field, source);
        LieAlgebra l = validate(loaded.draft);
        if (c_classify->parsed() && !l.field().is_finite())
            throw input_error("classify requires a finite field; use analyze with "
                              "--companion-primes for algebras over Q");
        AnalyzeOptions opt;
        opt.lattice.max_subspaces = common.max_subspaces;
        opt.notes = loaded.notes;
        if (!primes_text.empty()) {
            std::stringstream ss(primes_text);
            std::string item;
            while (std::getline(ss, item, ','))
                opt.companion_primes.push_back(std::stoll(item));
        }
        AnalysisReport rep = analyze(l, opt);
        emit(common, as_json ? analysis_to_json(rep).dump(2) : render_analysis_text(rep));
        return kExitOk;
    }

    if (c_lattice->parsed()) {
        LieAlgebra l = load_algebra(input, field, source);
        LatticeOptions opt;
        opt.max_subspaces = common.max_subspaces;
        SubalgebraLattice lat = build_lattice(l, opt);
        emit(common, as_json ? lattice_to_json(lat).dump(2) : render_lattice_text(lat));
        return kExitOk;
    }

    if (c_search->parsed()) {
        SearchOptions opt;
        opt.max_tables = max_tables;
        opt.max_gl_order = max_gl_order;
        opt.threads = threads;
        SearchReport rep = exhaustive_search(search_dim, field, opt);
        emit(common, as_json ? search_to_json(rep).dump(2) : render_search_text(rep));
        return kExitOk;
    }

    if (c_family->parsed()) {
        FamilyInstance fam = parse_family(input, field);
        emit(common, algebra_to_json(fam.algebra).dump(2));
        return kExitOk;
    }

    if (c_reduce->parsed()) {
        LieAlgebra l = load_algebra(input, field);
        LieAlgebra reduced = reduce_mod_p(l, reduce_prime);
        emit(common, algebra_to_json(reduced).dump(2));
        return kExitOk;
    }

    if (c_iso->parsed()) {
        LieAlgebra a = load_algebra(input, field);
        LieAlgebra b = load_algebra(input_b, field);
        IsomorphismOptions opt{max_gl_order};
        IsomorphismResult res = is_isomorphic(a, b, opt);
        if (as_json) {
            json j{{"schema", kSchema}, {"kind", "isomorphic"}, {"isomorphic", res.isomorphic}};
            if (res.map) {
                json rows = json::array();
                for (int r = 0; r < res.map->rows(); ++r) rows.push_back(vec_to_json(res.map->row_vec(r)));
                j["change_of_basis"] = rows;
            }
            emit(common, j.dump(2));
        } else {
            emit(common, res.isomorphic ? "isomorphic" : "not isomorphic");
        }
        return kExitOk;
    }

    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const liealg::cost_error& e) {
        std::cerr << "cost refusal: " << e.what() << "\n";
        return kExitCost;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
