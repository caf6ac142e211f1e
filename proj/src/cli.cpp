#include "equiloc/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "equiloc/classes.hpp"
#include "equiloc/errors.hpp"
#include "equiloc/laurent.hpp"
#include "equiloc/model.hpp"
#include "equiloc/oracle.hpp"
#include "equiloc/relations.hpp"

namespace equiloc {

namespace {

using Json = OrderedJson;

long long small(const Int& value) { return value.convert_to<long long>(); }

Json envelope(const std::string& command, const std::string& digest) {
    Json j = Json::object();
    j["command"] = command;
    j["schema"] = 1;
    j["input_digest"] = digest;
    j["outputs"] = Json::object();
    j["warnings"] = Json::array();
    return j;
}

Json model_json(const InputDocument& doc) {
    Json j = Json::object();
    j["name"] = doc.model.name;
    j["rank"] = doc.model.rank;
    j["variables"] = doc.model.variables;
    Json points = Json::array();
    for (const FixedPoint& p : doc.model.fixed_points) points.push_back(p.id);
    j["points"] = std::move(points);
    j["edges"] = doc.model.edges.size();
    j["polytope"] = doc.model.polytope.has_value();
    if (doc.xi) {
        Json xi = Json::array();
        for (const Int& c : *doc.xi) xi.push_back(small(c));
        j["xi"] = std::move(xi);
        j["residual_variable"] = doc.residual_variable;
    }
    return j;
}

std::string model_text(const InputDocument& doc) {
    std::ostringstream out;
    out << "model " << doc.model.name << ": " << doc.model.point_count()
        << " fixed points, rank " << doc.model.rank;
    if (doc.xi) {
        out << ", xi = (";
        for (std::size_t i = 0; i < doc.xi->size(); ++i) {
            if (i) out << ", ";
            out << (*doc.xi)[i];
        }
        out << ")";
    }
    return out.str();
}

struct Resolved {
    CircleSpec spec;
    std::optional<GeneratingClassTable> full;
    std::optional<GeneratingClassTable> specialized;
    std::string full_source;
    std::string specialized_source;
};

Resolved resolve_tables(const InputDocument& doc) {
    Resolved r;
    r.spec = doc.spec();
    if (doc.model.polytope) {
        r.full = toric_generating_classes(doc.model, r.spec);
        r.full_source = "generated";
        r.specialized = toric_specialized_classes(doc.model, r.spec);
        r.specialized_source = "generated";
        return r;
    }
    if (doc.classes) {
        r.full = *doc.classes;
        r.full_source = "supplied";
    }
    if (doc.specialized_classes) {
        r.specialized = *doc.specialized_classes;
        r.specialized_source = "supplied";
    } else if (r.full) {
        r.specialized = specialize_classes(*r.full, r.spec);
        r.specialized_source = "derived";
    }
    return r;
}

struct BlockInfo {
    const SubtorusBlock* block = nullptr;
    std::string source; // "supplied" | "generated"
    GeneratingClassTable table;
    RelationSystem sub_system;
};

struct SystemBundle {
    RelationSystem system;
    bool assembled = false;
    std::vector<BlockInfo> blocks;
};

RelationSystem lift_block(const InputDocument& doc, const SubtorusBlock& block,
                          const RelationSystem& sub) {
    std::map<std::string, std::string> embedding;
    for (std::size_t i = 0; i < block.points.size(); ++i) {
        embedding[sub.point_order[i]] = block.points[i];
    }
    RelationSystem part;
    part.model_name = doc.model.name;
    for (const FixedPoint& p : doc.model.fixed_points) part.point_order.push_back(p.id);
    part.variables = doc.model.variables;
    part.spec = CircleSpec{{}, doc.residual_variable};
    for (const DivisibilityRelation& rel : sub.relations) {
        part.relations.push_back(
            lift_relation(rel, block.residual_form, embedding, doc.model.variables.size()));
    }
    return part;
}

SystemBundle resolve_system(const InputDocument& doc, const Resolved& tables) {
    SystemBundle bundle;
    if (!doc.subtori.empty()) {
        bundle.assembled = true;
        std::vector<RelationSystem> parts;
        for (const SubtorusBlock& block : doc.subtori) {
            BlockInfo info;
            info.block = &block;
            if (block.specialized_classes) {
                info.table = *block.specialized_classes;
                info.source = "supplied";
            } else if (block.model.polytope) {
                info.table = toric_specialized_classes(block.model, block.spec);
                info.source = "generated";
            } else {
                throw capability_error("subtorus block '" + block.name +
                                       "' needs a class table or polytope data");
            }
            info.sub_system = full_relation_system(info.table, block.model, block.spec);
            parts.push_back(lift_block(doc, block, info.sub_system));
            bundle.blocks.push_back(std::move(info));
        }
        bundle.system = assemble_torus_system(parts);
        return bundle;
    }
    if (!tables.specialized) {
        throw capability_error("no class data to derive relations from");
    }
    bundle.system = full_relation_system(*tables.specialized, doc.model, tables.spec);
    return bundle;
}

Json star_json(const StarReport& report) {
    Json j = Json::object();
    j["valid"] = report.valid;
    Json violations = Json::array();
    for (const StarViolation& v : report.violations) {
        Json entry = Json::object();
        entry["row"] = v.row;
        entry["column"] = v.column;
        entry["reason"] = v.reason;
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    j["notes"] = report.notes;
    return j;
}

Json congruence_json(const CongruenceReport& report) {
    Json j = Json::object();
    j["passed"] = report.passed;
    Json violations = Json::array();
    for (const CongruenceViolation& v : report.violations) {
        Json entry = Json::object();
        entry["row"] = v.row;
        entry["from"] = v.from;
        entry["to"] = v.to;
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json counts_json(const CountReport& report) {
    Json j = Json::object();
    j["passed"] = report.passed;
    Json rows = Json::array();
    for (const CountRow& row : report.rows) {
        Json entry = Json::object();
        entry["degree"] = row.degree;
        entry["expected"] = small(row.expected);
        entry["actual"] = row.actual;
        entry["match"] = row.match;
        rows.push_back(std::move(entry));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json system_json(const SystemBundle& bundle) {
    Json j = Json::object();
    j["model"] = bundle.system.model_name;
    j["variables"] = bundle.system.variables;
    j["source"] = bundle.assembled ? "assembled" : "table";
    j["count"] = bundle.system.relations.size();
    Json relations = Json::array();
    for (const DivisibilityRelation& rel : bundle.system.relations) {
        relations.push_back(
            relation_to_json(rel, bundle.system.point_order, bundle.system.variables));
    }
    j["relations"] = std::move(relations);
    return j;
}

std::string table_text(const std::string& label, const GeneratingClassTable& table) {
    std::ostringstream out;
    out << label << ":\n";
    for (const std::string& base : table.point_order) {
        if (table.rows.find(base) == table.rows.end()) continue;
        out << "  A(" << base << ") = (";
        bool first = true;
        for (const std::string& column : table.point_order) {
            if (!first) out << ", ";
            first = false;
            out << poly_to_text(table.entry(base, column));
        }
        out << ")\n";
    }
    return out.str();
}

std::string system_text(const SystemBundle& bundle) {
    std::ostringstream out;
    out << "relations (" << bundle.system.relations.size() << "):\n";
    for (std::size_t i = 0; i < bundle.system.relations.size(); ++i) {
        const DivisibilityRelation& rel = bundle.system.relations[i];
        out << "  " << (i + 1) << ". "
            << relation_to_text(rel, bundle.system.point_order, bundle.system.variables);
        if (!rel.from_class.empty()) {
            out << "   [from " << rel.from_class << ", degree " << rel.grade << "]";
        }
        out << "\n";
    }
    return out.str();
}

std::string counts_text(const CountReport& report) {
    std::ostringstream out;
    out << "independent constraints by degree ("
        << (report.passed ? "all match" : "MISMATCH") << "):\n";
    for (const CountRow& row : report.rows) {
        out << "  degree " << row.degree << ": " << row.actual << " independent (expected "
            << row.expected << ") " << (row.match ? "ok" : "MISMATCH") << "\n";
    }
    return out.str();
}

const char* containment_text(ContainmentKind kind) {
    switch (kind) {
        case ContainmentKind::equal: return "equal";
        case ContainmentKind::first_inside_second: return "first-inside-second";
        case ContainmentKind::second_inside_first: return "second-inside-first";
        default: return "incomparable";
    }
}

Json comparison_json(const SystemComparison& cmp, const std::string& first_label,
                     const std::string& second_label) {
    Json j = Json::object();
    j["first"] = first_label;
    j["second"] = second_label;
    j["all_equal"] = cmp.all_equal;
    Json degrees = Json::array();
    for (const DegreeComparison& entry : cmp.degrees) {
        Json row = Json::object();
        row["degree"] = entry.degree;
        row["dim_first"] = small(entry.dim_first);
        row["dim_second"] = small(entry.dim_second);
        row["relation"] = containment_text(entry.relation);
        degrees.push_back(std::move(row));
    }
    j["degrees"] = std::move(degrees);
    return j;
}

std::string comparison_text(const SystemComparison& cmp, const std::string& first_label,
                            const std::string& second_label) {
    std::ostringstream out;
    out << "solution-space comparison, " << first_label << " vs " << second_label << ":\n";
    for (const DegreeComparison& entry : cmp.degrees) {
        out << "  degree " << entry.degree << ": " << entry.dim_first << " vs "
            << entry.dim_second << " (" << containment_text(entry.relation) << ")\n";
    }
    return out.str();
}

CohomologyTuple ones_tuple(const GKMModel& model, const std::string& residual_variable) {
    CohomologyTuple ones;
    for (const FixedPoint& p : model.fixed_points) {
        ones.point_order.push_back(p.id);
        ones.values.push_back(
            MultiPolynomial::constant({residual_variable}, Rational(1)));
    }
    return ones;
}

std::vector<MultiPolynomial> euler_classes(const GKMModel& model, const CircleSpec& spec) {
    std::vector<MultiPolynomial> out;
    for (const FixedPoint& p : model.fixed_points) {
        out.push_back(euler_class_circle(p, spec));
    }
    return out;
}

void require_valid(const GeneratingClassTable& table, const GKMModel& model,
                   const CircleSpec& spec, const std::string& path) {
    const StarReport report = validate_condition_star(table, model, spec);
    if (report.valid) return;
    const StarViolation& first = report.violations.front();
    throw validation_error("class table rejected: " + first.reason + " (row " + first.row +
                               ", column " + first.column + ")",
                           path);
}

} // namespace

RunResult cmd_classes(const InputDocument& doc) {
    const Resolved tables = resolve_tables(doc);
    if (!tables.full && !tables.specialized) {
        throw capability_error("no polytope data and no supplied class table");
    }

    RunResult result;
    result.report = envelope("classes", doc.digest);
    Json& outputs = result.report["outputs"];
    outputs["model"] = model_json(doc);

    std::ostringstream text;
    text << model_text(doc) << "\n\n";

    if (tables.full) {
        Json t = table_to_json(*tables.full);
        t["source"] = tables.full_source;
        outputs["full_classes"] = std::move(t);
        text << table_text("full classes (" + tables.full_source + ")", *tables.full) << "\n";
    }
    if (tables.specialized) {
        Json t = table_to_json(*tables.specialized);
        t["source"] = tables.specialized_source;
        outputs["specialized_classes"] = std::move(t);
        text << table_text("specialized classes (" + tables.specialized_source + ")",
                           *tables.specialized)
             << "\n";
    }

    // Supplied tables are always validated and echoed, even when the
    // rendered tables above were generated from the polytope.
    Json supplied = Json::object();
    if (doc.classes) {
        require_valid(*doc.classes, doc.model, tables.spec, "$.classes");
        supplied["classes"] = table_to_json(*doc.classes);
    }
    if (doc.specialized_classes) {
        require_valid(*doc.specialized_classes, doc.model, tables.spec, "$.specialized_classes");
        supplied["specialized_classes"] = table_to_json(*doc.specialized_classes);
    }
    if (doc.alt_classes) {
        require_valid(*doc.alt_classes, doc.model, tables.spec, "$.alt_classes");
        supplied["alt_classes"] = table_to_json(*doc.alt_classes);
        text << table_text("alternative classes (supplied)", *doc.alt_classes) << "\n";
    }
    if (!supplied.empty()) {
        outputs["supplied"] = std::move(supplied);
    }

    result.text = text.str();
    return result;
}

RunResult cmd_relations(const InputDocument& doc) {
    const Resolved tables = resolve_tables(doc);
    const SystemBundle bundle = resolve_system(doc, tables);

    RunResult result;
    result.report = envelope("relations", doc.digest);
    Json& outputs = result.report["outputs"];
    outputs["model"] = model_json(doc);
    outputs["system"] = system_json(bundle);

    std::ostringstream text;
    text << model_text(doc) << "\n\n" << system_text(bundle) << "\n";

    if (bundle.system.variables.size() == 1) {
        const CountReport counts =
            verify_relation_counts(bundle.system, betti_numbers(doc.model, tables.spec));
        outputs["counts"] = counts_json(counts);
        text << counts_text(counts);
    } else {
        outputs["counts"] = nullptr;
        result.report["warnings"].push_back(
            "independence counts apply to the one-variable grading only");
    }

    result.text = text.str();
    return result;
}

RunResult cmd_check(const InputDocument& doc) {
    const Resolved tables = resolve_tables(doc);
    const SystemBundle bundle = resolve_system(doc, tables);

    RunResult result;
    result.report = envelope("check", doc.digest);
    Json& outputs = result.report["outputs"];
    outputs["model"] = model_json(doc);

    std::ostringstream text;
    text << model_text(doc) << "\n\n";

    const bool circle_table = !bundle.assembled && tables.specialized &&
                              tables.specialized->variables ==
                                  std::vector<std::string>{doc.residual_variable};

    bool all_passed = true;
    Json tuples = Json::array();
    for (const CandidateTuple& tuple : doc.tuples) {
        if (tuple.variables != bundle.system.variables) {
            throw validation_error("tuple '" + tuple.name +
                                       "' grading disagrees with the relation system",
                                   "$.tuples");
        }
        const SystemVerdict verdict = system_membership(tuple.values, bundle.system);
        all_passed = all_passed && verdict.passed;

        Json entry = Json::object();
        entry["name"] = tuple.name;
        entry["passed"] = verdict.passed;
        Json violations = Json::array();
        for (const RelationViolation& v : verdict.violations) {
            Json item = Json::object();
            item["relation"] = v.relation_index;
            item["text"] = relation_to_text(bundle.system.relations[v.relation_index],
                                            bundle.system.point_order, bundle.system.variables);
            violations.push_back(std::move(item));
        }
        entry["violations"] = std::move(violations);

        if (circle_table) {
            const MembershipVerdict direct =
                membership_test(tuple.values, *tables.specialized, doc.model, tables.spec);
            Json witnesses = Json::array();
            for (const MembershipFailure& f : direct.failures) {
                Json item = Json::object();
                item["from"] = f.from_class;
                item["principal_part"] = laurent_to_text(f.witness);
                witnesses.push_back(std::move(item));
            }
            entry["witnesses"] = std::move(witnesses);
        }

        if (tuple.expected_pass) {
            entry["expected"] = *tuple.expected_pass ? "pass" : "fail";
            entry["as_expected"] = (verdict.passed == *tuple.expected_pass);
        } else {
            entry["expected"] = nullptr;
        }
        tuples.push_back(std::move(entry));

        text << (verdict.passed ? "pass" : "FAIL") << "  " << tuple.name;
        if (!verdict.passed && circle_table) {
            const MembershipVerdict direct =
                membership_test(tuple.values, *tables.specialized, doc.model, tables.spec);
            for (const MembershipFailure& f : direct.failures) {
                text << "\n      at " << f.from_class << ": principal part "
                     << laurent_to_text(f.witness);
            }
        }
        text << "\n";
    }

    outputs["tuples"] = std::move(tuples);
    outputs["all_passed"] = all_passed;
    if (doc.tuples.empty()) {
        result.report["warnings"].push_back("document carries no candidate tuples");
        text << "no candidate tuples in the document\n";
    }

    result.exit_code = all_passed ? 0 : 1;
    result.text = text.str();
    return result;
}

RunResult cmd_betti(const InputDocument& doc, int degree_cap) {
    const CircleSpec spec = doc.spec();
    const std::vector<int> betti = betti_numbers(doc.model, spec);
    std::vector<int> reversed(betti.rbegin(), betti.rend());
    const bool duality = betti == reversed;
    const std::vector<Int> series = equivariant_poincare_series(doc.model, spec, 2 * degree_cap);

    RunResult result;
    result.report = envelope("betti", doc.digest);
    Json& outputs = result.report["outputs"];
    outputs["model"] = model_json(doc);
    outputs["betti"] = betti;
    outputs["poincare_duality"] = duality;
    Json series_json = Json::array();
    for (const Int& v : series) series_json.push_back(small(v));
    outputs["series"] = std::move(series_json);
    if (doc.model.rank >= 2) {
        Json free_dims = Json::array();
        for (const Int& v :
             free_module_dimensions(betti, doc.model.variables.size(), degree_cap)) {
            free_dims.push_back(small(v));
        }
        outputs["free_module_dims"] = std::move(free_dims);
    }
    if (!duality) {
        result.report["warnings"].push_back("Poincaré duality fails: the Betti vector is not palindromic");
    }

    std::ostringstream text;
    text << model_text(doc) << "\n\nbetti = (";
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) text << ", ";
        text << betti[i];
    }
    text << ")  duality " << (duality ? "ok" : "VIOLATED") << "\nseries dims:";
    for (const Int& v : series) text << " " << v;
    text << "\n";
    result.text = text.str();
    return result;
}

RunResult cmd_integrate(const InputDocument& doc) {
    const CircleSpec spec = doc.spec();
    const std::vector<MultiPolynomial> eulers = euler_classes(doc.model, spec);

    RunResult result;
    result.report = envelope("integrate", doc.digest);
    Json& outputs = result.report["outputs"];
    outputs["model"] = model_json(doc);

    std::ostringstream text;
    text << model_text(doc) << "\n\n";

    Json integrals = Json::array();
    auto add = [&](const std::string& name, const CohomologyTuple& tuple) {
        const LaurentUnivariate value = abbv_integrate(tuple, eulers, spec);
        Json entry = Json::object();
        entry["name"] = name;
        entry["value"] = laurent_to_text(value);
        entry["zero"] = value.is_zero();
        entry["polynomial"] = value.is_polynomial();
        integrals.push_back(std::move(entry));
        text << "integral of " << name << " = " << laurent_to_text(value) << "\n";
    };

    add("1", ones_tuple(doc.model, doc.residual_variable));
    for (const CandidateTuple& tuple : doc.tuples) {
        if (tuple.variables != std::vector<std::string>{doc.residual_variable}) {
            Json entry = Json::object();
            entry["name"] = tuple.name;
            entry["skipped"] = "not in the residual grading";
            integrals.push_back(std::move(entry));
            continue;
        }
        add(tuple.name, tuple.values);
    }
    outputs["integrals"] = std::move(integrals);

    result.text = text.str();
    return result;
}

RunResult cmd_verify(const InputDocument& doc, int degree_cap) {
    const CircleSpec spec = doc.spec();

    RunResult result;
    result.report = envelope("verify", doc.digest);
    Json& outputs = result.report["outputs"];
    outputs["model"] = model_json(doc);
    outputs["degree_cap"] = degree_cap;

    std::ostringstream text;
    text << model_text(doc) << "\nverification at degree cap " << degree_cap << "\n\n";

    Json checks = Json::array();
    bool all_passed = true;
    auto run_check = [&](const std::string& name, auto&& body) {
        Json details = Json::object();
        bool passed = false;
        try {
            passed = body(details);
        } catch (const error& e) {
            details["error"] = e.what();
            passed = false;
        }
        Json entry = Json::object();
        entry["name"] = name;
        entry["passed"] = passed;
        entry["details"] = std::move(details);
        checks.push_back(std::move(entry));
        all_passed = all_passed && passed;
        text << (passed ? "ok   " : "FAIL ") << name << "\n";
    };
    auto warn = [&](const std::string& message) {
        result.report["warnings"].push_back(message);
    };

    run_check("genericity", [&](Json& details) {
        const GenericityReport report = is_generic(doc.model, spec);
        Json violations = Json::array();
        for (const GenericityViolation& v : report.violations) {
            Json entry = Json::object();
            entry["point"] = v.point_id;
            entry["weight_index"] = v.weight_index;
            violations.push_back(std::move(entry));
        }
        details["violations"] = std::move(violations);
        return report.generic;
    });

    const std::vector<int> betti = betti_numbers(doc.model, spec);
    run_check("poincare_duality", [&](Json& details) {
        details["betti"] = betti;
        std::vector<int> reversed(betti.rbegin(), betti.rend());
        const bool duality = betti == reversed;
        if (!duality) warn("Poincaré duality fails: the Betti vector is not palindromic");
        return duality;
    });

    run_check("integral_of_one", [&](Json& details) {
        if (doc.model.half_dimension() == 0) {
            details["skipped"] = "zero-dimensional model";
            return true;
        }
        const LaurentUnivariate integral = abbv_integrate(
            ones_tuple(doc.model, doc.residual_variable), euler_classes(doc.model, spec), spec);
        details["value"] = laurent_to_text(integral);
        return integral.is_zero();
    });

    Resolved tables;
    bool tables_ready = false;
    try {
        tables = resolve_tables(doc);
        tables_ready = true;
    } catch (const error& e) {
        Json entry = Json::object();
        entry["name"] = "class_tables";
        entry["passed"] = false;
        entry["details"] = Json::object();
        entry["details"]["error"] = e.what();
        checks.push_back(std::move(entry));
        all_passed = false;
        text << "FAIL class_tables\n";
    }

    if (tables_ready && doc.model.polytope) {
        run_check("generated_classes", [&](Json& details) {
            const StarReport full_report =
                validate_condition_star(*tables.full, doc.model, spec);
            const StarReport spec_report =
                validate_condition_star(*tables.specialized, doc.model, spec);
            details["full"] = star_json(full_report);
            details["specialized"] = star_json(spec_report);
            return full_report.valid && spec_report.valid;
        });
        run_check("specialization_commutes", [&](Json& details) {
            const bool match = specialize_classes(*tables.full, spec) == *tables.specialized;
            details["match"] = match;
            return match;
        });
        if (doc.model.has_edges()) {
            run_check("edge_congruences", [&](Json& details) {
                const CongruenceReport full_report =
                    check_gkm_congruences(*tables.full, doc.model);
                const CongruenceReport spec_report =
                    check_gkm_congruences(*tables.specialized, doc.model);
                details["full"] = congruence_json(full_report);
                details["specialized"] = congruence_json(spec_report);
                return full_report.passed && spec_report.passed;
            });
        }
    }

    // Supplied tables: condition-(*) validation, congruences where the
    // one-skeleton is known, and (for the primary tables) equality with the
    // generated ones when both exist.
    struct SuppliedEntry {
        const char* label;
        const std::optional<GeneratingClassTable>* table;
        const std::optional<GeneratingClassTable> Resolved::* generated;
    };
    const std::vector<SuppliedEntry> supplied = {
        {"supplied_classes", &doc.classes, &Resolved::full},
        {"supplied_specialized_classes", &doc.specialized_classes, &Resolved::specialized},
        {"supplied_alt_classes", &doc.alt_classes, nullptr},
    };
    for (const SuppliedEntry& entry : supplied) {
        if (!entry.table->has_value()) continue;
        run_check(entry.label, [&](Json& details) {
            const GeneratingClassTable& table = entry.table->value();
            const StarReport report = validate_condition_star(table, doc.model, spec);
            details["validation"] = star_json(report);
            bool passed = report.valid;
            if (doc.model.has_edges()) {
                const CongruenceReport congruences = check_gkm_congruences(table, doc.model);
                details["congruences"] = congruence_json(congruences);
                passed = passed && congruences.passed;
            }
            if (entry.generated != nullptr && tables_ready && doc.model.polytope &&
                (tables.*(entry.generated)).has_value()) {
                const bool match = table == (tables.*(entry.generated)).value();
                details["matches_generated"] = match;
                passed = passed && match;
            }
            return passed;
        });
    }

    if (doc.euler_row) {
        run_check("euler_row", [&](Json& details) {
            bool passed = true;
            Json rows = Json::array();
            for (const FixedPoint& p : doc.model.fixed_points) {
                const MultiPolynomial computed = euler_class_circle(p, spec);
                const auto it = doc.euler_row->find(p.id);
                const bool match = it != doc.euler_row->end() && it->second == computed;
                Json row = Json::object();
                row["point"] = p.id;
                row["computed"] = poly_to_text(computed);
                row["match"] = match;
                rows.push_back(std::move(row));
                passed = passed && match;
            }
            details["rows"] = std::move(rows);
            return passed;
        });
    }

    std::optional<SystemBundle> bundle;
    run_check("relations", [&](Json& details) {
        if (!tables_ready) {
            details["error"] = "class tables unavailable";
            return false;
        }
        bundle = resolve_system(doc, tables);
        details["count"] = bundle->system.relations.size();
        details["variables"] = bundle->system.variables;
        details["source"] = bundle->assembled ? "assembled" : "table";
        if (bundle->system.variables.size() != 1) {
            details["counts"] = nullptr;
            return true;
        }
        const CountReport counts = verify_relation_counts(bundle->system, betti);
        details["counts"] = counts_json(counts);
        text << counts_text(counts);
        return counts.passed;
    });

    if (bundle && bundle->assembled) {
        run_check("subtorus_blocks", [&](Json& details) {
            bool passed = true;
            Json blocks = Json::array();
            for (const BlockInfo& info : bundle->blocks) {
                Json entry = Json::object();
                entry["name"] = info.block->name;
                entry["source"] = info.source;
                entry["points"] = info.block->points;
                const StarReport star =
                    validate_condition_star(info.table, info.block->model, info.block->spec);
                entry["validation"] = star_json(star);
                const CountReport counts = verify_relation_counts(
                    info.sub_system, betti_numbers(info.block->model, info.block->spec));
                entry["counts"] = counts_json(counts);
                entry["relations"] = info.sub_system.relations.size();
                passed = passed && star.valid && counts.passed;
                blocks.push_back(std::move(entry));
            }
            details["blocks"] = std::move(blocks);
            return passed;
        });
    }

    if (bundle) {
        run_check("solution_dimensions", [&](Json& details) {
            const DegreeTruncation truncation =
                truncated_solution_dimension(bundle->system, degree_cap);
            std::vector<Int> expected;
            if (bundle->system.variables.size() == 1) {
                expected = equivariant_poincare_series(doc.model, spec, 2 * degree_cap);
                details["expected_from"] = "graded series";
            } else {
                expected = free_module_dimensions(betti, bundle->system.variables.size(),
                                                  degree_cap);
                details["expected_from"] = "free module over the ambient ring";
            }
            bool passed = true;
            Json rows = Json::array();
            std::ostringstream dims_text;
            dims_text << "solution dims:";
            for (std::size_t l = 0; l < truncation.solution_dims.size(); ++l) {
                const bool match =
                    l < expected.size() && truncation.solution_dims[l] == expected[l];
                Json row = Json::object();
                row["degree"] = l;
                row["coefficient_dim"] = small(truncation.coefficient_dims[l]);
                row["solution_dim"] = small(truncation.solution_dims[l]);
                row["expected"] = l < expected.size() ? Json(small(expected[l])) : Json(nullptr);
                row["match"] = match;
                rows.push_back(std::move(row));
                passed = passed && match;
                dims_text << " " << truncation.solution_dims[l];
            }
            details["rows"] = std::move(rows);
            text << dims_text.str() << "\n";
            return passed;
        });
    }

    if (bundle && !bundle->assembled && doc.model.has_edges()) {
        run_check("edge_containment", [&](Json& details) {
            const RelationSystem projected = gkm_edge_relations(doc.model, spec);
            const SystemComparison cmp = compare_systems(bundle->system, projected, degree_cap);
            details["comparison"] =
                comparison_json(cmp, "localization", "edge congruences (residual grading)");
            text << comparison_text(cmp, "localization", "projected edge congruences");
            for (const DegreeComparison& entry : cmp.degrees) {
                if (entry.relation != ContainmentKind::equal &&
                    entry.relation != ContainmentKind::first_inside_second) {
                    return false;
                }
            }
            return true;
        });
        run_check("edge_specialization", [&](Json& details) {
            const RelationSystem full = gkm_edge_relations(doc.model, std::nullopt);
            const SystemComparison cmp =
                compare_systems(full, bundle->system, degree_cap, spec);
            details["comparison"] =
                comparison_json(cmp, "edge congruences (full grading)", "localization");
            return cmp.all_equal;
        });
    }

    if (bundle && !bundle->assembled && tables_ready && doc.alt_classes) {
        run_check("alt_system_equivalent", [&](Json& details) {
            const GeneratingClassTable alt_specialized =
                specialize_classes(*doc.alt_classes, spec);
            const RelationSystem alt_system =
                full_relation_system(alt_specialized, doc.model, spec);
            const SystemComparison cmp =
                compare_systems(alt_system, bundle->system, degree_cap);
            details["comparison"] = comparison_json(cmp, "alternative basis", "primary basis");
            return cmp.all_equal;
        });
    }

    outputs["checks"] = std::move(checks);
    outputs["all_passed"] = all_passed;
    text << "\n" << (all_passed ? "all checks passed" : "SOME CHECKS FAILED") << "\n";

    result.exit_code = all_passed ? 0 : 1;
    result.text = text.str();
    return result;
}

RunResult run_command(const std::string& command, const std::string& input_path,
                      const std::optional<std::vector<Int>>& xi_override, int degree_cap) {
    std::string digest;
    try {
        const InputDocument doc = load_document(input_path, xi_override);
        digest = doc.digest;
        if (command == "classes") return cmd_classes(doc);
        if (command == "relations") return cmd_relations(doc);
        if (command == "check") return cmd_check(doc);
        if (command == "verify") return cmd_verify(doc, degree_cap);
        if (command == "betti") return cmd_betti(doc, degree_cap);
        if (command == "integrate") return cmd_integrate(doc);
        throw structural_error("unknown command: " + command);
    } catch (const validation_error& e) {
        RunResult result;
        result.exit_code = 2;
        result.report = envelope(command, digest);
        Json error_json = Json::object();
        error_json["message"] = e.what();
        error_json["path"] = e.path;
        result.report["error"] = std::move(error_json);
        result.text = std::string("error: ") + e.what() + "\n";
        return result;
    } catch (const error& e) {
        RunResult result;
        result.exit_code = 2;
        result.report = envelope(command, digest);
        Json error_json = Json::object();
        error_json["message"] = e.what();
        error_json["path"] = nullptr;
        result.report["error"] = std::move(error_json);
        result.text = std::string("error: ") + e.what() + "\n";
        return result;
    }
}

} // namespace equiloc
