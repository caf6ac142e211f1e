#include "equiloc/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "equiloc/errors.hpp"

namespace equiloc {

namespace {

using Json = OrderedJson;

[[noreturn]] void fail(const std::string& message, const std::string& path) {
    throw validation_error(message, path);
}

const Json& require_field(const Json& object, const std::string& key, const std::string& path) {
    if (!object.is_object()) fail("expected an object", path);
    const auto it = object.find(key);
    if (it == object.end()) fail("missing required field '" + key + "'", path);
    return *it;
}

std::string parse_string(const Json& value, const std::string& path) {
    if (!value.is_string()) fail("expected a string", path);
    return value.get<std::string>();
}

int parse_int(const Json& value, const std::string& path) {
    if (!value.is_number_integer()) fail("expected an integer", path);
    return value.get<int>();
}

Int parse_bigint(const Json& value, const std::string& path) {
    if (value.is_number_integer()) return Int(value.get<long long>());
    if (value.is_string()) {
        try {
            return Int(value.get<std::string>());
        } catch (const std::exception&) {
            fail("not an integer: '" + value.get<std::string>() + "'", path);
        }
    }
    fail("expected an integer or integer string", path);
}

Rational parse_rational(const Json& value, const std::string& path) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) {
        try {
            return rational_from_string(value.get<std::string>());
        } catch (const error&) {
            fail("not a rational number: '" + value.get<std::string>() + "'", path);
        }
    }
    fail("expected a rational (integer or string like \"-3/2\")", path);
}

std::vector<Int> parse_int_vector(const Json& value, const std::string& path) {
    if (!value.is_array()) fail("expected an array of integers", path);
    std::vector<Int> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(parse_bigint(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<std::string> parse_string_vector(const Json& value, const std::string& path) {
    if (!value.is_array()) fail("expected an array of strings", path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(parse_string(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

bool known_point(const GKMModel& model, const std::string& id) {
    for (const FixedPoint& p : model.fixed_points) {
        if (p.id == id) return true;
    }
    return false;
}

/// Model section: rank, variables, fixed points and/or polytope vertices,
/// edges (directions derivable from vertex coordinates when present).
GKMModel parse_model_section(const Json& section, const std::string& name,
                             const std::string& path) {
    const int rank = parse_int(require_field(section, "rank", path), path + ".rank");
    if (rank < 1) fail("rank must be at least 1", path + ".rank");
    const std::vector<std::string> variables =
        parse_string_vector(require_field(section, "variables", path), path + ".variables");
    if (variables.size() != static_cast<std::size_t>(rank)) {
        fail("variable count disagrees with rank", path + ".variables");
    }

    std::optional<DelzantPolytope> polytope;
    if (section.contains("vertices")) {
        const Json& vertices = section.at("vertices");
        if (!vertices.is_object()) fail("expected an object of vertex coordinates", path + ".vertices");
        DelzantPolytope p;
        for (const auto& [id, coords] : vertices.items()) {
            const std::string vpath = path + ".vertices." + id;
            std::vector<Rational> coordinates;
            if (!coords.is_array()) fail("expected an array of coordinates", vpath);
            for (std::size_t i = 0; i < coords.size(); ++i) {
                coordinates.push_back(parse_rational(coords[i], vpath + "[" + std::to_string(i) + "]"));
            }
            if (coordinates.size() != static_cast<std::size_t>(rank)) {
                fail("coordinate count disagrees with rank", vpath);
            }
            p.vertex_order.push_back(id);
            p.vertices[id] = std::move(coordinates);
        }
        if (section.contains("vertex_order")) {
            const std::vector<std::string> order =
                parse_string_vector(section.at("vertex_order"), path + ".vertex_order");
            if (order.size() != p.vertex_order.size()) {
                fail("vertex_order does not list every vertex exactly once", path + ".vertex_order");
            }
            for (const std::string& id : order) {
                if (p.vertices.find(id) == p.vertices.end()) {
                    fail("vertex_order names unknown vertex '" + id + "'", path + ".vertex_order");
                }
            }
            p.vertex_order = order;
        }
        polytope = std::move(p);
    }

    struct RawEdge {
        std::string from;
        std::string to;
        std::optional<std::vector<Int>> direction;
    };
    std::vector<RawEdge> raw_edges;
    if (section.contains("edges")) {
        const Json& edges = section.at("edges");
        if (!edges.is_array()) fail("expected an array of edges", path + ".edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string epath = path + ".edges[" + std::to_string(i) + "]";
            RawEdge e;
            e.from = parse_string(require_field(edges[i], "from", epath), epath + ".from");
            e.to = parse_string(require_field(edges[i], "to", epath), epath + ".to");
            if (edges[i].contains("direction")) {
                e.direction = parse_int_vector(edges[i].at("direction"), epath + ".direction");
            }
            raw_edges.push_back(std::move(e));
        }
    }

    if (polytope) {
        for (const RawEdge& e : raw_edges) {
            polytope->edges.emplace_back(e.from, e.to);
        }
    }

    GKMModel model;
    if (!section.contains("fixed_points")) {
        if (!polytope) {
            fail("a model needs fixed_points, polytope vertices, or both", path);
        }
        try {
            model = polytope_to_model(*polytope, variables);
        } catch (const validation_error&) {
            throw;
        } catch (const error& e) {
            fail(std::string("polytope rejected: ") + e.what(), path + ".vertices");
        }
        model.name = name;
        return model;
    }

    model.rank = rank;
    model.name = name;
    model.variables = variables;

    const Json& points = section.at("fixed_points");
    if (!points.is_array()) fail("expected an array of fixed points", path + ".fixed_points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string ppath = path + ".fixed_points[" + std::to_string(i) + "]";
        FixedPoint p;
        p.id = parse_string(require_field(points[i], "id", ppath), ppath + ".id");
        const Json& weights = require_field(points[i], "weights", ppath);
        if (!weights.is_array()) fail("expected an array of weights", ppath + ".weights");
        for (std::size_t w = 0; w < weights.size(); ++w) {
            TorusWeight weight;
            weight.components =
                parse_int_vector(weights[w], ppath + ".weights[" + std::to_string(w) + "]");
            p.weights.push_back(std::move(weight));
        }
        model.fixed_points.push_back(std::move(p));
    }

    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        const std::string epath = path + ".edges[" + std::to_string(i) + "]";
        IsotropyEdge edge;
        edge.from = raw_edges[i].from;
        edge.to = raw_edges[i].to;
        if (raw_edges[i].direction) {
            edge.direction = *raw_edges[i].direction;
        } else if (polytope) {
            const auto from_it = polytope->vertices.find(edge.from);
            const auto to_it = polytope->vertices.find(edge.to);
            if (from_it == polytope->vertices.end() || to_it == polytope->vertices.end()) {
                fail("edge endpoints must be polytope vertices to derive a direction", epath);
            }
            std::vector<Rational> delta;
            for (std::size_t c = 0; c < to_it->second.size(); ++c) {
                delta.push_back(to_it->second[c] - from_it->second[c]);
            }
            try {
                edge.direction = primitive_direction(delta);
            } catch (const error& e) {
                fail(std::string("cannot derive edge direction: ") + e.what(), epath);
            }
        } else {
            fail("edge needs an explicit direction when no vertices are given", epath);
        }
        model.edges.push_back(std::move(edge));
    }

    model.polytope = polytope;
    try {
        validate_model(model);
    } catch (const validation_error&) {
        throw;
    } catch (const error& e) {
        fail(std::string("model rejected: ") + e.what(), path);
    }
    return model;
}

GeneratingClassTable parse_table(const Json& rows, const GKMModel& model,
                                 std::vector<std::string> variables, const CircleSpec& spec,
                                 const std::string& path) {
    if (!rows.is_object()) fail("expected an object of table rows", path);
    GeneratingClassTable table;
    for (const FixedPoint& p : model.fixed_points) table.point_order.push_back(p.id);
    table.variables = std::move(variables);
    table.spec = spec;
    for (const auto& [base, row] : rows.items()) {
        if (!known_point(model, base)) fail("unknown row point '" + base + "'", path);
        if (!row.is_object()) fail("expected an object of entries", path + "." + base);
        for (const auto& [column, poly] : row.items()) {
            if (!known_point(model, column)) {
                fail("unknown column point '" + column + "'", path + "." + base);
            }
            table.set_entry(base, column,
                            polynomial_from_json(poly, table.variables,
                                                 path + "." + base + "." + column));
        }
    }
    return table;
}

CircleSpec parse_block_spec(const Json& section, int rank, const std::string& path) {
    CircleSpec spec;
    spec.xi = parse_int_vector(require_field(section, "xi", path), path + ".xi");
    if (spec.xi.size() != static_cast<std::size_t>(rank)) {
        fail("xi length disagrees with rank", path + ".xi");
    }
    if (section.contains("residual_variable")) {
        spec.residual_variable =
            parse_string(section.at("residual_variable"), path + ".residual_variable");
    }
    return spec;
}

} // namespace

CircleSpec InputDocument::spec() const {
    if (!xi) {
        throw validation_error("no xi given in the document or on the command line", "$.xi");
    }
    CircleSpec out;
    out.xi = *xi;
    out.residual_variable = residual_variable;
    return out;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a:";
    for (int shift = 60; shift >= 0; shift -= 4) {
        out.push_back(hex[(hash >> shift) & 0xf]);
    }
    return out;
}

OrderedJson polynomial_to_json(const MultiPolynomial& p) {
    Json out = Json::array();
    for (const auto& [exponent, coefficient] : p.terms()) {
        Json term = Json::array();
        term.push_back(exponent);
        term.push_back(rational_to_string(coefficient));
        out.push_back(std::move(term));
    }
    return out;
}

MultiPolynomial polynomial_from_json(const OrderedJson& value,
                                     const std::vector<std::string>& variables,
                                     const std::string& path) {
    if (!value.is_array()) fail("expected an array of [exponents, coefficient] terms", path);
    MultiPolynomial p = MultiPolynomial::constant(variables, Rational(0));
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string tpath = path + "[" + std::to_string(i) + "]";
        const Json& term = value[i];
        if (!term.is_array() || term.size() != 2) {
            fail("expected a [exponents, coefficient] pair", tpath);
        }
        const Json& exponents = term[0];
        if (!exponents.is_array() || exponents.size() != variables.size()) {
            fail("exponent vector arity disagrees with the variable list", tpath);
        }
        Exponent e;
        for (std::size_t k = 0; k < exponents.size(); ++k) {
            const std::string epath = tpath + "[0][" + std::to_string(k) + "]";
            const int exp = parse_int(exponents[k], epath);
            if (exp < 0) fail("negative exponent", epath);
            e.push_back(exp);
        }
        p.add_term(e, parse_rational(term[1], tpath + "[1]"));
    }
    return p;
}

OrderedJson table_to_json(const GeneratingClassTable& table) {
    Json rows = Json::object();
    for (const std::string& base : table.point_order) {
        const auto row_it = table.rows.find(base);
        if (row_it == table.rows.end()) continue;
        Json row = Json::object();
        for (const std::string& column : table.point_order) {
            const auto entry_it = row_it->second.find(column);
            if (entry_it == row_it->second.end()) continue;
            row[column] = polynomial_to_json(entry_it->second);
        }
        rows[base] = std::move(row);
    }
    Json out = Json::object();
    out["variables"] = table.variables;
    out["rows"] = std::move(rows);
    return out;
}

OrderedJson relation_to_json(const DivisibilityRelation& relation,
                             const std::vector<std::string>& point_order,
                             const std::vector<std::string>& variables) {
    Json coefficients = Json::object();
    for (const std::string& id : point_order) {
        const auto it = relation.coeffs.find(id);
        if (it == relation.coeffs.end()) continue;
        coefficients[id] = it->second.str();
    }
    Json out = Json::object();
    out["coefficients"] = std::move(coefficients);
    out["modulus"] = linear_form_to_text(relation.modulus_form, variables);
    out["power"] = relation.modulus_power;
    out["degree"] = relation.grade;
    if (relation.from_class.empty()) {
        out["from"] = nullptr;
    } else {
        out["from"] = relation.from_class;
    }
    out["text"] = relation_to_text(relation, point_order, variables);
    return out;
}

InputDocument parse_document(const std::string& json_text,
                             const std::optional<std::vector<Int>>& xi_override) {
    Json root;
    try {
        root = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("input is not valid JSON: ") + e.what(), "$");
    }
    if (!root.is_object()) fail("top level must be an object", "$");

    const int schema = parse_int(require_field(root, "schema", "$"), "$.schema");
    if (schema != 1) {
        fail("unsupported schema version " + std::to_string(schema), "$.schema");
    }

    InputDocument doc;
    doc.digest = fnv1a_digest(json_text);
    doc.name = parse_string(require_field(root, "name", "$"), "$.name");
    doc.model = parse_model_section(root, doc.name, "$");

    if (root.contains("residual_variable")) {
        doc.residual_variable = parse_string(root.at("residual_variable"), "$.residual_variable");
    }
    if (xi_override) {
        doc.xi = *xi_override;
    } else if (root.contains("xi")) {
        doc.xi = parse_int_vector(root.at("xi"), "$.xi");
    }
    if (doc.xi && doc.xi->size() != static_cast<std::size_t>(doc.model.rank)) {
        fail("xi length disagrees with rank", "$.xi");
    }

    const CircleSpec table_spec =
        doc.xi ? doc.spec() : CircleSpec{{}, doc.residual_variable};
    if (root.contains("classes")) {
        doc.classes = parse_table(root.at("classes"), doc.model, doc.model.variables,
                                  table_spec, "$.classes");
    }
    if (root.contains("alt_classes")) {
        doc.alt_classes = parse_table(root.at("alt_classes"), doc.model, doc.model.variables,
                                      table_spec, "$.alt_classes");
    }
    if (root.contains("specialized_classes")) {
        doc.specialized_classes =
            parse_table(root.at("specialized_classes"), doc.model,
                        {doc.residual_variable}, table_spec, "$.specialized_classes");
    }

    if (root.contains("euler_row")) {
        const Json& row = root.at("euler_row");
        if (!row.is_object()) fail("expected an object of polynomials", "$.euler_row");
        std::map<std::string, MultiPolynomial> parsed;
        for (const auto& [id, poly] : row.items()) {
            if (!known_point(doc.model, id)) {
                fail("unknown point '" + id + "'", "$.euler_row");
            }
            parsed.emplace(id, polynomial_from_json(poly, {doc.residual_variable},
                                                    "$.euler_row." + id));
        }
        doc.euler_row = std::move(parsed);
    }

    if (root.contains("subtori")) {
        const Json& blocks = root.at("subtori");
        if (!blocks.is_array()) fail("expected an array of subtorus blocks", "$.subtori");
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const std::string bpath = "$.subtori[" + std::to_string(i) + "]";
            const Json& entry = blocks[i];
            SubtorusBlock block;
            block.name = parse_string(require_field(entry, "name", bpath), bpath + ".name");
            const std::vector<Int> form =
                parse_int_vector(require_field(entry, "residual_form", bpath),
                                 bpath + ".residual_form");
            if (form.size() != static_cast<std::size_t>(doc.model.rank)) {
                fail("residual form arity disagrees with the ambient rank",
                     bpath + ".residual_form");
            }
            try {
                block.residual_form = LinearForm(form);
            } catch (const error& e) {
                fail(std::string("bad residual form: ") + e.what(), bpath + ".residual_form");
            }
            block.points = parse_string_vector(require_field(entry, "points", bpath),
                                               bpath + ".points");
            for (const std::string& id : block.points) {
                if (!known_point(doc.model, id)) {
                    fail("unknown ambient point '" + id + "'", bpath + ".points");
                }
            }
            const Json& model_section = require_field(entry, "model", bpath);
            block.model = parse_model_section(model_section, block.name, bpath + ".model");
            block.spec = parse_block_spec(model_section, block.model.rank, bpath + ".model");
            if (block.points.size() != block.model.point_count()) {
                fail("block lists " + std::to_string(block.points.size()) +
                         " ambient points for a sub-model with " +
                         std::to_string(block.model.point_count()) + " fixed points",
                     bpath + ".points");
            }
            if (entry.contains("specialized_classes")) {
                block.specialized_classes =
                    parse_table(entry.at("specialized_classes"), block.model,
                                {block.spec.residual_variable}, block.spec,
                                bpath + ".specialized_classes");
            }
            doc.subtori.push_back(std::move(block));
        }
    }

    if (root.contains("tuples")) {
        const Json& tuples = root.at("tuples");
        if (!tuples.is_array()) fail("expected an array of tuples", "$.tuples");
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            const std::string tpath = "$.tuples[" + std::to_string(i) + "]";
            const Json& entry = tuples[i];
            CandidateTuple tuple;
            tuple.name = parse_string(require_field(entry, "name", tpath), tpath + ".name");
            tuple.variables = parse_string_vector(require_field(entry, "variables", tpath),
                                                  tpath + ".variables");
            const Json& values = require_field(entry, "values", tpath);
            if (!values.is_object()) fail("expected an object of polynomials", tpath + ".values");
            for (const auto& [id, poly] : values.items()) {
                if (!known_point(doc.model, id)) {
                    fail("unknown point '" + id + "'", tpath + ".values");
                }
            }
            for (const FixedPoint& p : doc.model.fixed_points) {
                tuple.values.point_order.push_back(p.id);
                const auto it = values.find(p.id);
                if (it == values.end()) {
                    tuple.values.values.push_back(
                        MultiPolynomial::constant(tuple.variables, Rational(0)));
                } else {
                    tuple.values.values.push_back(polynomial_from_json(
                        *it, tuple.variables, tpath + ".values." + p.id));
                }
            }
            if (entry.contains("expect")) {
                const std::string expect = parse_string(entry.at("expect"), tpath + ".expect");
                if (expect == "pass") {
                    tuple.expected_pass = true;
                } else if (expect == "fail") {
                    tuple.expected_pass = false;
                } else {
                    fail("expect must be \"pass\" or \"fail\"", tpath + ".expect");
                }
            }
            doc.tuples.push_back(std::move(tuple));
        }
    }

    return doc;
}

InputDocument load_document(const std::string& path,
                            const std::optional<std::vector<Int>>& xi_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw structural_error("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), xi_override);
}

} // namespace equiloc
