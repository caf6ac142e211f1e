#include "equiloc/classes.hpp"

#include <algorithm>
#include <set>

#include "equiloc/matrix.hpp"

namespace equiloc {

MultiPolynomial GeneratingClassTable::entry(const std::string& base,
                                            const std::string& point) const {
    auto row = rows.find(base);
    if (row != rows.end()) {
        auto cell = row->second.find(point);
        if (cell != row->second.end()) return cell->second;
    }
    return MultiPolynomial(variables);
}

void GeneratingClassTable::set_entry(const std::string& base, const std::string& point,
                                     MultiPolynomial value) {
    if (value.is_zero()) {
        auto row = rows.find(base);
        if (row != rows.end()) row->second.erase(point);
        return;
    }
    rows[base][point] = std::move(value);
}

namespace {

struct Adjacency {
    // neighbor id -> primitive direction pointing from the key vertex out
    std::map<std::string, std::vector<std::pair<std::string, std::vector<Int>>>> out;
};

Adjacency build_adjacency(const GKMModel& model) {
    Adjacency adj;
    for (const IsotropyEdge& edge : model.edges) {
        std::vector<Int> backward = edge.direction;
        for (Int& c : backward) c = -c;
        adj.out[edge.from].emplace_back(edge.to, edge.direction);
        adj.out[edge.to].emplace_back(edge.from, backward);
    }
    return adj;
}

Rational vertex_height(const DelzantPolytope& poly, const std::string& id,
                       const std::vector<Int>& xi) {
    const auto& coords = poly.vertices.at(id);
    Rational h = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) h += coords[i] * xi[i];
    return h;
}

bool in_rational_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
    if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Int& c) {
        return c == 0;
    });
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : basis) rows.emplace_back(b.begin(), b.end());
    const std::size_t base_rank = rational_rank(RationalMatrix::from_rows(rows));
    rows.emplace_back(v.begin(), v.end());
    return rational_rank(RationalMatrix::from_rows(rows)) == base_rank;
}

} // namespace

FlowUpFace flow_up_face(const GKMModel& model, const std::string& base,
                        const CircleSpec& spec) {
    if (!model.polytope) {
        throw capability_error("flow-up faces need polytope data");
    }
    const DelzantPolytope& poly = *model.polytope;
    model.point_index(base); // throws on unknown id
    const Adjacency adj = build_adjacency(model);

    FlowUpFace face;
    face.base = base;

    const Rational base_height = vertex_height(poly, base, spec.xi);
    std::vector<std::vector<Int>> spanning;
    auto it = adj.out.find(base);
    if (it != adj.out.end()) {
        for (const auto& [neighbor, direction] : it->second) {
            const Rational h = vertex_height(poly, neighbor, spec.xi);
            if (h == base_height) {
                throw domain_error("direction is not generic: height tie across edge " +
                                   base + "-" + neighbor);
            }
            if (h > base_height) {
                spanning.push_back(direction);
                face.spanning.push_back(TorusWeight{direction});
            }
        }
    }

    std::set<std::string> members = {base};
    std::vector<std::string> queue = {base};
    while (!queue.empty()) {
        const std::string current = queue.back();
        queue.pop_back();
        auto edges = adj.out.find(current);
        if (edges == adj.out.end()) continue;
        for (const auto& [neighbor, direction] : edges->second) {
            if (members.count(neighbor)) continue;
            if (!in_rational_span(spanning, direction)) continue;
            members.insert(neighbor);
            queue.push_back(neighbor);
        }
    }
    for (const FixedPoint& p : model.fixed_points) {
        if (members.count(p.id)) face.members.push_back(p.id);
    }
    return face;
}

GeneratingClassTable toric_generating_classes(const GKMModel& model, const CircleSpec& spec) {
    if (!model.polytope) {
        throw capability_error("class construction needs polytope data");
    }
    const Adjacency adj = build_adjacency(model);

    GeneratingClassTable table;
    table.variables = model.variables;
    table.spec = spec;
    for (const FixedPoint& p : model.fixed_points) table.point_order.push_back(p.id);

    for (const FixedPoint& p : model.fixed_points) {
        const FlowUpFace face = flow_up_face(model, p.id, spec);
        const std::set<std::string> members(face.members.begin(), face.members.end());
        const int k = morse_index(p, spec) / 2;
        for (const std::string& q : face.members) {
            MultiPolynomial value = MultiPolynomial::constant(model.variables, 1);
            auto edges = adj.out.find(q);
            if (edges != adj.out.end()) {
                for (const auto& [neighbor, direction] : edges->second) {
                    if (members.count(neighbor)) continue;
                    value = value * covector_to_polynomial(direction, model.variables);
                }
            }
            if (k % 2 != 0) value = poly_scale(value, -1);
            table.set_entry(p.id, q, std::move(value));
        }
    }
    return table;
}

GeneratingClassTable specialize_classes(const GeneratingClassTable& table,
                                        const CircleSpec& spec) {
    if (spec.xi.size() != table.variables.size()) {
        throw structural_error("xi length must match the table's variable count");
    }
    GeneratingClassTable out;
    out.point_order = table.point_order;
    out.variables = {spec.residual_variable};
    out.spec = spec;
    for (const auto& [base, row] : table.rows) {
        for (const auto& [point, value] : row) {
            MultiPolynomial mapped =
                specialize_polynomial(value, spec.xi, spec.residual_variable);
            if (mapped.is_zero() && point == base) {
                throw domain_error("diagonal entry at " + base +
                                   " specializes to zero; direction is not generic");
            }
            out.set_entry(base, point, std::move(mapped));
        }
    }
    return out;
}

GeneratingClassTable toric_specialized_classes(const GKMModel& model, const CircleSpec& spec) {
    if (!model.polytope) {
        throw capability_error("class construction needs polytope data");
    }
    const Adjacency adj = build_adjacency(model);

    GeneratingClassTable table;
    table.variables = {spec.residual_variable};
    table.spec = spec;
    for (const FixedPoint& p : model.fixed_points) table.point_order.push_back(p.id);

    for (const FixedPoint& p : model.fixed_points) {
        const FlowUpFace face = flow_up_face(model, p.id, spec);
        const std::set<std::string> members(face.members.begin(), face.members.end());
        const int k = morse_index(p, spec) / 2;
        for (const std::string& q : face.members) {
            Rational coeff = 1;
            int power = 0;
            auto edges = adj.out.find(q);
            if (edges != adj.out.end()) {
                for (const auto& [neighbor, direction] : edges->second) {
                    if (members.count(neighbor)) continue;
                    coeff *= Rational(pairing(direction, spec.xi));
                    power += 1;
                }
            }
            if (k % 2 != 0) coeff = -coeff;
            MultiPolynomial value({spec.residual_variable});
            value.add_term({power}, coeff);
            table.set_entry(p.id, q, std::move(value));
        }
    }
    return table;
}

StarReport validate_condition_star(const GeneratingClassTable& table, const GKMModel& model,
                                   const CircleSpec& spec) {
    StarReport report;
    auto violation = [&](std::string row, std::string column, std::string reason) {
        report.valid = false;
        report.violations.push_back({std::move(row), std::move(column), std::move(reason)});
    };

    std::set<std::string> point_ids;
    for (const FixedPoint& p : model.fixed_points) point_ids.insert(p.id);
    for (const auto& [base, row] : table.rows) {
        if (!point_ids.count(base)) {
            violation(base, "", "row does not correspond to a fixed point");
        }
        for (const auto& [point, value] : row) {
            if (!point_ids.count(point)) {
                violation(base, point, "entry column is not a fixed point");
            }
            if (value.variables() != table.variables) {
                violation(base, point, "entry uses a different variable list");
            }
        }
    }
    for (const FixedPoint& p : model.fixed_points) {
        if (!table.rows.count(p.id)) {
            violation(p.id, "", "no row for this fixed point");
        }
    }
    if (!report.valid) return report;

    // Degrees: each entry is zero or homogeneous of degree index(base)/2.
    for (const FixedPoint& p : model.fixed_points) {
        const int k = morse_index(p, spec) / 2;
        for (const auto& [point, value] : table.rows.at(p.id)) {
            const Homogeneity h = is_homogeneous(value);
            if (h.kind == Homogeneity::Kind::mixed) {
                violation(p.id, point, "entry is not homogeneous");
            } else if (h.kind == Homogeneity::Kind::homogeneous && h.degree != k) {
                violation(p.id, point,
                          "entry degree " + std::to_string(h.degree) +
                              " differs from half the base index " + std::to_string(k));
            }
        }
        if (table.entry(p.id, p.id).is_zero()) {
            report.notes.push_back("diagonal entry of row " + p.id + " is zero");
        }
    }

    // Height support: nonzero entries strictly below the base are recorded
    // as notes (supplied bases from other constructions may have them).
    if (model.polytope) {
        for (const FixedPoint& p : model.fixed_points) {
            const Rational hp = vertex_height(*model.polytope, p.id, spec.xi);
            for (const auto& [point, value] : table.rows.at(p.id)) {
                if (vertex_height(*model.polytope, point, spec.xi) < hp) {
                    report.notes.push_back("row " + p.id + " has a nonzero entry at " + point +
                                           " below its base height");
                }
            }
        }
    }

    if (!report.valid) return report;

    // Independence: flatten each row over (point, monomial) and require
    // full rank over Q.
    std::set<std::pair<std::string, Exponent>> columns;
    for (const auto& [base, row] : table.rows) {
        for (const auto& [point, value] : row) {
            for (const auto& [exponent, coeff] : value.terms()) {
                columns.insert({point, exponent});
            }
        }
    }
    std::vector<std::vector<Rational>> flat;
    for (const FixedPoint& p : model.fixed_points) {
        std::vector<Rational> row;
        row.reserve(columns.size());
        for (const auto& [point, exponent] : columns) {
            row.push_back(table.entry(p.id, point).coefficient(exponent));
        }
        flat.push_back(std::move(row));
    }
    if (rational_rank(RationalMatrix::from_rows(flat)) != table.rows.size()) {
        violation("", "", "rows are linearly dependent over the rationals");
    }
    return report;
}

CongruenceReport check_gkm_congruences(const GeneratingClassTable& table,
                                       const GKMModel& model) {
    if (!model.has_edges()) {
        throw capability_error("congruence checks need edge data");
    }
    const bool full_variables = table.variables == model.variables;
    if (!full_variables && table.variables.size() != 1) {
        throw structural_error("table variables match neither the model nor a single "
                               "grading variable");
    }

    CongruenceReport report;
    for (const auto& [base, row] : table.rows) {
        (void)row;
        for (const IsotropyEdge& edge : model.edges) {
            const MultiPolynomial difference =
                table.entry(base, edge.from) - table.entry(base, edge.to);
            if (difference.is_zero()) continue;
            const LinearForm form = full_variables ? LinearForm(edge.direction)
                                                   : LinearForm({1});
            if (!divide_by_linear_power(difference, form, 1)) {
                report.passed = false;
                report.violations.push_back({base, edge.from, edge.to});
            }
        }
    }
    return report;
}

} // namespace equiloc
