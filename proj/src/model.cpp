#include "equiloc/model.hpp"

#include <algorithm>
#include <set>

namespace equiloc {

namespace {

bool weight_matches_up_to_sign(const std::vector<Int>& direction, const TorusWeight& w) {
    if (w.components == direction) return true;
    std::vector<Int> negated = w.components;
    for (Int& c : negated) c = -c;
    return negated == direction;
}

bool point_has_direction(const FixedPoint& p, const std::vector<Int>& direction) {
    return std::any_of(p.weights.begin(), p.weights.end(), [&](const TorusWeight& w) {
        return weight_matches_up_to_sign(direction, w);
    });
}

} // namespace

std::size_t GKMModel::point_index(const std::string& id) const {
    for (std::size_t i = 0; i < fixed_points.size(); ++i) {
        if (fixed_points[i].id == id) return i;
    }
    throw structural_error("unknown fixed point id: " + id);
}

const FixedPoint& GKMModel::point(const std::string& id) const {
    return fixed_points[point_index(id)];
}

Int pairing(const std::vector<Int>& weight, const std::vector<Int>& xi) {
    if (weight.size() != xi.size()) {
        throw structural_error("pairing of vectors with different lengths");
    }
    Int total = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) total += weight[i] * xi[i];
    return total;
}

std::vector<Int> primitive_direction(const std::vector<Rational>& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;

    Int scale = 1;
    for (const Rational& c : v) scale = lcm(scale, denominator(c));
    std::vector<Int> out(v.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (scale / denominator(v[i]));
        if (out[i] != 0) all_zero = false;
    }
    if (all_zero) throw domain_error("primitive direction of the zero vector");
    return primitive_vector(std::move(out));
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw structural_error("determinant of a non-square matrix");
    }
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]) / prev;
            }
            m[r][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

void validate_model(const GKMModel& model) {
    if (model.rank < 1) throw validation_error("torus rank must be at least 1", "rank");
    if (model.variables.size() != static_cast<std::size_t>(model.rank)) {
        throw validation_error("variable count must equal the torus rank", "variables");
    }
    {
        std::set<std::string> seen;
        for (const auto& v : model.variables) {
            if (v.empty() || !seen.insert(v).second) {
                throw validation_error("variable names must be distinct and non-empty",
                                       "variables");
            }
        }
    }
    if (model.fixed_points.empty()) {
        throw validation_error("model needs at least one fixed point", "fixed_points");
    }

    const std::size_t n_half = model.fixed_points.front().weights.size();
    std::set<std::string> ids;
    for (std::size_t i = 0; i < model.fixed_points.size(); ++i) {
        const FixedPoint& p = model.fixed_points[i];
        const std::string path = "fixed_points[" + std::to_string(i) + "]";
        if (p.id.empty() || !ids.insert(p.id).second) {
            throw validation_error("fixed point ids must be distinct and non-empty", path);
        }
        if (p.weights.size() != n_half) {
            throw validation_error("all fixed points must carry the same number of weights",
                                   path + ".weights");
        }
        for (std::size_t w = 0; w < p.weights.size(); ++w) {
            const auto& comp = p.weights[w].components;
            const std::string wpath = path + ".weights[" + std::to_string(w) + "]";
            if (comp.size() != static_cast<std::size_t>(model.rank)) {
                throw validation_error("weight length must equal the torus rank", wpath);
            }
            if (std::all_of(comp.begin(), comp.end(), [](const Int& c) { return c == 0; })) {
                throw validation_error("weights must be nonzero", wpath);
            }
        }
    }

    for (std::size_t e = 0; e < model.edges.size(); ++e) {
        const IsotropyEdge& edge = model.edges[e];
        const std::string path = "edges[" + std::to_string(e) + "]";
        if (!ids.count(edge.from) || !ids.count(edge.to)) {
            throw validation_error("edge endpoint references unknown fixed point", path);
        }
        if (edge.from == edge.to) {
            throw validation_error("edge endpoints must differ", path);
        }
        if (edge.direction.size() != static_cast<std::size_t>(model.rank)) {
            throw validation_error("edge direction length must equal the torus rank",
                                   path + ".direction");
        }
        if (edge.direction != primitive_vector(edge.direction)) {
            throw validation_error("edge direction must be primitive", path + ".direction");
        }
        if (!point_has_direction(model.point(edge.from), edge.direction) ||
            !point_has_direction(model.point(edge.to), edge.direction)) {
            throw validation_error(
                "edge direction must appear (up to sign) in both endpoint weight lists",
                path + ".direction");
        }
    }

    if (model.polytope) {
        const DelzantPolytope& poly = *model.polytope;
        if (poly.vertices.size() != model.fixed_points.size()) {
            throw validation_error("polytope vertex count must match fixed point count",
                                   "vertices");
        }
        for (const auto& id : ids) {
            if (!poly.vertices.count(id)) {
                throw validation_error("fixed point has no polytope vertex: " + id, "vertices");
            }
        }
        // Rebuilding from the polytope re-runs simplicity/smoothness checks.
        const GKMModel derived = polytope_to_model(poly, model.variables);
        for (const FixedPoint& p : model.fixed_points) {
            const FixedPoint& q = derived.point(p.id);
            // Weight lists must agree as multisets.
            auto key = [](const TorusWeight& w) { return w.components; };
            std::multiset<std::vector<Int>> a, b;
            for (const auto& w : p.weights) a.insert(key(w));
            for (const auto& w : q.weights) b.insert(key(w));
            if (a != b) {
                throw validation_error(
                    "fixed point weights disagree with polytope edge directions at " + p.id,
                    "vertices." + p.id);
            }
        }
    }
}

GenericityReport is_generic(const GKMModel& model, const CircleSpec& spec) {
    if (spec.xi.size() != static_cast<std::size_t>(model.rank)) {
        throw structural_error("xi length must equal the torus rank");
    }
    GenericityReport report;
    for (const FixedPoint& p : model.fixed_points) {
        for (std::size_t w = 0; w < p.weights.size(); ++w) {
            if (pairing(p.weights[w].components, spec.xi) == 0) {
                report.generic = false;
                report.violations.push_back({p.id, w});
            }
        }
    }
    return report;
}

int morse_index(const FixedPoint& point, const CircleSpec& spec) {
    int negative = 0;
    for (std::size_t w = 0; w < point.weights.size(); ++w) {
        const Int value = pairing(point.weights[w].components, spec.xi);
        if (value == 0) {
            throw domain_error("weight " + std::to_string(w) + " at fixed point " + point.id +
                               " pairs to zero with xi; direction is not generic");
        }
        if (value < 0) ++negative;
    }
    return 2 * negative;
}

MultiPolynomial euler_class_circle(const FixedPoint& point, const CircleSpec& spec) {
    Rational product = 1;
    for (std::size_t w = 0; w < point.weights.size(); ++w) {
        const Int value = pairing(point.weights[w].components, spec.xi);
        if (value == 0) {
            throw domain_error("weight " + std::to_string(w) + " at fixed point " + point.id +
                               " pairs to zero with xi; Euler class degenerates");
        }
        product *= value;
    }
    MultiPolynomial result({spec.residual_variable});
    result.add_term({static_cast<int>(point.weights.size())}, product);
    return result;
}

std::vector<int> betti_numbers(const GKMModel& model, const CircleSpec& spec) {
    std::vector<int> betti(model.half_dimension() + 1, 0);
    for (const FixedPoint& p : model.fixed_points) {
        betti[static_cast<std::size_t>(morse_index(p, spec)) / 2] += 1;
    }
    return betti;
}

std::vector<Int> equivariant_poincare_series(const GKMModel& model, const CircleSpec& spec,
                                             int degree_cap) {
    if (degree_cap < 0) throw structural_error("degree cap must be non-negative");
    const std::vector<int> betti = betti_numbers(model, spec);
    std::vector<Int> series;
    for (int l = 0; 2 * l <= degree_cap; ++l) {
        Int total = 0;
        for (int k = 0; k <= l && k < static_cast<int>(betti.size()); ++k) {
            total += betti[static_cast<std::size_t>(k)];
        }
        series.push_back(total);
    }
    return series;
}

namespace {

Int binomial(const Int& top, int bottom) {
    if (bottom < 0 || top < bottom) return 0;
    Int result = 1;
    for (int i = 1; i <= bottom; ++i) {
        result = result * (top - bottom + i) / i;
    }
    return result;
}

} // namespace

std::vector<Int> free_module_dimensions(const std::vector<int>& betti,
                                        std::size_t num_variables, int max_degree) {
    std::vector<Int> dims;
    for (int l = 0; l <= max_degree; ++l) {
        Int total = 0;
        for (std::size_t k = 0; k < betti.size(); ++k) {
            const int shift = l - static_cast<int>(k);
            if (shift < 0) continue;
            total += Int(betti[k]) *
                     binomial(Int(shift) + Int(num_variables) - 1,
                              static_cast<int>(num_variables) - 1);
        }
        dims.push_back(total);
    }
    return dims;
}

GKMModel polytope_to_model(const DelzantPolytope& polytope,
                           const std::vector<std::string>& variables) {
    const std::size_t n = polytope.dimension();
    if (n == 0 || variables.size() != n) {
        throw validation_error("polytope dimension must match the variable count", "vertices");
    }
    for (const auto& [id, coords] : polytope.vertices) {
        if (coords.size() != n) {
            throw validation_error("vertex coordinate length mismatch", "vertices." + id);
        }
    }

    std::map<std::string, std::vector<std::vector<Int>>> directions_at;
    for (std::size_t e = 0; e < polytope.edges.size(); ++e) {
        const auto& [a, b] = polytope.edges[e];
        const std::string path = "polytope.edges[" + std::to_string(e) + "]";
        if (!polytope.vertices.count(a) || !polytope.vertices.count(b)) {
            throw validation_error("polytope edge references unknown vertex", path);
        }
        if (a == b) throw validation_error("polytope edge endpoints must differ", path);
        const auto& ca = polytope.vertices.at(a);
        const auto& cb = polytope.vertices.at(b);
        std::vector<Rational> diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = cb[i] - ca[i];
        const std::vector<Int> forward = primitive_direction(diff);
        std::vector<Int> backward = forward;
        for (Int& c : backward) c = -c;
        directions_at[a].push_back(forward);
        directions_at[b].push_back(backward);
    }

    GKMModel model;
    model.rank = static_cast<int>(n);
    model.variables = variables;
    for (const std::string& id : polytope.vertex_order) {
        const auto& dirs = directions_at[id];
        if (dirs.size() != n) {
            throw validation_error("vertex must meet exactly " + std::to_string(n) +
                                       " edges (simplicity)",
                                   "vertices." + id);
        }
        std::vector<std::vector<Int>> matrix = dirs;
        const Int det = integer_determinant(matrix);
        if (det != 1 && det != -1) {
            throw validation_error("primitive edge directions do not form a lattice basis "
                                   "(smoothness)",
                                   "vertices." + id);
        }
        FixedPoint p;
        p.id = id;
        for (const auto& d : dirs) p.weights.push_back(TorusWeight{d});
        model.fixed_points.push_back(std::move(p));
    }
    for (const auto& [a, b] : polytope.edges) {
        const auto& ca = polytope.vertices.at(a);
        const auto& cb = polytope.vertices.at(b);
        std::vector<Rational> diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = cb[i] - ca[i];
        model.edges.push_back({a, b, primitive_direction(diff)});
    }
    model.polytope = polytope;
    return model;
}

std::vector<std::pair<std::string, std::string>> orient_edges(const GKMModel& model,
                                                              const CircleSpec& spec) {
    if (!model.has_edges() && !model.polytope) {
        throw capability_error("orient_edges needs edge or polytope data");
    }
    if (spec.xi.size() != static_cast<std::size_t>(model.rank)) {
        throw structural_error("xi length must equal the torus rank");
    }
    std::vector<std::pair<std::string, std::string>> directed;
    if (model.polytope) {
        const DelzantPolytope& poly = *model.polytope;
        for (const auto& [a, b] : poly.edges) {
            Rational ha = 0, hb = 0;
            const auto& ca = poly.vertices.at(a);
            const auto& cb = poly.vertices.at(b);
            for (std::size_t i = 0; i < ca.size(); ++i) {
                ha += ca[i] * spec.xi[i];
                hb += cb[i] * spec.xi[i];
            }
            if (ha == hb) {
                throw domain_error("xi ties across polytope edge " + a + "-" + b);
            }
            directed.emplace_back(ha < hb ? a : b, ha < hb ? b : a);
        }
        return directed;
    }
    for (const IsotropyEdge& edge : model.edges) {
        const Int value = pairing(edge.direction, spec.xi);
        if (value == 0) {
            throw domain_error("xi ties across edge " + edge.from + "-" + edge.to);
        }
        if (value > 0) {
            directed.emplace_back(edge.from, edge.to);
        } else {
            directed.emplace_back(edge.to, edge.from);
        }
    }
    return directed;
}

} // namespace equiloc
