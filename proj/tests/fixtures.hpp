// Shared in-memory models used across the unit test suites.
//
// Each builder returns a fully validated model. The geometric data
// (vertices, edges, weights) matches the corresponding JSON file under
// examples/, so unit tests and file-driven tests exercise the same inputs.

#pragma once

#include <string>
#include <vector>

#include "equiloc/model.hpp"

namespace equiloc::fixtures {

/// Triangular prism over a right triangle of leg 2, thickened to lattice
/// distance 1 in the third coordinate; eight vertices, twelve edges.
inline DelzantPolytope prism_polytope() {
    DelzantPolytope poly;
    poly.vertex_order = {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"};
    poly.vertices = {
        {"v1", {0, 0, 0}}, {"v2", {0, 1, 0}}, {"v3", {2, 0, 0}}, {"v4", {0, 0, 1}},
        {"v5", {1, 1, 0}}, {"v6", {0, 1, 1}}, {"v7", {2, 0, 1}}, {"v8", {1, 1, 1}},
    };
    poly.edges = {
        {"v1", "v2"}, {"v1", "v3"}, {"v2", "v5"}, {"v3", "v5"},
        {"v4", "v6"}, {"v4", "v7"}, {"v6", "v8"}, {"v7", "v8"},
        {"v1", "v4"}, {"v2", "v6"}, {"v3", "v7"}, {"v5", "v8"},
    };
    return poly;
}

inline GKMModel prism_model() {
    GKMModel model = polytope_to_model(prism_polytope(), {"x", "y", "z"});
    model.name = "prism";
    validate_model(model);
    return model;
}

inline CircleSpec prism_spec() { return CircleSpec{{1, 2, 1}, "u"}; }

/// Standard 3-simplex: projective 3-space with the standard torus action.
inline DelzantPolytope simplex3_polytope() {
    DelzantPolytope poly;
    poly.vertex_order = {"p1", "p2", "p3", "p4"};
    poly.vertices = {
        {"p1", {0, 0, 0}}, {"p2", {1, 0, 0}}, {"p3", {0, 1, 0}}, {"p4", {0, 0, 1}},
    };
    poly.edges = {
        {"p1", "p2"}, {"p1", "p3"}, {"p1", "p4"},
        {"p2", "p3"}, {"p2", "p4"}, {"p3", "p4"},
    };
    return poly;
}

inline GKMModel simplex3_model() {
    GKMModel model = polytope_to_model(simplex3_polytope(), {"x", "y", "z"});
    model.name = "simplex3";
    validate_model(model);
    return model;
}

inline CircleSpec simplex3_spec() { return CircleSpec{{1, 2, 3}, "u"}; }

/// Unit triangle: projective 2-space.
inline DelzantPolytope triangle_polytope() {
    DelzantPolytope poly;
    poly.vertex_order = {"q1", "q2", "q3"};
    poly.vertices = {{"q1", {0, 0}}, {"q2", {1, 0}}, {"q3", {0, 1}}};
    poly.edges = {{"q1", "q2"}, {"q1", "q3"}, {"q2", "q3"}};
    return poly;
}

inline GKMModel triangle_model() {
    GKMModel model = polytope_to_model(triangle_polytope(), {"x", "y"});
    model.name = "triangle";
    validate_model(model);
    return model;
}

inline CircleSpec triangle_spec() { return CircleSpec{{1, 2}, "u"}; }

/// Trapezoid: one-point blow-up of the triangle scaled by 2.
inline DelzantPolytope trapezoid_polytope() {
    DelzantPolytope poly;
    poly.vertex_order = {"w1", "w2", "w3", "w4"};
    poly.vertices = {{"w1", {0, 0}}, {"w2", {2, 0}}, {"w3", {1, 1}}, {"w4", {0, 1}}};
    poly.edges = {{"w1", "w2"}, {"w2", "w3"}, {"w3", "w4"}, {"w1", "w4"}};
    return poly;
}

inline GKMModel trapezoid_model() {
    GKMModel model = polytope_to_model(trapezoid_polytope(), {"x", "y"});
    model.name = "trapezoid";
    validate_model(model);
    return model;
}

inline CircleSpec trapezoid_spec() { return CircleSpec{{1, 2}, "u"}; }

/// Two-point sphere: the projective line with the standard circle action.
inline GKMModel sphere_model() {
    GKMModel model;
    model.rank = 1;
    model.name = "sphere";
    model.variables = {"u"};
    model.fixed_points = {
        {"p1", {TorusWeight{{1}}}},
        {"p2", {TorusWeight{{-1}}}},
    };
    model.edges = {{"p1", "p2", {1}}};
    validate_model(model);
    return model;
}

inline CircleSpec sphere_spec() { return CircleSpec{{1}, "u"}; }

/// Eight fixed points with circle weights only (no one-skeleton data):
/// a coadjoint-orbit-style example entering through a printed class table.
inline GKMModel eightpoint_model() {
    GKMModel model;
    model.rank = 1;
    model.name = "eightpoint";
    model.variables = {"x"};
    auto w = [](std::vector<Int> entries) {
        std::vector<TorusWeight> out;
        for (Int& e : entries) out.push_back(TorusWeight{{e}});
        return out;
    };
    model.fixed_points = {
        {"p1", w({1, 1, 1})},   {"p2", w({-1, 1, 2})},  {"p3", w({-1, 1, 2})},
        {"p4", w({-1, 1, 1})},  {"p5", w({-1, -1, 1})}, {"p6", w({-1, -2, 1})},
        {"p7", w({-1, -2, 1})}, {"p8", w({-1, -1, -1})},
    };
    validate_model(model);
    return model;
}

inline CircleSpec eightpoint_spec() { return CircleSpec{{1}, "x"}; }

/// Five fixed points of a rank-2 torus action on an 8-dimensional space.
inline GKMModel fivepoint_model() {
    GKMModel model;
    model.rank = 2;
    model.name = "fivepoint";
    model.variables = {"x", "y"};
    auto w = [](std::vector<std::vector<Int>> entries) {
        std::vector<TorusWeight> out;
        for (auto& e : entries) out.push_back(TorusWeight{std::move(e)});
        return out;
    };
    model.fixed_points = {
        {"p1", w({{1, 0}, {2, 0}, {3, 0}, {1, 1}})},
        {"p2", w({{-1, 0}, {1, 0}, {2, 0}, {0, 1}})},
        {"p3", w({{-2, 0}, {-1, 0}, {1, 0}, {-1, 1}})},
        {"p4", w({{-3, 0}, {-2, 0}, {-1, 0}, {-2, 1}})},
        {"p5", w({{-1, -1}, {0, -1}, {1, -1}, {2, -1}})},
    };
    validate_model(model);
    return model;
}

inline CircleSpec fivepoint_spec() { return CircleSpec{{3, 1}, "u"}; }

} // namespace equiloc::fixtures

#include "equiloc/classes.hpp"

namespace equiloc::fixtures {

/// The supplied class table for the eight-point model, one row per fixed
/// point, entries in the single variable x. Matches examples/so5_reduced.json.
inline GeneratingClassTable eightpoint_table() {
    const GKMModel model = eightpoint_model();
    GeneratingClassTable table;
    table.variables = {"x"};
    table.spec = eightpoint_spec();
    for (const auto& p : model.fixed_points) table.point_order.push_back(p.id);
    auto put = [&](const std::string& base, const std::string& point, int degree,
                   const Rational& coeff) {
        MultiPolynomial value({"x"});
        value.add_term({degree}, coeff);
        table.set_entry(base, point, std::move(value));
    };
    for (const auto& id : table.point_order) put("p1", id, 0, 1);
    put("p2", "p3", 1, -1);
    put("p2", "p5", 1, -1);
    put("p2", "p7", 1, -1);
    put("p2", "p8", 1, -1);
    put("p3", "p1", 1, 1);
    put("p3", "p2", 1, 2);
    put("p3", "p7", 1, -2);
    put("p3", "p8", 1, -1);
    put("p4", "p1", 1, -1);
    put("p4", "p2", 1, -2);
    put("p4", "p4", 1, -1);
    put("p4", "p5", 1, -1);
    put("p4", "p6", 1, -2);
    put("p4", "p8", 1, -1);
    put("p5", "p7", 2, 2);
    put("p5", "p8", 2, 1);
    put("p6", "p5", 2, 1);
    put("p6", "p8", 2, 1);
    put("p7", "p1", 2, -1);
    put("p7", "p2", 2, -4);
    put("p7", "p8", 2, 1);
    put("p8", "p8", 3, -1);
    return table;
}

/// Supplied table for the two-point sphere: the unit row and the class
/// supported on the top point.
inline GeneratingClassTable sphere_table() {
    GeneratingClassTable table;
    table.variables = {"u"};
    table.spec = sphere_spec();
    table.point_order = {"p1", "p2"};
    MultiPolynomial one = MultiPolynomial::constant({"u"}, 1);
    MultiPolynomial u = MultiPolynomial::variable({"u"}, 0);
    table.set_entry("p1", "p1", one);
    table.set_entry("p1", "p2", one);
    table.set_entry("p2", "p2", u);
    return table;
}

/// Alternative degree-1 row for the trapezoid model (a different valid
/// choice of the class based at w2). Matches examples/blowup_alt.json.
inline GeneratingClassTable trapezoid_alt_table() {
    const GKMModel model = trapezoid_model();
    GeneratingClassTable table = toric_generating_classes(model, trapezoid_spec());
    MultiPolynomial x = MultiPolynomial::variable({"x", "y"}, 0);
    MultiPolynomial y = MultiPolynomial::variable({"x", "y"}, 1);
    table.rows["w2"].clear();
    table.set_entry("w2", "w2", x);
    table.set_entry("w2", "w3", y);
    table.set_entry("w2", "w4", y);
    return table;
}

} // namespace equiloc::fixtures
