// Combinatorial fixed-point model of a torus action.
//
// A GKMModel holds isolated fixed points with integral weight lists, an
// optional edge list (isotropy two-spheres), and an optional moment
// polytope whose vertices correspond to the fixed points. Derived
// quantities: genericity of a circle direction, fixed-point indices, Betti
// numbers, graded dimension series, and circle Euler classes.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/polynomial.hpp"
#include "equiloc/rational.hpp"

namespace equiloc {

/// Integral weight of a torus representation, one entry per torus factor.
struct TorusWeight {
    std::vector<Int> components;

    bool operator==(const TorusWeight& other) const = default;
};

/// A fixed point with the weights of the torus action on its tangent space.
struct FixedPoint {
    std::string id;
    std::vector<TorusWeight> weights;
};

/// An edge of the one-skeleton: a two-sphere joining two fixed points.
/// `direction` is the primitive weight pointing from `from` to `to`; it
/// appears (up to sign) in the weight lists of both endpoints.
struct IsotropyEdge {
    std::string from;
    std::string to;
    std::vector<Int> direction;
};

/// A simple smooth lattice polytope given by vertices and vertex-id edges.
struct DelzantPolytope {
    std::vector<std::string> vertex_order; // declaration order, for stable output
    std::map<std::string, std::vector<Rational>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    std::size_t dimension() const {
        return vertices.empty() ? 0 : vertices.begin()->second.size();
    }
};

/// A one-parameter direction: integer vector xi plus the name of the
/// grading variable of the corresponding one-variable ring.
struct CircleSpec {
    std::vector<Int> xi;
    std::string residual_variable = "u";

    bool operator==(const CircleSpec& other) const = default;
};

class GKMModel {
  public:
    int rank = 0;
    std::string name;
    std::vector<std::string> variables;
    std::vector<FixedPoint> fixed_points;
    std::vector<IsotropyEdge> edges;
    std::optional<DelzantPolytope> polytope;

    std::size_t point_count() const { return fixed_points.size(); }

    /// Number of weights per fixed point (half the real dimension).
    std::size_t half_dimension() const {
        return fixed_points.empty() ? 0 : fixed_points.front().weights.size();
    }

    bool has_edges() const { return !edges.empty(); }

    std::size_t point_index(const std::string& id) const;
    const FixedPoint& point(const std::string& id) const;
};

/// Structural validation of a model: unique ids, uniform weight counts,
/// nonzero integral weights, edge references and direction consistency,
/// polytope simplicity/smoothness and weight agreement. Throws
/// validation_error with the offending path.
void validate_model(const GKMModel& model);

/// Integer pairing of a weight (or any integer covector) with xi.
Int pairing(const std::vector<Int>& weight, const std::vector<Int>& xi);

struct GenericityViolation {
    std::string point_id;
    std::size_t weight_index = 0;
};

struct GenericityReport {
    bool generic = true;
    std::vector<GenericityViolation> violations;
};

/// True iff no fixed-point weight pairs to zero with spec.xi.
GenericityReport is_generic(const GKMModel& model, const CircleSpec& spec);

/// Twice the number of weights pairing negatively with xi.
/// A vanishing pairing is a domain error naming the weight.
int morse_index(const FixedPoint& point, const CircleSpec& spec);

/// Product of the weight pairings times u^(weight count): a nonzero rational
/// multiple of u^n in the grading variable of `spec`.
MultiPolynomial euler_class_circle(const FixedPoint& point, const CircleSpec& spec);

/// b_k = number of fixed points of index 2k, for k = 0..half_dimension.
std::vector<int> betti_numbers(const GKMModel& model, const CircleSpec& spec);

/// Coefficients of the graded dimension series in the one-variable grading:
/// entry l (for 2l <= degree_cap) is sum of b_k over k <= min(l, n_half).
std::vector<Int> equivariant_poincare_series(const GKMModel& model, const CircleSpec& spec,
                                             int degree_cap);

/// Degree-l dimensions of a free graded module with betti[k] generators in
/// degree k over a polynomial ring in `num_variables` variables, for
/// l = 0..max_degree. Entry l is sum_k betti[k] * C(l-k+n-1, n-1).
std::vector<Int> free_module_dimensions(const std::vector<int>& betti,
                                        std::size_t num_variables, int max_degree);

/// Build a model from a polytope: one fixed point per vertex, weights equal
/// to the primitive directions of its incident edges, edges carried over.
/// Simplicity and smoothness are validated (validation_error names the
/// vertex).
GKMModel polytope_to_model(const DelzantPolytope& polytope,
                           const std::vector<std::string>& variables);

/// Direct each edge from the lower to the higher xi-pairing. Uses vertex
/// coordinates when a polytope is present, otherwise the edge directions.
/// A tie across an edge is a domain error.
std::vector<std::pair<std::string, std::string>> orient_edges(const GKMModel& model,
                                                              const CircleSpec& spec);

/// Primitive integer vector in the direction of a rational vector
/// (orientation preserved). Zero vector is a domain error.
std::vector<Int> primitive_direction(const std::vector<Rational>& v);

/// Determinant of a square integer matrix (exact, fraction-free).
Int integer_determinant(std::vector<std::vector<Int>> m);

} // namespace equiloc
