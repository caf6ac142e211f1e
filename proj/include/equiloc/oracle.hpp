// Independent cross-checks for relation systems.
//
// Three tools that validate a relation system against ground truth that is
// computable by brute force: edge-congruence systems read straight off a
// model's one-skeleton, exact per-degree solution-space dimensions of the
// truncated linear problem a system defines, and degreewise comparison of
// two systems' solution spaces (equality or containment, decided exactly).

#pragma once

#include <optional>
#include <vector>

#include "equiloc/model.hpp"
#include "equiloc/relations.hpp"

namespace equiloc {

/// Per-degree dimension table for a relation system truncated at `degree_cap`.
/// Entry `l` of each vector describes homogeneous degree `l`; the solution
/// dimension never exceeds the coefficient dimension.
struct DegreeTruncation {
    int degree_cap = 0;
    std::vector<Int> coefficient_dims; // d * (monomials of degree l)
    std::vector<Int> solution_dims;    // kernel of the degree-l constraints
};

/// How two solution spaces sit relative to each other in one degree.
enum class ContainmentKind {
    equal,
    first_inside_second,  // strict: dim(first) < dim(second)
    second_inside_first,  // strict: dim(second) < dim(first)
    incomparable,
};

struct DegreeComparison {
    int degree = 0;
    Int dim_first = 0;
    Int dim_second = 0;
    ContainmentKind relation = ContainmentKind::equal;
};

struct SystemComparison {
    bool all_equal = false;
    std::vector<DegreeComparison> degrees;
};

/// One divisibility relation per recorded edge, read straight off the
/// one-skeleton: the values of a class at the two ends of an edge agree
/// modulo the edge direction.
///
/// With a circle specification the system is graded in the residual
/// variable: the edge direction pairs against xi (a zero pairing means the
/// direction is not generic and is refused), and each relation becomes
/// "difference divisible by the residual variable". Without one the system
/// keeps the full coefficient ring and the modulus is the edge direction
/// itself as a linear form.
///
/// Models without edge data are refused with a capability error.
RelationSystem gkm_edge_relations(const GKMModel& model,
                                  const std::optional<CircleSpec>& spec);

/// Exact per-degree dimensions of the truncated solution space of `system`,
/// for homogeneous degrees 0..degree_cap. Works for any number of ring
/// variables; each divisibility constraint is turned into exact linear
/// conditions via a unimodular change of coordinates that maps the modulus
/// form to a single variable. Caps above 8 are refused (the dense monomial
/// bases grow too fast beyond that to stay an honest brute-force check).
DegreeTruncation truncated_solution_dimension(const RelationSystem& system,
                                              int degree_cap);

/// Degreewise comparison of two systems' solution spaces for degrees
/// 0..degree_cap.
///
/// Without `specialize_first` both systems must share the point order and
/// variable list; each degree reports both dimensions and whether one
/// solution space contains the other (decided by exact membership of kernel
/// bases, not by dimensions alone).
///
/// With `specialize_first`, `first` is a full-ring system whose degree-l
/// solutions are specialized onto the circle grading of `second` (every
/// ring variable maps to its xi-pairing times the residual variable); the
/// reported first dimension is the dimension of the specialized image.
SystemComparison compare_systems(const RelationSystem& first,
                                 const RelationSystem& second,
                                 int degree_cap,
                                 const std::optional<CircleSpec>& specialize_first = std::nullopt);

} // namespace equiloc
