// Generating class tables for toric models.
//
// The constructive input is a moment polytope with a generic circle
// direction. Each vertex p determines a flow-up face G_p (the face spanned
// by the ascending edges at p) and a table row whose entry at q in G_p is
// the product of the primitive directions pointing from q to its neighbors
// outside G_p, normalized so that the diagonal entry equals (-1)^k times
// the product of the descending weights at p (k = half the index of p).
// Tables can also be supplied directly and validated.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "equiloc/model.hpp"
#include "equiloc/polynomial.hpp"

namespace equiloc {

/// The face of the polytope swept out by flowing up from `base`.
struct FlowUpFace {
    std::string base;
    std::vector<std::string> members;   // in model point order; includes base
    std::vector<TorusWeight> spanning;  // ascending edge directions at base
};

/// A table of cohomology classes restricted to the fixed points: one row per
/// base point, one column per fixed point, zero entries omitted.
class GeneratingClassTable {
  public:
    std::vector<std::string> point_order;
    std::vector<std::string> variables;
    CircleSpec spec;
    std::map<std::string, std::map<std::string, MultiPolynomial>> rows;

    /// Entry of row `base` at column `point`; zero polynomial if absent.
    MultiPolynomial entry(const std::string& base, const std::string& point) const;

    /// Store an entry, dropping zeros to keep the representation canonical.
    void set_entry(const std::string& base, const std::string& point, MultiPolynomial value);

    bool operator==(const GeneratingClassTable& other) const = default;
};

/// Compute the flow-up face of `base`: the members are the vertices
/// reachable from `base` along edges whose directions lie in the span of
/// the ascending edge directions at `base`. The minimum vertex yields the
/// whole polytope; the maximum vertex yields itself with no spanning set.
/// Requires polytope data (capability error) and a generic direction
/// (domain error on a height tie across an incident edge).
FlowUpFace flow_up_face(const GKMModel& model, const std::string& base,
                        const CircleSpec& spec);

/// Build the full class table over all torus variables. Row p vanishes
/// outside G_p; inside, the entry at q is (-1)^(index(p)/2) times the
/// product over neighbors r of q outside G_p of the linear form prim(r-q).
GeneratingClassTable toric_generating_classes(const GKMModel& model, const CircleSpec& spec);

/// Apply the ring map x_i -> xi_i * u to every entry. A diagonal entry
/// collapsing to zero means the direction was not generic (domain error).
GeneratingClassTable specialize_classes(const GeneratingClassTable& table,
                                        const CircleSpec& spec);

/// One-variable table computed directly from projected primitive vectors;
/// equals specialize_classes(toric_generating_classes(model, spec), spec).
GeneratingClassTable toric_specialized_classes(const GKMModel& model, const CircleSpec& spec);

struct StarViolation {
    std::string row;
    std::string column; // empty when the violation is not tied to one entry
    std::string reason;
};

/// Validation verdict for a class table. `violations` are disqualifying
/// (row/point mismatch, inhomogeneous or wrong-degree entries, dependent
/// rows); `notes` record informational findings (zero diagonal entries,
/// nonzero entries below the base height) that some valid supplied bases
/// exhibit.
struct StarReport {
    bool valid = true;
    std::vector<StarViolation> violations;
    std::vector<std::string> notes;
};

/// Check a table against the model: rows correspond one-to-one with fixed
/// points, every entry is zero or homogeneous of degree index(base)/2, and
/// the rows are linearly independent over the rationals.
StarReport validate_condition_star(const GeneratingClassTable& table, const GKMModel& model,
                                   const CircleSpec& spec);

struct CongruenceViolation {
    std::string row;
    std::string from;
    std::string to;
};

struct CongruenceReport {
    bool passed = true;
    std::vector<CongruenceViolation> violations;
};

/// For every row and every edge (p,q) with direction w, the difference of
/// the two entries must be divisible by the linear form of w (for tables in
/// the full variables) or by the grading variable (for one-variable
/// tables). Requires edge data (capability error).
CongruenceReport check_gkm_congruences(const GeneratingClassTable& table,
                                       const GKMModel& model);

} // namespace equiloc
