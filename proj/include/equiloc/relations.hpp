// Divisibility relations cut out by fixed-point localization.
//
// A class table row a_p of degree m, on a space with n weights per fixed
// point, forces Σ_j s_j·f_j ∈ (α^{n-m}) for every cohomology tuple f, where
// s_j = lead(a_p(p_j))/lead(e(p_j)) and α is the grading form. This module
// extracts those relations, tests tuples against them (directly via exact
// Laurent sums, or via divisibility for ambient multi-variable systems),
// lifts sub-model relations into an ambient ring, and verifies the counting
// identities satisfied by the relation ranks.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equiloc/classes.hpp"
#include "equiloc/laurent.hpp"
#include "equiloc/model.hpp"
#include "equiloc/polynomial.hpp"

namespace equiloc {

/// A candidate cohomology class, restricted to the fixed points.
struct CohomologyTuple {
    std::vector<std::string> point_order;
    std::vector<MultiPolynomial> values; // aligned with point_order

    const MultiPolynomial& value(const std::string& id) const;
};

/// Σ_j coeffs[j]·f_j must be divisible by modulus_form^modulus_power.
/// Coefficients are coprime integers, first nonzero positive, zeros omitted.
struct DivisibilityRelation {
    std::map<std::string, Int> coeffs;
    LinearForm modulus_form = LinearForm({1});
    int modulus_power = 1;
    std::string from_class; // base point of the class row this came from
    int grade = 0;          // degree of that row's entries

    bool operator==(const DivisibilityRelation& other) const = default;
};

/// All relations extracted from one table (or assembled from lifted parts),
/// over a common point order and coefficient-ring variable list.
struct RelationSystem {
    std::string model_name;
    std::vector<std::string> point_order;
    std::vector<std::string> variables;
    CircleSpec spec;
    std::vector<DivisibilityRelation> relations;
};

/// Exact fixed-point integration: Σ_j f_j / e_j as a Laurent polynomial in
/// the grading variable. Each Euler class must be a nonzero monomial.
LaurentUnivariate abbv_integrate(const CohomologyTuple& f,
                                 const std::vector<MultiPolynomial>& eulers,
                                 const CircleSpec& spec);

/// Normalize a rational coefficient vector to coprime integers with the
/// first nonzero entry positive. All-zero input is a domain error.
std::map<std::string, Int> normalize_relation_coefficients(
    const std::vector<std::string>& point_order, const std::vector<Rational>& raw);

/// Extract the relation forced by one table row. Rows of top degree (equal
/// to the weight count) impose no condition and yield nullopt.
std::optional<DivisibilityRelation> relation_from_class(
    const GeneratingClassTable& table, const std::string& base,
    const std::vector<MultiPolynomial>& eulers, const CircleSpec& spec);

/// One relation per non-top row, in table point order. The table is
/// validated first; for one-variable systems the per-degree independence
/// invariant is asserted.
RelationSystem full_relation_system(const GeneratingClassTable& table, const GKMModel& model,
                                    const CircleSpec& spec);

struct MembershipFailure {
    std::string from_class;      // base class whose localization sum fails
    LaurentUnivariate witness;   // its negative-degree terms
};

struct MembershipVerdict {
    bool passed = true;
    std::vector<MembershipFailure> failures;
};

/// Direct test of the localization criterion: f is a class iff for every
/// base row a_p the sum Σ_j f_j·a_p(p_j)/e_j is a genuine polynomial.
/// Failures carry the exact principal part as a witness.
MembershipVerdict membership_test(const CohomologyTuple& f, const GeneratingClassTable& table,
                                  const GKMModel& model, const CircleSpec& spec);

struct RelationViolation {
    std::size_t relation_index = 0;
    std::string from_class;
};

struct SystemVerdict {
    bool passed = true;
    std::vector<RelationViolation> violations;
};

/// Divisibility-based test against an explicit relation system: every
/// Σ_j s_j·f_j must be divisible by the relation's modulus.
SystemVerdict system_membership(const CohomologyTuple& f, const RelationSystem& system);

/// Transport a sub-model relation into the ambient ring: coefficients move
/// to the embedded point ids, the modulus becomes residual_form^power over
/// `ambient_rank` variables. The embedding must be injective and cover all
/// coefficient ids.
DivisibilityRelation lift_relation(const DivisibilityRelation& rel,
                                   const LinearForm& residual_form,
                                   const std::map<std::string, std::string>& embedding,
                                   std::size_t ambient_rank);

/// Concatenate lifted systems over one ambient model, dropping exact
/// duplicates (normalization makes scalar multiples identical).
RelationSystem assemble_torus_system(const std::vector<RelationSystem>& parts);

struct DegreeCount {
    int degree = 0;
    std::size_t active = 0; // relations whose modulus power exceeds `degree`
    std::size_t rank = 0;   // rank of their coefficient vectors over Q
};

/// Active-relation count and exact rank for each coefficient degree
/// 0..max_degree (one-variable systems only).
std::vector<DegreeCount> relation_degree_profile(const RelationSystem& system, int max_degree);

struct CountRow {
    int degree = 0;
    Int expected = 0;
    std::size_t actual = 0;
    bool match = false;
};

struct CountReport {
    bool passed = true;
    std::vector<CountRow> rows;
};

/// Check that the independent constraint count at each degree k below the
/// weight count equals b_0 + ... + b_{n-k-1}.
CountReport verify_relation_counts(const RelationSystem& system, const std::vector<int>& betti);

/// Human-readable rendering, e.g. "f_1 - f_2 - 2 f_3 ∈ (u^3)". Indices are
/// 1-based positions in `point_order`.
std::string relation_to_text(const DivisibilityRelation& rel,
                             const std::vector<std::string>& point_order,
                             const std::vector<std::string>& variables);

} // namespace equiloc
