#include "equiloc/relations.hpp"

#include <algorithm>
#include <set>

#include "equiloc/matrix.hpp"

namespace equiloc {

const MultiPolynomial& CohomologyTuple::value(const std::string& id) const {
    for (std::size_t i = 0; i < point_order.size(); ++i) {
        if (point_order[i] == id) return values[i];
    }
    throw structural_error("tuple has no value for point " + id);
}

namespace {

void require_monomial_euler(const MultiPolynomial& e, std::size_t position) {
    if (e.is_zero()) {
        throw domain_error("Euler class at position " + std::to_string(position) + " is zero");
    }
    if (e.terms().size() != 1) {
        throw domain_error("Euler class at position " + std::to_string(position) +
                           " is not a monomial");
    }
}

void require_circle_values(const CohomologyTuple& f, const std::string& variable) {
    for (const MultiPolynomial& value : f.values) {
        if (value.variables() != std::vector<std::string>{variable}) {
            throw structural_error("tuple values must live in the one-variable ring " +
                                   variable);
        }
    }
}

} // namespace

LaurentUnivariate abbv_integrate(const CohomologyTuple& f,
                                 const std::vector<MultiPolynomial>& eulers,
                                 const CircleSpec& spec) {
    if (f.values.size() != f.point_order.size() || f.values.size() != eulers.size()) {
        throw structural_error("tuple, point order, and Euler list must have equal lengths");
    }
    require_circle_values(f, spec.residual_variable);
    LaurentUnivariate total(spec.residual_variable);
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        require_monomial_euler(eulers[j], j);
        total = total + laurent_from_ratio(f.values[j], eulers[j].leading_coefficient(),
                                           eulers[j].total_degree());
    }
    return total;
}

std::map<std::string, Int> normalize_relation_coefficients(
    const std::vector<std::string>& point_order, const std::vector<Rational>& raw) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    if (raw.size() != point_order.size()) {
        throw structural_error("coefficient count must match the point order");
    }
    Int scale = 1;
    for (const Rational& c : raw) scale = lcm(scale, denominator(c));
    std::vector<Int> cleared(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        cleared[i] = numerator(raw[i]) * (scale / denominator(raw[i]));
    }
    const Int g = vector_gcd(cleared);
    if (g == 0) throw domain_error("relation with all-zero coefficients");
    int sign = 0;
    for (Int& c : cleared) {
        c /= g;
        if (sign == 0 && c != 0) sign = c > 0 ? 1 : -1;
    }
    std::map<std::string, Int> out;
    for (std::size_t i = 0; i < cleared.size(); ++i) {
        if (cleared[i] == 0) continue;
        out[point_order[i]] = sign < 0 ? Int(-cleared[i]) : cleared[i];
    }
    return out;
}

std::optional<DivisibilityRelation> relation_from_class(
    const GeneratingClassTable& table, const std::string& base,
    const std::vector<MultiPolynomial>& eulers, const CircleSpec& spec) {
    if (table.variables.size() != 1) {
        throw capability_error("relation extraction needs a one-variable table");
    }
    if (eulers.size() != table.point_order.size()) {
        throw structural_error("Euler list must match the table's point order");
    }
    auto row = table.rows.find(base);
    if (row == table.rows.end() || row->second.empty()) {
        throw structural_error("table has no row for " + base);
    }

    const Homogeneity h = is_homogeneous(row->second.begin()->second);
    if (h.kind != Homogeneity::Kind::homogeneous) {
        throw structural_error("row " + base + " is not homogeneous");
    }
    const int m = h.degree;
    require_monomial_euler(eulers[0], 0);
    const int n = eulers[0].total_degree();
    if (m > n) {
        throw structural_error("row degree exceeds the weight count");
    }
    if (m == n) return std::nullopt; // top rows impose no condition

    std::vector<Rational> raw;
    raw.reserve(table.point_order.size());
    for (std::size_t j = 0; j < table.point_order.size(); ++j) {
        require_monomial_euler(eulers[j], j);
        raw.push_back(table.entry(base, table.point_order[j]).leading_coefficient() /
                      eulers[j].leading_coefficient());
    }

    DivisibilityRelation rel;
    rel.coeffs = normalize_relation_coefficients(table.point_order, raw);
    rel.modulus_form = LinearForm({1});
    rel.modulus_power = n - m;
    rel.from_class = base;
    rel.grade = m;
    return rel;
}

RelationSystem full_relation_system(const GeneratingClassTable& table, const GKMModel& model,
                                    const CircleSpec& spec) {
    const StarReport report = validate_condition_star(table, model, spec);
    if (!report.valid) {
        const StarViolation& first = report.violations.front();
        throw validation_error("class table rejected: " + first.reason,
                               first.row.empty() ? "classes" : "classes." + first.row);
    }

    std::vector<MultiPolynomial> eulers;
    for (const std::string& id : table.point_order) {
        eulers.push_back(euler_class_circle(model.point(id), spec));
    }

    RelationSystem system;
    system.model_name = model.name;
    system.point_order = table.point_order;
    system.variables = table.variables;
    system.spec = spec;
    for (const std::string& base : table.point_order) {
        if (auto rel = relation_from_class(table, base, eulers, spec)) {
            system.relations.push_back(std::move(*rel));
        }
    }

    int max_power = 0;
    for (const auto& rel : system.relations) max_power = std::max(max_power, rel.modulus_power);
    if (max_power > 0) {
        for (const DegreeCount& row : relation_degree_profile(system, max_power - 1)) {
            if (row.rank != row.active) {
                throw validation_error("relations constraining degree " +
                                           std::to_string(row.degree) +
                                           " are linearly dependent",
                                       "relations");
            }
        }
    }
    return system;
}

MembershipVerdict membership_test(const CohomologyTuple& f, const GeneratingClassTable& table,
                                  const GKMModel& model, const CircleSpec& spec) {
    if (f.point_order != table.point_order) {
        throw structural_error("tuple points must match the table's point order");
    }
    require_circle_values(f, spec.residual_variable);
    if (table.variables != std::vector<std::string>{spec.residual_variable}) {
        throw capability_error("direct membership testing needs a one-variable table");
    }

    std::vector<MultiPolynomial> eulers;
    for (const std::string& id : table.point_order) {
        eulers.push_back(euler_class_circle(model.point(id), spec));
    }

    MembershipVerdict verdict;
    for (const std::string& base : table.point_order) {
        LaurentUnivariate sum(spec.residual_variable);
        for (std::size_t j = 0; j < table.point_order.size(); ++j) {
            require_monomial_euler(eulers[j], j);
            const MultiPolynomial numer =
                f.values[j] * table.entry(base, table.point_order[j]);
            sum = sum + laurent_from_ratio(numer, eulers[j].leading_coefficient(),
                                           eulers[j].total_degree());
        }
        if (!sum.is_polynomial()) {
            verdict.passed = false;
            verdict.failures.push_back({base, sum.principal_part()});
        }
    }
    return verdict;
}

SystemVerdict system_membership(const CohomologyTuple& f, const RelationSystem& system) {
    if (f.point_order != system.point_order) {
        throw structural_error("tuple points must match the system's point order");
    }
    for (const MultiPolynomial& value : f.values) {
        if (value.variables() != system.variables) {
            throw structural_error("tuple values must live in the system's coefficient ring");
        }
    }

    SystemVerdict verdict;
    for (std::size_t i = 0; i < system.relations.size(); ++i) {
        const DivisibilityRelation& rel = system.relations[i];
        MultiPolynomial combo(system.variables);
        for (const auto& [id, coeff] : rel.coeffs) {
            combo = combo + poly_scale(f.value(id), Rational(coeff));
        }
        if (combo.is_zero()) continue;
        if (!divide_by_linear_power(combo, rel.modulus_form, rel.modulus_power)) {
            verdict.passed = false;
            verdict.violations.push_back({i, rel.from_class});
        }
    }
    return verdict;
}

DivisibilityRelation lift_relation(const DivisibilityRelation& rel,
                                   const LinearForm& residual_form,
                                   const std::map<std::string, std::string>& embedding,
                                   std::size_t ambient_rank) {
    if (residual_form.size() != ambient_rank) {
        throw structural_error("residual form length must equal the ambient rank");
    }
    std::set<std::string> targets;
    for (const auto& [sub, ambient] : embedding) {
        (void)sub;
        if (!targets.insert(ambient).second) {
            throw structural_error("embedding is not injective at " + ambient);
        }
    }

    DivisibilityRelation lifted;
    for (const auto& [id, coeff] : rel.coeffs) {
        auto it = embedding.find(id);
        if (it == embedding.end()) {
            throw structural_error("embedding has no ambient id for " + id);
        }
        lifted.coeffs[it->second] = coeff;
    }
    lifted.modulus_form = residual_form;
    lifted.modulus_power = rel.modulus_power;
    auto base = embedding.find(rel.from_class);
    lifted.from_class = base == embedding.end() ? rel.from_class : base->second;
    lifted.grade = rel.grade;
    return lifted;
}

namespace {

void renormalize_sign(DivisibilityRelation& rel, const std::vector<std::string>& point_order) {
    for (const std::string& id : point_order) {
        auto it = rel.coeffs.find(id);
        if (it == rel.coeffs.end() || it->second == 0) continue;
        if (it->second < 0) {
            for (auto& [key, value] : rel.coeffs) value = -value;
        }
        return;
    }
}

bool same_constraint(const DivisibilityRelation& a, const DivisibilityRelation& b) {
    return a.coeffs == b.coeffs && a.modulus_form == b.modulus_form &&
           a.modulus_power == b.modulus_power;
}

} // namespace

RelationSystem assemble_torus_system(const std::vector<RelationSystem>& parts) {
    if (parts.empty()) {
        throw structural_error("nothing to assemble");
    }
    RelationSystem out;
    out.model_name = parts.front().model_name;
    out.point_order = parts.front().point_order;
    out.variables = parts.front().variables;
    out.spec = parts.front().spec;
    for (const RelationSystem& part : parts) {
        if (part.point_order != out.point_order || part.variables != out.variables) {
            throw structural_error("parts disagree on the ambient model");
        }
        for (DivisibilityRelation rel : part.relations) {
            renormalize_sign(rel, out.point_order);
            const bool duplicate =
                std::any_of(out.relations.begin(), out.relations.end(),
                            [&](const DivisibilityRelation& seen) {
                                return same_constraint(seen, rel);
                            });
            if (!duplicate) out.relations.push_back(std::move(rel));
        }
    }
    return out;
}

std::vector<DegreeCount> relation_degree_profile(const RelationSystem& system,
                                                 int max_degree) {
    if (system.variables.size() != 1) {
        throw capability_error("degree profiles are defined for one-variable systems");
    }
    std::vector<DegreeCount> profile;
    for (int l = 0; l <= max_degree; ++l) {
        std::vector<std::vector<Rational>> rows;
        for (const DivisibilityRelation& rel : system.relations) {
            if (rel.modulus_power <= l) continue;
            std::vector<Rational> row;
            row.reserve(system.point_order.size());
            for (const std::string& id : system.point_order) {
                auto it = rel.coeffs.find(id);
                row.push_back(it == rel.coeffs.end() ? Rational(0) : Rational(it->second));
            }
            rows.push_back(std::move(row));
        }
        DegreeCount entry;
        entry.degree = l;
        entry.active = rows.size();
        entry.rank =
            rows.empty() ? 0 : rational_rank(RationalMatrix::from_rows(std::move(rows)));
        profile.push_back(entry);
    }
    return profile;
}

CountReport verify_relation_counts(const RelationSystem& system,
                                   const std::vector<int>& betti) {
    if (betti.empty()) {
        throw structural_error("empty Betti list");
    }
    const int n_half = static_cast<int>(betti.size()) - 1;
    CountReport report;
    if (n_half == 0) return report;
    const std::vector<DegreeCount> profile = relation_degree_profile(system, n_half - 1);
    for (int k = 0; k < n_half; ++k) {
        CountRow row;
        row.degree = k;
        for (int i = 0; i <= n_half - k - 1; ++i) row.expected += betti[i];
        row.actual = profile[k].rank;
        row.match = Int(row.actual) == row.expected;
        if (!row.match) report.passed = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string relation_to_text(const DivisibilityRelation& rel,
                             const std::vector<std::string>& point_order,
                             const std::vector<std::string>& variables) {
    std::string text;
    for (std::size_t i = 0; i < point_order.size(); ++i) {
        auto it = rel.coeffs.find(point_order[i]);
        if (it == rel.coeffs.end() || it->second == 0) continue;
        const Int& c = it->second;
        const Int magnitude = c < 0 ? Int(-c) : c;
        if (text.empty()) {
            if (c < 0) text += "-";
        } else {
            text += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) text += magnitude.str() + " ";
        text += "f_" + std::to_string(i + 1);
    }
    if (text.empty()) text = "0";

    const std::string form = linear_form_to_text(rel.modulus_form, variables);
    std::string modulus;
    if (rel.modulus_power == 1) {
        modulus = "(" + form + ")";
    } else {
        const bool compound = form.find(' ') != std::string::npos;
        modulus = "(" + (compound ? "(" + form + ")" : form) + "^" +
                  std::to_string(rel.modulus_power) + ")";
    }
    return text + " ∈ " + modulus;
}

} // namespace equiloc
