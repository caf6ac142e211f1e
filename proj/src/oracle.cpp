#include "equiloc/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "equiloc/errors.hpp"
#include "equiloc/matrix.hpp"
#include "equiloc/polynomial.hpp"

namespace equiloc {

namespace {

constexpr int kMaxDegreeCap = 8;

void require_degree_cap(int degree_cap) {
    if (degree_cap < 0) {
        throw structural_error("degree cap must be nonnegative");
    }
    if (degree_cap > kMaxDegreeCap) {
        throw capability_error("degree caps above 8 are not supported");
    }
}

std::size_t point_position(const std::vector<std::string>& point_order,
                           const std::string& id) {
    const auto it = std::find(point_order.begin(), point_order.end(), id);
    if (it == point_order.end()) {
        throw structural_error("relation references unknown point '" + id + "'");
    }
    return static_cast<std::size_t>(it - point_order.begin());
}

/// All exponent vectors of total degree `degree` over `n` variables, in
/// descending lexicographic order (a fixed, deterministic column order).
std::vector<Exponent> monomials_of_degree(std::size_t n, int degree) {
    std::vector<Exponent> out;
    Exponent current(n, 0);
    auto recurse = [&](auto&& self, std::size_t position, int remaining) -> void {
        if (position + 1 == n) {
            current[position] = remaining;
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[position] = e;
            self(self, position + 1, remaining - e);
        }
    };
    if (n == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    recurse(recurse, 0, degree);
    return out;
}

/// Unimodular integer matrix W with x = W·z and (first z-coordinate) = α·x,
/// i.e. W = transpose(U) for a unimodular U with U·α = e₁. Exists because
/// linear-form coefficient vectors are primitive.
std::vector<std::vector<Int>> coordinate_change_for(const LinearForm& form) {
    const std::vector<Int>& alpha = form.coefficients();
    const std::size_t n = alpha.size();
    std::vector<Int> v = alpha;
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    while (true) {
        std::size_t nonzero_count = 0;
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            ++nonzero_count;
            if (pivot == n || abs(v[i]) < abs(v[pivot])) pivot = i;
        }
        if (nonzero_count <= 1) {
            if (pivot != 0) {
                std::swap(v[0], v[pivot]);
                std::swap(u[0], u[pivot]);
            }
            if (v[0] < 0) {
                v[0] = -v[0];
                for (Int& entry : u[0]) entry = -entry;
            }
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pivot || v[i] == 0) continue;
            const Int q = v[i] / v[pivot];
            v[i] -= q * v[pivot];
            for (std::size_t k = 0; k < n; ++k) u[i][k] -= q * u[pivot][k];
        }
    }

    std::vector<std::vector<Int>> w(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) w[i][k] = u[k][i];
    }
    return w;
}

/// The linear conditions a system imposes on the coefficients of a
/// homogeneous degree-l tuple. Columns are point-major: point j's block
/// holds one column per degree-l monomial, in `monomials_of_degree` order.
RationalMatrix degree_constraint_matrix(const RelationSystem& system, int degree) {
    const std::size_t n = system.variables.size();
    const std::size_t d = system.point_order.size();
    const std::vector<Exponent> monomials = monomials_of_degree(n, degree);
    const std::size_t m_count = monomials.size();
    const std::size_t cols = d * m_count;

    std::map<Exponent, std::size_t> monomial_index;
    for (std::size_t b = 0; b < m_count; ++b) monomial_index[monomials[b]] = b;

    // Internal variable names for the sheared coordinates; only arity matters.
    std::vector<std::string> z_names;
    for (std::size_t i = 0; i < n; ++i) z_names.push_back("z" + std::to_string(i + 1));

    std::vector<std::vector<Rational>> rows;

    for (const DivisibilityRelation& relation : system.relations) {
        if (relation.modulus_form.size() != n) {
            throw structural_error("relation modulus arity disagrees with the system variables");
        }
        const int power = relation.modulus_power;

        std::vector<std::pair<std::size_t, Int>> support;
        for (const auto& [id, value] : relation.coeffs) {
            support.emplace_back(point_position(system.point_order, id), value);
        }

        if (degree < power) {
            // A nonzero multiple of the modulus power has degree >= power,
            // so the whole combination must vanish coefficient by coefficient.
            for (std::size_t b = 0; b < m_count; ++b) {
                std::vector<Rational> row(cols, Rational(0));
                for (const auto& [j, value] : support) {
                    row[j * m_count + b] = Rational(value);
                }
                rows.push_back(std::move(row));
            }
            continue;
        }

        if (n == 1) continue; // u^power divides every degree >= power form

        // Shear coordinates so the modulus becomes the first variable, then
        // require every monomial with first exponent < power to cancel.
        const std::vector<std::vector<Int>> w = coordinate_change_for(relation.modulus_form);
        std::vector<MultiPolynomial> image; // x_i written in z-coordinates
        for (std::size_t i = 0; i < n; ++i) {
            MultiPolynomial p = MultiPolynomial::constant(z_names, Rational(0));
            for (std::size_t k = 0; k < n; ++k) {
                if (w[i][k] == 0) continue;
                p = p + poly_scale(MultiPolynomial::variable(z_names, k), Rational(w[i][k]));
            }
            image.push_back(std::move(p));
        }

        std::map<Exponent, std::vector<Rational>> sheared_rows;
        for (std::size_t b = 0; b < m_count; ++b) {
            MultiPolynomial expanded = MultiPolynomial::constant(z_names, Rational(1));
            for (std::size_t i = 0; i < n; ++i) {
                for (int e = 0; e < monomials[b][i]; ++e) expanded = expanded * image[i];
            }
            for (const auto& [z_exponent, value] : expanded.terms()) {
                if (z_exponent[0] >= power) continue;
                auto [it, inserted] = sheared_rows.try_emplace(
                    z_exponent, std::vector<Rational>(cols, Rational(0)));
                for (const auto& [j, s] : support) {
                    it->second[j * m_count + b] += Rational(s) * value;
                }
            }
        }
        for (auto& [z_exponent, row] : sheared_rows) rows.push_back(std::move(row));
    }

    if (rows.empty()) return RationalMatrix(0, cols);
    return RationalMatrix::from_rows(std::move(rows));
}

bool satisfies_constraints(const RationalMatrix& constraints, const std::vector<Rational>& v) {
    for (std::size_t r = 0; r < constraints.rows(); ++r) {
        Rational sum(0);
        for (std::size_t c = 0; c < constraints.cols(); ++c) {
            if (constraints.at(r, c) == 0) continue;
            sum += constraints.at(r, c) * v[c];
        }
        if (sum != 0) return false;
    }
    return true;
}

ContainmentKind classify(bool first_in_second, bool second_in_first) {
    if (first_in_second && second_in_first) return ContainmentKind::equal;
    if (first_in_second) return ContainmentKind::first_inside_second;
    if (second_in_first) return ContainmentKind::second_inside_first;
    return ContainmentKind::incomparable;
}

} // namespace

RelationSystem gkm_edge_relations(const GKMModel& model,
                                  const std::optional<CircleSpec>& spec) {
    if (!model.has_edges()) {
        throw capability_error("edge relations need one-skeleton data");
    }

    RelationSystem system;
    system.model_name = model.name;
    for (const FixedPoint& p : model.fixed_points) system.point_order.push_back(p.id);
    if (spec) {
        if (spec->xi.size() != static_cast<std::size_t>(model.rank)) {
            throw structural_error("xi length disagrees with the model rank");
        }
        system.variables = {spec->residual_variable};
        system.spec = *spec;
    } else {
        system.variables = model.variables;
    }

    for (const IsotropyEdge& edge : model.edges) {
        if (spec && pairing(edge.direction, spec->xi) == 0) {
            throw domain_error("edge direction at " + edge.from + "-" + edge.to +
                               " pairs to zero with xi");
        }
        std::vector<Rational> raw(system.point_order.size(), Rational(0));
        raw[point_position(system.point_order, edge.from)] = Rational(1);
        raw[point_position(system.point_order, edge.to)] = Rational(-1);

        DivisibilityRelation relation;
        relation.coeffs = normalize_relation_coefficients(system.point_order, raw);
        relation.modulus_form =
            spec ? LinearForm({1}) : LinearForm(edge.direction);
        relation.modulus_power = 1;
        system.relations.push_back(std::move(relation));
    }
    return system;
}

DegreeTruncation truncated_solution_dimension(const RelationSystem& system,
                                              int degree_cap) {
    require_degree_cap(degree_cap);
    if (system.variables.empty()) {
        throw structural_error("relation system has no ring variables");
    }

    DegreeTruncation out;
    out.degree_cap = degree_cap;
    for (int l = 0; l <= degree_cap; ++l) {
        const RationalMatrix constraints = degree_constraint_matrix(system, l);
        const Int coefficient_dim = Int(constraints.cols());
        out.coefficient_dims.push_back(coefficient_dim);
        out.solution_dims.push_back(coefficient_dim - Int(rational_rank(constraints)));
    }
    return out;
}

SystemComparison compare_systems(const RelationSystem& first,
                                 const RelationSystem& second,
                                 int degree_cap,
                                 const std::optional<CircleSpec>& specialize_first) {
    require_degree_cap(degree_cap);
    if (first.point_order != second.point_order) {
        throw structural_error("systems compare only over a common point order");
    }
    if (specialize_first) {
        if (first.variables.size() != specialize_first->xi.size()) {
            throw structural_error("xi length disagrees with the first system's variables");
        }
        if (second.variables != std::vector<std::string>{specialize_first->residual_variable}) {
            throw structural_error(
                "specialized comparison needs the second system in the residual variable");
        }
    } else if (first.variables != second.variables) {
        throw structural_error("systems compare only over a common variable list");
    }

    const std::size_t d = first.point_order.size();
    SystemComparison out;
    out.all_equal = true;

    for (int l = 0; l <= degree_cap; ++l) {
        const RationalMatrix second_constraints = degree_constraint_matrix(second, l);
        const RationalMatrix second_kernel = rational_nullspace(second_constraints);
        const Int dim_second = Int(second_kernel.rows());

        RationalMatrix first_solutions; // rows spanning the degree-l solutions
        if (specialize_first) {
            const std::size_t n = first.variables.size();
            const std::vector<Exponent> monomials = monomials_of_degree(n, l);
            std::vector<Rational> weights; // value of each monomial at xi
            for (const Exponent& e : monomials) {
                Rational w(1);
                for (std::size_t i = 0; i < n; ++i) {
                    for (int k = 0; k < e[i]; ++k) w *= Rational(specialize_first->xi[i]);
                }
                weights.push_back(w);
            }
            const RationalMatrix kernel =
                rational_nullspace(degree_constraint_matrix(first, l));
            RationalMatrix image(kernel.rows(), d);
            for (std::size_t r = 0; r < kernel.rows(); ++r) {
                for (std::size_t j = 0; j < d; ++j) {
                    Rational sum(0);
                    for (std::size_t b = 0; b < monomials.size(); ++b) {
                        sum += kernel.at(r, j * monomials.size() + b) * weights[b];
                    }
                    image.at(r, j) = sum;
                }
            }
            first_solutions = std::move(image);
        } else {
            first_solutions = rational_nullspace(degree_constraint_matrix(first, l));
        }

        const Int dim_first = specialize_first ? Int(rational_rank(first_solutions))
                                               : Int(first_solutions.rows());

        bool first_in_second = true;
        for (std::size_t r = 0; r < first_solutions.rows() && first_in_second; ++r) {
            first_in_second = satisfies_constraints(second_constraints, first_solutions.row(r));
        }
        // The second space sits inside the first iff its kernel basis lies in
        // the span of the first space's vectors.
        const bool second_in_first = row_space_contains(first_solutions, second_kernel);

        DegreeComparison entry;
        entry.degree = l;
        entry.dim_first = dim_first;
        entry.dim_second = dim_second;
        entry.relation = classify(first_in_second, second_in_first);
        if (entry.relation != ContainmentKind::equal) out.all_equal = false;
        out.degrees.push_back(entry);
    }
    return out;
}

} // namespace equiloc
