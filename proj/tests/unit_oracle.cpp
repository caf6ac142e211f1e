#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "equiloc/classes.hpp"
#include "equiloc/errors.hpp"
#include "equiloc/model.hpp"
#include "equiloc/oracle.hpp"
#include "equiloc/relations.hpp"
#include "fixtures.hpp"

using namespace equiloc;

namespace {

RelationSystem localization_system(const GKMModel& model, const CircleSpec& spec) {
    return full_relation_system(toric_specialized_classes(model, spec), model, spec);
}

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

void check_solution_bounds(const DegreeTruncation& t) {
    REQUIRE(t.coefficient_dims.size() == static_cast<std::size_t>(t.degree_cap) + 1);
    REQUIRE(t.solution_dims.size() == t.coefficient_dims.size());
    for (std::size_t l = 0; l < t.solution_dims.size(); ++l) {
        CHECK(t.solution_dims[l] >= 0);
        CHECK(t.solution_dims[l] <= t.coefficient_dims[l]);
    }
}

} // namespace

TEST_CASE("edge relation systems read off the one-skeleton") {
    const GKMModel sphere = fixtures::sphere_model();
    const CircleSpec sphere_xi = fixtures::sphere_spec();

    const RelationSystem circle = gkm_edge_relations(sphere, sphere_xi);
    REQUIRE(circle.relations.size() == 1);
    CHECK(relation_to_text(circle.relations[0], circle.point_order, circle.variables) ==
          "f_1 - f_2 ∈ (u)");
    CHECK(circle.variables == std::vector<std::string>{"u"});

    const DegreeTruncation t = truncated_solution_dimension(circle, 1);
    // dimensions computed by tests/oracles/oracle_small.py
    CHECK(t.coefficient_dims == ints({2, 2}));
    CHECK(t.solution_dims == ints({1, 2}));

    const GKMModel prism = fixtures::prism_model();
    const CircleSpec prism_xi = fixtures::prism_spec();
    const RelationSystem projected = gkm_edge_relations(prism, prism_xi);
    CHECK(projected.relations.size() == 12);
    for (const DivisibilityRelation& r : projected.relations) {
        CHECK(r.modulus_power == 1);
        CHECK(r.modulus_form == LinearForm({1}));
        CHECK(r.coeffs.size() == 2);
    }
    CHECK(projected.relations[0].coeffs ==
          std::map<std::string, Int>{{"v1", 1}, {"v2", -1}});

    const RelationSystem full = gkm_edge_relations(prism, std::nullopt);
    CHECK(full.variables == std::vector<std::string>{"x", "y", "z"});
    CHECK(full.relations.size() == 12);
    CHECK(full.relations[0].modulus_form == LinearForm({0, 1, 0}));

    CHECK(gkm_edge_relations(fixtures::trapezoid_model(), fixtures::trapezoid_spec())
              .relations.size() == 4);

    CHECK_THROWS_AS(gkm_edge_relations(fixtures::eightpoint_model(), fixtures::eightpoint_spec()),
                    capability_error);
    CHECK_THROWS_AS(gkm_edge_relations(prism, CircleSpec{{1, 0, 0}, "u"}), domain_error);
    CHECK_THROWS_AS(gkm_edge_relations(prism, CircleSpec{{1, 2}, "u"}), structural_error);
}

TEST_CASE("truncated solution dimensions match the graded series") {
    struct Case {
        GKMModel model;
        CircleSpec spec;
    };
    const std::vector<Case> toric = {
        {fixtures::prism_model(), fixtures::prism_spec()},
        {fixtures::simplex3_model(), fixtures::simplex3_spec()},
        {fixtures::triangle_model(), fixtures::triangle_spec()},
        {fixtures::trapezoid_model(), fixtures::trapezoid_spec()},
    };
    for (const Case& c : toric) {
        const RelationSystem system = localization_system(c.model, c.spec);
        const DegreeTruncation t = truncated_solution_dimension(system, 6);
        check_solution_bounds(t);
        CHECK(t.solution_dims == equivariant_poincare_series(c.model, c.spec, 12));
    }

    const GKMModel sphere = fixtures::sphere_model();
    const CircleSpec sphere_xi = fixtures::sphere_spec();
    const RelationSystem sphere_system =
        full_relation_system(fixtures::sphere_table(), sphere, sphere_xi);
    CHECK(truncated_solution_dimension(sphere_system, 3).solution_dims ==
          ints({1, 2, 2, 2}));

    // dimensions computed by tests/oracles/oracle_prism.py
    const RelationSystem prism_loc =
        localization_system(fixtures::prism_model(), fixtures::prism_spec());
    const DegreeTruncation prism_dims = truncated_solution_dimension(prism_loc, 6);
    CHECK(prism_dims.solution_dims == ints({1, 4, 7, 8, 8, 8, 8}));
    CHECK(prism_dims.coefficient_dims == ints({8, 8, 8, 8, 8, 8, 8}));

    // dimensions computed by tests/oracles/oracle_small.py
    const RelationSystem cp3_loc =
        localization_system(fixtures::simplex3_model(), fixtures::simplex3_spec());
    CHECK(truncated_solution_dimension(cp3_loc, 6).solution_dims ==
          ints({1, 2, 3, 4, 4, 4, 4}));
    const RelationSystem cp2_loc =
        localization_system(fixtures::triangle_model(), fixtures::triangle_spec());
    CHECK(truncated_solution_dimension(cp2_loc, 6).solution_dims ==
          ints({1, 2, 3, 3, 3, 3, 3}));
    const RelationSystem trap_loc =
        localization_system(fixtures::trapezoid_model(), fixtures::trapezoid_spec());
    CHECK(truncated_solution_dimension(trap_loc, 6).solution_dims ==
          ints({1, 3, 4, 4, 4, 4, 4}));

    // dimensions computed by tests/oracles/oracle_so5.py
    const GKMModel eight = fixtures::eightpoint_model();
    const CircleSpec eight_xi = fixtures::eightpoint_spec();
    const RelationSystem eight_system =
        full_relation_system(fixtures::eightpoint_table(), eight, eight_xi);
    const DegreeTruncation eight_dims = truncated_solution_dimension(eight_system, 6);
    CHECK(eight_dims.solution_dims == ints({1, 4, 7, 8, 8, 8, 8}));
    CHECK(eight_dims.solution_dims == equivariant_poincare_series(eight, eight_xi, 12));

    RelationSystem empty;
    empty.point_order = {"a", "b", "c"};
    empty.variables = {"u"};
    const DegreeTruncation free3 = truncated_solution_dimension(empty, 2);
    CHECK(free3.solution_dims == ints({3, 3, 3}));
    CHECK(free3.coefficient_dims == ints({3, 3, 3}));
}

TEST_CASE("projected edge systems strictly contain the localization solutions") {
    const GKMModel prism = fixtures::prism_model();
    const CircleSpec spec = fixtures::prism_spec();
    const RelationSystem loc = localization_system(prism, spec);
    const RelationSystem projected = gkm_edge_relations(prism, spec);

    // dimensions computed by tests/oracles/oracle_prism.py
    CHECK(truncated_solution_dimension(projected, 6).solution_dims ==
          ints({1, 8, 8, 8, 8, 8, 8}));

    const SystemComparison cmp = compare_systems(loc, projected, 3);
    REQUIRE(cmp.degrees.size() == 4);
    CHECK_FALSE(cmp.all_equal);
    CHECK(cmp.degrees[0].relation == ContainmentKind::equal);
    CHECK(cmp.degrees[0].dim_first == 1);
    CHECK(cmp.degrees[1].relation == ContainmentKind::first_inside_second);
    CHECK(cmp.degrees[1].dim_first == 4);
    CHECK(cmp.degrees[1].dim_second == 8);
    CHECK(cmp.degrees[2].relation == ContainmentKind::first_inside_second);
    CHECK(cmp.degrees[2].dim_first == 7);
    CHECK(cmp.degrees[2].dim_second == 8);
    CHECK(cmp.degrees[3].relation == ContainmentKind::equal);

    // Adding edge congruences to the extracted relations never cuts below
    // the graded series: together they still carve out the same solutions.
    RelationSystem combined = loc;
    for (const DivisibilityRelation& r : projected.relations) {
        combined.relations.push_back(r);
    }
    CHECK(truncated_solution_dimension(combined, 6).solution_dims ==
          equivariant_poincare_series(prism, spec, 12));
}

TEST_CASE("full-grading edge systems specialize onto the localization solutions") {
    struct Case {
        GKMModel model;
        CircleSpec spec;
    };
    const std::vector<Case> toric = {
        {fixtures::prism_model(), fixtures::prism_spec()},
        {fixtures::simplex3_model(), fixtures::simplex3_spec()},
        {fixtures::triangle_model(), fixtures::triangle_spec()},
        {fixtures::trapezoid_model(), fixtures::trapezoid_spec()},
    };
    for (const Case& c : toric) {
        const RelationSystem loc = localization_system(c.model, c.spec);
        const RelationSystem full = gkm_edge_relations(c.model, std::nullopt);
        const SystemComparison cmp = compare_systems(full, loc, 6, c.spec);
        CHECK(cmp.all_equal);
        for (const DegreeComparison& entry : cmp.degrees) {
            CHECK(entry.dim_first == entry.dim_second);
        }
    }

    const GKMModel sphere = fixtures::sphere_model();
    const CircleSpec sphere_xi = fixtures::sphere_spec();
    const RelationSystem sphere_loc =
        full_relation_system(fixtures::sphere_table(), sphere, sphere_xi);
    const RelationSystem sphere_full = gkm_edge_relations(sphere, std::nullopt);
    CHECK(compare_systems(sphere_full, sphere_loc, 4, sphere_xi).all_equal);

    const RelationSystem self =
        localization_system(fixtures::prism_model(), fixtures::prism_spec());
    CHECK(compare_systems(self, self, 6).all_equal);
}

TEST_CASE("subtorus blocks assemble to the free-module dimensions") {
    const GKMModel ambient = fixtures::fivepoint_model();
    std::vector<std::string> order;
    for (const auto& p : ambient.fixed_points) order.push_back(p.id);

    auto part = [&](std::vector<DivisibilityRelation> rels) {
        RelationSystem s;
        s.model_name = ambient.name;
        s.point_order = order;
        s.variables = {"x", "y"};
        s.spec = fixtures::fivepoint_spec();
        s.relations = std::move(rels);
        return s;
    };
    auto rel = [](std::map<std::string, Int> coeffs, LinearForm form, int power) {
        DivisibilityRelation r;
        r.coeffs = std::move(coeffs);
        r.modulus_form = std::move(form);
        r.modulus_power = power;
        return r;
    };

    // block pins: computed by tests/oracles/oracle_cp4.py
    const RelationSystem h1 = part({rel({{"p2", 1}, {"p5", -1}}, LinearForm({0, 1}), 1)});
    const RelationSystem h2 =
        part({rel({{"p1", 1}, {"p2", -3}, {"p3", 3}, {"p4", -1}}, LinearForm({1, 0}), 3),
              rel({{"p2", 1}, {"p3", -2}, {"p4", 1}}, LinearForm({1, 0}), 2),
              rel({{"p3", 1}, {"p4", -1}}, LinearForm({1, 0}), 1)});
    const RelationSystem h3 = part({rel({{"p1", 1}, {"p5", -1}}, LinearForm({1, 1}), 1)});
    const RelationSystem h4 = part({rel({{"p3", 1}, {"p5", -1}}, LinearForm({1, -1}), 1)});
    const RelationSystem h5 = part({rel({{"p4", 1}, {"p5", -1}}, LinearForm({2, -1}), 1)});

    const RelationSystem assembled = assemble_torus_system({h1, h2, h3, h4, h5});
    const DegreeTruncation five = truncated_solution_dimension(assembled, 6);
    check_solution_bounds(five);
    // dimensions computed by tests/oracles/oracle_cp4.py
    CHECK(five.solution_dims == ints({1, 3, 6, 10, 15, 20, 25}));
    CHECK(five.coefficient_dims == ints({5, 10, 15, 20, 25, 30, 35}));
    CHECK(five.solution_dims ==
          free_module_dimensions(std::vector<int>{1, 1, 1, 1, 1}, 2, 6));

    const RelationSystem partial = assemble_torus_system({h1, h2});
    const DegreeTruncation two = truncated_solution_dimension(partial, 6);
    // dimensions computed by tests/oracles/oracle_cp4.py
    CHECK(two.solution_dims == ints({1, 4, 8, 13, 18, 23, 28}));

    const SystemComparison cmp = compare_systems(assembled, partial, 3);
    CHECK_FALSE(cmp.all_equal);
    CHECK(cmp.degrees[0].relation == ContainmentKind::equal);
    CHECK(cmp.degrees[1].relation == ContainmentKind::first_inside_second);
    CHECK(cmp.degrees[1].dim_first == 3);
    CHECK(cmp.degrees[1].dim_second == 4);
}

TEST_CASE("degree caps and model mismatches are refused") {
    RelationSystem empty;
    empty.point_order = {"a"};
    empty.variables = {"u"};
    CHECK_THROWS_AS(truncated_solution_dimension(empty, 9), capability_error);
    CHECK_THROWS_AS(truncated_solution_dimension(empty, -1), structural_error);

    RelationSystem other = empty;
    other.point_order = {"b"};
    CHECK_THROWS_AS(compare_systems(empty, other, 2), structural_error);

    RelationSystem xy = empty;
    xy.variables = {"x", "y"};
    CHECK_THROWS_AS(compare_systems(empty, xy, 2), structural_error);

    // Specialized comparison needs the second system in the residual grading.
    const GKMModel prism = fixtures::prism_model();
    const RelationSystem full = gkm_edge_relations(prism, std::nullopt);
    CHECK_THROWS_AS(compare_systems(full, full, 2, fixtures::prism_spec()),
                    structural_error);
}
