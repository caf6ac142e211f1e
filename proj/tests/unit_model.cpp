#include <doctest.h>

#include <algorithm>

#include "equiloc/model.hpp"
#include "fixtures.hpp"

using namespace equiloc;

namespace {

MultiPolynomial monomial_u(int degree, const Rational& coeff) {
    MultiPolynomial p({"u"});
    p.add_term({degree}, coeff);
    return p;
}

} // namespace

TEST_CASE("pairing and primitive directions") {
    CHECK(pairing({0, 1, 0}, {1, 2, 1}) == 2);
    CHECK(pairing({-1, 1, 0}, {1, 2, 1}) == 1);
    CHECK(pairing({2, -1}, {1, 2}) == 0);
    CHECK_THROWS_AS(pairing({1, 2}, {1}), structural_error);

    CHECK(primitive_direction({Rational(1, 2), Rational(-3, 2)}) == std::vector<Int>{1, -3});
    CHECK(primitive_direction({Rational(2), Rational(4)}) == std::vector<Int>{1, 2});
    CHECK(primitive_direction({Rational(0), Rational(-5)}) == std::vector<Int>{0, -1});
    CHECK_THROWS_AS(primitive_direction({Rational(0), Rational(0)}), domain_error);
}

TEST_CASE("integer determinants") {
    CHECK(integer_determinant({{1, 2}, {3, 4}}) == -2);
    CHECK(integer_determinant({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
    CHECK(integer_determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(integer_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK_THROWS_AS(integer_determinant({{1, 2, 3}, {4, 5, 6}}), structural_error);
}

TEST_CASE("polytope to model produces edge-direction weights") {
    const GKMModel triangle = fixtures::triangle_model();
    REQUIRE(triangle.point_count() == 3);
    CHECK(triangle.half_dimension() == 2);
    const FixedPoint& q1 = triangle.point("q1");
    REQUIRE(q1.weights.size() == 2);
    CHECK(q1.weights[0].components == std::vector<Int>{1, 0});
    CHECK(q1.weights[1].components == std::vector<Int>{0, 1});
    const FixedPoint& q2 = triangle.point("q2");
    CHECK(q2.weights[0].components == std::vector<Int>{-1, 0});
    CHECK(q2.weights[1].components == std::vector<Int>{-1, 1});

    const GKMModel prism = fixtures::prism_model();
    REQUIRE(prism.point_count() == 8);
    CHECK(prism.half_dimension() == 3);
    CHECK(prism.edges.size() == 12);
    // v5 = (1,1,0) meets v2, v3, v8.
    const FixedPoint& v5 = prism.point("v5");
    std::vector<std::vector<Int>> got;
    for (const auto& w : v5.weights) got.push_back(w.components);
    std::sort(got.begin(), got.end());
    const std::vector<std::vector<Int>> expected = {{-1, 0, 0}, {0, 0, 1}, {1, -1, 0}};
    CHECK(got == expected);
}

TEST_CASE("polytope validation rejects non-simple and non-smooth vertices") {
    DelzantPolytope extra = fixtures::triangle_polytope();
    extra.edges.push_back({"q2", "q3"}); // duplicate edge: q2 now meets 3 edges
    CHECK_THROWS_AS(polytope_to_model(extra, {"x", "y"}), validation_error);

    DelzantPolytope stretched;
    stretched.vertex_order = {"q1", "q2", "q3"};
    stretched.vertices = {{"q1", {0, 0}}, {"q2", {1, 0}}, {"q3", {0, 2}}};
    stretched.edges = {{"q1", "q2"}, {"q1", "q3"}, {"q2", "q3"}};
    try {
        polytope_to_model(stretched, {"x", "y"});
        FAIL("expected a validation error");
    } catch (const validation_error& e) {
        // the vertex where the directions fail to span the lattice is named
        CHECK(std::string(e.what()).find("q2") != std::string::npos);
    }
}

TEST_CASE("model validation catches structural defects") {
    CHECK_NOTHROW(validate_model(fixtures::sphere_model()));
    CHECK_NOTHROW(validate_model(fixtures::eightpoint_model()));
    CHECK_NOTHROW(validate_model(fixtures::fivepoint_model()));

    GKMModel dup = fixtures::sphere_model();
    dup.fixed_points[1].id = "p1";
    dup.edges.clear();
    CHECK_THROWS_AS(validate_model(dup), validation_error);

    GKMModel zero = fixtures::sphere_model();
    zero.fixed_points[0].weights[0].components = {0};
    CHECK_THROWS_AS(validate_model(zero), validation_error);

    GKMModel ragged = fixtures::eightpoint_model();
    ragged.fixed_points[2].weights.pop_back();
    CHECK_THROWS_AS(validate_model(ragged), validation_error);

    GKMModel badedge = fixtures::sphere_model();
    badedge.edges[0].direction = {2};
    CHECK_THROWS_AS(validate_model(badedge), validation_error);

    GKMModel foreign = fixtures::sphere_model();
    foreign.fixed_points[0].weights[0].components = {3};
    // direction [1] no longer appears (up to sign) at p1
    CHECK_THROWS_AS(validate_model(foreign), validation_error);

    GKMModel tampered = fixtures::triangle_model();
    tampered.fixed_points[0].weights[0].components = {1, 1};
    CHECK_THROWS_AS(validate_model(tampered), validation_error);
}

TEST_CASE("genericity of circle directions") {
    const GKMModel prism = fixtures::prism_model();
    CHECK(is_generic(prism, fixtures::prism_spec()).generic);

    // xi = (1,0,0) annihilates every direction with first component zero:
    // four horizontal edge germs and four vertical edges counted at both ends.
    const GenericityReport report = is_generic(prism, CircleSpec{{1, 0, 0}, "u"});
    CHECK_FALSE(report.generic);
    CHECK(report.violations.size() == 12);
    const bool has_v2 = std::any_of(
        report.violations.begin(), report.violations.end(),
        [](const GenericityViolation& v) { return v.point_id == "v2" && v.weight_index == 0; });
    CHECK(has_v2);

    CHECK(is_generic(fixtures::fivepoint_model(), fixtures::fivepoint_spec()).generic);
    CHECK_FALSE(is_generic(fixtures::fivepoint_model(), CircleSpec{{0, 1}, "u"}).generic);
}

TEST_CASE("fixed point indices under a generic direction") {
    const GKMModel prism = fixtures::prism_model();
    const CircleSpec spec = fixtures::prism_spec();
    // index pins: computed by tests/oracles/oracle_prism.py
    CHECK(morse_index(prism.point("v1"), spec) == 0);
    CHECK(morse_index(prism.point("v5"), spec) == 4);
    CHECK(morse_index(prism.point("v8"), spec) == 6);
    std::vector<int> all;
    for (const auto& p : prism.fixed_points) all.push_back(morse_index(p, spec));
    CHECK(all == std::vector<int>{0, 2, 2, 2, 4, 4, 4, 6});

    CHECK_THROWS_AS(morse_index(prism.point("v2"), CircleSpec{{1, 0, 0}, "u"}), domain_error);

    // reversing the direction complements the index: 2k -> 2(n-k)
    const CircleSpec reversed{{-1, -2, -1}, "u"};
    for (const auto& p : prism.fixed_points) {
        CHECK(morse_index(p, spec) + morse_index(p, reversed) == 6);
    }
}

TEST_CASE("circle Euler classes at fixed points") {
    const GKMModel prism = fixtures::prism_model();
    const CircleSpec spec = fixtures::prism_spec();
    // euler pins: computed by tests/oracles/oracle_prism.py
    CHECK(euler_class_circle(prism.point("v1"), spec) == monomial_u(3, 2));
    CHECK(euler_class_circle(prism.point("v3"), spec) == monomial_u(3, -1));
    const std::vector<Rational> leading = {2, -2, -1, -2, 1, 2, 1, -1};
    for (std::size_t i = 0; i < prism.point_count(); ++i) {
        CHECK(euler_class_circle(prism.fixed_points[i], spec) == monomial_u(3, leading[i]));
    }

    const GKMModel sphere = fixtures::sphere_model();
    CHECK(euler_class_circle(sphere.point("p1"), fixtures::sphere_spec()) == monomial_u(1, 1));
    CHECK(euler_class_circle(sphere.point("p2"), fixtures::sphere_spec()) == monomial_u(1, -1));

    const GKMModel eight = fixtures::eightpoint_model();
    MultiPolynomial e6({"x"});
    e6.add_term({3}, 2);
    CHECK(euler_class_circle(eight.point("p6"), fixtures::eightpoint_spec()) == e6);
}

TEST_CASE("Betti numbers and graded dimension series") {
    // betti pins: computed by tests/oracles/oracle_prism.py and oracle_small.py
    CHECK(betti_numbers(fixtures::prism_model(), fixtures::prism_spec()) ==
          std::vector<int>{1, 3, 3, 1});
    CHECK(betti_numbers(fixtures::simplex3_model(), fixtures::simplex3_spec()) ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(betti_numbers(fixtures::triangle_model(), fixtures::triangle_spec()) ==
          std::vector<int>{1, 1, 1});
    CHECK(betti_numbers(fixtures::trapezoid_model(), fixtures::trapezoid_spec()) ==
          std::vector<int>{1, 2, 1});
    CHECK(betti_numbers(fixtures::eightpoint_model(), fixtures::eightpoint_spec()) ==
          std::vector<int>{1, 3, 3, 1});
    CHECK(betti_numbers(fixtures::fivepoint_model(), fixtures::fivepoint_spec()) ==
          std::vector<int>{1, 1, 1, 1, 1});

    // Poincare duality on every fixture
    for (const auto& [model, spec] :
         {std::pair{fixtures::prism_model(), fixtures::prism_spec()},
          std::pair{fixtures::simplex3_model(), fixtures::simplex3_spec()},
          std::pair{fixtures::trapezoid_model(), fixtures::trapezoid_spec()},
          std::pair{fixtures::eightpoint_model(), fixtures::eightpoint_spec()},
          std::pair{fixtures::fivepoint_model(), fixtures::fivepoint_spec()}}) {
        std::vector<int> betti = betti_numbers(model, spec);
        std::vector<int> reversed = betti;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(betti == reversed);
    }

    CHECK(equivariant_poincare_series(fixtures::prism_model(), fixtures::prism_spec(), 8) ==
          std::vector<Int>{1, 4, 7, 8, 8});
    CHECK(equivariant_poincare_series(fixtures::sphere_model(), fixtures::sphere_spec(), 4) ==
          std::vector<Int>{1, 2, 2});
    CHECK(equivariant_poincare_series(fixtures::sphere_model(), fixtures::sphere_spec(), 5) ==
          std::vector<Int>{1, 2, 2});

    GKMModel point;
    point.rank = 1;
    point.variables = {"u"};
    point.fixed_points = {{"p", {}}};
    validate_model(point);
    CHECK(betti_numbers(point, fixtures::sphere_spec()) == std::vector<int>{1});
    CHECK(equivariant_poincare_series(point, fixtures::sphere_spec(), 2) ==
          std::vector<Int>{1, 1});
}

TEST_CASE("free module dimensions over larger coefficient rings") {
    // dims pins: computed by tests/oracles/oracle_cp4.py
    CHECK(free_module_dimensions({1, 1, 1, 1, 1}, 2, 6) ==
          std::vector<Int>{1, 3, 6, 10, 15, 20, 25});
    // one variable: reduces to the running-sum series
    CHECK(free_module_dimensions({1, 3, 3, 1}, 1, 6) ==
          std::vector<Int>{1, 4, 7, 8, 8, 8, 8});
    CHECK(free_module_dimensions({2}, 3, 2) == std::vector<Int>{2, 6, 12});
}

TEST_CASE("edges oriented from lower to higher pairing") {
    const auto sphere_directed = orient_edges(fixtures::sphere_model(), fixtures::sphere_spec());
    REQUIRE(sphere_directed.size() == 1);
    CHECK(sphere_directed[0] == std::pair<std::string, std::string>{"p1", "p2"});

    const auto triangle_directed =
        orient_edges(fixtures::triangle_model(), fixtures::triangle_spec());
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"q1", "q2"}, {"q1", "q3"}, {"q2", "q3"}};
    CHECK(triangle_directed == expected);

    CHECK_THROWS_AS(orient_edges(fixtures::triangle_model(), CircleSpec{{0, 1}, "u"}),
                    domain_error);
    CHECK_THROWS_AS(orient_edges(fixtures::eightpoint_model(), fixtures::eightpoint_spec()),
                    capability_error);
}
