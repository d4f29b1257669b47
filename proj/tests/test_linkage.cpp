#include <catch2/catch_amalgamated.hpp>

#include "liaison/pfaffian.hpp"
#include "liaison/scenarios.hpp"

using namespace liaison;

namespace {

Ideal skew_lines(const Ring& R) {
    return Ideal(R, {parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x0*x3"),
                     parse_polynomial(R, "x1*x2"), parse_polynomial(R, "x1*x3")});
}

} // namespace

TEST_CASE("regular sequence recognition", "[linkage]") {
    Ring R(32003, 4);
    Polynomial x0 = Polynomial::variable(R, 0), x1 = Polynomial::variable(R, 1);
    REQUIRE(is_regular_sequence({x0, x1}));
    REQUIRE(is_regular_sequence({parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x1*x3")}));
    REQUIRE(!is_regular_sequence({x0, x0 * x1}));
    REQUIRE(!is_regular_sequence({x0, Polynomial::zero(R)}));
    REQUIRE(!is_regular_sequence({x0, Polynomial::constant(R, 3)}));
    REQUIRE(!is_regular_sequence({x0, parse_polynomial(R, "x0 + x1^2")}));
    std::vector<Polynomial> five;
    for (int i = 0; i < 4; ++i) five.push_back(Polynomial::variable(R, i));
    five.push_back(parse_polynomial(R, "x0 + x1"));
    REQUIRE(!is_regular_sequence(five));
}

TEST_CASE("least complete intersection degrees", "[linkage]") {
    Ring R(32003, 4);
    REQUIRE(least_ci_degrees(skew_lines(R)) == std::vector<int>{2, 2});
    Ideal tc(R, {parse_polynomial(R, "x0*x2 - x1^2"), parse_polynomial(R, "x0*x3 - x1*x2"),
                 parse_polynomial(R, "x1*x3 - x2^2")});
    REQUIRE(least_ci_degrees(tc) == std::vector<int>{2, 2});
    REQUIRE(least_ci_degrees(skew_lines(R), 1) == std::vector<int>{2});
    REQUIRE_THROWS_AS(least_ci_degrees(skew_lines(R), 3), error);

    SkewMatrix M = random_be_matrix(R, 7, DegreePattern::uniform(7, 1), 1);
    REQUIRE(least_ci_degrees(buchsbaum_eisenbud_ideal(M)) == std::vector<int>{3, 3, 3});
}

TEST_CASE("sampled complete intersections are reproducible and regular", "[linkage]") {
    Ring R(32003, 4);
    Ideal I = skew_lines(R);
    CompleteIntersection a = sample_ci(I, {2, 2}, 9);
    CompleteIntersection b = sample_ci(I, {2, 2}, 9);
    REQUIRE(a.forms == b.forms);
    REQUIRE(a.degrees() == std::vector<int>{2, 2});
    REQUIRE(a.degree_product() == 4);
    REQUIRE(is_regular_sequence(a.forms));
    for (const Polynomial& f : a.forms) REQUIRE(I.contains(f));
    REQUIRE(!(a.forms == sample_ci(I, {2, 2}, 10).forms));

    REQUIRE_THROWS_WITH(sample_ci(I, {1, 1}, 1),
                        Catch::Matchers::ContainsSubstring("no elements in degree 1"));
    REQUIRE_THROWS_WITH(sample_ci(I, {2, 2, 2}, 1),
                        Catch::Matchers::ContainsSubstring("tuple longer than the codimension"));
    REQUIRE_THROWS_AS(sample_ci(I, {3, 2}, 1), error); // must be non-decreasing
}

TEST_CASE("linking two disjoint lines inside two quadrics", "[linkage]") {
    Ring R(32003, 4);
    Ideal I = skew_lines(R);
    CompleteIntersection ci{{parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x1*x3")}};
    LinkResult res = link(I, ci);

    Ideal expect(R, {parse_polynomial(R, "x0*x1"), parse_polynomial(R, "x0*x2"),
                     parse_polynomial(R, "x1*x3"), parse_polynomial(R, "x2*x3")});
    REQUIRE(res.residual == expect);
    REQUIRE(res.step.minimal);
    REQUIRE(res.step.mu_before == 4);
    REQUIRE(res.step.mu_after == 4);
    REQUIRE(res.step.degree_before == 2);
    REQUIRE(res.step.degree_after == 2);
    REQUIRE(res.step.betti_after == res.step.betti_before);

    // linking the residual through the same quadrics returns the start
    LinkResult back = link(res.residual, ci);
    REQUIRE(back.residual == I);
}

TEST_CASE("linking validates its inputs", "[linkage]") {
    Ring R(32003, 4);
    Ideal I = skew_lines(R);
    CompleteIntersection outside{
        {parse_polynomial(R, "x0^2"), parse_polynomial(R, "x1*x3")}};
    REQUIRE_THROWS_WITH(link(I, outside),
                        Catch::Matchers::ContainsSubstring("not contained"));
    CompleteIntersection degenerate{
        {parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x0*x3")}};
    REQUIRE_THROWS_WITH(link(I, degenerate),
                        Catch::Matchers::ContainsSubstring("not a regular sequence"));

    Polynomial x0 = Polynomial::variable(R, 0), x1 = Polynomial::variable(R, 1);
    Ideal ci_ideal(R, {x0, x1});
    CompleteIntersection same{{x0, x1}};
    REQUIRE_THROWS_WITH(link(ci_ideal, same),
                        Catch::Matchers::ContainsSubstring("residual is the unit ideal"));
}

TEST_CASE("minimal link uses the least degree tuple", "[linkage]") {
    Ring R(32003, 4);
    LinkResult res = minimal_link(skew_lines(R), 4);
    REQUIRE(res.step.ci_degrees == std::vector<int>{2, 2});
    REQUIRE(res.step.minimal);
    REQUIRE(res.step.degree_after == 2);
}

TEST_CASE("basic double link bookkeeping", "[linkage]") {
    Ring R(32003, 4);
    Ideal I = skew_lines(R);
    Polynomial f = parse_polynomial(R, "x0*x2");
    Polynomial ell = Polynomial::variable(R, 1);
    Ideal J = basic_double_link(I, f, ell);
    REQUIRE(ideal_degree(J) == 2 + 2 * 1);
    REQUIRE(is_saturated(J));
    REQUIRE(I.contains_ideal(J));
    REQUIRE(codimension(J) == 2);

    REQUIRE_THROWS_WITH(basic_double_link(I, parse_polynomial(R, "x0^2"), ell),
                        Catch::Matchers::ContainsSubstring("element of I"));
    REQUIRE_THROWS_WITH(basic_double_link(I, f, Polynomial::variable(R, 0)),
                        Catch::Matchers::ContainsSubstring("not a regular sequence"));
    REQUIRE_THROWS_WITH(basic_double_link(I, f, Polynomial::constant(R, 2)),
                        Catch::Matchers::ContainsSubstring("positive degree"));
}

TEST_CASE("iterated minimal linkage detects cycles and complete intersections",
          "[linkage]") {
    Ring R(32003, 4);
    Rng rng(2);
    Ideal ci(R, {random_homogeneous(R, 2, rng), random_homogeneous(R, 2, rng)});
    REQUIRE(codimension(ci) == 2);
    LinkTrace t0 = minimal_licci_run(ci, 4, 1);
    REQUIRE(t0.terminal == "ci_reached");
    REQUIRE(t0.steps.empty());
    REQUIRE(t0.final_ideal == ci);

    LinkTrace t1 = minimal_licci_run(skew_lines(R), 4, 1);
    REQUIRE(t1.terminal == "cycle_detected");
    REQUIRE(t1.steps.size() == 2);
    REQUIRE(t1.chain.size() == 3);
    REQUIRE(t1.steps[1].betti_after == minimal_betti(skew_lines(R)));

    LinkTrace t2 = minimal_licci_run(skew_lines(R), 0, 1);
    REQUIRE(t2.terminal == "step_limit");
}

TEST_CASE("a Gorenstein double link drops two generators", "[linkage]") {
    Ring R(32003, 4);
    SkewMatrix M = random_be_matrix(R, 5, DegreePattern::uniform(5, 1), 11);
    Ideal I = buchsbaum_eisenbud_ideal(M);
    GorensteinDoubleLink gd = gorenstein_double_link(I, 3);
    REQUIRE(gd.mu_start == 5);
    REQUIRE(gd.mu_end == 3);
    REQUIRE(gd.claim_deg_u_lt_second);
    REQUIRE(gd.claim_uf_regular);
    REQUIRE(gd.deg_u == gd.u.degree());
    REQUIRE(gd.deg_u < gd.first.ci_degrees[1]);
    REQUIRE(gd.ci_sum_second < gd.ci_sum_first);
    REQUIRE(is_gorenstein_codim3(gd.result));
    REQUIRE(minimal_generator_count(gd.result) == 3);

    // u really completes the first complete intersection to the residual
    std::vector<Polynomial> forms = gd.first.ci_forms;
    forms.push_back(gd.u);
    REQUIRE(Ideal(R, forms) == gd.intermediate);

    REQUIRE_THROWS_WITH(gorenstein_double_link(skew_lines(R), 1),
                        Catch::Matchers::ContainsSubstring("Gorenstein"));
}

TEST_CASE("gorenstein descent reaches a complete intersection", "[linkage]") {
    Ring R(32003, 4);
    SkewMatrix M = random_be_matrix(R, 5, DegreePattern::uniform(5, 1), 13);
    Ideal I = buchsbaum_eisenbud_ideal(M);
    GorensteinRun run = gorenstein_descent(I, 4, 2);
    REQUIRE(run.trace.terminal == "ci_reached");
    REQUIRE(run.rounds.size() == 1);
    REQUIRE(run.trace.chain.front() == I);
    REQUIRE(minimal_generator_count(run.trace.final_ideal) == 3);
}
