#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "liaison/io.hpp"
#include "liaison/scenarios.hpp"

using namespace liaison;

TEST_CASE("ideal files round trip", "[io]") {
    Ring R(32003, 4);
    Rng rng(3);
    Ideal I(R, {random_homogeneous(R, 2, rng), random_homogeneous(R, 3, rng)});
    std::ostringstream os;
    write_ideal(os, I);
    std::istringstream is(os.str());
    Ideal J = read_ideal(is);
    REQUIRE(I == J);
    REQUIRE(ideal_to_string(I) == ideal_to_string(J));

    std::istringstream with_comments("# comment\nring p=32003 n=4\n\nx0*x2\n# more\nx1*x3\n");
    Ideal K = read_ideal(with_comments);
    REQUIRE(K.gens().size() == 2);

    std::istringstream no_header("x0*x2\n");
    REQUIRE_THROWS_WITH(read_ideal(no_header), Catch::Matchers::ContainsSubstring("header"));
    std::istringstream bad_poly("ring p=32003 n=4\nx9\n");
    REQUIRE_THROWS_WITH(read_ideal(bad_poly), Catch::Matchers::ContainsSubstring("line 2"));
    std::istringstream empty("");
    REQUIRE_THROWS_AS(read_ideal(empty), error);
}

TEST_CASE("builders validate their parameters", "[scenarios]") {
    Ring R(32003, 4);
    REQUIRE_THROWS_WITH(build_thm34_curve(R, 4, 3, 1),
                        Catch::Matchers::ContainsSubstring("4 <= e <= d"));
    REQUIRE_THROWS_WITH(build_thm34_curve(R, 4, 5, 1),
                        Catch::Matchers::ContainsSubstring("4 <= e <= d"));
    REQUIRE_THROWS_WITH(build_scenario("nope", ScenarioParams{}, R),
                        Catch::Matchers::ContainsSubstring("unknown scenario"));
    REQUIRE(scenario_names().size() == 7);
}

TEST_CASE("reference builders produce the advertised subschemes", "[scenarios]") {
    Ring R(32003, 4);
    Ideal skew = build_skew_lines(R);
    REQUIRE(ideal_degree(skew) == 2);
    REQUIRE(codimension(skew) == 2);

    Ideal lppc = build_line_plus_plane_curve(R, 4, 1);
    REQUIRE(ideal_degree(lppc) == 5);
    REQUIRE(codimension(lppc) == 2);
    REQUIRE(is_saturated(lppc));

    Ideal pts = build_twisted_cubic_points(R, 8);
    REQUIRE(ideal_degree(pts) == 8);
    REQUIRE(codimension(pts) == 3);
    REQUIRE(is_gorenstein_codim3(pts));

    Ideal tower = build_l1_perturbation(R, 2, 5, 1);
    REQUIRE(codimension(tower) == 2);
    REQUIRE(is_saturated(tower));
    REQUIRE(ideal_degree(tower) > 2);
}

TEST_CASE("scenario reports pass and serialize to stable JSON", "[scenarios]") {
    ScenarioParams P;
    ScenarioReport rep = run_scenario("skew_lines", P);
    REQUIRE(rep.all_pass());
    REQUIRE(rep.scenario == "skew_lines");

    nlohmann::json j = report_json(rep);
    for (const char* key : {"scenario", "params", "prime", "seed", "trace", "checks",
                            "runtime_ms", "all_pass"})
        REQUIRE(j.contains(key));
    REQUIRE(j["all_pass"].get<bool>());
    REQUIRE(j["checks"].is_array());
    REQUIRE(!j["checks"].empty());
    for (const auto& c : j["checks"]) {
        for (const char* key : {"name", "basis", "expected", "actual", "pass"})
            REQUIRE(c.contains(key));
        std::string basis = c["basis"].get<std::string>();
        REQUIRE((basis == "pinned" || basis == "oracle" || basis == "identity"));
    }
    REQUIRE(j["trace"].contains("steps"));
    REQUIRE(j["trace"].contains("terminal"));

    // identical parameters give identical reports up to the runtimes
    nlohmann::json j2 = report_json(run_scenario("skew_lines", P));
    j.erase("runtime_ms");
    j2.erase("runtime_ms");
    REQUIRE(j.dump() == j2.dump());

    std::string text = report_text(rep);
    REQUIRE(text.find("result: PASS") != std::string::npos);
    REQUIRE(text.find("skew_lines") != std::string::npos);
}

TEST_CASE("scenario checks catch deliberate mismatches", "[scenarios]") {
    ScenarioParams P;
    ScenarioReport rep = run_scenario("skew_lines", P);
    ScenarioCheck bad;
    bad.name = "deliberate";
    bad.basis = "oracle";
    bad.expected = "a";
    bad.actual = "b";
    bad.pass = false;
    rep.checks.push_back(bad);
    REQUIRE(!rep.all_pass());
    REQUIRE(report_text(rep).find("result: FAIL") != std::string::npos);
    REQUIRE(report_text(rep).find("[FAIL] deliberate") != std::string::npos);
}

TEST_CASE("the two seeded point scenarios differ per seed but not per run", "[scenarios]") {
    Ring R(32003, 4);
    Ideal a = build_bd_ex(R, 3, 4, 1);
    Ideal b = build_bd_ex(R, 3, 4, 1);
    REQUIRE(a == b);
    REQUIRE(ideal_degree(a) == 3 * 3 - 1 + 4);
    REQUIRE(is_gorenstein_codim3(a));
}
