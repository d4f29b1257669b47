#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "liaison/resolution.hpp"

using namespace liaison;

namespace {

// Koszul Betti table of a regular sequence: rank over subsets
BettiTable koszul_betti(const std::vector<int>& degs) {
    BettiTable t;
    int n = static_cast<int>(degs.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int pop = 0, sum = 0;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) {
                ++pop;
                sum += degs[k];
            }
        ++t.ranks[{pop - 1, sum}];
    }
    return t;
}

Ideal random_ci(const Ring& R, const std::vector<int>& degs, std::uint64_t seed) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng = Rng(seed).child(attempt);
        std::vector<Polynomial> forms;
        for (int d : degs) forms.push_back(random_homogeneous(R, d, rng));
        Ideal I(R, forms);
        if (codimension(I) == static_cast<int>(degs.size())) return I;
    }
    throw error("random_ci: no regular sequence found");
}

} // namespace

TEST_CASE("Koszul Betti tables for regular sequences", "[resolution]") {
    Ring R(32003, 4);
    for (std::vector<int> degs :
         {std::vector<int>{1, 2, 3}, {2, 2, 2}, {2, 3, 4}, {1, 1}, {3, 3}}) {
        Ideal I = random_ci(R, degs, 5 + degs.size());
        REQUIRE(minimal_betti(I) == koszul_betti(degs));
    }
    std::vector<Polynomial> vars;
    for (int i = 0; i < 4; ++i) vars.push_back(Polynomial::variable(R, i));
    REQUIRE(minimal_betti(Ideal(R, vars)) == koszul_betti({1, 1, 1, 1}));
}

TEST_CASE("resolutions compose to zero and minimization preserves the K-polynomial",
          "[resolution]") {
    Ring R(32003, 4);
    Ideal skew(R, {parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x0*x3"),
                   parse_polynomial(R, "x1*x2"), parse_polynomial(R, "x1*x3")});
    Rng rng(9);
    Ideal mixed(R, {random_homogeneous(R, 2, rng), random_homogeneous(R, 2, rng),
                    random_homogeneous(R, 3, rng)});
    for (const Ideal& I : {skew, mixed}) {
        FreeResolution raw = free_resolution(I);
        FreeResolution min = minimal_resolution(I);
        raw.check_complex();
        min.check_complex();
        REQUIRE(min.minimal);
        REQUIRE(raw.k_polynomial() == min.k_polynomial());
        REQUIRE(min.k_polynomial() == hilbert_series(I).numerator_full);
        REQUIRE(min.betti() == minimal_betti(I));
        // non-minimal ranks dominate the minimal ones
        for (const auto& [key, rank] : min.betti().ranks)
            REQUIRE(raw.betti().rank(key.first, key.second) >= rank);
    }
}

TEST_CASE("Betti table does not depend on the presentation", "[resolution]") {
    Ring R(32003, 4);
    Rng rng(15);
    Ideal I(R, {random_homogeneous(R, 2, rng), random_homogeneous(R, 2, rng),
                random_homogeneous(R, 3, rng)});
    BettiTable expect = minimal_betti(I);

    std::vector<Polynomial> padded = I.gens();
    padded.push_back(I.gens()[0] + I.gens()[1]);
    padded.push_back(I.gens()[0] * Polynomial::variable(R, 3));
    REQUIRE(minimal_betti(Ideal(R, padded)) == expect);

    std::vector<Polynomial> shuffled(I.gens().rbegin(), I.gens().rend());
    REQUIRE(minimal_betti(Ideal(R, shuffled)) == expect);
}

TEST_CASE("Betti and deficiency are invariant under linear coordinate changes",
          "[resolution]") {
    Ring R(32003, 4);
    std::vector<Polynomial> phi;
    phi.push_back(parse_polynomial(R, "x0 + 3*x1 + x3"));
    phi.push_back(parse_polynomial(R, "x1 + 5*x2"));
    phi.push_back(parse_polynomial(R, "x2 + 2*x3"));
    phi.push_back(parse_polynomial(R, "x3"));

    Ideal skew(R, {parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x0*x3"),
                   parse_polynomial(R, "x1*x2"), parse_polynomial(R, "x1*x3")});
    std::vector<Polynomial> moved;
    for (const Polynomial& g : skew.gens()) moved.push_back(g.substitute(phi));
    Ideal skew2(R, moved);
    REQUIRE(minimal_betti(skew2) == minimal_betti(skew));
    REQUIRE(deficiency_profile(skew2, -4, 6) == deficiency_profile(skew, -4, 6));
    REQUIRE(ideal_degree(skew2) == 2);
}

TEST_CASE("deficiency profile separates arithmetically Cohen-Macaulay curves",
          "[resolution]") {
    Ring R(32003, 4);
    Ideal ci = random_ci(R, {2, 3}, 77);
    DeficiencyProfile flat = deficiency_profile(ci, -3, 6);
    for (int t = flat.lo; t <= flat.hi; ++t) REQUIRE(flat.at(t) == 0);

    Ideal skew(R, {parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x0*x3"),
                   parse_polynomial(R, "x1*x2"), parse_polynomial(R, "x1*x3")});
    DeficiencyProfile prof = deficiency_profile(skew, -4, 6);
    int nonzero = 0;
    for (int t = prof.lo; t <= prof.hi; ++t)
        if (prof.at(t) != 0) ++nonzero;
    REQUIRE(nonzero == 1);
    REQUIRE(prof.at(0) == 1);
}

TEST_CASE("projective dimension of reference quotients", "[resolution]") {
    Ring R(32003, 4);
    Ideal skew(R, {parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x0*x3"),
                   parse_polynomial(R, "x1*x2"), parse_polynomial(R, "x1*x3")});
    REQUIRE(projective_dimension(skew) == 3);
    REQUIRE(projective_dimension(random_ci(R, {2, 3}, 8)) == 2);
    REQUIRE(projective_dimension(random_ci(R, {2, 2, 2}, 9)) == 3);
}

TEST_CASE("Gorenstein codimension-3 recognition", "[resolution]") {
    Ring R(32003, 4);
    REQUIRE(is_gorenstein_codim3(random_ci(R, {2, 2, 2}, 9)));
    Ideal skew(R, {parse_polynomial(R, "x0*x2"), parse_polynomial(R, "x0*x3"),
                   parse_polynomial(R, "x1*x2"), parse_polynomial(R, "x1*x3")});
    REQUIRE(!is_gorenstein_codim3(skew)); // codimension 2
}
