#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "liaison/ideal.hpp"

using namespace liaison;

namespace {

// criterion-free Buchberger plus interreduction; slow, independent of
// the pair-pruning path in the library
std::vector<Polynomial> naive_groebner(const Ring& R, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    bool added = true;
    while (added) {
        added = false;
        for (std::size_t i = 0; i < basis.size() && !added; ++i)
            for (std::size_t j = i + 1; j < basis.size() && !added; ++j) {
                Polynomial r = reduce_full(s_polynomial(basis[i], basis[j]), basis);
                if (!r.is_zero()) {
                    basis.push_back(r);
                    added = true;
                }
            }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i && !basis[j].is_zero()) others.push_back(basis[j]);
            Polynomial r = reduce_full(basis[i], others);
            if (r != basis[i]) {
                basis[i] = r;
                changed = true;
            }
        }
        basis.erase(std::remove_if(basis.begin(), basis.end(),
                                   [](const Polynomial& p) { return p.is_zero(); }),
                    basis.end());
    }
    for (Polynomial& p : basis) p = p.monic();
    std::sort(basis.begin(), basis.end(), [&R](const Polynomial& a, const Polynomial& b) {
        return R.cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return basis;
}

std::vector<Polynomial> random_gens(const Ring& R, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Polynomial> gens;
    int count = 2 + static_cast<int>(rng.below(2));
    for (int k = 0; k < count; ++k) {
        Rng child = rng.child(k);
        gens.push_back(random_homogeneous(R, 1 + static_cast<int>(child.below(2)), child));
    }
    return gens;
}

} // namespace

TEST_CASE("reduced basis agrees with the criterion-free construction", "[groebner]") {
    Ring R(32003, 4);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        std::vector<Polynomial> gens = random_gens(R, seed);
        std::vector<Polynomial> expect = naive_groebner(R, gens);
        std::vector<Polynomial> got = groebner_basis(R, gens);
        REQUIRE(got.size() == expect.size());
        for (std::size_t k = 0; k < got.size(); ++k) REQUIRE(got[k] == expect[k]);
    }
}

TEST_CASE("every S-polynomial of the basis reduces to zero", "[groebner]") {
    Ring R(32003, 4);
    std::vector<std::vector<Polynomial>> inputs;
    for (std::uint64_t seed = 10; seed <= 13; ++seed) inputs.push_back(random_gens(R, seed));
    inputs.push_back({parse_polynomial(R, "x0*x2 - x1^2"), parse_polynomial(R, "x0*x3 - x1*x2"),
                      parse_polynomial(R, "x1*x3 - x2^2")});
    for (const auto& gens : inputs) {
        std::vector<Polynomial> gb = groebner_basis(R, gens);
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = i + 1; j < gb.size(); ++j)
                REQUIRE(reduce_full(s_polynomial(gb[i], gb[j]), gb).is_zero());
        for (const Polynomial& g : gens) REQUIRE(reduce_full(g, gb).is_zero());
    }
}

TEST_CASE("reduced basis is independent of generator order", "[groebner]") {
    Ring R(32003, 4);
    for (std::uint64_t seed = 20; seed <= 23; ++seed) {
        std::vector<Polynomial> gens = random_gens(R, seed);
        std::vector<Polynomial> gb = groebner_basis(R, gens);

        std::vector<Polynomial> rev(gens.rbegin(), gens.rend());
        std::vector<Polynomial> rot = gens;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        REQUIRE(groebner_basis(R, rev) == gb);
        REQUIRE(groebner_basis(R, rot) == gb);

        // redundant extra generators do not change the reduced basis
        std::vector<Polynomial> extra = gens;
        extra.push_back(gens[0] * Polynomial::variable(R, 2));
        extra.push_back(gens[0] + gens[0]);
        REQUIRE(groebner_basis(R, extra) == gb);
    }
}

TEST_CASE("basis elements are monic with increasing leading monomials", "[groebner]") {
    Ring R(32003, 4);
    std::vector<Polynomial> gb = groebner_basis(R, random_gens(R, 31));
    REQUIRE(!gb.empty());
    for (std::size_t k = 0; k < gb.size(); ++k) {
        REQUIRE(gb[k].leading_coeff() == 1u);
        if (k + 1 < gb.size())
            REQUIRE(R.cmp(gb[k].leading_monomial(), gb[k + 1].leading_monomial()) < 0);
    }
}

TEST_CASE("determinantal quadrics form their own reduced basis", "[groebner]") {
    Ring R(32003, 4);
    std::vector<Polynomial> minors = {parse_polynomial(R, "x0*x2 - x1^2"),
                                      parse_polynomial(R, "x0*x3 - x1*x2"),
                                      parse_polynomial(R, "x1*x3 - x2^2")};
    std::vector<Polynomial> gb = groebner_basis(R, minors);
    REQUIRE(gb.size() == 3);
    std::vector<Polynomial> expect = naive_groebner(R, minors);
    REQUIRE(gb == expect);
}

TEST_CASE("membership via normal form", "[groebner]") {
    Ring R(32003, 4);
    Ideal I(R, random_gens(R, 40));
    Rng rng(41);
    for (int t = 0; t < 5; ++t) {
        Rng c = rng.child(t);
        Polynomial combo = Polynomial::zero(R);
        for (const Polynomial& g : I.gens())
            combo = combo + g * random_homogeneous(R, 1 + static_cast<int>(c.below(2)), c);
        REQUIRE(I.contains(combo));
    }
    REQUIRE(!I.contains(Polynomial::constant(R, 1)));
    REQUIRE(I.contains(Polynomial::zero(R)));
}
