#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "liaison/pfaffian.hpp"
#include "liaison/resolution.hpp"

using namespace liaison;

namespace {

SkewMatrix random_skew(const Ring& R, int size, int entry_degree, std::uint64_t seed) {
    Rng rng(seed);
    SkewMatrix M(R, size);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            M.set(i, j, random_homogeneous(R, entry_degree, rng));
    return M;
}

} // namespace

TEST_CASE("small Pfaffians match the closed formulas", "[pfaffian]") {
    Ring R(32003, 4);
    Rng rng(1);
    SkewMatrix M2(R, 2);
    Polynomial a = random_homogeneous(R, 2, rng);
    M2.set(0, 1, a);
    REQUIRE(pfaffian(M2) == a);

    SkewMatrix M4 = random_skew(R, 4, 1, 2);
    Polynomial expect = M4.at(0, 1) * M4.at(2, 3) - M4.at(0, 2) * M4.at(1, 3) +
                        M4.at(0, 3) * M4.at(1, 2);
    REQUIRE(pfaffian(M4) == expect);

    // x0, x1, x2, x3, x0, x1 on the upper triangle collapses to one term
    SkewMatrix V(R, 4);
    V.set(0, 1, Polynomial::variable(R, 0));
    V.set(0, 2, Polynomial::variable(R, 1));
    V.set(0, 3, Polynomial::variable(R, 2));
    V.set(1, 2, Polynomial::variable(R, 3));
    V.set(1, 3, Polynomial::variable(R, 0));
    V.set(2, 3, Polynomial::variable(R, 1));
    REQUIRE(pfaffian(V).str() == "x2*x3");
}

TEST_CASE("Pfaffian of an odd-size matrix vanishes", "[pfaffian]") {
    Ring R(32003, 4);
    for (int s : {3, 5, 7}) REQUIRE(pfaffian(random_skew(R, s, 1, 3)).is_zero());
}

TEST_CASE("Pfaffian squared equals the determinant", "[pfaffian]") {
    Ring R(32003, 4);
    for (int s : {2, 4, 6, 8}) {
        SkewMatrix M = random_skew(R, s, 1, 10 + s);
        Polynomial pf = pfaffian(M);
        REQUIRE(pf * pf == determinant(M));
    }
    SkewMatrix Q = random_skew(R, 4, 2, 31);
    REQUIRE(pfaffian(Q) * pfaffian(Q) == determinant(Q));
}

TEST_CASE("principal submatrices agree with masked Pfaffians", "[pfaffian]") {
    Ring R(32003, 4);
    SkewMatrix M = random_skew(R, 6, 1, 17);
    for (std::vector<int> keep :
         {std::vector<int>{0, 1, 2, 3}, {0, 2, 3, 5}, {1, 2, 4, 5}, {0, 1}}) {
        SkewMatrix S = principal_submatrix(M, keep);
        REQUIRE(pfaffian(S) == pfaffian_principal(M, keep));
        REQUIRE(pfaffian(S) * pfaffian(S) == determinant(S));
    }
    REQUIRE_THROWS_AS(principal_submatrix(M, std::vector<int>{2, 1}), error);
    REQUIRE_THROWS_AS(pfaffian_principal(M, std::vector<int>{0, 0}), error);
}

TEST_CASE("submaximal Pfaffians annihilate the matrix", "[pfaffian]") {
    Ring R(32003, 4);
    for (int s : {5, 7}) {
        SkewMatrix M = random_skew(R, s, 1, 20 + s);
        std::vector<Polynomial> p = submaximal_pfaffians(M);
        REQUIRE(static_cast<int>(p.size()) == s);
        for (int i = 0; i < s; ++i) {
            Polynomial row = Polynomial::zero(R);
            for (int j = 0; j < s; ++j) row = row + M.at(i, j) * p[j];
            REQUIRE(row.is_zero());
        }
        std::vector<int> all;
        for (int j = 0; j < s; ++j) all.push_back(j);
        for (int i = 0; i < s; ++i) {
            std::vector<int> keep;
            for (int j = 0; j < s; ++j)
                if (j != i) keep.push_back(j);
            Polynomial expect = pfaffian_principal(M, keep);
            REQUIRE(p[i] == (i % 2 == 0 ? expect : -expect));
        }
    }
    REQUIRE_THROWS_AS(submaximal_pfaffians(random_skew(R, 4, 1, 2)), error);
}

TEST_CASE("deleting three indices leaves the complementary Pfaffian", "[pfaffian]") {
    Ring R(32003, 4);
    SkewMatrix M5 = random_skew(R, 5, 1, 40);
    REQUIRE(watanabe_u(M5, 0, 1, 2) == M5.at(3, 4));
    REQUIRE(watanabe_u(M5, 2, 1, 0) == M5.at(3, 4));
    REQUIRE(watanabe_u(M5, 0, 2, 4) == M5.at(1, 3));

    SkewMatrix M7 = random_skew(R, 7, 1, 41);
    REQUIRE(watanabe_u(M7, 0, 1, 2) == pfaffian_principal(M7, {3, 4, 5, 6}));
    REQUIRE_THROWS_AS(watanabe_u(M7, 0, 0, 1), error);
    REQUIRE_THROWS_AS(watanabe_u(random_skew(R, 4, 1, 2), 0, 1, 2), error);
}

TEST_CASE("random alternating matrices are reproducible with the declared degrees",
          "[pfaffian]") {
    Ring R(32003, 4);
    SkewMatrix A = random_be_matrix(R, 5, DegreePattern::uniform(5, 1), 1);
    SkewMatrix B = random_be_matrix(R, 5, DegreePattern::uniform(5, 1), 1);
    REQUIRE(A == B);
    REQUIRE(!(A == random_be_matrix(R, 5, DegreePattern::uniform(5, 1), 2)));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            REQUIRE(A.at(i, j).degree() == 1);
            REQUIRE(A.at(i, j).is_homogeneous());
        }

    DegreePattern mixed{{1, 1, 1, 1, 2}, 1};
    SkewMatrix C = random_be_matrix(R, 5, mixed, 3);
    REQUIRE(C.at(0, 4).degree() == 2);
    REQUIRE(C.at(0, 1).degree() == 1);

    REQUIRE_THROWS_AS(random_be_matrix(R, 4, DegreePattern::uniform(4, 1), 1), error);
    DegreePattern bad{{1, 1, 1, 1, 3}, 3};
    REQUIRE_THROWS_AS(bad.validate(5), error);
}

TEST_CASE("Pfaffian ideals of generic linear matrices", "[pfaffian]") {
    Ring R(32003, 4);
    SkewMatrix M = random_be_matrix(R, 5, DegreePattern::uniform(5, 1), 7);
    Ideal I = buchsbaum_eisenbud_ideal(M);
    REQUIRE(codimension(I) == 3);
    REQUIRE(minimal_generator_count(I) == 5);
    REQUIRE(minimal_generator_degrees(I) == std::vector<int>{2, 2, 2, 2, 2});
    REQUIRE(is_gorenstein_codim3(I));
    HilbertSeries hs = hilbert_series(I);
    std::vector<long long> rev(hs.h.rbegin(), hs.h.rend());
    REQUIRE(hs.h == rev);
    long long sum = 0;
    for (long long c : hs.h) sum += c;
    REQUIRE(ideal_degree(I) == sum);
}

TEST_CASE("skew matrix files round trip", "[pfaffian]") {
    Ring R(32003, 4);
    SkewMatrix M = random_be_matrix(R, 5, DegreePattern{{1, 1, 1, 1, 2}, 1}, 5);
    std::ostringstream os;
    write_skew_matrix(os, M);
    std::istringstream is(os.str());
    SkewMatrix N = read_skew_matrix(is);
    REQUIRE(M == N);

    std::istringstream bad1("skew s=5\n");
    REQUIRE_THROWS_AS(read_skew_matrix(bad1), error);
    std::istringstream bad2("ring p=32003 n=4\nskew s=3\nx0\n");
    REQUIRE_THROWS_AS(read_skew_matrix(bad2), error);
}
