#include <catch2/catch_amalgamated.hpp>

#include "liaison/polynomial.hpp"

using namespace liaison;

TEST_CASE("prime field arithmetic is exact", "[field]") {
    PrimeField F(32003);
    REQUIRE(F.characteristic() == 32003u);
    REQUIRE(F.reduce(-1) == 32002u);
    REQUIRE(F.reduce(32003) == 0u);
    REQUIRE(F.reduce(-64006) == 0u);
    REQUIRE(F.add(32002, 1) == 0u);
    REQUIRE(F.sub(0, 1) == 32002u);
    REQUIRE(F.neg(0) == 0u);
    REQUIRE(F.neg(5) == 31998u);
    for (std::uint32_t a : {1u, 2u, 5u, 100u, 31013u, 32002u}) {
        REQUIRE(F.mul(a, F.inv(a)) == 1u);
        REQUIRE(F.div(a, a) == 1u);
    }
    REQUIRE_THROWS_AS(F.inv(0), error);
    REQUIRE_THROWS_AS(PrimeField(32004), error);
    REQUIRE_THROWS_AS(PrimeField(1), error);
}

TEST_CASE("Fermat inverses over a small prime", "[field]") {
    PrimeField F(67);
    for (std::uint32_t a = 1; a < 67; ++a) {
        REQUIRE(F.mul(a, F.inv(a)) == 1u);
        REQUIRE(F.pow(a, 66) == 1u);
    }
}

TEST_CASE("rng is deterministic with independent child streams", "[rng]") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) REQUIRE(a.next() == b.next());

    REQUIRE(Rng(42).child(1).next() == Rng(42).child(1).next());
    REQUIRE(Rng(42).child(1).next() != Rng(42).child(2).next());
    REQUIRE(Rng(42).child(1).next() != Rng(43).child(1).next());

    Rng d(7);
    for (int i = 0; i < 200; ++i) REQUIRE(d.below(10) < 10u);
    Rng e(7);
    REQUIRE(e.below(1) == 0u);
}

TEST_CASE("ring rejects tiny characteristics", "[ring]") {
    REQUIRE_THROWS_AS(Ring(61, 4), error);
    Ring R(67, 4);
    REQUIRE(R.characteristic() == 67u);
    REQUIRE(R.num_vars() == 4);
}

TEST_CASE("parse and print round trip in canonical form", "[poly]") {
    Ring R(32003, 4);
    for (const char* s :
         {"3*x0^2*x2 + 2*x1*x2*x3 + 32002*x3^3", "x0 + 32002*x1", "32002*x2", "0", "31998",
          "x0*x1*x2*x3", "x3^5", "x0^2 + x1^2 + x2^2 + x3^2"}) {
        Polynomial p = parse_polynomial(R, s);
        REQUIRE(p.str() == s);
        REQUIRE(parse_polynomial(R, p.str()) == p);
    }
    REQUIRE(parse_polynomial(R, "3*x0^2*x2 - x3^3 + 2*x1*x2*x3").str() ==
            "3*x0^2*x2 + 2*x1*x2*x3 + 32002*x3^3");
    REQUIRE(parse_polynomial(R, "x0 - x0") == Polynomial::zero(R));
    REQUIRE(parse_polynomial(R, "32003") == Polynomial::zero(R));
    REQUIRE_THROWS_AS(parse_polynomial(R, "x4"), error);
    REQUIRE_THROWS_AS(parse_polynomial(R, "x0 +"), error);
    REQUIRE_THROWS_AS(parse_polynomial(R, ""), error);
}

TEST_CASE("terms print in decreasing grevlex order", "[poly]") {
    Ring R(32003, 4);
    Polynomial all = Polynomial::zero(R);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            all = all + Polynomial::variable(R, i) * Polynomial::variable(R, j);
    REQUIRE(all.str() ==
            "x0^2 + x0*x1 + x1^2 + x0*x2 + x1*x2 + x2^2 + x0*x3 + x1*x3 + x2*x3 + x3^2");
}

TEST_CASE("polynomial arithmetic identities", "[poly]") {
    Ring R(32003, 4);
    Rng rng(11);
    for (int t = 0; t < 5; ++t) {
        Rng r1 = rng.child(t);
        Polynomial a = random_homogeneous(R, 2, r1);
        Polynomial b = random_homogeneous(R, 3, r1);
        Polynomial c = random_homogeneous(R, 2, r1);
        REQUIRE(a * b == b * a);
        REQUIRE((a + c) * b == a * b + c * b);
        REQUIRE(a - a == Polynomial::zero(R));
        REQUIRE((a * b).degree() == 5);
        REQUIRE((a * b).is_homogeneous());
        REQUIRE((a * b).exact_div(a) == b);
        REQUIRE((a * b).exact_div(b) == a);
        REQUIRE(a.monic().leading_coeff() == 1u);
        REQUIRE((a * -1 + a).is_zero());
    }
    Polynomial f = parse_polynomial(R, "x0*x1 + x2^2");
    REQUIRE_THROWS_AS(f.exact_div(Polynomial::variable(R, 0)), error);
    REQUIRE(!parse_polynomial(R, "x0 + x1^2").is_homogeneous());
}

TEST_CASE("random homogeneous forms are reproducible", "[poly]") {
    Ring R(32003, 4);
    Rng r1(99), r2(99);
    for (int d : {1, 2, 3, 5}) {
        Polynomial p = random_homogeneous(R, d, r1);
        Polynomial q = random_homogeneous(R, d, r2);
        REQUIRE(p == q);
        REQUIRE(p.is_homogeneous());
        REQUIRE(p.degree() == d);
        REQUIRE(!p.is_zero());
    }
    Rng r3(100);
    REQUIRE(random_homogeneous(R, 2, r3) != random_homogeneous(R, 2, r3));
}

TEST_CASE("substitution is a ring homomorphism", "[poly]") {
    Ring R(32003, 4);
    std::vector<Polynomial> id, phi;
    for (int i = 0; i < 4; ++i) id.push_back(Polynomial::variable(R, i));
    phi = id;
    phi[0] = parse_polynomial(R, "x0 + 2*x1 + 5*x3");
    phi[2] = parse_polynomial(R, "x2 + 7*x3");

    Rng rng(5);
    Polynomial a = random_homogeneous(R, 2, rng);
    Polynomial b = random_homogeneous(R, 2, rng);
    REQUIRE((a * b).substitute(phi) == a.substitute(phi) * b.substitute(phi));
    REQUIRE((a + b).substitute(phi) == a.substitute(phi) + b.substitute(phi));
    REQUIRE(a.substitute(id) == a);
    REQUIRE(a.substitute(phi).is_homogeneous());
    REQUIRE(a.substitute(phi).degree() == 2);
}
