#include <catch2/catch_amalgamated.hpp>

#include "contentalg/ring.hpp"

using namespace contentalg;

TEST_CASE("zmod matches integer arithmetic on every pair", "[finring]") {
    for (std::uint64_t n : {2ull, 4ull, 6ull, 8ull}) {
        const FiniteRing R = FiniteRing::zmod(n);
        REQUIRE(R.order() == n);
        REQUIRE(R.zero() == 0);
        REQUIRE(R.one() == 1 % n);
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = 0; b < n; ++b) {
                REQUIRE(R.add(a, b) == (a + b) % n);
                REQUIRE(R.mul(a, b) == (std::uint64_t(a) * b) % n);
            }
            REQUIRE(R.add(a, R.neg(a)) == 0);
            REQUIRE(R.from_int((long long)a) == a);
            REQUIRE(R.from_int(-(long long)a) == R.neg(a));
        }
    }
}

TEST_CASE("units are exactly the elements with a brute-force inverse", "[finring]") {
    for (const FiniteRing& R : {FiniteRing::zmod(6), FiniteRing::zmod(8),
                                FiniteRing::trunc_poly(2, 2, 2)}) {
        const ElemSet u = R.units();
        for (Elem x = 0; x < R.order(); ++x) {
            bool has_inv = false;
            for (Elem y = 0; y < R.order(); ++y)
                if (R.mul(x, y) == R.one()) has_inv = true;
            REQUIRE(u.contains(x) == has_inv);
        }
    }
    // Z/6 units are 1 and 5
    const FiniteRing R6 = FiniteRing::zmod(6);
    REQUIRE(R6.units().count() == 2);
    REQUIRE(R6.units().contains(1));
    REQUIRE(R6.units().contains(5));
}

TEST_CASE("idempotents of Z/2 are 0 and 1", "[finring]") {
    const FiniteRing R = FiniteRing::zmod(2);
    const ElemSet e = R.idempotents();
    REQUIRE(e.count() == 2);
    REQUIRE(e.contains(0));
    REQUIRE(e.contains(1));
}

TEST_CASE("idempotents of Z/6 are 0, 1, 3, 4", "[finring]") {
    const FiniteRing R = FiniteRing::zmod(6);
    const ElemSet e = R.idempotents();
    REQUIRE(e.count() == 4);
    for (Elem x : {0u, 1u, 3u, 4u}) REQUIRE(e.contains(x));
}

TEST_CASE("truncated polynomial ring has the monomial-count order", "[finring]") {
    // monomials of total degree < cap in v variables: C(cap-1+v, v) for each
    // degree level summed; with p coefficient choices per monomial
    const FiniteRing R2 = FiniteRing::trunc_poly(2, 2, 2); // 1, a, b -> 2^3
    REQUIRE(R2.order() == 8);
    REQUIRE(R2.basis_rank() == 3);
    const FiniteRing R3 = FiniteRing::trunc_poly(2, 2, 3); // 1, a, b, a^2, ab, b^2 -> 2^6
    REQUIRE(R3.order() == 64);
    REQUIRE(R3.basis_rank() == 6);
    const FiniteRing R1 = FiniteRing::trunc_poly(3, 1, 2); // 1, a -> 3^2
    REQUIRE(R1.order() == 9);
}

TEST_CASE("truncated polynomial arithmetic: maximal ideal is nilpotent", "[finring]") {
    const FiniteRing R = FiniteRing::trunc_poly(2, 2, 3);
    // locate a and b by their printed names
    Elem a = 0, b = 0;
    for (std::size_t i = 0; i < R.basis_rank(); ++i) {
        if (R.show(R.basis_elem(i)) == "a") a = R.basis_elem(i);
        if (R.show(R.basis_elem(i)) == "b") b = R.basis_elem(i);
    }
    REQUIRE(a != 0);
    REQUIRE(b != 0);
    REQUIRE(R.mul(R.mul(a, a), a) == 0);      // a^3 = 0
    REQUIRE(R.mul(R.mul(a, b), a) == 0);      // a^2 b = 0
    REQUIRE(R.mul(a, b) != 0);                // ab != 0
    const Elem s = R.add(a, b);
    REQUIRE(R.mul(R.mul(s, s), s) == 0);      // (a+b)^3 = 0
    // elements with zero constant term are exactly the nilpotents: 32 of 64
    REQUIRE(R.nilpotents().count() == 32);
    REQUIRE(R.units().count() == 32);
}

TEST_CASE("ring axioms hold on every element triple of small rings", "[finring]") {
    for (const FiniteRing& R : {FiniteRing::zmod(8), FiniteRing::trunc_poly(2, 2, 2)}) {
        const std::size_t n = R.order();
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                REQUIRE(R.add(x, y) == R.add(y, x));
                REQUIRE(R.mul(x, y) == R.mul(y, x));
                for (Elem z = 0; z < n; ++z) {
                    REQUIRE(R.add(R.add(x, y), z) == R.add(x, R.add(y, z)));
                    REQUIRE(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
                    REQUIRE(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
                }
            }
    }
}

TEST_CASE("product ring Z/2 x Z/3 behaves like Z/6", "[finring]") {
    const FiniteRing P = FiniteRing::product({FiniteRing::zmod(2), FiniteRing::zmod(3)});
    REQUIRE(P.order() == 6);
    REQUIRE(P.units().count() == 2);
    REQUIRE(P.idempotents().count() == 4);
    REQUIRE(P.zero_divisors().count() == 4);
    // additive order of 1 is 6
    Elem x = P.one();
    int ord = 1;
    while (x != 0) {
        x = P.add(x, P.one());
        ++ord;
    }
    REQUIRE(ord == 6);
}

TEST_CASE("pow and scalar_times agree with iteration", "[finring]") {
    const FiniteRing R = FiniteRing::zmod(8);
    for (Elem a = 0; a < R.order(); ++a)
        for (unsigned n = 0; n < 6; ++n) {
            Elem p = R.one(), s = R.zero();
            for (unsigned i = 0; i < n; ++i) {
                p = R.mul(p, a);
                s = R.add(s, a);
            }
            REQUIRE(R.pow(a, n) == p);
            REQUIRE(R.scalar_times(n, a) == s);
        }
}

TEST_CASE("invalid explicit tables are rejected", "[finring]") {
    // 2-element "ring" with a broken identity law
    std::vector<Elem> add = {0, 1, 1, 0};
    std::vector<Elem> bad_mul = {0, 0, 0, 0}; // 1*1 = 0 breaks the identity
    REQUIRE_THROWS_AS(FiniteRing::from_cayley("bad", 2, add, bad_mul, 1), AxiomViolation);
    std::vector<Elem> good_mul = {0, 0, 0, 1};
    REQUIRE_NOTHROW(FiniteRing::from_cayley("f2", 2, add, good_mul, 1));
    REQUIRE_THROWS_AS(FiniteRing::from_cayley("short", 2, {0, 1}, good_mul, 1), SchemaError);
}

TEST_CASE("order cap is enforced", "[finring]") {
    REQUIRE_THROWS_AS(FiniteRing::zmod(5000), OrderCapExceeded);
    REQUIRE_THROWS_AS(FiniteRing::trunc_poly(2, 3, 4, 100), OrderCapExceeded);
}

TEST_CASE("zero divisor set convention includes zero", "[finring]") {
    const FiniteRing F = FiniteRing::zmod(3); // field
    const ElemSet z = F.zero_divisors();
    REQUIRE(z.count() == 1);
    REQUIRE(z.contains(0));
    const FiniteRing R = FiniteRing::zmod(6);
    for (Elem x : {0u, 2u, 3u, 4u}) REQUIRE(R.zero_divisors().contains(x));
    REQUIRE(R.zero_divisors().count() == 4);
}
