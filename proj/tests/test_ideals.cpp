#include <catch2/catch_amalgamated.hpp>

#include "contentalg/ideal.hpp"

using namespace contentalg;

namespace {

ElemSet set_of(const FiniteRing& R, std::initializer_list<Elem> xs) {
    ElemSet s(R.order());
    for (Elem x : xs) s.insert(x);
    return s;
}

// Independent membership oracle: I = { sum_i r_i g_i } enumerated directly.
ElemSet principal_sums(const FiniteRing& R, const std::vector<Elem>& gens) {
    ElemSet s(R.order());
    s.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        const auto cur = s.to_vector();
        for (auto x : cur)
            for (Elem g : gens)
                for (Elem r = 0; r < R.order(); ++r)
                    if (s.insert(R.add(x, R.mul(r, g)))) grew = true;
    }
    return s;
}

} // namespace

TEST_CASE("generated ideals match the direct linear-combination oracle", "[ideals]") {
    for (const FiniteRing& R : {FiniteRing::zmod(6), FiniteRing::zmod(8),
                                FiniteRing::trunc_poly(2, 2, 2)}) {
        for (Elem g = 0; g < R.order(); ++g)
            REQUIRE(ideal_generate(R, {g}).elements() == principal_sums(R, {g}));
        for (Elem g = 0; g < R.order(); ++g)
            for (Elem h = 0; h < R.order(); ++h)
                REQUIRE(ideal_generate(R, {g, h}).elements() == principal_sums(R, {g, h}));
    }
}

TEST_CASE("ideal lattice over Z/6", "[ideals]") {
    const FiniteRing R = FiniteRing::zmod(6);
    const Ideal I2 = ideal_generate(R, {2});
    const Ideal I3 = ideal_generate(R, {3});
    REQUIRE(I2.elements() == set_of(R, {0, 2, 4}));
    REQUIRE(I3.elements() == set_of(R, {0, 3}));
    REQUIRE(ideal_combine(IdealOp::Sum, I2, I3).is_whole());
    REQUIRE(ideal_combine(IdealOp::Product, I2, I3).is_zero());
    REQUIRE(ideal_combine(IdealOp::Intersection, I2, I3).is_zero());
    REQUIRE(ideal_combine(IdealOp::Colon, zero_ideal(R), I2) == I3);
    REQUIRE(ideal_combine(IdealOp::Colon, zero_ideal(R), I3) == I2);
}

TEST_CASE("lattice inclusions hold for every ideal pair", "[ideals]") {
    for (const FiniteRing& R : {FiniteRing::zmod(8), FiniteRing::zmod(6),
                                FiniteRing::trunc_poly(2, 2, 2)}) {
        const std::vector<Ideal> ideals = enumerate_ideals(R, 3);
        for (const Ideal& I : ideals)
            for (const Ideal& J : ideals) {
                const Ideal prod = ideal_combine(IdealOp::Product, I, J);
                const Ideal meet = ideal_combine(IdealOp::Intersection, I, J);
                const Ideal sum = ideal_combine(IdealOp::Sum, I, J);
                const Ideal colon = ideal_combine(IdealOp::Colon, I, J);
                REQUIRE(prod.subset_of(meet));
                REQUIRE(meet.subset_of(I));
                REQUIRE(I.subset_of(sum));
                REQUIRE(I.subset_of(colon)); // I : J contains I
                REQUIRE(ideal_combine(IdealOp::Product, colon, J).subset_of(I));
            }
    }
}

TEST_CASE("radical and annihilator on Z/8 and Z/4", "[ideals]") {
    const FiniteRing R8 = FiniteRing::zmod(8);
    REQUIRE(radical(zero_ideal(R8)).elements() == set_of(R8, {0, 2, 4, 6}));
    REQUIRE(radical(ideal_generate(R8, {4})).elements() == set_of(R8, {0, 2, 4, 6}));
    REQUIRE(radical(unit_ideal(R8)).is_whole()); // rad(R) = R
    const FiniteRing R4 = FiniteRing::zmod(4);
    REQUIRE(annihilator(ideal_generate(R4, {2})).elements() == set_of(R4, {0, 2}));
    REQUIRE(annihilator(unit_ideal(R4)).is_zero());
    REQUIRE(annihilator(zero_ideal(R4)).is_whole());
}

TEST_CASE("primality and primariness", "[ideals]") {
    const FiniteRing R6 = FiniteRing::zmod(6);
    REQUIRE(is_prime(ideal_generate(R6, {2})));
    REQUIRE(is_prime(ideal_generate(R6, {3})));
    REQUIRE_FALSE(is_prime(zero_ideal(R6)));
    REQUIRE_FALSE(is_primary(zero_ideal(R6))); // 2*3 = 0, neither works
    const FiniteRing R4 = FiniteRing::zmod(4);
    REQUIRE(is_prime(ideal_generate(R4, {2})));
    REQUIRE_FALSE(is_prime(zero_ideal(R4)));
    REQUIRE(is_primary(zero_ideal(R4))); // (2)-primary
    REQUIRE_FALSE(is_prime(unit_ideal(R4)));
}

TEST_CASE("nilradical and jacobson radical", "[ideals]") {
    const FiniteRing R8 = FiniteRing::zmod(8);
    REQUIRE(nilradical(R8).elements() == set_of(R8, {0, 2, 4, 6}));
    REQUIRE(jacobson(R8).elements() == set_of(R8, {0, 2, 4, 6}));
    const FiniteRing R6 = FiniteRing::zmod(6);
    REQUIRE(nilradical(R6).is_zero());
    REQUIRE(jacobson(R6).is_zero());
    const FiniteRing F = FiniteRing::zmod(5);
    REQUIRE(jacobson(F).is_zero());
    const FiniteRing T = FiniteRing::trunc_poly(2, 2, 2);
    REQUIRE(nilradical(T).size() == 4); // (a, b) additively: 0, a, b, a+b
    REQUIRE(nilradical(T) == jacobson(T));
}

TEST_CASE("ideal enumeration finds the full lattice of small rings", "[ideals]") {
    // Z/8: (0), (4), (2), (1)
    REQUIRE(enumerate_ideals(FiniteRing::zmod(8), 3).size() == 4);
    // Z/6: (0), (2), (3), (1)
    REQUIRE(enumerate_ideals(FiniteRing::zmod(6), 3).size() == 4);
    // F2[a,b]/(a,b)^2: (0), (a), (b), (a+b), (a,b), (1)
    REQUIRE(enumerate_ideals(FiniteRing::trunc_poly(2, 2, 2), 3).size() == 6);
}

TEST_CASE("quotient ring Z/8 mod (4) behaves like Z/4", "[ideals]") {
    const FiniteRing R = FiniteRing::zmod(8);
    const QuotientRing Q = quotient_ring(R, ideal_generate(R, {4}));
    REQUIRE(Q.ring.order() == 4);
    REQUIRE(Q.proj[4] == 0);
    REQUIRE(Q.proj[5] == Q.proj[1]);
    // additive order of 1 in the quotient is 4
    Elem x = Q.ring.one();
    int ord = 1;
    while (x != 0) {
        x = Q.ring.add(x, Q.ring.one());
        ++ord;
    }
    REQUIRE(ord == 4);
    REQUIRE(Q.ring.mul(Q.proj[2], Q.proj[2]) == 0); // 2^2 = 4 = 0 in the quotient
}

TEST_CASE("spectrum pins: Z/6, Z/8, fields, local truncated rings", "[ideals]") {
    const FiniteRing R6 = FiniteRing::zmod(6);
    const std::vector<Ideal> s6 = spectrum(R6);
    REQUIRE(s6.size() == 2);
    const ElemSet p2 = set_of(R6, {0, 2, 4}), p3 = set_of(R6, {0, 3});
    REQUIRE(((s6[0].elements() == p2 && s6[1].elements() == p3) ||
             (s6[0].elements() == p3 && s6[1].elements() == p2)));

    const std::vector<Ideal> s8 = spectrum(FiniteRing::zmod(8));
    REQUIRE(s8.size() == 1);
    REQUIRE(s8[0].elements() == set_of(FiniteRing::zmod(8), {0, 2, 4, 6}));

    const std::vector<Ideal> sf = spectrum(FiniteRing::zmod(3));
    REQUIRE(sf.size() == 1);
    REQUIRE(sf[0].is_zero());

    const FiniteRing T = FiniteRing::trunc_poly(2, 2, 2);
    const std::vector<Ideal> st = spectrum(T);
    REQUIRE(st.size() == 1);
    REQUIRE(st[0] == nilradical(T));
}

TEST_CASE("associated primes and very few zero-divisors", "[ideals]") {
    const FiniteRing R6 = FiniteRing::zmod(6);
    REQUIRE(associated_primes(R6).size() == 2);
    const VeryFewZdResult v6 = very_few_zero_divisors(R6);
    REQUIRE(v6.holds);
    REQUIRE(v6.cover.size() == 2);

    const VeryFewZdResult v8 = very_few_zero_divisors(FiniteRing::zmod(8));
    REQUIRE(v8.holds);
    REQUIRE(v8.cover.size() == 1);
    REQUIRE(v8.cover[0].elements() == set_of(FiniteRing::zmod(8), {0, 2, 4, 6}));

    const VeryFewZdResult vf = very_few_zero_divisors(FiniteRing::zmod(5));
    REQUIRE(vf.holds); // Z(field) = {0} = (0), and (0) is prime
}

TEST_CASE("property (A) holds on all desk rings", "[ideals]") {
    for (const FiniteRing& R : {FiniteRing::zmod(2), FiniteRing::zmod(4), FiniteRing::zmod(6),
                                FiniteRing::zmod(8), FiniteRing::trunc_poly(2, 2, 2),
                                FiniteRing::trunc_poly(2, 2, 3)})
        REQUIRE(has_property_A(R).holds);
}

TEST_CASE("prime avoidance locator", "[ideals]") {
    const FiniteRing R = FiniteRing::zmod(4);
    const Ideal p = ideal_generate(R, {2});
    REQUIRE(prime_avoidance_locate(zero_ideal(R), {p}) == 0);
    REQUIRE_FALSE(prime_avoidance_locate(unit_ideal(R), {p}).has_value());
}
