#include <catch2/catch_amalgamated.hpp>

#include "contentalg/localize.hpp"

using namespace contentalg;

TEST_CASE("localization preconditions", "[localize]") {
    const FiniteRing R = FiniteRing::zmod(4);
    {
        MonoidRingCtx ctx(R, Monoid::trunc_add(3));
        REQUIRE_THROWS_AS(LocalizationCtx(ctx), PreconditionViolated);
    }
    {
        MonoidRingCtx ctx(R, Monoid::abelian_group(0, {2}));
        REQUIRE_THROWS_AS(LocalizationCtx(ctx), PreconditionViolated);
    }
    {
        MonoidRingCtx ctx(R, Monoid::free_monoid(1));
        LocalizationCtx L(ctx);
        // denominators must have unit content
        REQUIRE_THROWS_AS(L.make(ctx.scalar(1), ctx.scalar(2)), PreconditionViolated);
        REQUIRE_NOTHROW(L.make(ctx.scalar(2), ctx.add(ctx.scalar(1), ctx.monomial(2, {1}))));
    }
}

TEST_CASE("fraction arithmetic basics", "[localize]") {
    const FiniteRing R = FiniteRing::zmod(4);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    LocalizationCtx L(ctx);
    const Fraction x = L.make(ctx.monomial(2, {1}), ctx.add(ctx.scalar(1), ctx.monomial(2, {1})));
    REQUIRE(L.eq(L.add(x, L.zero()), x));
    REQUIRE(L.eq(L.mul(x, L.one()), x));
    REQUIRE(L.eq(L.sub(x, x), L.zero()));
    REQUIRE(L.is_unit_frac(L.one()));
    REQUIRE_FALSE(L.is_unit_frac(L.zero()));
    REQUIRE_FALSE(L.is_unit_frac(x));
}

TEST_CASE("cross-multiplication equality is an equivalence at bounds", "[localize]") {
    const FiniteRing R = FiniteRing::zmod(4);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    LocalizationCtx L(ctx);
    const MRElem u = ctx.add(ctx.scalar(1), ctx.monomial(2, {1})); // unit content
    const MRElem one = ctx.scalar(1);
    // (2X)/1 equals (2X * u)/u
    const Fraction a = L.make(ctx.monomial(2, {1}), one);
    const Fraction b = L.make(ctx.mul(ctx.monomial(2, {1}), u), u);
    REQUIRE(L.eq(a, a));
    REQUIRE(L.eq(a, b));
    REQUIRE(L.eq(b, a));
    // transitivity through a third representative
    const MRElem u2 = ctx.mul(u, u);
    const Fraction c = L.make(ctx.mul(ctx.monomial(2, {1}), u2), u2);
    REQUIRE(L.eq(b, c));
    REQUIRE(L.eq(a, c));
    // and inequality where numerators genuinely differ
    REQUIRE_FALSE(L.eq(a, L.one()));
}

TEST_CASE("non-unit fractions sit under maximal ideals of the base ring", "[localize]") {
    const FiniteRing R = FiniteRing::zmod(6);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    ScanUniverse U(ctx, ScanBounds{});
    const CheckResult r = max_correspondence_check(U, 1);
    REQUIRE(r.verdict == Verdict::Pass);
    REQUIRE(r.details.at("maximal_ideals") == "2");
    // direct membership pins: 2/1 sits in (2), 3/1 sits in (3)
    REQUIRE(ctx.content(ctx.scalar(2)).subset_of(ideal_generate(R, {2})));
    REQUIRE(ctx.content(ctx.scalar(3)).subset_of(ideal_generate(R, {3})));
}

TEST_CASE("quasi-regular fractions are exactly the radical extension", "[localize]") {
    for (const FiniteRing& R : {FiniteRing::zmod(4), FiniteRing::zmod(8)}) {
        MonoidRingCtx ctx(R, Monoid::free_monoid(1));
        ScanUniverse U(ctx, ScanBounds{});
        REQUIRE(jac_correspondence_check(U, 1).verdict == Verdict::Pass);
    }
    {
        const FiniteRing R = FiniteRing::zmod(6);
        MonoidRingCtx ctx(R, Monoid::free_monoid(1));
        ScanUniverse U(ctx, ScanBounds{});
        REQUIRE(jac_correspondence_check(U, 1).verdict == Verdict::Pass);
    }
    // skipped without the monoid hypotheses
    const FiniteRing R = FiniteRing::zmod(4);
    MonoidRingCtx ctx(R, Monoid::trunc_add(3));
    ScanUniverse U(ctx, ScanBounds{});
    REQUIRE(jac_correspondence_check(U, 1).verdict == Verdict::Skipped);
}

TEST_CASE("zero-divisors land in the radical exactly for local base rings", "[localize]") {
    {
        const FiniteRing R = FiniteRing::zmod(4);
        MonoidRingCtx ctx(R, Monoid::free_monoid(1));
        ScanUniverse U(ctx, ScanBounds{});
        const CheckResult r = presimplifiable_transfer_check(U, 1);
        REQUIRE(r.verdict == Verdict::Pass);
        REQUIRE(r.note == "both presimplifiable");
    }
    {
        const FiniteRing R = FiniteRing::zmod(6);
        MonoidRingCtx ctx(R, Monoid::free_monoid(1));
        ScanUniverse U(ctx, ScanBounds{});
        const CheckResult r = presimplifiable_transfer_check(U, 1);
        REQUIRE(r.verdict == Verdict::Pass);
        REQUIRE(r.note == "both not presimplifiable");
        REQUIRE_FALSE(r.witness.empty());
    }
}

TEST_CASE("idempotent fractions over chain rings are the trivial pair", "[localize]") {
    for (const FiniteRing& R : {FiniteRing::zmod(4), FiniteRing::zmod(8)}) {
        MonoidRingCtx ctx(R, Monoid::free_monoid(1));
        ScanUniverse U(ctx, ScanBounds{});
        const CheckResult r = idempotent_coincidence_check(U, 1);
        REQUIRE(r.verdict == Verdict::Pass);
        REQUIRE(r.details.at("solutions") == "0/1, 1/1");
    }
    // Z/6 is not a chain ring: declined
    const FiniteRing R = FiniteRing::zmod(6);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    ScanUniverse U(ctx, ScanBounds{});
    const CheckResult r = idempotent_coincidence_check(U, 1);
    REQUIRE(r.verdict == Verdict::Skipped);
    REQUIRE(r.note.find("incomparable") != std::string::npos);
}

TEST_CASE("divisibility is total among seeded fraction pairs over valuation rings",
          "[localize]") {
    for (const FiniteRing& R : {FiniteRing::zmod(4), FiniteRing::zmod(8)}) {
        MonoidRingCtx ctx(R, Monoid::free_monoid(1));
        ScanUniverse U(ctx, ScanBounds{});
        const CheckResult r = valuation_transfer_check(U, 0x5eed, 200);
        REQUIRE(r.verdict == Verdict::BoundedPass);
        REQUIRE(r.scanned == 200);
    }
    // 2 and 3 do not divide each other in Z/6: declined
    const FiniteRing R = FiniteRing::zmod(6);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    ScanUniverse U(ctx, ScanBounds{});
    const CheckResult r = valuation_transfer_check(U, 0x5eed, 200);
    REQUIRE(r.verdict == Verdict::Skipped);
    REQUIRE(r.note.find("do not divide each other") != std::string::npos);
}
