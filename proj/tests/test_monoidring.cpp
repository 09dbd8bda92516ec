#include <catch2/catch_amalgamated.hpp>

#include "contentalg/expr.hpp"
#include "contentalg/monoid_ring.hpp"

using namespace contentalg;

namespace {

// Independent convolution: accumulate products term by term through a plain
// vector, normalizing only at the end.
MRElem slow_mul(const FiniteRing& R, const Monoid& S, const MRElem& f, const MRElem& g) {
    std::vector<std::pair<MElem, Elem>> acc;
    for (const auto& [s, a] : f.terms)
        for (const auto& [t, b] : g.terms) acc.emplace_back(S.op(s, t), R.mul(a, b));
    MRElem r;
    for (const auto& [k, v] : acc) {
        const Elem sum = R.add(v, r.terms.count(k) ? r.terms[k] : 0);
        if (sum == 0) r.terms.erase(k);
        else r.terms[k] = sum;
    }
    return r;
}

} // namespace

TEST_CASE("multiplication agrees with the slow convolution oracle", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(4);
    for (const Monoid& S : {Monoid::free_monoid(1), Monoid::trunc_add(3),
                            Monoid::abelian_group(0, {2})}) {
        MonoidRingCtx ctx(R, S);
        std::vector<MRElem> pool;
        for (const MElem& k : S.elements_up_to(2))
            for (Elem c = 1; c < R.order(); ++c) pool.push_back(ctx.monomial(c, k));
        // add some two-term elements
        const std::size_t n0 = pool.size();
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n0; j += 3) pool.push_back(ctx.add(pool[i], pool[j]));
        for (std::size_t i = 0; i < pool.size(); i += 2)
            for (std::size_t j = 0; j < pool.size(); j += 3)
                REQUIRE(ctx.mul(pool[i], pool[j]) == slow_mul(R, S, pool[i], pool[j]));
    }
}

TEST_CASE("ring laws and trivia in R[S]", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(6);
    const Monoid S = Monoid::free_monoid(1);
    MonoidRingCtx ctx(R, S);
    const MRElem one = ctx.scalar(R.one());
    const MRElem f = ctx.add(ctx.monomial(2, {1}), ctx.monomial(5, {3}));
    REQUIRE(ctx.mul(f, one) == f);
    REQUIRE(ctx.mul(f, ctx.zero()).is_zero());
    REQUIRE(ctx.sub(f, f).is_zero());
    REQUIRE(ctx.add(f, ctx.neg(f)).is_zero());
    const MRElem g = ctx.monomial(3, {2});
    REQUIRE(ctx.mul(f, g) == ctx.mul(g, f));
    REQUIRE(ctx.mul(f, ctx.add(g, one)) == ctx.add(ctx.mul(f, g), f));
}

TEST_CASE("content of elements", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(4);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    REQUIRE(ctx.content(ctx.zero()).is_zero());
    const MRElem f = ctx.add(ctx.monomial(2, {0}), ctx.monomial(2, {1}));
    REQUIRE(ctx.content(f) == ideal_generate(R, {2}));
    REQUIRE(ctx.content(ctx.scalar(1)).is_whole());
}

TEST_CASE("zero product identities over special monoids", "[monoidring]") {
    // truncated addition: X^2 * (X^1 - X^2) = X^3 - X^4 collapses to 0
    {
        const FiniteRing R = FiniteRing::zmod(4);
        MonoidRingCtx ctx(R, Monoid::trunc_add(3));
        const MRElem f = ctx.monomial(1, {2});
        const MRElem g = ctx.sub(ctx.monomial(1, {1}), ctx.monomial(1, {2}));
        REQUIRE(ctx.mul(f, g).is_zero());
        REQUIRE(slow_mul(R, ctx.monoid(), f, g).is_zero());
        REQUIRE(ctx.content(f).is_whole());
        REQUIRE(ctx.content(g).is_whole());
    }
    // torsion: (1 + X)^2 = 1 + 2X + X^2 = 0 over F2 with X of order 2
    {
        const FiniteRing R = FiniteRing::zmod(2);
        MonoidRingCtx ctx(R, Monoid::abelian_group(0, {2}));
        const MRElem f = ctx.add(ctx.scalar(1), ctx.monomial(1, {1}));
        REQUIRE(ctx.mul(f, f).is_zero());
        REQUIRE(slow_mul(R, ctx.monoid(), f, f).is_zero());
        REQUIRE(ctx.content(f).is_whole());
    }
}

TEST_CASE("nilpotency by power iteration", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(4);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    const auto [nil1, idx1] = ctx.nilpotency(ctx.monomial(2, {1}), 8);
    REQUIRE(nil1);
    REQUIRE(idx1 == 2);
    const auto [nil2, idx2] = ctx.nilpotency(ctx.add(ctx.scalar(1), ctx.monomial(2, {1})), 8);
    REQUIRE_FALSE(nil2);
    REQUIRE(ctx.nilpotency(ctx.zero(), 1).first);
}

TEST_CASE("content id registry is coherent with direct ideal arithmetic", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(8);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    const MRElem f = ctx.add(ctx.monomial(2, {0}), ctx.monomial(4, {1}));
    const MRElem g = ctx.add(ctx.monomial(6, {0}), ctx.monomial(2, {2}));
    const auto cf = ctx.content_id(f), cg = ctx.content_id(g);
    REQUIRE(ctx.ideal_of(cf) == ctx.content(f));
    REQUIRE(ctx.ideal_of(ctx.product(cf, cg)) ==
            ideal_combine(IdealOp::Product, ctx.content(f), ctx.content(g)));
    REQUIRE(ctx.ideal_of(ctx.power(cf, 2)) == ideal_power(ctx.content(f), 2));
    REQUIRE(ctx.ideal_of(ctx.radical_of(cf)) == radical(ctx.content(f)));
    REQUIRE(ctx.ideal_of(ctx.annihilator_of(cf)) == annihilator(ctx.content(f)));
    REQUIRE(ctx.content_id(f) == cf); // stable interning
    REQUIRE(ctx.subset(cg, cf));      // (2,6) = (2) contains... both are (2)
    REQUIRE(ctx.subset(cf, cg));
}

TEST_CASE("module elements and the action of R[S]", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(6);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    const ModMRElem v = ctx.mod_monomial({1, 2}, {0});
    const ModMRElem w = ctx.mod_monomial({5, 4}, {1});
    const ModMRElem sum = ctx.mod_add(v, w);
    REQUIRE(sum.terms.size() == 2);
    const MRElem f = ctx.monomial(3, {1});
    const ModMRElem fv = ctx.mod_mul(f, sum);
    // 3*(1,2) = (3,0) at X^1; 3*(5,4) = (3,0) at X^2
    REQUIRE(fv.terms.at(MElem{1}) == std::vector<Elem>{3, 0});
    REQUIRE(fv.terms.at(MElem{2}) == std::vector<Elem>{3, 0});
    REQUIRE(ctx.mod_add(sum, ctx.mod_mul(ctx.scalar(5), sum)).is_zero()); // v + 5v = 0
}

TEST_CASE("expression parser round trips", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(6);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    const ExprParser P(ctx);
    REQUIRE(P.parse("2*X^1 + 3") == ctx.add(ctx.monomial(2, {1}), ctx.scalar(3)));
    REQUIRE(P.parse(" 5 - X ") == ctx.sub(ctx.scalar(5), ctx.monomial(1, {1})));
    REQUIRE(P.parse("7") == ctx.scalar(1)); // coefficients reduce mod 6
    REQUIRE(P.parse("X^2 - X^2").is_zero());
    REQUIRE_THROWS_AS(P.parse(""), SchemaError);
    REQUIRE_THROWS_AS(P.parse("y + 2"), SchemaError);
    REQUIRE_THROWS_AS(P.parse("2 + + 3"), SchemaError);
    REQUIRE_THROWS_AS(P.parse("X^-1"), SchemaError); // free monoid needs nonnegative exponents
    REQUIRE_THROWS_AS(P.parse("X^(1,2)"), SchemaError); // wrong arity

    MonoidRingCtx ctx2(R, Monoid::free_monoid(2));
    const ExprParser P2(ctx2);
    REQUIRE(P2.parse("X^(1,0) + 2*X^(0,3)") ==
            ctx2.add(ctx2.monomial(1, {1, 0}), ctx2.monomial(2, {0, 3})));

    MonoidRingCtx ctx3(R, Monoid::abelian_group(0, {3}));
    const ExprParser P3(ctx3);
    REQUIRE(P3.parse("X^5") == ctx3.monomial(1, {2})); // canonicalized mod 3

    MonoidRingCtx ctx4(R, Monoid::trunc_add(3));
    const ExprParser P4(ctx4);
    REQUIRE(P4.parse("X^2") == ctx4.monomial(1, {2}));
    REQUIRE_THROWS_AS(P4.parse("X^9"), SchemaError); // out of table range
}

TEST_CASE("rendering is stable and readable", "[monoidring]") {
    const FiniteRing R = FiniteRing::zmod(4);
    MonoidRingCtx ctx(R, Monoid::free_monoid(1));
    REQUIRE(ctx.show(ctx.zero()) == "0");
    REQUIRE(ctx.show(ctx.add(ctx.scalar(1), ctx.monomial(1, {1}))) == "1 + X^1");
    REQUIRE(ctx.show(ctx.monomial(2, {3})) == "2*X^3");
}
