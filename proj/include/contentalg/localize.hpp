#pragma once

#include <random>
#include <string>
#include <vector>

#include "contentalg/content_checks.hpp"
#include "contentalg/scan.hpp"

namespace contentalg {

// Element f/g of the localization of B = R[S] at the unit-content
// multiplicative set. No normal form: equality is cross-multiplication, which
// is a congruence because unit-content denominators are regular when S is
// cancellative and torsion-free.
struct Fraction {
    MRElem num;
    MRElem den;
};

class LocalizationCtx {
public:
    explicit LocalizationCtx(MonoidRingCtx& ctx) : ctx_(&ctx) {
        const Monoid& S = ctx.monoid();
        if (!S.cancellative() || !S.torsion_free())
            throw PreconditionViolated(
                "localization needs a cancellative torsion-free monoid so that "
                "unit-content denominators are regular");
    }

    MonoidRingCtx& base() const { return *ctx_; }

    Fraction make(MRElem num, MRElem den) const {
        if (!ctx_->content(den).is_whole())
            throw PreconditionViolated("fraction denominator must have unit content");
        return {std::move(num), std::move(den)};
    }

    Fraction one() const { return {ctx_->scalar(ctx_->ring().one()), ctx_->scalar(ctx_->ring().one())}; }
    Fraction zero() const { return {ctx_->zero(), ctx_->scalar(ctx_->ring().one())}; }

    bool eq(const Fraction& a, const Fraction& b) const {
        return ctx_->mul(a.num, b.den) == ctx_->mul(b.num, a.den);
    }

    Fraction add(const Fraction& a, const Fraction& b) const {
        return {ctx_->add(ctx_->mul(a.num, b.den), ctx_->mul(b.num, a.den)),
                ctx_->mul(a.den, b.den)};
    }

    Fraction mul(const Fraction& a, const Fraction& b) const {
        return {ctx_->mul(a.num, b.num), ctx_->mul(a.den, b.den)};
    }

    Fraction neg(const Fraction& a) const { return {ctx_->neg(a.num), a.den}; }

    Fraction sub(const Fraction& a, const Fraction& b) const { return add(a, neg(b)); }

    // a fraction is a unit exactly when its numerator has unit content
    bool is_unit_frac(const Fraction& a) const { return ctx_->content(a.num).is_whole(); }

    std::string show(const Fraction& a) const {
        return "(" + ctx_->show(a.num) + ") / (" + ctx_->show(a.den) + ")";
    }

private:
    MonoidRingCtx* ctx_;
};

// Deterministic bounded fraction universe: numerators from a prefix of the
// element universe, denominators from the first few unit-content elements
// (the constant 1 first).
struct FractionUniverse {
    std::vector<Fraction> items;

    FractionUniverse(const LocalizationCtx& L, const ScanUniverse& U,
                     std::size_t num_cap = 400, std::size_t den_cap = 3) {
        MonoidRingCtx& ctx = L.base();
        std::vector<MRElem> dens;
        dens.push_back(ctx.scalar(ctx.ring().one()));
        for (std::size_t i = 0; i < U.elements().size() && dens.size() < den_cap; ++i) {
            const MRElem& g = U.elements()[i];
            if (!g.is_zero() && !(g == dens[0]) && ctx.is_unit(U.content_of(i))) dens.push_back(g);
        }
        const std::size_t n = std::min(U.elements().size(), num_cap);
        for (const MRElem& den : dens)
            for (std::size_t i = 0; i < n; ++i) items.push_back({U.elements()[i], den});
    }
};

// Jacobson correspondence: f/g lies in the extension of Jac(R) (c(f) inside
// Jac(R)) iff it is quasi-regular (1 - (f/g)y is a unit for every y). The
// positive side scans a prefix of the fraction universe; the negative side
// constructs an explicit y with 1 - xy non-unit.
inline CheckResult jac_correspondence_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "jac_correspondence";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || !S.torsion_free())
        return CheckResult::skipped(r.name, "monoid not cancellative torsion-free");
    const FiniteRing& R = ctx.ring();
    const LocalizationCtx L(ctx);
    const FractionUniverse F(L, U);
    const Ideal jac = jacobson(R);
    const std::vector<Ideal> maxes = spectrum(R);
    const std::size_t y_prefix = std::min<std::size_t>(F.items.size(), 60);

    for (const Fraction& x : F.items) {
        ++r.scanned;
        const bool in_ext = ctx.content(x.num).subset_of(jac);
        if (in_ext) {
            for (std::size_t yi = 0; yi < y_prefix; ++yi) {
                const Fraction& y = F.items[yi];
                const MRElem n = ctx.sub(ctx.mul(x.den, y.den), ctx.mul(x.num, y.num));
                if (!ctx.content(n).is_whole()) {
                    r.verdict = Verdict::Fail;
                    r.witness = "x = " + L.show(x) + "; y = " + L.show(y);
                    r.note = "x in Jac(R)R' but 1 - xy is not a unit";
                    r.seed = seed;
                    return r;
                }
            }
            continue;
        }
        // construct y with 1 - xy non-unit
        Fraction y = L.one();
        if (ctx.content(x.num).is_whole()) {
            y = {x.den, x.num}; // x is a unit: 1 - x x^{-1} = 0
        } else {
            // pick a maximal ideal m missing a coefficient a of x.num, then
            // w in m with a + w a unit; y = den / (num + w X^{s0}) makes
            // 1 - xy = (den * w X^{s0}) / (...) with content inside m
            bool built = false;
            for (const Ideal& m : maxes) {
                if (ctx.content(x.num).subset_of(m)) continue;
                MElem s0 = S.id();
                Elem a = 0;
                for (const auto& [s, c] : x.num.terms)
                    if (!m.contains(c)) {
                        s0 = s;
                        a = c;
                        break;
                    }
                Elem w = 0;
                bool found = false;
                m.elements().for_each([&](std::size_t cand) {
                    if (!found && R.is_unit(R.add(a, Elem(cand)))) {
                        w = Elem(cand);
                        found = true;
                    }
                });
                if (!found) continue;
                const MRElem den2 = ctx.add(x.num, ctx.monomial(w, s0));
                if (!ctx.content(den2).is_whole()) continue;
                y = {x.den, den2};
                built = true;
                break;
            }
            if (!built)
                throw CrossValidationMismatch(
                    "jac_correspondence: no non-quasi-regularity witness constructible for " +
                    L.show(x));
        }
        const MRElem n = ctx.sub(ctx.mul(x.den, y.den), ctx.mul(x.num, y.num));
        if (ctx.content(n).is_whole()) {
            r.verdict = Verdict::Fail;
            r.witness = "x = " + L.show(x) + "; y = " + L.show(y);
            r.note = "x outside Jac(R)R' but the constructed 1 - xy is a unit";
            r.seed = seed;
            return r;
        }
    }
    r.verdict = scan_verdict(U);
    r.seed = seed;
    return r;
}

// Maximal-ideal correspondence: every scanned non-unit fraction has numerator
// content inside some maximal ideal of R, and distinct maximal ideals contract
// apart.
inline CheckResult max_correspondence_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "max_correspondence";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || !S.torsion_free())
        return CheckResult::skipped(r.name, "monoid not cancellative torsion-free");
    const FiniteRing& R = ctx.ring();
    const LocalizationCtx L(ctx);
    const FractionUniverse F(L, U);
    const std::vector<Ideal> maxes = spectrum(R);
    for (const Fraction& x : F.items) {
        ++r.scanned;
        if (L.is_unit_frac(x)) continue;
        const Ideal c = ctx.content(x.num);
        bool covered = false;
        for (const Ideal& m : maxes) covered = covered || c.subset_of(m);
        if (!covered) {
            r.verdict = Verdict::Fail;
            r.witness = "x = " + L.show(x);
            r.note = "non-unit fraction with content outside every maximal ideal";
            r.seed = seed;
            return r;
        }
    }
    for (std::size_t i = 0; i < maxes.size(); ++i)
        for (std::size_t j = i + 1; j < maxes.size(); ++j) {
            bool separated = false;
            for (Elem x = 0; x < R.order() && !separated; ++x)
                separated = maxes[i].contains(x) != maxes[j].contains(x);
            if (!separated) {
                r.verdict = Verdict::Fail;
                r.note = "two maximal ideals contract identically";
                r.seed = seed;
                return r;
            }
        }
    r.verdict = scan_verdict(U);
    r.details["maximal_ideals"] = std::to_string(maxes.size());
    r.seed = seed;
    return r;
}

// Presimplifiable transfer: Z(R) inside Jac(R) iff every scanned zero-divisor
// fraction has numerator content inside Jac(R).
inline CheckResult presimplifiable_transfer_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "presimplifiable_transfer";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || !S.torsion_free())
        return CheckResult::skipped(r.name, "monoid not cancellative torsion-free");
    const FiniteRing& R = ctx.ring();
    const LocalizationCtx L(ctx);
    const FractionUniverse F(L, U);
    const Ideal jac = jacobson(R);
    const bool ps_ring = R.zero_divisors().subset_of(jac.elements());
    bool ps_loc = true;
    std::string witness;
    for (const Fraction& x : F.items) {
        if (x.num.is_zero()) continue;
        ++r.scanned;
        const Ideal c = ctx.content(x.num);
        const bool zd = !annihilator(c).is_zero();
        if (zd && !c.subset_of(jac)) {
            ps_loc = false;
            witness = "x = " + L.show(x);
            break;
        }
    }
    if (ps_ring != ps_loc) {
        r.verdict = Verdict::Fail;
        r.witness = witness;
        r.note = std::string("ring presimplifiable: ") + (ps_ring ? "yes" : "no") +
                 "; localization at bounds: " + (ps_loc ? "yes" : "no");
    } else {
        r.verdict = scan_verdict(U);
        r.note = std::string("both ") + (ps_ring ? "presimplifiable" : "not presimplifiable");
        if (!ps_ring) r.witness = witness;
    }
    r.seed = seed;
    return r;
}

// Chain rings: the idempotent fractions in the bounded universe are exactly
// e/1 for the idempotents e of R. Idempotency is f^2 g = f g^2 by
// cross-multiplication.
inline CheckResult idempotent_coincidence_check(const ScanUniverse& U, std::uint64_t seed,
                                                unsigned gen_cap = 3) {
    CheckResult r;
    r.name = "idempotent_coincidence";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || !S.torsion_free())
        return CheckResult::skipped(r.name, "monoid not cancellative torsion-free");
    const FiniteRing& R = ctx.ring();
    {
        std::vector<Ideal> ideals = enumerate_ideals(R, gen_cap);
        for (std::size_t i = 0; i < ideals.size(); ++i)
            for (std::size_t j = i + 1; j < ideals.size(); ++j)
                if (!ideals[i].subset_of(ideals[j]) && !ideals[j].subset_of(ideals[i]))
                    return CheckResult::skipped(r.name, "precondition violated: ideals " +
                                                            ideals[i].show() + " and " +
                                                            ideals[j].show() + " incomparable");
    }
    const LocalizationCtx L(ctx);
    const FractionUniverse F(L, U, 4096, 3);
    const ElemSet idem = R.idempotents();
    ElemSet found(R.order());
    for (const Fraction& x : F.items) {
        ++r.scanned;
        const MRElem lhs = ctx.mul(ctx.mul(x.num, x.num), x.den);
        const MRElem rhs = ctx.mul(x.num, ctx.mul(x.den, x.den));
        if (!(lhs == rhs)) continue;
        // idempotent solution: must equal e/1 for a ring idempotent e
        bool matched = false;
        idem.for_each([&](std::size_t e) {
            if (!matched && ctx.mul(ctx.scalar(Elem(e)), x.den) == x.num) {
                matched = true;
                found.insert(e);
            }
        });
        if (!matched) {
            r.verdict = Verdict::Fail;
            r.witness = "x = " + L.show(x);
            r.note = "idempotent fraction not of the form e/1";
            r.seed = seed;
            return r;
        }
    }
    if (found != idem) {
        r.verdict = Verdict::Fail;
        r.note = "some ring idempotent missing from the bounded solution set";
        r.seed = seed;
        return r;
    }
    r.verdict = scan_verdict(U);
    std::string list;
    idem.for_each([&](std::size_t e) {
        if (!list.empty()) list += ", ";
        list += R.show(Elem(e)) + "/1";
    });
    r.details["solutions"] = list;
    r.seed = seed;
    return r;
}

// Valuation transfer: over a finite valuation ring (divisibility total) the
// localization is a valuation ring too. For seeded fraction pairs (x, y) an
// explicit h with x = hy or y = hx is built by factoring each numerator as
// r * f1 with c(f1) = R (a coefficient generates the principal content).
inline CheckResult valuation_transfer_check(const ScanUniverse& U, std::uint64_t seed,
                                            unsigned samples = 1000) {
    CheckResult r;
    r.name = "valuation_transfer";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || !S.torsion_free())
        return CheckResult::skipped(r.name, "monoid not cancellative torsion-free");
    const FiniteRing& R = ctx.ring();
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = a + 1; b < R.order(); ++b) {
            bool ab = false, ba = false;
            for (Elem q = 0; q < R.order(); ++q) {
                ab = ab || R.mul(a, q) == b;
                ba = ba || R.mul(b, q) == a;
            }
            if (!ab && !ba)
                return CheckResult::skipped(r.name, "precondition violated: " + R.show(a) +
                                                        " and " + R.show(b) +
                                                        " do not divide each other");
        }
    const LocalizationCtx L(ctx);
    const FractionUniverse F(L, U);

    // factor f = r * f1 with c(f1) = R; r is a coefficient generating c(f)
    auto factor = [&](const MRElem& f, Elem& rr, MRElem& f1) {
        const Ideal c = ctx.content(f);
        rr = 0;
        for (const auto& [s, coeff] : f.terms)
            if (ideal_generate(R, {coeff}) == c) {
                rr = coeff;
                break;
            }
        if (f.is_zero()) {
            f1 = ctx.scalar(R.one());
            return true;
        }
        if (rr == 0) return false;
        f1 = ctx.zero();
        for (const auto& [s, coeff] : f.terms) {
            Elem q = 0;
            bool ok = false;
            for (Elem cand = 0; cand < R.order(); ++cand)
                if (R.mul(rr, cand) == coeff) {
                    q = cand;
                    ok = true;
                    break;
                }
            if (!ok) return false;
            f1.terms.emplace(s, q);
        }
        return ctx.content(f1).is_whole() && ctx.mul(ctx.scalar(rr), f1) == f;
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, F.items.size() - 1);
    for (unsigned c = 0; c < samples; ++c) {
        ++r.scanned;
        const Fraction x = F.items[dist(rng)];
        const Fraction y = F.items[dist(rng)];
        Elem rx = 0, ry = 0;
        MRElem fx1, fy1;
        if (!factor(x.num, rx, fx1) || !factor(y.num, ry, fy1)) {
            r.verdict = Verdict::Fail;
            r.witness = "x = " + L.show(x) + "; y = " + L.show(y);
            r.note = "unit-content factorization failed within bounds";
            r.seed = seed;
            return r;
        }
        // divisibility in R decides the direction
        Elem d = 0;
        bool x_div_y = false; // rx | ry
        for (Elem cand = 0; cand < R.order() && !x_div_y; ++cand)
            if (R.mul(rx, cand) == ry) {
                d = cand;
                x_div_y = true;
            }
        bool ok = false;
        if (x_div_y && !x.num.is_zero()) {
            // y = h x with h = (d * x.den * fy1) / (fx1 * y.den)
            const Fraction h = L.make(ctx.scalar_mul(d, ctx.mul(x.den, fy1)),
                                      ctx.mul(fx1, y.den));
            ok = L.eq(L.mul(h, x), y);
        } else if (x.num.is_zero()) {
            ok = L.eq(L.mul(L.zero(), y), x); // x = 0 * y
        } else {
            for (Elem cand = 0; cand < R.order(); ++cand)
                if (R.mul(ry, cand) == rx) {
                    d = cand;
                    break;
                }
            if (y.num.is_zero()) {
                ok = L.eq(L.mul(L.zero(), x), y);
            } else {
                const Fraction h = L.make(ctx.scalar_mul(d, ctx.mul(y.den, fx1)),
                                          ctx.mul(fy1, x.den));
                ok = L.eq(L.mul(h, y), x);
            }
        }
        if (!ok) {
            r.verdict = Verdict::Fail;
            r.witness = "x = " + L.show(x) + "; y = " + L.show(y);
            r.note = "no multiplier found in either direction";
            r.seed = seed;
            return r;
        }
    }
    r.verdict = Verdict::BoundedPass;
    r.seed = seed;
    r.note = std::to_string(samples) + " seeded pairs";
    return r;
}

} // namespace contentalg
