#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contentalg/free_module.hpp"
#include "contentalg/scan.hpp"

namespace contentalg {

inline Verdict scan_verdict(const ScanUniverse& U) {
    return U.pairs_exhaustive() ? Verdict::Pass : Verdict::BoundedPass;
}

inline void stamp(CheckResult& r, const ScanUniverse& U, std::uint64_t scanned,
                  std::uint64_t seed) {
    r.scanned = scanned;
    r.seed = seed;
    r.exhaustive = U.pairs_exhaustive();
}

// Smallest n >= 1 with c(f)^n c(g) = c(f)^{n-1} c(fg). The search cap leaves a
// safety margin above the known bound |supp(g)| + 1, so hitting it is
// unambiguous evidence that the hypotheses do not hold (or a bug): CapExceeded
// is thrown, never swallowed.
inline unsigned dm_exponent(MonoidRingCtx& ctx, const MRElem& f, const MRElem& g) {
    const unsigned cap = unsigned(f.support_size() + g.support_size() + 1);
    const auto cf = ctx.content_id(f);
    const auto cg = ctx.content_id(g);
    const auto cfg = ctx.content_id(ctx.mul(f, g));
    for (unsigned n = 1; n <= cap; ++n)
        if (ctx.product(ctx.power(cf, n), cg) == ctx.product(ctx.power(cf, n - 1), cfg))
            return n;
    throw CapExceeded("dm_exponent: no exponent up to " + std::to_string(cap) + " for f = " +
                      ctx.show(f) + ", g = " + ctx.show(g) + " over " + ctx.ring().label() +
                      "[" + ctx.monoid().label() + "]");
}

// Module variant: g lives in M[S] with M = R^k, c(g) is the coordinate
// submodule, and powers of c(f) act on it.
inline unsigned dm_module_exponent(MonoidRingCtx& ctx, const FreeModule& M, const MRElem& f,
                                   const ModMRElem& g) {
    const unsigned cap = unsigned(f.support_size() + g.terms.size() + 1);
    const Ideal cf = ctx.content(f);
    auto content_of = [&](const ModMRElem& x) {
        std::vector<FreeModule::VElem> gens;
        for (const auto& [s, v] : x.terms) gens.push_back(M.encode(v));
        return M.submodule(gens);
    };
    const ElemSet cg = content_of(g);
    const ElemSet cfg = content_of(ctx.mod_mul(f, g));
    Ideal power = unit_ideal(ctx.ring()); // c(f)^{n-1}
    for (unsigned n = 1; n <= cap; ++n) {
        const Ideal next = ideal_combine(IdealOp::Product, power, cf); // c(f)^n
        if (M.ideal_times(next, cg) == M.ideal_times(power, cfg)) return n;
        power = next;
    }
    throw CapExceeded("dm_module_exponent: no exponent up to " + std::to_string(cap));
}

// c(fg) = c(f)c(g) on every scanned pair.
inline CheckResult gaussian_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "gaussian";
    r.verdict = scan_verdict(U);
    MonoidRingCtx& ctx = U.ctx();
    std::uint64_t scanned = U.for_each_pair([&](std::size_t i, std::size_t j) {
        bool zero = false;
        const auto pc = U.product_content(i, j, zero);
        if (pc != ctx.product(U.content_of(i), U.content_of(j))) {
            r.verdict = Verdict::Fail;
            r.witness = "f = " + ctx.show(U.elements()[i]) + "; g = " + ctx.show(U.elements()[j]);
            r.note = "c(fg) = " + ctx.ideal_of(pc).show() + " but c(f)c(g) = " +
                     ctx.ideal_of(ctx.product(U.content_of(i), U.content_of(j))).show();
            return false;
        }
        return true;
    });
    stamp(r, U, scanned, seed);
    return r;
}

// fg = 0 implies c(f)c(g) = (0) on every scanned pair.
inline CheckResult armendariz_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "armendariz";
    r.verdict = scan_verdict(U);
    MonoidRingCtx& ctx = U.ctx();
    std::uint64_t scanned = U.for_each_pair([&](std::size_t i, std::size_t j) {
        if (!U.product_is_zero(i, j)) return true;
        if (!ctx.is_zero(ctx.product(U.content_of(i), U.content_of(j)))) {
            r.verdict = Verdict::Fail;
            r.witness = "f = " + ctx.show(U.elements()[i]) + "; g = " + ctx.show(U.elements()[j]);
            r.note = "fg = 0 but c(f)c(g) = " +
                     ctx.ideal_of(ctx.product(U.content_of(i), U.content_of(j))).show();
            return false;
        }
        return true;
    });
    stamp(r, U, scanned, seed);
    return r;
}

// c(f)c(g) inside rad(c(fg)) on every scanned pair.
inline CheckResult weak_content_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "weak_content";
    r.verdict = scan_verdict(U);
    MonoidRingCtx& ctx = U.ctx();
    std::uint64_t scanned = U.for_each_pair([&](std::size_t i, std::size_t j) {
        bool zero = false;
        const auto pc = U.product_content(i, j, zero);
        const auto lhs = ctx.product(U.content_of(i), U.content_of(j));
        if (!ctx.subset(lhs, ctx.radical_of(pc))) {
            r.verdict = Verdict::Fail;
            r.witness = "f = " + ctx.show(U.elements()[i]) + "; g = " + ctx.show(U.elements()[j]);
            r.note = "c(f)c(g) = " + ctx.ideal_of(lhs).show() + " not inside rad(c(fg)) = " +
                     ctx.ideal_of(ctx.radical_of(pc)).show();
            return false;
        }
        return true;
    });
    stamp(r, U, scanned, seed);
    return r;
}

// c(f) = c(g) = R implies c(fg) = R on every scanned pair.
inline CheckResult unit_content_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "unit_content";
    r.verdict = scan_verdict(U);
    MonoidRingCtx& ctx = U.ctx();
    std::uint64_t scanned = U.for_each_pair([&](std::size_t i, std::size_t j) {
        if (!ctx.is_unit(U.content_of(i)) || !ctx.is_unit(U.content_of(j))) return true;
        bool zero = false;
        const auto pc = U.product_content(i, j, zero);
        if (!ctx.is_unit(pc)) {
            r.verdict = Verdict::Fail;
            r.witness = "f = " + ctx.show(U.elements()[i]) + "; g = " + ctx.show(U.elements()[j]);
            r.note = "unit contents but c(fg) = " + ctx.ideal_of(pc).show();
            return false;
        }
        return true;
    });
    stamp(r, U, scanned, seed);
    return r;
}

// Every zero-divisor found by the bounded cofactor search must be killed by a
// nonzero scalar; the converse direction is verified directly on each scalar
// annihilator found.
inline CheckResult mccoy_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "mccoy";
    r.verdict = scan_verdict(U);
    MonoidRingCtx& ctx = U.ctx();
    const std::size_t n = U.elements().size();
    std::uint64_t scanned = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (U.elements()[i].is_zero()) continue;
        const Ideal ann = ctx.ideal_of(ctx.annihilator_of(U.content_of(i)));
        if (!ann.is_zero()) {
            // scalar route says zero-divisor; confirm rf = 0 for a witness r
            Elem scalar = 0;
            ann.elements().for_each([&](std::size_t x) {
                if (!scalar && x) scalar = Elem(x);
            });
            if (!ctx.scalar_mul(scalar, U.elements()[i]).is_zero())
                throw CrossValidationMismatch("mccoy_check: annihilator element fails to kill f");
            continue;
        }
        // no scalar annihilator: the bounded search must find no cofactor
        for (std::size_t j = 1; j < n; ++j) {
            ++scanned;
            if (U.product_is_zero(i, j)) {
                r.verdict = Verdict::Fail;
                r.witness = "f = " + ctx.show(U.elements()[i]);
                r.note = "fg = 0 for g = " + ctx.show(U.elements()[j]) +
                         " but no nonzero scalar kills f";
                stamp(r, U, scanned, seed);
                return r;
            }
        }
    }
    stamp(r, U, scanned, seed);
    return r;
}

// f = X^s over a non-cancellative monoid, g = X^t - X^u from the cancellation
// failure: fg = 0 with c(f) = c(g) = R.
inline std::pair<MRElem, MRElem> counterexample_noncancellative(MonoidRingCtx& ctx) {
    const Monoid& S = ctx.monoid();
    if (S.cancellative() || !S.cancel_witness())
        throw PreconditionViolated("counterexample_noncancellative: monoid is cancellative");
    const auto& w = *S.cancel_witness();
    const MRElem f = ctx.monomial(ctx.ring().one(), w.s);
    const MRElem g = ctx.sub(ctx.monomial(ctx.ring().one(), w.t),
                             ctx.monomial(ctx.ring().one(), w.u));
    if (!ctx.mul(f, g).is_zero())
        throw CrossValidationMismatch("counterexample_noncancellative: fg != 0");
    if (!ctx.content(f).is_whole() || !ctx.content(g).is_whole())
        throw CrossValidationMismatch("counterexample_noncancellative: non-unit content");
    return {f, g};
}

// f = X^s - X^t from a torsion pair with k minimal, g the telescoping cofactor
// sum_{i<k} X^{(k-1-i)s + it}; fg telescopes to X^{ks} - X^{kt} = 0.
inline std::pair<MRElem, MRElem> counterexample_torsion(MonoidRingCtx& ctx) {
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || S.torsion_free() || !S.torsion_witness())
        throw PreconditionViolated(
            "counterexample_torsion: need a cancellative monoid with torsion");
    const auto& w = *S.torsion_witness();
    const MRElem f = ctx.sub(ctx.monomial(ctx.ring().one(), w.s),
                             ctx.monomial(ctx.ring().one(), w.t));
    MRElem g = ctx.zero();
    for (unsigned i = 0; i < w.n; ++i)
        g = ctx.add(g, ctx.monomial(ctx.ring().one(),
                                    S.op(S.times(w.n - 1 - i, w.s), S.times(i, w.t))));
    if (g.is_zero())
        throw CrossValidationMismatch("counterexample_torsion: cofactor collapsed to zero");
    if (!ctx.mul(f, g).is_zero())
        throw CrossValidationMismatch("counterexample_torsion: fg != 0");
    return {f, g};
}

// Conditions of the equivalence battery: (2) weak content inclusion, (3) unit
// content multiplicativity, (4) scalar annihilation of zero-divisors, (5)
// structural monoid flags. Bounded scans can only refute, so agreement means:
// flags true and no scan found a counterexample, or flags false and every scan
// produced one. Flags false with a silent scan is reported inconclusive, not
// passing.
inline CheckResult theorem13_battery(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "theorem13_battery";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    const bool flags = S.cancellative() && S.torsion_free();
    r.details["cond5_flags"] = flags ? "true" : "false";

    CheckResult weak = weak_content_check(U, seed);
    CheckResult unit = unit_content_check(U, seed);
    CheckResult mccoy = mccoy_check(U, seed);
    r.details["cond2_weak_content"] = to_string(weak.verdict);
    r.details["cond3_unit_content"] = to_string(unit.verdict);
    r.details["cond4_mccoy"] = to_string(mccoy.verdict);
    r.scanned = weak.scanned + unit.scanned + mccoy.scanned;
    r.seed = seed;
    r.exhaustive = U.pairs_exhaustive();

    if (flags) {
        if (!weak.ok() || !unit.ok() || !mccoy.ok()) {
            r.verdict = Verdict::Fail;
            r.witness = !weak.ok() ? weak.witness : (!unit.ok() ? unit.witness : mccoy.witness);
            r.note = "monoid flags hold but a scan refuted an equivalent condition";
            return r;
        }
        r.verdict = scan_verdict(U);
        r.note = "all conditions agree: true";
        return r;
    }

    // flags false: the structural counterexample must exist and the scans
    // should locate refutations
    auto [f, g] = S.cancellative() ? counterexample_torsion(ctx)
                                   : counterexample_noncancellative(ctx);
    r.details["constructed_f"] = ctx.show(f);
    r.details["constructed_g"] = ctx.show(g);
    if (weak.ok() || unit.ok() || mccoy.ok()) {
        r.verdict = Verdict::Inconclusive;
        r.note = "monoid flags fail but some bounded scan found no counterexample";
        return r;
    }
    r.verdict = scan_verdict(U);
    r.note = "all conditions agree: false, counterexamples recorded";
    r.witness = unit.witness;
    return r;
}

// Regularity equivalence: f regular in B (zero annihilator content, scalar
// route) iff c(f) is not inside Z(R). Requires cancellative torsion-free S and
// Property (A) on R.
inline CheckResult is_regular_equiv_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "regular_equiv";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || !S.torsion_free())
        return CheckResult::skipped(r.name, "monoid not cancellative torsion-free");
    const FiniteRing& R = ctx.ring();
    const PropertyAResult pa = has_property_A(R);
    if (!pa.holds) return CheckResult::skipped(r.name, "ring lacks Property (A)");
    const ElemSet zd = R.zero_divisors();
    r.verdict = scan_verdict(U);
    std::uint64_t scanned = 0;
    for (std::size_t i = 0; i < U.elements().size(); ++i) {
        if (U.elements()[i].is_zero()) continue;
        ++scanned;
        const bool regular = ctx.is_zero(ctx.annihilator_of(U.content_of(i)));
        const bool outside_zd = !ctx.ideal_of(U.content_of(i)).elements().subset_of(zd);
        if (regular != outside_zd) {
            r.verdict = Verdict::Fail;
            r.witness = "f = " + ctx.show(U.elements()[i]);
            r.note = std::string("scalar-route regular = ") + (regular ? "true" : "false") +
                     ", c(f) outside Z(R) = " + (outside_zd ? "true" : "false");
            break;
        }
    }
    stamp(r, U, scanned, seed);
    return r;
}

// Dedekind-Mertens bound sweep: the exponent never exceeds |supp(g)| + 1 on
// any scanned pair when the monoid is cancellative and torsion-free.
inline CheckResult dm_bound_check(const ScanUniverse& U, std::uint64_t seed) {
    CheckResult r;
    r.name = "dm_bound";
    MonoidRingCtx& ctx = U.ctx();
    const Monoid& S = ctx.monoid();
    if (!S.cancellative() || !S.torsion_free())
        return CheckResult::skipped(r.name, "monoid not cancellative torsion-free");
    r.verdict = scan_verdict(U);
    std::uint64_t scanned = U.for_each_pair([&](std::size_t i, std::size_t j) {
        bool zero = false;
        const auto cfg = U.product_content(i, j, zero);
        const auto cf = U.content_of(i);
        const auto cg = U.content_of(j);
        const unsigned cap = unsigned(U.elements()[j].support_size()) + 1;
        bool found = false;
        for (unsigned n = 1; n <= cap && !found; ++n)
            found = ctx.product(ctx.power(cf, n), cg) == ctx.product(ctx.power(cf, n - 1), cfg);
        if (!found) {
            r.verdict = Verdict::Fail;
            r.witness = "f = " + ctx.show(U.elements()[i]) + "; g = " + ctx.show(U.elements()[j]);
            r.note = "no exponent up to |supp(g)| + 1 = " + std::to_string(cap);
            return false;
        }
        return true;
    });
    stamp(r, U, scanned, seed);
    return r;
}

// B Gaussian iff B/IB is Armendariz over R/I for every enumerated ideal I.
// Positive branch: scan every proper quotient. Negative branch: follow the
// constructive route and show the Armendariz failure modulo I = c(fg) for the
// Gaussian witness pair (f, g).
inline CheckResult gaussian_quotient_equivalence(const ScanUniverse& U, const ScanBounds& bounds,
                                                 unsigned gen_cap, std::uint64_t seed) {
    CheckResult r;
    r.name = "gaussian_quotient_equivalence";
    MonoidRingCtx& ctx = U.ctx();
    const FiniteRing& R = ctx.ring();
    const Monoid& S = ctx.monoid();

    CheckResult gauss = gaussian_check(U, seed);
    r.details["gaussian"] = to_string(gauss.verdict);
    r.seed = seed;
    r.exhaustive = U.pairs_exhaustive();

    if (gauss.ok()) {
        // every proper quotient must scan Armendariz-clean; tighter caps keep
        // the per-ideal cost small
        ScanBounds qbounds = bounds;
        qbounds.universe_cap = std::min<std::size_t>(qbounds.universe_cap, 1024);
        qbounds.pair_cap = std::min<std::size_t>(qbounds.pair_cap, 600000);
        for (const Ideal& I : enumerate_ideals(R, gen_cap)) {
            if (I.is_whole()) continue;
            const QuotientRing Q = quotient_ring(R, I);
            MonoidRingCtx qctx(Q.ring, S);
            std::vector<Elem> extras;
            if (R.has_basis())
                for (std::size_t b = 0; b < R.basis_rank(); ++b)
                    extras.push_back(Q.proj[R.basis_elem(b)]);
            ScanUniverse qu(qctx, qbounds, extras);
            CheckResult arm = armendariz_check(qu, seed);
            r.scanned += arm.scanned;
            if (!arm.ok()) {
                r.verdict = Verdict::Fail;
                r.witness = "I = " + I.show() + "; " + arm.witness;
                r.note = "Gaussian scan clean but a quotient fails Armendariz";
                return r;
            }
        }
        r.verdict = scan_verdict(U);
        r.note = "Gaussian holds at bounds and every proper quotient scans Armendariz";
        return r;
    }

    // Gaussian failed: recover the witness pair, set I = c(fg), and exhibit
    // the Armendariz violation in B/IB directly
    MRElem wf, wg;
    bool have = false;
    U.for_each_pair([&](std::size_t i, std::size_t j) {
        bool zero = false;
        const auto pc = U.product_content(i, j, zero);
        if (pc != ctx.product(U.content_of(i), U.content_of(j))) {
            wf = U.elements()[i];
            wg = U.elements()[j];
            have = true;
            return false;
        }
        return true;
    });
    if (!have) throw CrossValidationMismatch("gaussian witness vanished on rescan");
    const Ideal I = ctx.content(ctx.mul(wf, wg));
    const QuotientRing Q = quotient_ring(R, I);
    MonoidRingCtx qctx(Q.ring, S);
    auto project = [&](const MRElem& x) {
        MRElem y;
        for (const auto& [s, c] : x.terms) {
            const Elem pc = Q.proj[c];
            if (pc != 0) y.terms.emplace(s, pc);
        }
        return y;
    };
    const MRElem pf = project(wf), pg = project(wg);
    const bool product_zero = qctx.mul(pf, pg).is_zero();
    const bool contents_zero =
        qctx.is_zero(qctx.product(qctx.content_id(pf), qctx.content_id(pg)));
    r.details["quotient_ideal"] = I.show();
    r.details["witness_f"] = ctx.show(wf);
    r.details["witness_g"] = ctx.show(wg);
    if (product_zero && !contents_zero) {
        r.verdict = scan_verdict(U);
        r.note = "Gaussian fails and the quotient mod c(fg) exhibits the Armendariz failure";
        r.witness = gauss.witness;
        return r;
    }
    r.verdict = Verdict::Fail;
    r.note = "Gaussian fails but the quotient mod c(fg) shows no Armendariz failure";
    r.witness = gauss.witness;
    return r;
}

} // namespace contentalg
