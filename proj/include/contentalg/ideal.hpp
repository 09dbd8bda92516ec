#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "contentalg/ring.hpp"

namespace contentalg {

// An ideal with its element set fully materialized. Equality is equality of
// element sets; the generator list is only a construction record.
class Ideal {
public:
    Ideal() = default;
    Ideal(const FiniteRing& ring, std::vector<Elem> gens, ElemSet elems)
        : ring_(&ring), gens_(std::move(gens)), elems_(std::move(elems)) {}

    const FiniteRing& ring() const { return *ring_; }
    const std::vector<Elem>& gens() const { return gens_; }
    const ElemSet& elements() const { return elems_; }

    bool contains(Elem x) const { return elems_.contains(x); }
    std::size_t size() const { return elems_.count(); }
    bool is_zero() const { return elems_.count() == 1; }
    bool is_whole() const { return elems_.count() == ring_->order(); }
    bool is_proper() const { return !is_whole(); }

    bool operator==(const Ideal& o) const { return elems_ == o.elems_; }
    bool operator!=(const Ideal& o) const { return !(*this == o); }
    bool subset_of(const Ideal& o) const { return elems_.subset_of(o.elems_); }

    std::string show() const {
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ", ";
            s += ring_->show(gens_[i]);
        }
        if (gens_.empty()) s += "0";
        return s + ")";
    }

private:
    const FiniteRing* ring_ = nullptr;
    std::vector<Elem> gens_;
    ElemSet elems_;
};

namespace detail {

// Additive subgroup closure of a seed set, in place.
inline void additive_closure(const FiniteRing& R, ElemSet& s) {
    std::vector<Elem> list;
    s.for_each([&](std::size_t x) { list.push_back(Elem(x)); });
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Elem z = R.add(list[i], list[j]);
            if (s.insert(z)) list.push_back(z);
        }
}

} // namespace detail

inline Ideal ideal_generate(const FiniteRing& R, std::vector<Elem> gens) {
    ElemSet s(R.order());
    s.insert(R.zero());
    for (Elem g : gens)
        for (Elem r = 0; r < R.order(); ++r) s.insert(R.mul(r, g));
    detail::additive_closure(R, s);
    return Ideal(R, std::move(gens), std::move(s));
}

inline Ideal zero_ideal(const FiniteRing& R) { return ideal_generate(R, {}); }
inline Ideal unit_ideal(const FiniteRing& R) { return ideal_generate(R, {R.one()}); }

// Wraps an element set already known to be an ideal; generators are the
// elements themselves.
inline Ideal ideal_from_set(const FiniteRing& R, const ElemSet& s) {
    std::vector<Elem> gens;
    s.for_each([&](std::size_t x) {
        if (x) gens.push_back(Elem(x));
    });
    return Ideal(R, std::move(gens), s);
}

enum class IdealOp { Sum, Product, Intersection, Colon };

inline Ideal ideal_combine(IdealOp op, const Ideal& I, const Ideal& J) {
    const FiniteRing& R = I.ring();
    if (&R != &J.ring()) throw Mismatch("ideal_combine: operands over different rings");
    switch (op) {
        case IdealOp::Sum: {
            std::vector<Elem> gens = I.gens();
            gens.insert(gens.end(), J.gens().begin(), J.gens().end());
            ElemSet s = I.elements().unite(J.elements());
            detail::additive_closure(R, s);
            return Ideal(R, std::move(gens), std::move(s));
        }
        case IdealOp::Product: {
            std::vector<Elem> gens;
            for (Elem a : I.gens())
                for (Elem b : J.gens()) gens.push_back(R.mul(a, b));
            return ideal_generate(R, std::move(gens));
        }
        case IdealOp::Intersection: {
            ElemSet s = I.elements().intersect(J.elements());
            return ideal_from_set(R, s);
        }
        case IdealOp::Colon: {
            ElemSet s(R.order());
            for (Elem x = 0; x < R.order(); ++x) {
                bool in = true;
                J.elements().for_each([&](std::size_t j) {
                    if (in && !I.contains(R.mul(x, Elem(j)))) in = false;
                });
                if (in) s.insert(x);
            }
            return ideal_from_set(R, s);
        }
    }
    throw SchemaError("ideal_combine: unknown op");
}

inline Ideal ideal_power(const Ideal& I, unsigned n) {
    Ideal r = unit_ideal(I.ring());
    for (unsigned i = 0; i < n; ++i) r = ideal_combine(IdealOp::Product, r, I);
    return r;
}

inline Ideal annihilator(const Ideal& I) {
    const FiniteRing& R = I.ring();
    ElemSet s(R.order());
    for (Elem x = 0; x < R.order(); ++x) {
        bool kills = true;
        I.elements().for_each([&](std::size_t a) {
            if (kills && R.mul(x, Elem(a)) != 0) kills = false;
        });
        if (kills) s.insert(x);
    }
    return ideal_from_set(R, s);
}

inline Ideal radical(const Ideal& I) {
    const FiniteRing& R = I.ring();
    ElemSet s(R.order());
    for (Elem x = 0; x < R.order(); ++x) {
        Elem p = x;
        for (std::size_t n = 1; n <= R.order(); ++n) {
            if (I.contains(p)) {
                s.insert(x);
                break;
            }
            p = R.mul(p, x);
        }
    }
    return ideal_from_set(R, s);
}

inline bool is_prime(const Ideal& I) {
    if (!I.is_proper()) return false;
    const FiniteRing& R = I.ring();
    for (Elem a = 0; a < R.order(); ++a) {
        if (I.contains(a)) continue;
        for (Elem b = 0; b <= a; ++b) {
            if (I.contains(b)) continue;
            if (I.contains(R.mul(a, b))) return false;
        }
    }
    return true;
}

inline bool is_primary(const Ideal& I) {
    if (!I.is_proper()) return false;
    const FiniteRing& R = I.ring();
    const Ideal rad = radical(I);
    for (Elem a = 0; a < R.order(); ++a) {
        if (I.contains(a)) continue;
        for (Elem b = 0; b < R.order(); ++b) {
            if (rad.contains(b)) continue;
            if (I.contains(R.mul(a, b))) return false;
        }
    }
    return true;
}

inline Ideal nilradical(const FiniteRing& R) { return ideal_from_set(R, R.nilpotents()); }

// Jac(R) = {x : 1 - xy is a unit for every y}.
inline Ideal jacobson(const FiniteRing& R) {
    ElemSet s(R.order());
    for (Elem x = 0; x < R.order(); ++x) {
        bool in = true;
        for (Elem y = 0; y < R.order() && in; ++y)
            if (!R.is_unit(R.sub(R.one(), R.mul(x, y)))) in = false;
        if (in) s.insert(x);
    }
    return ideal_from_set(R, s);
}

// All ideals generated by at most gen_cap elements. An ideal sum depends only
// on the principal ideals of the generators, so it suffices to combine the
// distinct principal ideals.
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& R, unsigned gen_cap = 3) {
    if (gen_cap < 1) throw SchemaError("enumerate_ideals: gen_cap must be >= 1");
    // distinct principal ideals with a smallest representative generator
    std::vector<Ideal> principal;
    std::unordered_map<std::string, std::size_t> seen_principal;
    for (Elem g = 0; g < R.order(); ++g) {
        Ideal p = ideal_generate(R, {g});
        const std::string k = p.elements().key();
        if (!seen_principal.count(k)) {
            seen_principal.emplace(k, principal.size());
            principal.push_back(std::move(p));
        }
    }
    std::vector<Ideal> out;
    std::unordered_map<std::string, bool> seen;
    auto emit = [&](Ideal&& I) {
        const std::string k = I.elements().key();
        if (!seen.count(k)) {
            seen.emplace(k, true);
            out.push_back(std::move(I));
        }
    };
    // sums of up to gen_cap principal ideals, depth-first over classes
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start, const Ideal& acc) -> void {
        emit(Ideal(acc));
        if (pick.size() == gen_cap) return;
        for (std::size_t i = start; i < principal.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1, ideal_combine(IdealOp::Sum, acc, principal[i]));
            pick.pop_back();
        }
    };
    rec(rec, 0, zero_ideal(R));

    // Full cross-check at very small order: every additive subgroup closed
    // under ring multiplication that is reachable with gen_cap generators must
    // appear, and everything emitted must be such a subgroup.
    if (R.order() <= 8) {
        std::vector<ElemSet> all;
        const std::size_t n = R.order();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
            if (!(mask & 1)) continue; // must contain 0
            ElemSet s(n);
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1) s.insert(i);
            bool ok = true;
            s.for_each([&](std::size_t a) {
                if (!ok) return;
                s.for_each([&](std::size_t b) {
                    if (ok && !s.contains(R.add(Elem(a), Elem(b)))) ok = false;
                });
                for (Elem r = 0; r < n && ok; ++r)
                    if (!s.contains(R.mul(r, Elem(a)))) ok = false;
            });
            if (ok) all.push_back(std::move(s));
        }
        for (const Ideal& I : out) {
            bool found = false;
            for (const auto& s : all)
                if (s == I.elements()) found = true;
            if (!found)
                throw CrossValidationMismatch("enumerate_ideals: emitted a non-ideal over " + R.label());
        }
        for (const auto& s : all) {
            // reachable iff it is the sum of the principal ideals of <= gen_cap
            // of its own elements; with gen_cap >= log2(8) that is always true,
            // so check reachability honestly by generator search
            bool reachable = false;
            std::vector<Elem> members = [&] {
                std::vector<Elem> v;
                s.for_each([&](std::size_t x) { v.push_back(Elem(x)); });
                return v;
            }();
            std::vector<Elem> combo;
            auto search = [&](auto&& self, std::size_t start) -> void {
                if (reachable) return;
                if (ideal_generate(R, combo).elements() == s) {
                    reachable = true;
                    return;
                }
                if (combo.size() == gen_cap) return;
                for (std::size_t i = start; i < members.size(); ++i) {
                    combo.push_back(members[i]);
                    self(self, i + 1);
                    combo.pop_back();
                }
            };
            search(search, 0);
            if (reachable && !seen.count(s.key()))
                throw CrossValidationMismatch("enumerate_ideals: missed an ideal over " + R.label());
        }
    }
    return out;
}

struct QuotientRing {
    FiniteRing ring;
    std::vector<Elem> proj; // proj[x in R] = index in the quotient
    std::vector<Elem> reps; // reps[q] = smallest representative in R
};

// R/I as an explicit Cayley-table ring on smallest coset representatives.
inline QuotientRing quotient_ring(const FiniteRing& R, const Ideal& I) {
    const std::size_t n = R.order();
    std::vector<Elem> coset_rep(n, Elem(n));
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (coset_rep[x] != Elem(n)) continue;
        reps.push_back(x); // x is the smallest member of its coset
        I.elements().for_each([&](std::size_t i) { coset_rep[R.add(x, Elem(i))] = x; });
    }
    const std::size_t q = reps.size();
    std::vector<Elem> idx(n, 0);
    for (std::size_t k = 0; k < q; ++k) idx[reps[k]] = Elem(k);
    std::vector<Elem> proj(n);
    for (Elem x = 0; x < n; ++x) proj[x] = idx[coset_rep[x]];
    std::vector<Elem> add(q * q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            add[a * q + b] = proj[R.add(reps[a], reps[b])];
            mul[a * q + b] = proj[R.mul(reps[a], reps[b])];
        }
    std::vector<std::string> names(q);
    for (std::size_t k = 0; k < q; ++k) names[k] = "[" + R.show(reps[k]) + "]";
    FiniteRing Q = FiniteRing::from_cayley(R.label() + "/" + I.show(), q, std::move(add),
                                           std::move(mul), proj[R.one()], std::move(names));
    return QuotientRing{std::move(Q), std::move(proj), std::move(reps)};
}

// All prime ideals, computed by idempotent lifting through R/Jac(R) and
// cross-validated against the primality pair scan over enumerated ideals.
inline std::vector<Ideal> spectrum(const FiniteRing& R) {
    const Ideal J = jacobson(R);
    QuotientRing Q = quotient_ring(R, J);
    const FiniteRing& Rq = Q.ring;
    std::vector<Elem> idem;
    Rq.idempotents().for_each([&](std::size_t e) {
        if (e != 0) idem.push_back(Elem(e));
    });
    // primitive = minimal nonzero under e <= f iff ef = e
    std::vector<Elem> prim;
    for (Elem e : idem) {
        bool minimal = true;
        for (Elem f : idem)
            if (f != e && Rq.mul(e, f) == f) minimal = false; // f < e
        if (minimal) prim.push_back(e);
    }
    std::vector<Ideal> out;
    for (Elem e : prim) {
        const Elem comp = Rq.sub(Rq.one(), e);
        Ideal down = ideal_generate(Rq, {comp});
        ElemSet up(R.order());
        for (Elem x = 0; x < R.order(); ++x)
            if (down.contains(Q.proj[x])) up.insert(x);
        out.push_back(ideal_from_set(R, up));
    }
    if (R.order() <= 64) {
        std::vector<std::string> got;
        for (const auto& p : out) {
            if (!is_prime(p))
                throw CrossValidationMismatch("spectrum: idempotent lifting produced a non-prime over " +
                                              R.label());
            got.push_back(p.elements().key());
        }
        std::size_t expected = 0;
        for (const Ideal& I : enumerate_ideals(R, 3)) {
            if (!is_prime(I)) continue;
            ++expected;
            bool found = false;
            for (const auto& k : got)
                if (k == I.elements().key()) found = true;
            if (!found)
                throw CrossValidationMismatch("spectrum: pair-scan prime missing from lifting output over " +
                                              R.label());
        }
        if (expected != out.size())
            throw CrossValidationMismatch("spectrum: prime count mismatch over " + R.label());
    }
    return out;
}

// Ass(R) = {Ann(x) : x in R, Ann(x) prime}, deduplicated.
inline std::vector<Ideal> associated_primes(const FiniteRing& R) {
    std::vector<Ideal> out;
    std::unordered_map<std::string, bool> seen;
    for (Elem x = 0; x < R.order(); ++x) {
        Ideal a = annihilator(ideal_generate(R, {x}));
        if (!is_prime(a)) continue;
        const std::string k = a.elements().key();
        if (!seen.count(k)) {
            seen.emplace(k, true);
            out.push_back(std::move(a));
        }
    }
    return out;
}

struct PropertyAResult {
    bool holds = true;
    std::optional<Ideal> witness; // ideal inside Z(R) with zero annihilator
    unsigned gen_cap = 3;
};

inline PropertyAResult has_property_A(const FiniteRing& R, unsigned gen_cap = 3) {
    PropertyAResult res;
    res.gen_cap = gen_cap;
    const ElemSet Z = R.zero_divisors();
    for (const Ideal& I : enumerate_ideals(R, gen_cap)) {
        if (!I.elements().subset_of(Z)) continue;
        if (annihilator(I).is_zero()) {
            res.holds = false;
            res.witness = I;
            return res;
        }
    }
    return res;
}

struct VeryFewZdResult {
    bool holds = false;
    std::vector<Ideal> cover; // minimal subset of Ass(R) covering Z(R)
};

inline VeryFewZdResult very_few_zero_divisors(const FiniteRing& R) {
    VeryFewZdResult res;
    const ElemSet Z = R.zero_divisors();
    std::vector<Ideal> ass = associated_primes(R);
    ElemSet un(R.order());
    un.insert(0);
    for (const auto& p : ass) un = un.unite(p.elements());
    res.holds = (un == Z);
    if (!res.holds) return res;
    // minimal cover: keep only maximal members, then drop redundant ones
    std::vector<Ideal> cover;
    for (std::size_t i = 0; i < ass.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < ass.size(); ++j)
            if (i != j && ass[i].subset_of(ass[j])) dominated = true;
        if (!dominated) cover.push_back(ass[i]);
    }
    for (std::size_t i = 0; i < cover.size();) {
        ElemSet rest(R.order());
        rest.insert(0);
        for (std::size_t j = 0; j < cover.size(); ++j)
            if (j != i) rest = rest.unite(cover[j].elements());
        if (rest == Z) cover.erase(cover.begin() + std::ptrdiff_t(i));
        else ++i;
    }
    // Z(R) = {0} is covered by nothing but 0 itself; report {(0)} when the
    // zero ideal is prime so the predicate stays total over domains.
    if (cover.empty()) {
        Ideal z = zero_ideal(R);
        if (is_prime(z)) cover.push_back(std::move(z));
    }
    res.cover = std::move(cover);
    return res;
}

// Lowest index i with I contained in primes[i]; nullopt reports a violated
// precondition (I not inside the union) without asserting.
inline std::optional<std::size_t> prime_avoidance_locate(const Ideal& I,
                                                         const std::vector<Ideal>& primes) {
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (I.elements().subset_of(primes[i].elements())) return i;
    return std::nullopt;
}

} // namespace contentalg
