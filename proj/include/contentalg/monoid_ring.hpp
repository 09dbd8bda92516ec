#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "contentalg/ideal.hpp"
#include "contentalg/monoid.hpp"
#include "contentalg/ring.hpp"

namespace contentalg {

// Element of B = R[S]: finitely supported map from monoid elements to nonzero
// ring elements. Zero coefficients are never stored, so map equality is
// element equality.
struct MRElem {
    std::map<MElem, Elem> terms;

    bool is_zero() const { return terms.empty(); }
    std::size_t support_size() const { return terms.size(); }
    bool operator==(const MRElem& o) const { return terms == o.terms; }
    bool operator!=(const MRElem& o) const { return !(*this == o); }
    bool operator<(const MRElem& o) const { return terms < o.terms; }
};

// Element of M[S] with M = R^k: coefficients are coordinate vectors.
struct ModMRElem {
    std::map<MElem, std::vector<Elem>> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const ModMRElem& o) const { return terms == o.terms; }
};

// Arithmetic context for one (R, S) pair, with a content-ideal registry so
// that scan loops compare contents by id instead of recomputing closures.
class MonoidRingCtx {
public:
    using ContentId = std::uint32_t;

    MonoidRingCtx(const FiniteRing& R, const Monoid& S) : R_(R), S_(S) {
        zero_id_ = content_id_of_coeffs({});
        unit_id_ = content_id_of_coeffs({R.one()});
    }

    MonoidRingCtx(const MonoidRingCtx&) = delete;
    MonoidRingCtx& operator=(const MonoidRingCtx&) = delete;

    const FiniteRing& ring() const { return R_; }
    const Monoid& monoid() const { return S_; }

    // --- element construction and arithmetic ---------------------------------

    MRElem zero() const { return {}; }

    MRElem monomial(Elem c, const MElem& s) const {
        MRElem f;
        if (c != 0) f.terms.emplace(s, c);
        return f;
    }

    MRElem scalar(Elem c) const { return monomial(c, S_.id()); }

    MRElem add(const MRElem& f, const MRElem& g) const {
        MRElem r = f;
        for (const auto& [s, c] : g.terms) add_term(r, s, c);
        return r;
    }

    MRElem neg(const MRElem& f) const {
        MRElem r;
        for (const auto& [s, c] : f.terms) r.terms.emplace(s, R_.neg(c));
        return r;
    }

    MRElem sub(const MRElem& f, const MRElem& g) const { return add(f, neg(g)); }

    MRElem mul(const MRElem& f, const MRElem& g) const {
        MRElem r;
        for (const auto& [s, a] : f.terms)
            for (const auto& [t, b] : g.terms) add_term(r, S_.op(s, t), R_.mul(a, b));
        return r;
    }

    MRElem scalar_mul(Elem c, const MRElem& f) const {
        MRElem r;
        for (const auto& [s, a] : f.terms) {
            const Elem v = R_.mul(c, a);
            if (v != 0) r.terms.emplace(s, v);
        }
        return r;
    }

    MRElem pow(const MRElem& f, unsigned n) const {
        MRElem r = scalar(R_.one());
        for (unsigned i = 0; i < n; ++i) r = mul(r, f);
        return r;
    }

    // Nilpotency by direct power iteration. Returns {nilpotent, index}.
    std::pair<bool, unsigned> nilpotency(const MRElem& f, unsigned cap) const {
        MRElem p = scalar(R_.one());
        for (unsigned n = 1; n <= cap; ++n) {
            p = mul(p, f);
            if (p.is_zero()) return {true, n};
        }
        return {false, 0};
    }

    // --- module elements (M = R^k) --------------------------------------------

    ModMRElem mod_monomial(std::vector<Elem> v, const MElem& s) const {
        ModMRElem g;
        if (!all_zero(v)) g.terms.emplace(s, std::move(v));
        return g;
    }

    ModMRElem mod_add(const ModMRElem& f, const ModMRElem& g) const {
        ModMRElem r = f;
        for (const auto& [s, v] : g.terms) {
            auto it = r.terms.find(s);
            if (it == r.terms.end()) {
                r.terms.emplace(s, v);
                continue;
            }
            for (std::size_t i = 0; i < v.size(); ++i) it->second[i] = R_.add(it->second[i], v[i]);
            if (all_zero(it->second)) r.terms.erase(it);
        }
        return r;
    }

    // Action of R[S] on M[S].
    ModMRElem mod_mul(const MRElem& f, const ModMRElem& g) const {
        ModMRElem r;
        for (const auto& [s, a] : f.terms)
            for (const auto& [t, v] : g.terms) {
                const MElem key = S_.op(s, t);
                std::vector<Elem> w(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) w[i] = R_.mul(a, v[i]);
                auto it = r.terms.find(key);
                if (it == r.terms.end()) {
                    if (!all_zero(w)) r.terms.emplace(key, std::move(w));
                } else {
                    for (std::size_t i = 0; i < w.size(); ++i)
                        it->second[i] = R_.add(it->second[i], w[i]);
                    if (all_zero(it->second)) r.terms.erase(it);
                }
            }
        return r;
    }

    // --- content ideals --------------------------------------------------------

    // For the free module R[S] the definitional intersection collapses to the
    // ideal generated by the coefficients: x lies in I*R[S] exactly when every
    // coefficient of x lies in I, so the intersection over all such I is the
    // coefficient ideal itself.
    Ideal content(const MRElem& f) const {
        std::vector<Elem> gens;
        for (const auto& [s, c] : f.terms) gens.push_back(c);
        return ideal_generate(R_, std::move(gens));
    }

    ContentId content_id(const MRElem& f) {
        std::vector<Elem> coeffs;
        coeffs.reserve(f.terms.size());
        for (const auto& [s, c] : f.terms) coeffs.push_back(c);
        return content_id_of_coeffs(std::move(coeffs));
    }

    ContentId content_id_of_coeffs(std::vector<Elem> coeffs) {
        std::sort(coeffs.begin(), coeffs.end());
        coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
        std::string key(reinterpret_cast<const char*>(coeffs.data()), coeffs.size() * sizeof(Elem));
        auto it = coeff_key_map_.find(key);
        if (it != coeff_key_map_.end()) return it->second;
        Ideal I = ideal_generate(R_, std::vector<Elem>(coeffs.begin(), coeffs.end()));
        const ContentId id = intern(std::move(I));
        coeff_key_map_.emplace(std::move(key), id);
        return id;
    }

    ContentId intern(Ideal I) {
        const std::string k = I.elements().key();
        auto it = set_key_map_.find(k);
        if (it != set_key_map_.end()) return it->second;
        const ContentId id = ContentId(pool_.size());
        pool_.push_back(std::move(I));
        set_key_map_.emplace(k, id);
        return id;
    }

    const Ideal& ideal_of(ContentId id) const { return pool_[id]; }
    ContentId zero_content() const { return zero_id_; }
    ContentId unit_content() const { return unit_id_; }
    bool is_unit(ContentId id) const { return pool_[id].is_whole(); }
    bool is_zero(ContentId id) const { return pool_[id].is_zero(); }
    bool subset(ContentId a, ContentId b) const {
        return pool_[a].elements().subset_of(pool_[b].elements());
    }

    ContentId product(ContentId a, ContentId b) {
        if (a > b) std::swap(a, b);
        const std::uint64_t key = (std::uint64_t(a) << 32) | b;
        auto it = product_cache_.find(key);
        if (it != product_cache_.end()) return it->second;
        ContentId r = intern(ideal_combine(IdealOp::Product, pool_[a], pool_[b]));
        product_cache_.emplace(key, r);
        return r;
    }

    ContentId power(ContentId a, unsigned n) {
        ContentId r = unit_id_;
        for (unsigned i = 0; i < n; ++i) r = product(r, a);
        return r;
    }

    ContentId radical_of(ContentId a) {
        auto it = radical_cache_.find(a);
        if (it != radical_cache_.end()) return it->second;
        ContentId r = intern(radical(pool_[a]));
        radical_cache_.emplace(a, r);
        return r;
    }

    ContentId annihilator_of(ContentId a) {
        auto it = ann_cache_.find(a);
        if (it != ann_cache_.end()) return it->second;
        ContentId r = intern(annihilator(pool_[a]));
        ann_cache_.emplace(a, r);
        return r;
    }

    // --- rendering ---------------------------------------------------------------

    std::string show(const MRElem& f) const {
        if (f.is_zero()) return "0";
        std::string s;
        for (const auto& [k, c] : f.terms) {
            if (!s.empty()) s += " + ";
            const bool is_id = (k == S_.id());
            if (is_id) {
                s += R_.show(c);
            } else {
                if (c != R_.one()) s += R_.show(c) + "*";
                s += "X^" + S_.show(k);
            }
        }
        return s;
    }

    std::string show(const ModMRElem& f) const {
        if (f.is_zero()) return "0";
        std::string s;
        for (const auto& [k, v] : f.terms) {
            if (!s.empty()) s += " + ";
            std::string coeff = "(";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) coeff += ",";
                coeff += R_.show(v[i]);
            }
            coeff += ")";
            s += coeff;
            if (!(k == S_.id())) s += "*X^" + S_.show(k);
        }
        return s;
    }

private:
    static bool all_zero(const std::vector<Elem>& v) {
        for (Elem x : v)
            if (x) return false;
        return true;
    }

    void add_term(MRElem& r, const MElem& s, Elem c) const {
        if (c == 0) return;
        auto it = r.terms.find(s);
        if (it == r.terms.end()) {
            r.terms.emplace(s, c);
            return;
        }
        const Elem v = R_.add(it->second, c);
        if (v == 0) r.terms.erase(it);
        else it->second = v;
    }

    // Owned copies: contexts are frequently built from temporaries, and the
    // interned ideal pool below stores pointers into R_, so the context is
    // pinned in place (no copy or move).
    FiniteRing R_;
    Monoid S_;

    std::vector<Ideal> pool_;
    std::unordered_map<std::string, ContentId> set_key_map_;
    std::unordered_map<std::string, ContentId> coeff_key_map_;
    std::unordered_map<std::uint64_t, ContentId> product_cache_;
    std::unordered_map<ContentId, ContentId> radical_cache_;
    std::unordered_map<ContentId, ContentId> ann_cache_;
    ContentId zero_id_ = 0, unit_id_ = 0;
};

} // namespace contentalg
