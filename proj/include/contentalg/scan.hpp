#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "contentalg/monoid_ring.hpp"

namespace contentalg {

// Bounds for every scan in the suite. "support" bounds the monoid-key
// universe (elements_up_to), "max_terms" bounds how many nonzero terms a
// scanned element may carry, and the caps keep universes and pair schedules
// at desk scale. All sampling is driven by the seed alone.
struct ScanBounds {
    int support = 3;
    std::string coeff_mode = "auto"; // auto | exhaustive | sample
    unsigned sample_size = 500;
    std::uint64_t seed = 0x5eedULL;
    unsigned gen_cap = 3;
    std::size_t order_cap = kDefaultOrderCap;
    unsigned max_terms = 3;
    std::size_t universe_cap = 4096;
    std::size_t pair_cap = 4000000;

    bool exhaustive_coeffs(const FiniteRing& R) const {
        if (coeff_mode == "exhaustive") return true;
        if (coeff_mode == "sample") return false;
        return R.order() <= 8;
    }
};

enum class Verdict { Pass, BoundedPass, Fail, Skipped, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::BoundedPass: return "pass(bounded)";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "skipped";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string witness; // serialized failing inputs, empty on pass
    std::string note;
    std::uint64_t scanned = 0;
    std::uint64_t seed = 0;
    bool exhaustive = false; // true when the scan covered the whole bounded universe
    std::map<std::string, std::string> details;

    bool ok() const { return verdict != Verdict::Fail; }

    static CheckResult fail(std::string name, std::string witness, std::string note = "") {
        CheckResult r;
        r.name = std::move(name);
        r.verdict = Verdict::Fail;
        r.witness = std::move(witness);
        r.note = std::move(note);
        return r;
    }
    static CheckResult skipped(std::string name, std::string why) {
        CheckResult r;
        r.name = std::move(name);
        r.verdict = Verdict::Skipped;
        r.note = std::move(why);
        return r;
    }
};

// Nonzero coefficient universe, deterministic for a given ring and bounds.
// Exhaustive mode lists every nonzero element; sample mode front-loads the
// structurally interesting elements (1, additive basis, caller extras) and
// fills up with seeded draws.
inline std::vector<Elem> coefficient_universe(const FiniteRing& R, const ScanBounds& bounds,
                                              const std::vector<Elem>& extra = {}) {
    std::vector<Elem> out;
    std::set<Elem> seen;
    auto push = [&](Elem x) {
        if (x != 0 && seen.insert(x).second) out.push_back(x);
    };
    if (bounds.exhaustive_coeffs(R) || bounds.sample_size + 1 >= R.order()) {
        for (Elem x = 1; x < R.order(); ++x) push(x);
        return out;
    }
    push(R.one());
    if (R.has_basis())
        for (std::size_t i = 0; i < R.basis_rank(); ++i) push(R.basis_elem(i));
    for (Elem x : extra) push(x);
    std::mt19937_64 rng(bounds.seed);
    std::uniform_int_distribution<Elem> dist(1, Elem(R.order() - 1));
    std::size_t guard = 0;
    while (out.size() < bounds.sample_size && guard++ < bounds.sample_size * 64) push(dist(rng));
    return out;
}

// Deterministic bounded universe of R[S] elements: supports drawn from
// elements_up_to(S, support), at most max_terms terms, coefficients from the
// coefficient universe. Fully enumerated when it fits under universe_cap,
// otherwise a priority block of small-support elements plus seeded samples.
class ScanUniverse {
public:
    ScanUniverse(MonoidRingCtx& ctx, const ScanBounds& bounds,
                 const std::vector<Elem>& extra_coeffs = {})
        : ctx_(&ctx), bounds_(bounds), extra_coeffs_(extra_coeffs) {
        const FiniteRing& R = ctx.ring();
        const Monoid& S = ctx.monoid();
        keys_ = S.elements_up_to(bounds.support);
        coeffs_ = coefficient_universe(R, bounds, extra_coeffs);
        build_elements();
        build_flat();
    }

    const std::vector<MRElem>& elements() const { return elems_; }
    const std::vector<MElem>& keys() const { return keys_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    bool exhaustive() const { return exhaustive_; }
    MonoidRingCtx& ctx() const { return *ctx_; }

    MonoidRingCtx::ContentId content_of(std::size_t i) const { return content_[i]; }

    // Multiplies two universe elements via the precomputed key-addition table
    // and returns the product's content id; sets zero=true when fg = 0.
    MonoidRingCtx::ContentId product_content(std::size_t fi, std::size_t gi, bool& zero) const {
        const FiniteRing& R = ctx_->ring();
        touched_count_ = 0;
        for (const auto& [ka, ca] : flat_[fi])
            for (const auto& [kb, cb] : flat_[gi]) {
                const std::uint32_t k2 = key_add_[std::size_t(ka) * keys_.size() + kb];
                const Elem v = R.mul(ca, cb);
                if (scratch_[k2] == 0 && v != 0) touched_buf_[touched_count_++] = k2;
                scratch_[k2] = R.add(scratch_[k2], v);
            }
        std::vector<Elem> coeffs;
        coeffs.reserve(touched_count_);
        for (std::size_t t = 0; t < touched_count_; ++t) {
            const Elem v = scratch_[touched_buf_[t]];
            scratch_[touched_buf_[t]] = 0;
            if (v != 0) coeffs.push_back(v);
        }
        zero = coeffs.empty();
        return ctx_->content_id_of_coeffs(std::move(coeffs));
    }

    bool product_is_zero(std::size_t fi, std::size_t gi) const {
        const FiniteRing& R = ctx_->ring();
        touched_count_ = 0;
        for (const auto& [ka, ca] : flat_[fi])
            for (const auto& [kb, cb] : flat_[gi]) {
                const std::uint32_t k2 = key_add_[std::size_t(ka) * keys_.size() + kb];
                const Elem v = R.mul(ca, cb);
                if (scratch_[k2] == 0 && v != 0) touched_buf_[touched_count_++] = k2;
                scratch_[k2] = R.add(scratch_[k2], v);
            }
        bool zero = true;
        for (std::size_t t = 0; t < touched_count_; ++t) {
            if (scratch_[touched_buf_[t]] != 0) zero = false;
            scratch_[touched_buf_[t]] = 0;
        }
        return zero;
    }

    // Deterministic schedule over unordered pairs (i <= j). Returns the number
    // of pairs visited; visits everything when that fits under pair_cap.
    template <class F>
    std::uint64_t for_each_pair(F&& f) const {
        const std::size_t n = elems_.size();
        const std::uint64_t total = std::uint64_t(n) * (n + 1) / 2;
        if (total <= bounds_.pair_cap) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (!f(i, j)) return count_upto(i, j, n);
            return total;
        }
        // prefix block gets full coverage so the front-loaded priority
        // elements are always crossed with each other, then seeded fill
        std::size_t m = 1;
        while ((m + 1) * (m + 2) / 2 <= bounds_.pair_cap / 2 && m < n) ++m;
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                ++c;
                if (!f(i, j)) return c;
            }
        std::mt19937_64 rng(bounds_.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::size_t> dist(0, n - 1);
        for (; c < bounds_.pair_cap; ++c) {
            std::size_t i = dist(rng), j = dist(rng);
            if (i > j) std::swap(i, j);
            if (!f(i, j)) return c + 1;
        }
        return bounds_.pair_cap;
    }

    bool pairs_exhaustive() const {
        const std::size_t n = elems_.size();
        return exhaustive_ && std::uint64_t(n) * (n + 1) / 2 <= bounds_.pair_cap;
    }

private:
    static std::uint64_t count_upto(std::size_t i, std::size_t j, std::size_t n) {
        std::uint64_t c = 0;
        for (std::size_t a = 0; a < i; ++a) c += n - a;
        return c + (j - i + 1);
    }

    void build_elements() {
        const std::size_t K = keys_.size(), C = coeffs_.size();
        const unsigned T = std::min<std::size_t>(bounds_.max_terms, K);
        // total count, saturating
        long double total = 1; // zero element
        long double binom = 1;
        for (unsigned k = 1; k <= T; ++k) {
            binom = binom * (long double)(K - k + 1) / k;
            long double cpow = 1;
            for (unsigned i = 0; i < k; ++i) cpow *= (long double)C;
            total += binom * cpow;
        }
        elems_.push_back(MRElem{}); // zero first
        if (total <= (long double)bounds_.universe_cap) {
            exhaustive_ = true;
            enumerate_all(T);
            return;
        }
        exhaustive_ = false;
        std::set<MRElem> seen;
        seen.insert(MRElem{});
        auto push = [&](MRElem f) {
            if (seen.insert(f).second) elems_.push_back(std::move(f));
        };
        // priority block: small supports over core coefficients, so that the
        // structurally pinned witnesses always appear even in sample mode
        std::vector<Elem> core;
        {
            std::set<Elem> cs;
            auto add = [&](Elem x) {
                if (x && cs.insert(x).second) core.push_back(x);
            };
            add(ctx_->ring().one());
            if (ctx_->ring().has_basis())
                for (std::size_t i = 0; i < ctx_->ring().basis_rank(); ++i)
                    add(ctx_->ring().basis_elem(i));
            for (Elem x : extra_coeffs_) add(x);
            for (std::size_t i = 0; i < coeffs_.size() && core.size() < 8; ++i) add(coeffs_[i]);
        }
        const std::size_t prio_keys = std::min<std::size_t>(K, 6);
        for (std::size_t a = 0; a < prio_keys; ++a)
            for (Elem c : core) push(ctx_->monomial(c, keys_[a]));
        for (std::size_t a = 0; a < prio_keys && elems_.size() < bounds_.universe_cap / 2; ++a)
            for (std::size_t b = a + 1; b < prio_keys; ++b)
                for (Elem ca : core)
                    for (Elem cb : core) {
                        MRElem f;
                        f.terms.emplace(keys_[a], ca);
                        f.terms.emplace(keys_[b], cb);
                        push(std::move(f));
                    }
        // seeded fill
        std::mt19937_64 rng(bounds_.seed);
        std::uniform_int_distribution<std::size_t> kdist(0, K - 1);
        std::uniform_int_distribution<std::size_t> cdist(0, C - 1);
        std::uniform_int_distribution<unsigned> tdist(1, T);
        const std::size_t target = std::max<std::size_t>(bounds_.universe_cap,
                                                         elems_.size() + bounds_.sample_size);
        std::size_t guard = 0;
        while (elems_.size() < target && guard++ < target * 64) {
            const unsigned t = tdist(rng);
            MRElem f;
            while (f.terms.size() < t) f.terms[keys_[kdist(rng)]] = coeffs_[cdist(rng)];
            push(std::move(f));
        }
    }

    void enumerate_all(unsigned T) {
        const std::size_t K = keys_.size(), C = coeffs_.size();
        std::vector<std::size_t> combo;
        auto rec_coeffs = [&](auto&& self, std::size_t pos, MRElem& f) -> void {
            if (pos == combo.size()) {
                elems_.push_back(f);
                return;
            }
            for (std::size_t c = 0; c < C; ++c) {
                f.terms[keys_[combo[pos]]] = coeffs_[c];
                self(self, pos + 1, f);
            }
            f.terms.erase(keys_[combo[pos]]);
        };
        auto rec_keys = [&](auto&& self, std::size_t start, unsigned t) -> void {
            if (combo.size() == t) {
                MRElem f;
                rec_coeffs(rec_coeffs, 0, f);
                return;
            }
            for (std::size_t k = start; k < K; ++k) {
                combo.push_back(k);
                self(self, k + 1, t);
                combo.pop_back();
            }
        };
        for (unsigned t = 1; t <= T; ++t) {
            combo.clear();
            rec_keys(rec_keys, 0, t);
        }
    }

    void build_flat() {
        const Monoid& S = ctx_->monoid();
        // extended key space: every pairwise sum of universe keys
        std::map<MElem, std::uint32_t> k2index;
        auto intern2 = [&](const MElem& k) {
            auto it = k2index.find(k);
            if (it != k2index.end()) return it->second;
            const std::uint32_t id = std::uint32_t(k2index.size());
            k2index.emplace(k, id);
            return id;
        };
        std::map<MElem, std::uint16_t> k1index;
        for (std::size_t i = 0; i < keys_.size(); ++i) k1index.emplace(keys_[i], std::uint16_t(i));
        key_add_.assign(keys_.size() * keys_.size(), 0);
        for (std::size_t a = 0; a < keys_.size(); ++a)
            for (std::size_t b = 0; b < keys_.size(); ++b)
                key_add_[a * keys_.size() + b] = intern2(S.op(keys_[a], keys_[b]));
        scratch_.assign(k2index.size(), 0);
        touched_buf_.assign(k2index.size(), 0);
        flat_.resize(elems_.size());
        content_.resize(elems_.size());
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            for (const auto& [k, c] : elems_[i].terms)
                flat_[i].emplace_back(k1index.at(k), c);
            content_[i] = ctx_->content_id(elems_[i]);
        }
    }

    MonoidRingCtx* ctx_;
    ScanBounds bounds_;
    std::vector<Elem> extra_coeffs_;
    std::vector<MElem> keys_;
    std::vector<Elem> coeffs_;
    std::vector<MRElem> elems_;
    std::vector<std::vector<std::pair<std::uint16_t, Elem>>> flat_;
    std::vector<MonoidRingCtx::ContentId> content_;
    std::vector<std::uint32_t> key_add_;
    bool exhaustive_ = true;
    mutable std::vector<Elem> scratch_;
    mutable std::vector<std::uint32_t> touched_buf_;
    mutable std::size_t touched_count_ = 0;
};

// Zero-divisor test with mandatory route reporting. Under Theorem-13
// hypotheses (cancellative, torsion-free) the McCoy scalar route is exact;
// otherwise only a bounded cofactor search is sound.
struct ZeroDivisorResult {
    bool is_zd = false;
    std::string route;                 // "mccoy-scalar" or "bounded-search"
    std::optional<Elem> scalar;        // r with rf = 0, scalar route
    std::optional<MRElem> cofactor;    // g with fg = 0, bounded route
};

inline ZeroDivisorResult is_zero_divisor(MonoidRingCtx& ctx, const MRElem& f,
                                         const ScanUniverse& universe) {
    ZeroDivisorResult res;
    const Monoid& S = ctx.monoid();
    if (S.cancellative() && S.torsion_free()) {
        res.route = "mccoy-scalar";
        const Ideal ann = ctx.ideal_of(ctx.annihilator_of(ctx.content_id(f)));
        if (!ann.is_zero()) {
            res.is_zd = true;
            ann.elements().for_each([&](std::size_t r) {
                if (!res.scalar && r != 0) res.scalar = Elem(r);
            });
        }
        return res;
    }
    res.route = "bounded-search";
    for (const MRElem& g : universe.elements()) {
        if (g.is_zero()) continue;
        if (ctx.mul(f, g).is_zero()) {
            res.is_zd = true;
            res.cofactor = g;
            break;
        }
    }
    return res;
}

} // namespace contentalg
