#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contentalg/errors.hpp"

namespace contentalg {

// Canonical monoid element: exponent vector for free/group kinds (free
// coordinates are arbitrary/nonnegative integers, torsion coordinates live in
// [0, m_i)), single index for table kinds.
using llong = long long;
using MElem = std::vector<llong>;

// A commutative monoid from one of three families: free (N^k), finitely
// generated abelian group (Z^a x Z/m_1 x ... x Z/m_t), or an explicit finite
// Cayley table. Cancellativity and torsion-freeness are decided at
// construction: structurally for the first two, by exhaustive scan for tables.
class Monoid {
public:
    enum class Kind { Free, Group, Table };

    struct CancelWitness {
        MElem s, t, u; // s+t == s+u with t != u
    };
    struct TorsionWitness {
        MElem s, t;  // s != t
        unsigned n;  // minimal with n*s == n*t
    };

    static Monoid free_monoid(unsigned rank) {
        if (rank < 1) throw SchemaError("free monoid: rank must be >= 1");
        Monoid m;
        m.kind_ = Kind::Free;
        m.free_rank_ = rank;
        m.cancellative_ = true;
        m.torsion_free_ = true;
        m.label_ = rank == 1 ? "N" : "N^" + std::to_string(rank);
        return m;
    }

    static Monoid abelian_group(unsigned free_rank, std::vector<long long> torsion) {
        for (long long t : torsion)
            if (t < 2) throw SchemaError("abelian group: torsion orders must be >= 2");
        Monoid m;
        m.kind_ = Kind::Group;
        m.free_rank_ = free_rank;
        m.torsion_ = std::move(torsion);
        m.cancellative_ = true;
        m.torsion_free_ = m.torsion_.empty();
        if (!m.torsion_free_) {
            // smallest torsion generator against the identity
            std::size_t best = 0;
            for (std::size_t i = 1; i < m.torsion_.size(); ++i)
                if (m.torsion_[i] < m.torsion_[best]) best = i;
            MElem s(m.free_rank_ + m.torsion_.size(), 0);
            s[m.free_rank_ + best] = 1;
            m.torsion_witness_ = TorsionWitness{s, MElem(s.size(), 0), unsigned(m.torsion_[best])};
        }
        std::string lab;
        if (free_rank) lab = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
        for (long long t : m.torsion_) lab += (lab.empty() ? "" : " x ") + ("Z/" + std::to_string(t));
        m.label_ = lab;
        return m;
    }

    static Monoid from_table(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                             std::string label = "") {
        Monoid m;
        m.kind_ = Kind::Table;
        m.table_ = std::move(table);
        m.identity_ = identity;
        const std::size_t n = m.table_.size();
        if (n == 0) throw SchemaError("table monoid: empty table");
        for (const auto& row : m.table_) {
            if (row.size() != n) throw AxiomViolation("table monoid: ragged table");
            for (std::size_t v : row)
                if (v >= n) throw AxiomViolation("table monoid: entry out of range");
        }
        for (std::size_t a = 0; a < n; ++a) {
            if (m.table_[identity][a] != a)
                throw AxiomViolation("table monoid: identity law fails at " + std::to_string(a));
            for (std::size_t b = 0; b < n; ++b) {
                if (m.table_[a][b] != m.table_[b][a])
                    throw AxiomViolation("table monoid: not commutative at (" + std::to_string(a) +
                                         "," + std::to_string(b) + ")");
                for (std::size_t c = 0; c < n; ++c)
                    if (m.table_[m.table_[a][b]][c] != m.table_[a][m.table_[b][c]])
                        throw AxiomViolation("table monoid: not associative at (" + std::to_string(a) +
                                             "," + std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
        m.label_ = label.empty() ? "table(" + std::to_string(n) + ")" : std::move(label);
        m.scan_table_flags();
        return m;
    }

    // {0, 1, ..., size-1} with x (+) y = min(x+y, size-1).
    static Monoid trunc_add(std::size_t size) {
        if (size < 2) throw SchemaError("trunc_add: size must be >= 2");
        std::vector<std::vector<std::size_t>> t(size, std::vector<std::size_t>(size));
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b) t[a][b] = std::min(a + b, size - 1);
        return from_table(std::move(t), 0, "trunc-add{0.." + std::to_string(size - 1) + "}");
    }

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    bool cancellative() const { return cancellative_; }
    bool torsion_free() const { return torsion_free_; }
    const std::optional<CancelWitness>& cancel_witness() const { return cancel_witness_; }
    const std::optional<TorsionWitness>& torsion_witness() const { return torsion_witness_; }
    std::size_t table_size() const { return table_.size(); }

    MElem id() const {
        if (kind_ == Kind::Table) return {llong(identity_)};
        return MElem(free_rank_ + torsion_.size(), 0);
    }

    MElem op(const MElem& a, const MElem& b) const {
        if (kind_ == Kind::Table) return {llong(table_[std::size_t(a[0])][std::size_t(b[0])])};
        MElem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        canonicalize(r);
        return r;
    }

    MElem times(unsigned n, const MElem& a) const {
        if (kind_ != Kind::Table) {
            MElem r(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * (llong)n;
            canonicalize(r);
            return r;
        }
        MElem r = id();
        for (unsigned i = 0; i < n; ++i) r = op(r, a);
        return r;
    }

    // Deterministic bounded element universe. Free/group kinds: coordinate
    // magnitudes <= bound (torsion coordinates stay in their residue range);
    // table kinds: everything.
    std::vector<MElem> elements_up_to(long long bound) const {
        std::vector<MElem> out;
        if (kind_ == Kind::Table) {
            for (std::size_t i = 0; i < table_.size(); ++i) out.push_back({llong(i)});
            return out;
        }
        std::vector<std::pair<long long, long long>> range; // [lo, hi] per coordinate
        for (unsigned i = 0; i < free_rank_; ++i)
            range.emplace_back(kind_ == Kind::Free ? 0 : -bound, bound);
        for (long long t : torsion_) range.emplace_back(0, std::min(t - 1, bound));
        MElem cur(range.size(), 0);
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == range.size()) {
                out.push_back(cur);
                return;
            }
            for (long long v = range[pos].first; v <= range[pos].second; ++v) {
                cur[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string show(const MElem& a) const {
        if (kind_ == Kind::Table) return std::to_string(a[0]);
        if (a.size() == 1) return std::to_string(a[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + ")";
    }

private:
    void canonicalize(MElem& r) const {
        for (std::size_t i = 0; i < torsion_.size(); ++i) {
            long long& v = r[free_rank_ + i];
            v %= torsion_[i];
            if (v < 0) v += torsion_[i];
        }
    }

    void scan_table_flags() {
        const std::size_t n = table_.size();
        cancellative_ = true;
        for (std::size_t s = 0; s < n && cancellative_; ++s)
            for (std::size_t t = 0; t < n && cancellative_; ++t)
                for (std::size_t u = 0; u < n; ++u)
                    if (t != u && table_[s][t] == table_[s][u]) {
                        cancellative_ = false;
                        cancel_witness_ = CancelWitness{{llong(s)}, {llong(t)}, {llong(u)}};
                        break;
                    }
        torsion_free_ = true;
        for (unsigned k = 2; k <= n && torsion_free_; ++k)
            for (std::size_t s = 0; s < n && torsion_free_; ++s)
                for (std::size_t t = 0; t < n; ++t) {
                    if (s == t) continue;
                    if (times(k, {llong(s)}) == times(k, {llong(t)})) {
                        // k is minimal for this pair: smaller multiples were
                        // scanned in earlier iterations of the outer loop
                        torsion_free_ = false;
                        torsion_witness_ = TorsionWitness{{llong(s)}, {llong(t)}, k};
                        break;
                    }
                }
    }

    Kind kind_ = Kind::Free;
    unsigned free_rank_ = 0;
    std::vector<long long> torsion_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    bool cancellative_ = true;
    bool torsion_free_ = true;
    std::optional<CancelWitness> cancel_witness_;
    std::optional<TorsionWitness> torsion_witness_;
    std::string label_;
};

} // namespace contentalg
