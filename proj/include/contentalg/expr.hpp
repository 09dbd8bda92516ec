#pragma once

#include <cctype>
#include <string>

#include "contentalg/monoid_ring.hpp"

namespace contentalg {

// Parser for element expressions like "2*X^1 - X^(1,0) + 3". Coefficients are
// integers (reduced through repeated addition of 1), exponents are a single
// integer or a parenthesized integer vector, and the separators are + and -.
// Whitespace is ignored everywhere.
class ExprParser {
public:
    explicit ExprParser(const MonoidRingCtx& ctx) : ctx_(&ctx) {}

    MRElem parse(const std::string& text) const {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) throw SchemaError("empty element expression");
        MRElem out;
        std::size_t pos = 0;
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        while (pos < s.size()) {
            const std::size_t start = pos;
            MRElem term = parse_term(s, pos);
            if (pos == start) throw SchemaError("cannot parse term at position " +
                                                std::to_string(pos) + " in '" + text + "'");
            out = negative ? ctx_->sub(out, term) : ctx_->add(out, term);
            if (pos == s.size()) break;
            if (s[pos] == '+') negative = false;
            else if (s[pos] == '-') negative = true;
            else throw SchemaError("expected '+' or '-' at position " + std::to_string(pos) +
                                   " in '" + text + "'");
            ++pos;
        }
        return out;
    }

private:
    MRElem parse_term(const std::string& s, std::size_t& pos) const {
        const FiniteRing& R = ctx_->ring();
        long long coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_int(s, pos);
            have_coeff = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        MElem key = ctx_->monoid().id();
        if (pos < s.size() && (s[pos] == 'X' || s[pos] == 'x')) {
            ++pos;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                key = parse_exponent(s, pos);
            } else {
                key = unit_exponent();
            }
        } else if (!have_coeff) {
            throw SchemaError("expected coefficient or X at position " + std::to_string(pos));
        }
        return ctx_->monomial(R.from_int(coeff), key);
    }

    MElem unit_exponent() const {
        const Monoid& S = ctx_->monoid();
        if (S.kind() == Monoid::Kind::Table) {
            if (S.table_size() < 2) throw SchemaError("bare X needs a monoid with an element 1");
            return {1};
        }
        MElem k = S.id();
        k[0] = 1;
        return k;
    }

    MElem parse_exponent(const std::string& s, std::size_t& pos) const {
        const Monoid& S = ctx_->monoid();
        MElem k;
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            while (true) {
                k.push_back(parse_int(s, pos));
                if (pos >= s.size()) throw SchemaError("unterminated exponent vector");
                if (s[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (s[pos] == ')') {
                    ++pos;
                    break;
                }
                throw SchemaError("bad exponent vector near position " + std::to_string(pos));
            }
        } else {
            k.push_back(parse_int(s, pos));
        }
        validate_key(S, k);
        if (S.kind() != Monoid::Kind::Table) {
            const std::size_t want = S.id().size();
            if (k.size() != want)
                throw SchemaError("exponent has " + std::to_string(k.size()) +
                                  " coordinates, monoid needs " + std::to_string(want));
            // reduce torsion coordinates to canonical range
            return S.op(k, S.id());
        }
        return k;
    }

    static void validate_key(const Monoid& S, const MElem& k) {
        if (S.kind() == Monoid::Kind::Table) {
            if (k.size() != 1 || k[0] < 0 || std::size_t(k[0]) >= S.table_size())
                throw SchemaError("table monoid exponent out of range");
            return;
        }
        if (S.kind() == Monoid::Kind::Free)
            for (llong v : k)
                if (v < 0) throw SchemaError("free monoid exponents must be nonnegative");
    }

    static long long parse_int(const std::string& s, std::size_t& pos) {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw SchemaError("expected integer at position " + std::to_string(pos));
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    const MonoidRingCtx* ctx_;
};

} // namespace contentalg
