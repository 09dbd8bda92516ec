#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "contentalg/elem_set.hpp"
#include "contentalg/errors.hpp"

namespace contentalg {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;

// A finite commutative ring with identity. Two internal presentations:
//
//  * basis: additive group Z/d_1 x ... x Z/d_m with multiplication given on
//    the additive basis (e_i * e_j stored as an element index) and extended
//    bilinearly. Covers Z/n, truncated polynomial rings and products.
//  * cayley: explicit element-level addition/multiplication tables. Used for
//    quotient rings built on coset representatives.
//
// Elements are indices in [0, order). Index 0 is always the zero element.
// Everything is immutable after construction.
class FiniteRing {
public:
    enum class NameStyle { Integer, Poly, Tuple, Generic, Table };

    static FiniteRing zmod(std::uint64_t n, std::size_t order_cap = kDefaultOrderCap) {
        if (n < 2) throw SchemaError("zmod: modulus must be >= 2");
        if (n > order_cap) throw OrderCapExceeded("zmod(" + std::to_string(n) + ") exceeds order cap");
        FiniteRing r;
        r.label_ = "Z/" + std::to_string(n);
        r.dims_ = {std::uint32_t(n)};
        r.basis_mul_coords_ = {{{1}}};
        r.one_coords_ = {1};
        r.name_style_ = NameStyle::Integer;
        r.basis_names_ = {"1"};
        r.finish_basis(order_cap);
        return r;
    }

    // F_p[x_1..x_v] / (x_1..x_v)^cap. Basis: monomials of total degree < cap.
    static FiniteRing trunc_poly(unsigned p, unsigned vars, unsigned cap,
                                 std::size_t order_cap = kDefaultOrderCap) {
        if (p < 2 || vars < 1 || cap < 1) throw SchemaError("trunc_poly: need p>=2, vars>=1, cap>=1");
        std::vector<std::vector<unsigned>> monos; // exponent vectors, degree < cap
        std::vector<unsigned> cur(vars, 0);
        // ordered by (total degree, lexicographic on exponents)
        for (unsigned d = 0; d < cap; ++d) {
            std::vector<std::vector<unsigned>> level;
            std::vector<unsigned> e(vars, 0);
            enumerate_degree(e, 0, d, level);
            std::sort(level.begin(), level.end());
            for (auto& m : level) monos.push_back(m);
        }
        const std::size_t m = monos.size();
        FiniteRing r;
        r.label_ = "F" + std::to_string(p) + "[" + std::to_string(vars) + " vars]/(m)^" + std::to_string(cap);
        r.dims_.assign(m, p);
        r.one_coords_.assign(m, 0);
        r.one_coords_[0] = 1;
        r.basis_mul_coords_.assign(m, std::vector<std::vector<std::uint32_t>>(m));
        auto mono_index = [&](const std::vector<unsigned>& e) -> std::optional<std::size_t> {
            unsigned deg = std::accumulate(e.begin(), e.end(), 0u);
            if (deg >= cap) return std::nullopt;
            auto it = std::find(monos.begin(), monos.end(), e);
            return std::size_t(it - monos.begin());
        };
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<unsigned> e(vars);
                for (unsigned v = 0; v < vars; ++v) e[v] = monos[i][v] + monos[j][v];
                std::vector<std::uint32_t> coords(m, 0);
                if (auto k = mono_index(e)) coords[*k] = 1;
                r.basis_mul_coords_[i][j] = std::move(coords);
            }
        }
        r.name_style_ = NameStyle::Poly;
        r.basis_names_.resize(m);
        for (std::size_t i = 0; i < m; ++i) r.basis_names_[i] = mono_name(monos[i]);
        r.finish_basis(order_cap);
        return r;
    }

    static FiniteRing product(const std::vector<FiniteRing>& factors,
                              std::size_t order_cap = kDefaultOrderCap) {
        if (factors.empty()) throw SchemaError("product: needs at least one factor");
        FiniteRing r;
        std::size_t m = 0;
        for (const auto& f : factors) {
            if (f.kind_ != Kind::Basis)
                throw SchemaError("product: factors must be basis-presented rings");
            m += f.basis_rank();
        }
        r.dims_.reserve(m);
        r.one_coords_.assign(m, 0);
        r.basis_mul_coords_.assign(m, std::vector<std::vector<std::uint32_t>>(
                                          m, std::vector<std::uint32_t>(m, 0)));
        std::size_t off = 0;
        std::string lab;
        for (const auto& f : factors) {
            const std::size_t fm = f.basis_rank();
            for (std::size_t i = 0; i < fm; ++i) {
                r.dims_.push_back(f.dims_[i]);
                r.one_coords_[off + i] = f.one_coords_[i];
            }
            for (std::size_t i = 0; i < fm; ++i)
                for (std::size_t j = 0; j < fm; ++j)
                    for (std::size_t k = 0; k < fm; ++k)
                        r.basis_mul_coords_[off + i][off + j][off + k] = f.basis_mul_coords_[i][j][k];
            lab += (lab.empty() ? "" : " x ") + f.label_;
            off += fm;
        }
        r.label_ = lab;
        r.name_style_ = NameStyle::Generic;
        r.basis_names_.resize(m);
        for (std::size_t i = 0; i < m; ++i) r.basis_names_[i] = "e" + std::to_string(i);
        r.finish_basis(order_cap);
        return r;
    }

    // Raw basis presentation: mul[i][j] is the coordinate vector of e_i e_j.
    static FiniteRing from_basis(std::string label, std::vector<std::uint32_t> dims,
                                 std::vector<std::vector<std::vector<std::uint32_t>>> mul,
                                 std::vector<std::uint32_t> one,
                                 std::size_t order_cap = kDefaultOrderCap) {
        FiniteRing r;
        r.label_ = std::move(label);
        r.dims_ = std::move(dims);
        r.basis_mul_coords_ = std::move(mul);
        r.one_coords_ = std::move(one);
        r.name_style_ = NameStyle::Generic;
        r.basis_names_.resize(r.dims_.size());
        for (std::size_t i = 0; i < r.dims_.size(); ++i) r.basis_names_[i] = "e" + std::to_string(i);
        r.finish_basis(order_cap);
        return r;
    }

    // Explicit Cayley tables (row-major, order x order). Element 0 must be the
    // additive identity. Used for quotient rings; fully validated.
    static FiniteRing from_cayley(std::string label, std::size_t order,
                                  std::vector<Elem> add, std::vector<Elem> mul, Elem one,
                                  std::vector<std::string> names = {}) {
        if (order < 1 || add.size() != order * order || mul.size() != order * order)
            throw SchemaError("from_cayley: table sizes do not match order");
        if (order > 1024) throw OrderCapExceeded("from_cayley: order too large for table validation");
        FiniteRing r;
        r.kind_ = Kind::Cayley;
        r.label_ = std::move(label);
        r.order_ = order;
        r.add_tab_ = std::move(add);
        r.mul_tab_ = std::move(mul);
        r.one_ = one;
        r.name_style_ = NameStyle::Table;
        r.elem_names_ = std::move(names);
        r.validate_cayley();
        r.build_neg();
        return r;
    }

    // --- basic interrogation -------------------------------------------------

    std::size_t order() const { return order_; }
    const std::string& label() const { return label_; }
    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const {
        if (!add_tab_.empty()) return add_tab_[std::size_t(a) * order_ + b];
        return add_coords(a, b);
    }
    Elem neg(Elem a) const { return neg_tab_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (!mul_tab_.empty()) return mul_tab_[std::size_t(a) * order_ + b];
        return mul_coords(a, b);
    }

    Elem pow(Elem a, std::uint64_t n) const {
        Elem r = one_, base = a;
        while (n) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    // n * 1 (additively), n may be negative.
    Elem from_int(long long n) const {
        Elem r = zero();
        const bool negate = n < 0;
        std::uint64_t k = negate ? std::uint64_t(-(n + 1)) + 1 : std::uint64_t(n);
        Elem base = one_;
        while (k) {
            if (k & 1) r = add(r, base);
            base = add(base, base);
            k >>= 1;
        }
        return negate ? neg(r) : r;
    }

    Elem scalar_times(std::uint64_t n, Elem x) const {
        Elem r = zero();
        Elem base = x;
        while (n) {
            if (n & 1) r = add(r, base);
            base = add(base, base);
            n >>= 1;
        }
        return r;
    }

    std::optional<Elem> inverse(Elem a) const {
        for (Elem y = 0; y < order_; ++y)
            if (mul(a, y) == one_) return y;
        return std::nullopt;
    }
    bool is_unit(Elem a) const { return inverse(a).has_value(); }

    // --- basis access (basis kind only) --------------------------------------

    bool has_basis() const { return kind_ == Kind::Basis; }
    std::size_t basis_rank() const { return dims_.size(); }
    const std::vector<std::uint32_t>& dims() const { return dims_; }

    Elem basis_elem(std::size_t i) const {
        std::vector<std::uint32_t> c(dims_.size(), 0);
        c[i] = 1 % dims_[i];
        return from_coords(c);
    }

    std::vector<std::uint32_t> coords_of(Elem x) const {
        std::vector<std::uint32_t> c(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            c[i] = std::uint32_t((x / strides_[i]) % dims_[i]);
        }
        return c;
    }

    Elem from_coords(const std::vector<std::uint32_t>& c) const {
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < dims_.size(); ++i) x += std::uint64_t(c[i] % dims_[i]) * strides_[i];
        return Elem(x);
    }

    // --- elementwise sets -----------------------------------------------------

    ElemSet units() const {
        ElemSet s(order_);
        for (Elem x = 0; x < order_; ++x)
            if (is_unit(x)) s.insert(x);
        return s;
    }

    ElemSet idempotents() const {
        ElemSet s(order_);
        for (Elem x = 0; x < order_; ++x)
            if (mul(x, x) == x) s.insert(x);
        return s;
    }

    // Convention: 0 is a zero-divisor, so Z(R) is literally a union of primes.
    ElemSet zero_divisors() const {
        ElemSet s(order_);
        s.insert(0);
        for (Elem x = 1; x < order_; ++x)
            for (Elem y = 1; y < order_; ++y)
                if (mul(x, y) == 0) {
                    s.insert(x);
                    break;
                }
        return s;
    }

    ElemSet nilpotents() const {
        ElemSet s(order_);
        for (Elem x = 0; x < order_; ++x) {
            Elem p = x;
            for (std::size_t n = 1; n <= order_; ++n) {
                if (p == 0) {
                    s.insert(x);
                    break;
                }
                p = mul(p, x);
            }
        }
        return s;
    }

    // --- rendering ------------------------------------------------------------

    std::string show(Elem x) const {
        switch (name_style_) {
            case NameStyle::Integer:
                return std::to_string(x);
            case NameStyle::Tuple:
            case NameStyle::Poly:
            case NameStyle::Generic: {
                auto c = coords_of(x);
                std::string s;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (c[i] == 0) continue;
                    if (!s.empty()) s += "+";
                    if (basis_names_[i] == "1") s += std::to_string(c[i]);
                    else if (c[i] == 1) s += basis_names_[i];
                    else s += std::to_string(c[i]) + basis_names_[i];
                }
                return s.empty() ? "0" : s;
            }
            case NameStyle::Table:
                if (x < elem_names_.size()) return elem_names_[x];
                return "#" + std::to_string(x);
        }
        return "?";
    }

private:
    enum class Kind { Basis, Cayley };

    static void enumerate_degree(std::vector<unsigned>& e, unsigned pos, unsigned rem,
                                 std::vector<std::vector<unsigned>>& out) {
        if (pos + 1 == e.size()) {
            e[pos] = rem;
            out.push_back(e);
            return;
        }
        for (unsigned d = 0; d <= rem; ++d) {
            e[pos] = d;
            enumerate_degree(e, pos + 1, rem - d, out);
        }
        e[pos] = 0;
    }

    static std::string mono_name(const std::vector<unsigned>& e) {
        static const char* vars = "abcdefgh";
        std::string s;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            s += vars[v % 8];
            if (e[v] > 1) s += "^" + std::to_string(e[v]);
        }
        return s.empty() ? "1" : s;
    }

    Elem add_coords(Elem a, Elem b) const {
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            const std::uint64_t ai = (a / strides_[i]) % dims_[i];
            const std::uint64_t bi = (b / strides_[i]) % dims_[i];
            x += ((ai + bi) % dims_[i]) * strides_[i];
        }
        return Elem(x);
    }

    Elem mul_coords(Elem a, Elem b) const {
        const std::size_t m = dims_.size();
        std::vector<std::uint64_t> acc(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t ai = (a / strides_[i]) % dims_[i];
            if (!ai) continue;
            for (std::size_t j = 0; j < m; ++j) {
                const std::uint64_t bj = (b / strides_[j]) % dims_[j];
                if (!bj) continue;
                const auto& c = basis_mul_coords_[i][j];
                for (std::size_t k = 0; k < m; ++k)
                    if (c[k]) acc[k] += ai * bj * c[k];
            }
        }
        std::uint64_t x = 0;
        for (std::size_t k = 0; k < m; ++k) x += (acc[k] % dims_[k]) * strides_[k];
        return Elem(x);
    }

    void finish_basis(std::size_t order_cap) {
        kind_ = Kind::Basis;
        const std::size_t m = dims_.size();
        if (m == 0) throw SchemaError("ring: empty basis");
        if (basis_mul_coords_.size() != m || one_coords_.size() != m)
            throw SchemaError("ring: inconsistent basis data");
        std::uint64_t ord = 1;
        strides_.assign(m, 1);
        for (std::size_t i = 0; i < m; ++i) {
            if (dims_[i] < 1) throw SchemaError("ring: dims must be positive");
            strides_[i] = ord;
            ord *= dims_[i];
            if (ord > order_cap)
                throw OrderCapExceeded(label_ + ": order exceeds cap " + std::to_string(order_cap));
        }
        order_ = std::size_t(ord);
        for (std::size_t i = 0; i < m; ++i) {
            if (basis_mul_coords_[i].size() != m) throw SchemaError("ring: bad mul table shape");
            for (std::size_t j = 0; j < m; ++j)
                if (basis_mul_coords_[i][j].size() != m) throw SchemaError("ring: bad mul table shape");
        }
        one_ = from_coords(one_coords_);
        // Axioms on basis triples; bilinearity extends them to all elements.
        for (std::size_t i = 0; i < m; ++i) {
            const Elem ei = basis_elem(i);
            for (std::size_t j = 0; j < m; ++j) {
                const Elem ej = basis_elem(j);
                if (mul_coords(ei, ej) != from_coords(basis_mul_coords_[i][j]))
                    throw AxiomViolation(label_ + ": mul table inconsistent at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
                if (from_coords(basis_mul_coords_[i][j]) != from_coords(basis_mul_coords_[j][i]))
                    throw AxiomViolation(label_ + ": commutativity fails on basis (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
                for (std::size_t k = 0; k < m; ++k) {
                    const Elem ek = basis_elem(k);
                    if (mul_coords(mul_coords(ei, ej), ek) != mul_coords(ei, mul_coords(ej, ek)))
                        throw AxiomViolation(label_ + ": associativity fails on basis (" +
                                             std::to_string(i) + "," + std::to_string(j) + "," +
                                             std::to_string(k) + ")");
                }
            }
            if (mul_coords(one_, ei) != ei)
                throw AxiomViolation(label_ + ": identity fails on basis " + std::to_string(i));
        }
        build_neg();
        if (order_ <= kTableLimit) materialize_tables();
    }

    void build_neg() {
        neg_tab_.assign(order_, 0);
        if (kind_ == Kind::Basis) {
            for (Elem x = 0; x < order_; ++x) {
                std::uint64_t y = 0;
                for (std::size_t i = 0; i < dims_.size(); ++i) {
                    const std::uint64_t xi = (x / strides_[i]) % dims_[i];
                    y += ((dims_[i] - xi) % dims_[i]) * strides_[i];
                }
                neg_tab_[x] = Elem(y);
            }
        } else {
            for (Elem x = 0; x < order_; ++x) {
                for (Elem y = 0; y < order_; ++y)
                    if (add_tab_[std::size_t(x) * order_ + y] == 0) {
                        neg_tab_[x] = y;
                        break;
                    }
            }
        }
    }

    void materialize_tables() {
        add_tab_.resize(order_ * order_);
        mul_tab_.resize(order_ * order_);
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b <= a; ++b) {
                const Elem s = add_coords(a, b);
                const Elem p = mul_coords(a, b);
                add_tab_[std::size_t(a) * order_ + b] = s;
                add_tab_[std::size_t(b) * order_ + a] = s;
                mul_tab_[std::size_t(a) * order_ + b] = p;
                mul_tab_[std::size_t(b) * order_ + a] = p;
            }
    }

    void validate_cayley() {
        const std::size_t n = order_;
        auto A = [&](Elem x, Elem y) { return add_tab_[std::size_t(x) * n + y]; };
        auto M = [&](Elem x, Elem y) { return mul_tab_[std::size_t(x) * n + y]; };
        for (Elem x = 0; x < n; ++x) {
            if (A(0, x) != x) throw AxiomViolation(label_ + ": 0 is not the additive identity");
            if (M(one_, x) != x) throw AxiomViolation(label_ + ": identity fails at " + std::to_string(x));
            bool has_neg = false;
            for (Elem y = 0; y < n; ++y)
                if (A(x, y) == 0) has_neg = true;
            if (!has_neg) throw AxiomViolation(label_ + ": missing additive inverse");
        }
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                if (A(x, y) != A(y, x)) throw AxiomViolation(label_ + ": + not commutative");
                if (M(x, y) != M(y, x)) throw AxiomViolation(label_ + ": * not commutative");
                for (Elem z = 0; z < n; ++z) {
                    if (A(A(x, y), z) != A(x, A(y, z))) throw AxiomViolation(label_ + ": + not associative");
                    if (M(M(x, y), z) != M(x, M(y, z)))
                        throw AxiomViolation(label_ + ": * not associative at (" + std::to_string(x) +
                                             "," + std::to_string(y) + "," + std::to_string(z) + ")");
                    if (M(x, A(y, z)) != A(M(x, y), M(x, z)))
                        throw AxiomViolation(label_ + ": distributivity fails");
                }
            }
    }

    static constexpr std::size_t kTableLimit = 1024;

    Kind kind_ = Kind::Basis;
    std::string label_;
    std::size_t order_ = 0;
    Elem one_ = 0;

    // basis kind
    std::vector<std::uint32_t> dims_;
    std::vector<std::uint64_t> strides_;
    std::vector<std::vector<std::vector<std::uint32_t>>> basis_mul_coords_;
    std::vector<std::uint32_t> one_coords_;
    std::vector<std::string> basis_names_;

    // materialized tables (always for cayley kind, small basis rings too)
    std::vector<Elem> add_tab_, mul_tab_, neg_tab_;
    std::vector<std::string> elem_names_;

    NameStyle name_style_ = NameStyle::Generic;
};

} // namespace contentalg
