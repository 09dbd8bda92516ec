#pragma once

#include <cstdint>
#include <vector>

#include "contentalg/ideal.hpp"
#include "contentalg/ring.hpp"

namespace contentalg {

// Free module M = R^k with fully enumerable element space: elements are
// indices in base-|R| positional encoding, submodules are dense element sets.
class FreeModule {
public:
    using VElem = std::uint32_t;

    FreeModule(const FiniteRing& R, unsigned k, std::size_t cap = kDefaultOrderCap)
        : R_(&R), k_(k) {
        if (k < 1) throw SchemaError("free module: rank must be >= 1");
        std::uint64_t n = 1;
        for (unsigned i = 0; i < k; ++i) {
            n *= R.order();
            if (n > cap) throw OrderCapExceeded("free module order exceeds cap");
        }
        order_ = std::size_t(n);
    }

    const FiniteRing& ring() const { return *R_; }
    unsigned rank() const { return k_; }
    std::size_t order() const { return order_; }

    VElem encode(const std::vector<Elem>& v) const {
        std::uint64_t x = 0;
        for (unsigned i = k_; i-- > 0;) x = x * R_->order() + v[i];
        return VElem(x);
    }

    std::vector<Elem> decode(VElem x) const {
        std::vector<Elem> v(k_);
        for (unsigned i = 0; i < k_; ++i) {
            v[i] = Elem(x % R_->order());
            x /= VElem(R_->order());
        }
        return v;
    }

    VElem add(VElem a, VElem b) const {
        const std::uint64_t n = R_->order();
        std::uint64_t r = 0, mult = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += std::uint64_t(R_->add(Elem(a % n), Elem(b % n))) * mult;
            a = VElem(a / n);
            b = VElem(b / n);
            mult *= n;
        }
        return VElem(r);
    }

    VElem scalar(Elem s, VElem a) const {
        const std::uint64_t n = R_->order();
        std::uint64_t r = 0, mult = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += std::uint64_t(R_->mul(s, Elem(a % n))) * mult;
            a = VElem(a / n);
            mult *= n;
        }
        return VElem(r);
    }

    // Submodule generated by the given vectors: additive closure of all
    // scalar multiples.
    ElemSet submodule(const std::vector<VElem>& gens) const {
        ElemSet s(order_);
        s.insert(0);
        for (VElem g : gens)
            for (Elem r = 0; r < R_->order(); ++r) s.insert(scalar(r, g));
        close_additively(s);
        return s;
    }

    // I*N: additive closure of {a*x : a in I, x in N}. When N is the whole
    // module, IM is exactly the vectors with every coordinate in I.
    ElemSet ideal_times(const Ideal& I, const ElemSet& N) const {
        if (N.count() == order_) {
            ElemSet s(order_);
            const std::uint64_t n = R_->order();
            for (std::size_t x = 0; x < order_; ++x) {
                std::uint64_t v = x;
                bool in = true;
                for (unsigned i = 0; i < k_ && in; ++i) {
                    in = I.contains(Elem(v % n));
                    v /= n;
                }
                if (in) s.insert(x);
            }
            return s;
        }
        ElemSet s(order_);
        s.insert(0);
        I.elements().for_each([&](std::size_t a) {
            N.for_each([&](std::size_t x) { s.insert(scalar(Elem(a), VElem(x))); });
        });
        close_additively(s);
        return s;
    }

    ElemSet whole() const {
        ElemSet s(order_);
        for (std::size_t i = 0; i < order_; ++i) s.insert(i);
        return s;
    }

    ElemSet zero_submodule() const {
        ElemSet s(order_);
        s.insert(0);
        return s;
    }

    // Content of a vector: the ideal generated by its coordinates. For a free
    // module this equals the intersection of all ideals I with x in I*M,
    // since x in I*M holds exactly when every coordinate lies in I.
    Ideal content(VElem x) const {
        std::vector<Elem> gens;
        for (Elem c : decode(x))
            if (c != 0) gens.push_back(c);
        return ideal_generate(*R_, std::move(gens));
    }

    std::string show(VElem x) const {
        std::vector<Elem> v = decode(x);
        std::string s = "(";
        for (unsigned i = 0; i < k_; ++i) {
            if (i) s += ",";
            s += R_->show(v[i]);
        }
        return s + ")";
    }

private:
    void close_additively(ElemSet& s) const {
        std::vector<VElem> list;
        s.for_each([&](std::size_t x) { list.push_back(VElem(x)); });
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const VElem z = add(list[i], list[j]);
                if (s.insert(z)) list.push_back(z);
            }
    }

    const FiniteRing* R_;
    unsigned k_;
    std::size_t order_;
};

} // namespace contentalg
