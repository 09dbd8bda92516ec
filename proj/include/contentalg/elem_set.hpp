#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace contentalg {

// Dense bitset over {0, ..., n-1}. Every element set, ideal and submodule in
// the library is one of these; rings stay small enough that dense is always
// the right call.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(std::size_t universe)
        : universe_(universe), bits_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return universe_; }
    std::size_t count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(std::size_t i) const {
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

    // Returns true when i was newly added.
    bool insert(std::size_t i) {
        std::uint64_t& w = bits_[i >> 6];
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (w & m) return false;
        w |= m;
        ++count_;
        return true;
    }

    bool operator==(const ElemSet& o) const {
        return universe_ == o.universe_ && bits_ == o.bits_;
    }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    bool subset_of(const ElemSet& o) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }

    ElemSet intersect(const ElemSet& o) const {
        ElemSet r(universe_);
        for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & o.bits_[w];
        r.recount();
        return r;
    }

    ElemSet unite(const ElemSet& o) const {
        ElemSet r(universe_);
        for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] | o.bits_[w];
        r.recount();
        return r;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t x = bits_[w];
            while (x) {
                const int b = __builtin_ctzll(x);
                f(w * 64 + std::size_t(b));
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> v;
        v.reserve(count_);
        for_each([&](std::size_t i) { v.push_back(i); });
        return v;
    }

    // Stable byte key, usable in hash maps for set-level deduplication.
    std::string key() const {
        std::string k;
        k.reserve(bits_.size() * 8);
        for (std::uint64_t w : bits_)
            for (int b = 0; b < 8; ++b) k.push_back(char((w >> (8 * b)) & 0xff));
        return k;
    }

private:
    void recount() {
        count_ = 0;
        for (std::uint64_t w : bits_) count_ += std::size_t(__builtin_popcountll(w));
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> bits_;
    std::size_t count_ = 0;
};

} // namespace contentalg
