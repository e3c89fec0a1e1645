#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace vcreg {

// Dense bit vector over a fixed universe {0, ..., universe_size-1}.
// The universal currency for neighborhoods, traces and parts.
// Invariant: bits at positions >= universe_size are always zero.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::int64_t universe)
        : universe_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(std::int64_t universe) {
        VertexSet s(universe);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::int64_t universe_size() const { return universe_; }
    std::size_t word_count() const { return w_.size(); }
    const std::uint64_t* words() const { return w_.data(); }

    bool test(std::int64_t i) const {
        assert(i >= 0 && i < universe_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::int64_t i) {
        assert(i >= 0 && i < universe_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::int64_t i) {
        assert(i >= 0 && i < universe_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    std::int64_t count() const {
        std::int64_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator^=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    // this \ o
    VertexSet& and_not(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    VertexSet& complement() {
        for (auto& w : w_) w = ~w;
        trim();
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    std::int64_t intersection_count(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        std::int64_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    std::int64_t symmetric_difference_count(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        std::int64_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] ^ o.w_[i]);
        return c;
    }

    std::int64_t difference_count(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        std::int64_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & ~o.w_[i]);
        return c;
    }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // smallest member, or -1
    std::int64_t first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return std::int64_t(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // smallest member > i, or -1
    std::int64_t next(std::int64_t i) const {
        ++i;
        if (i >= universe_) return -1;
        std::size_t wi = i >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return std::int64_t(wi) * 64 + std::countr_zero(w);
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(std::int64_t(i) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<std::int64_t> members() const {
        std::vector<std::int64_t> out;
        out.reserve(count());
        for_each([&](std::int64_t v) { out.push_back(v); });
        return out;
    }

    std::vector<int> members_int() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::int64_t v) { out.push_back(int(v)); });
        return out;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && w_ == o.w_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool operator<(const VertexSet& o) const {
        if (universe_ != o.universe_) return universe_ < o.universe_;
        return w_ < o.w_;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : w_) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return h ^ std::uint64_t(universe_);
    }

private:
    std::int64_t universe_ = 0;
    std::vector<std::uint64_t> w_;

    void trim() {
        if (universe_ & 63)
            w_.back() &= (~std::uint64_t{0}) >> (64 - (universe_ & 63));
        if (universe_ == 0 && !w_.empty()) w_.back() = 0;
    }
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace vcreg
