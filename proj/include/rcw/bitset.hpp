#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace rcw {

/// Fixed-capacity vertex set, one bit per vertex.
///
/// The fast path is a single 64-bit word (every search in this library runs
/// on n <= 64); a second word extends the supported range to 128 vertices
/// for oversized inputs without touching the call sites.
class VertexSet {
public:
    static constexpr int kCapacity = 128;
    static constexpr int kWords = kCapacity / 64;

    VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int bits = n - lo >= 64 ? 64 : n - lo;
            s.words_[w] = bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
        }
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    void set(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool contains(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    /// Lowest set bit, or -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    /// Lowest set bit strictly above v, or -1.
    int next_above(int v) const {
        int w = (v + 1) >> 6;
        if (w >= kWords) return -1;
        std::uint64_t cur = words_[w] & (~0ULL << ((v + 1) & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w >= kWords) return -1;
            cur = words_[w];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return a.words_ != b.words_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next_above(v)) out.push_back(v);
        return out;
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

/// Ascending iteration: for (int v = s.first(); v >= 0; v = s.next_above(v))
/// is the idiom used throughout; kept free of iterator machinery on purpose.

}  // namespace rcw
