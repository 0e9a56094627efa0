#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cutcx {

// Set of small non-negative integers. The first 64 elements live in an inline
// word; larger elements spill into a trimmed vector of extra words, so two
// equal sets always have identical representations.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t mask) : w0_(mask) {}
    VertexSet(std::initializer_list<int> vs);

    static VertexSet range(int n);
    static VertexSet from(const std::vector<int>& vs);

    bool test(int v) const;
    void set(int v);
    void reset(int v);

    bool empty() const { return w0_ == 0 && rest_.empty(); }
    int count() const;
    int min() const;
    int max() const;
    std::vector<int> members() const;

    bool fits_word() const { return rest_.empty(); }
    std::uint64_t word() const { return w0_; }
    std::size_t word_count() const { return 1 + rest_.size(); }
    std::uint64_t word_at(std::size_t i) const { return i == 0 ? w0_ : (i - 1 < rest_.size() ? rest_[i - 1] : 0); }

    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet with(int v) const { VertexSet r = *this; r.set(v); return r; }
    VertexSet without(int v) const { VertexSet r = *this; r.reset(v); return r; }

    bool operator==(const VertexSet& o) const = default;
    // Numeric order of the bitmask; this is the colex order on subsets.
    std::strong_ordering operator<=>(const VertexSet& o) const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < word_count(); ++i) {
            std::uint64_t w = word_at(i);
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const;
    std::string str(int base = 0) const;

private:
    std::uint64_t w0_ = 0;
    std::vector<std::uint64_t> rest_;
    void trim();
};

using Face = VertexSet;

// Lexicographic comparison of the sorted member sequences.
bool lex_less(const VertexSet& a, const VertexSet& b);

std::int64_t binom(int n, int k);

// Calls f(S) for every k-subset S of {0..n-1}, in increasing bitmask order.
template <class F>
void for_each_ksubset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    if (k == 0) { f(VertexSet()); return; }
    if (n <= 63) {
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (s < limit) {
            f(VertexSet(s));
            std::uint64_t c = s & (~s + 1);
            std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
        return;
    }
    std::vector<int> c(k + 1);
    for (int i = 0; i < k; ++i) c[i] = i;
    c[k] = n;
    while (true) {
        VertexSet s;
        for (int i = 0; i < k; ++i) s.set(c[i]);
        f(s);
        int j = 0;
        while (j < k && c[j] + 1 == c[j + 1]) ++j;
        if (j == k || c[j] + 1 >= n) break;
        ++c[j];
        for (int i = 0; i < j; ++i) c[i] = i;
    }
}

// Calls f(T) for every subset T of s (including the empty set and s itself).
template <class F>
void for_each_subset(const VertexSet& s, F&& f) {
    if (s.fits_word()) {
        const std::uint64_t m = s.word();
        std::uint64_t t = 0;
        do {
            f(VertexSet(t));
            t = (t - m) & m;
        } while (t != 0);
        return;
    }
    const std::vector<int> mem = s.members();
    const int sz = static_cast<int>(mem.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sz); ++bits) {
        VertexSet t;
        for (int i = 0; i < sz; ++i)
            if (bits >> i & 1) t.set(mem[i]);
        f(t);
    }
}

}  // namespace cutcx

template <>
struct std::hash<cutcx::VertexSet> {
    std::size_t operator()(const cutcx::VertexSet& s) const noexcept { return s.hash(); }
};
