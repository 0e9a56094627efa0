#include "cutcx/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcx {

VertexSet::VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) set(v);
}

VertexSet VertexSet::range(int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
}

VertexSet VertexSet::from(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
}

bool VertexSet::test(int v) const {
    if (v < 0) return false;
    return (word_at(static_cast<std::size_t>(v) / 64) >> (v % 64)) & 1;
}

void VertexSet::set(int v) {
    if (v < 0) throw std::out_of_range("negative vertex");
    const std::size_t w = static_cast<std::size_t>(v) / 64;
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (w == 0) {
        w0_ |= bit;
        return;
    }
    if (rest_.size() < w) rest_.resize(w, 0);
    rest_[w - 1] |= bit;
}

void VertexSet::reset(int v) {
    if (v < 0) return;
    const std::size_t w = static_cast<std::size_t>(v) / 64;
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (w == 0) {
        w0_ &= ~bit;
    } else if (w - 1 < rest_.size()) {
        rest_[w - 1] &= ~bit;
        trim();
    }
}

void VertexSet::trim() {
    while (!rest_.empty() && rest_.back() == 0) rest_.pop_back();
}

int VertexSet::count() const {
    int c = std::popcount(w0_);
    for (auto w : rest_) c += std::popcount(w);
    return c;
}

int VertexSet::min() const {
    for (std::size_t i = 0; i < word_count(); ++i)
        if (auto w = word_at(i)) return static_cast<int>(i * 64 + std::countr_zero(w));
    return -1;
}

int VertexSet::max() const {
    for (std::size_t i = word_count(); i-- > 0;)
        if (auto w = word_at(i)) return static_cast<int>(i * 64 + 63 - std::countl_zero(w));
    return -1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    if (rest_.size() > o.rest_.size()) return false;
    if (w0_ & ~o.w0_) return false;
    for (std::size_t i = 0; i < rest_.size(); ++i)
        if (rest_[i] & ~o.rest_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    if (w0_ & o.w0_) return true;
    const std::size_t m = std::min(rest_.size(), o.rest_.size());
    for (std::size_t i = 0; i < m; ++i)
        if (rest_[i] & o.rest_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    w0_ |= o.w0_;
    if (rest_.size() < o.rest_.size()) rest_.resize(o.rest_.size(), 0);
    for (std::size_t i = 0; i < o.rest_.size(); ++i) rest_[i] |= o.rest_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    w0_ &= o.w0_;
    if (rest_.size() > o.rest_.size()) rest_.resize(o.rest_.size());
    for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] &= o.rest_[i];
    trim();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    w0_ &= ~o.w0_;
    const std::size_t m = std::min(rest_.size(), o.rest_.size());
    for (std::size_t i = 0; i < m; ++i) rest_[i] &= ~o.rest_[i];
    trim();
    return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
    if (auto c = rest_.size() <=> o.rest_.size(); c != 0) return c;
    for (std::size_t i = rest_.size(); i-- > 0;)
        if (auto c = rest_[i] <=> o.rest_[i]; c != 0) return c;
    return w0_ <=> o.w0_;
}

std::size_t VertexSet::hash() const {
    std::uint64_t h = w0_ * 0x9E3779B97F4A7C15ull;
    for (auto w : rest_) h = (h ^ w) * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string VertexSet::str(int base) const {
    std::string s = "{";
    bool first = true;
    for_each([&](int v) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(v + base);
    });
    return s + "}";
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto x = a.members();
    const auto y = b.members();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::int64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace cutcx
