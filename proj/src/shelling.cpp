#include "cutcx/shelling.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "cutcx/cut.hpp"
#include "cutcx/error.hpp"
#include "cutcx/family.hpp"

namespace cutcx {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Shellable: return "shellable";
    case Verdict::NotShellable: return "not_shellable";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

ShellingCheck verify_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order) {
    if (!c.is_pure()) throw InvalidInput("shellability is only checked for pure complexes");
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets()) throw InvalidInput("order is not a permutation of the facets");

    for (std::size_t j = 1; j < order.size(); ++j) {
        const Face& fj = order[j];
        VertexSet r;
        for (std::size_t k = 0; k < j; ++k) {
            const Face gap = fj - order[k];
            if (gap.count() == 1) r |= gap;
        }
        for (std::size_t i = 0; i < j; ++i)
            if ((r - order[i]).empty()) return {false, std::make_pair(i, j)};
    }
    return {true, std::nullopt};
}

std::vector<std::int64_t> h_vector(const SimplicialComplex& c) {
    const auto fv = f_vector_and_euler(c);
    const int d = c.dim();
    std::vector<std::int64_t> h(static_cast<std::size_t>(d + 2), 0);
    for (int k = 0; k <= d + 1; ++k)
        for (int i = 0; i <= k; ++i) {
            const std::int64_t term = binom(d + 1 - i, k - i) * fv.f[i];
            h[k] += ((k - i) % 2 == 0) ? term : -term;
        }
    return h;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : b) h = (h ^ w) * 0x100000001b3ull;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

class Search {
public:
    Search(const std::vector<Face>& facets, std::vector<std::int64_t> h, std::uint64_t budget)
        : f_(facets), t_(static_cast<int>(facets.size())), h_(std::move(h)), budget_(budget),
          used_(h_.size(), 0), placed_((facets.size() + 63) / 64, 0) {
        miss_.assign(static_cast<std::size_t>(t_) * t_, -1);
        for (int a = 0; a < t_; ++a)
            for (int b = 0; b < t_; ++b) {
                if (a == b) continue;
                const Face gap = f_[a] - f_[b];
                if (gap.count() == 1) miss_[static_cast<std::size_t>(a) * t_ + b] = gap.min();
            }
    }

    // Returns true when a complete order is found; throws BudgetExceeded past the node limit.
    bool run(const std::vector<bool>& first_allowed) { return extend(&first_allowed); }

    const std::vector<int>& order() const { return order_; }
    std::uint64_t nodes() const { return nodes_; }

    struct BudgetExceeded {};

private:
    const std::vector<Face>& f_;
    int t_;
    std::vector<std::int64_t> h_;
    std::uint64_t budget_;
    std::vector<std::int64_t> used_;
    Bits placed_;
    std::vector<int> order_;
    std::vector<int> miss_;
    std::unordered_set<Bits, BitsHash> dead_;
    std::uint64_t nodes_ = 0;

    bool is_placed(int a) const { return placed_[a / 64] >> (a % 64) & 1; }
    void flip(int a) { placed_[a / 64] ^= std::uint64_t{1} << (a % 64); }

    // Size of the restriction face of a against the placed facets, or -1 if a cannot go next.
    int restriction(int a) const {
        if (order_.empty()) return 0;
        VertexSet r;
        for (int b : order_) {
            const int v = miss_[static_cast<std::size_t>(a) * t_ + b];
            if (v >= 0) r.set(v);
        }
        if (r.empty()) return -1;
        for (int b : order_) {
            if (miss_[static_cast<std::size_t>(a) * t_ + b] >= 0) continue;
            if (r.is_subset_of(f_[b])) return -1;
        }
        return r.count();
    }

    bool extend(const std::vector<bool>* first_allowed) {
        if (++nodes_ > budget_) throw BudgetExceeded{};
        if (static_cast<int>(order_.size()) == t_) return true;
        if (dead_.count(placed_)) return false;
        for (int a = 0; a < t_; ++a) {
            if (is_placed(a)) continue;
            if (first_allowed && !(*first_allowed)[a]) continue;
            const int r = restriction(a);
            if (r < 0 || used_[r] >= h_[r]) continue;
            ++used_[r];
            flip(a);
            order_.push_back(a);
            if (extend(nullptr)) return true;
            order_.pop_back();
            flip(a);
            --used_[r];
        }
        dead_.insert(placed_);
        return false;
    }
};

std::vector<bool> first_facet_filter(const SimplicialComplex& c, const ShellingOptions& opts) {
    const auto& fs = c.facets();
    std::vector<bool> allowed(fs.size(), true);
    if (opts.automorphisms.empty()) return allowed;

    std::unordered_map<Face, std::size_t> index;
    for (std::size_t i = 0; i < fs.size(); ++i) index.emplace(fs[i], i);
    std::vector<std::vector<std::size_t>> images;
    for (const auto& perm : opts.automorphisms) {
        if (static_cast<int>(perm.size()) != c.ambient()) return allowed;
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < c.ambient(); ++i)
            if (sorted[i] != i) return allowed;
        std::vector<std::size_t> img;
        for (const auto& f : fs) {
            Face g;
            f.for_each([&](int v) { g.set(perm[v]); });
            auto it = index.find(g);
            if (it == index.end()) return allowed;
            img.push_back(it->second);
        }
        images.push_back(std::move(img));
    }

    std::vector<bool> seen(fs.size(), false);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (seen[i]) continue;
        // Facets are in increasing order, so i is the least element of its orbit.
        std::vector<std::size_t> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& img : images)
                if (!seen[img[x]]) {
                    seen[img[x]] = true;
                    allowed[img[x]] = false;
                    stack.push_back(img[x]);
                }
        }
    }
    return allowed;
}

}  // namespace

ShellingCertificate find_shelling(const SimplicialComplex& c, const ShellingOptions& opts) {
    ShellingCertificate cert;
    if (c.is_void()) {
        cert.verdict = Verdict::Shellable;
        cert.void_complex = true;
        return cert;
    }
    if (!c.is_pure()) throw InvalidInput("shellability is only searched for pure complexes");
    const auto& fs = c.facets();
    if (fs.size() == 1) {
        cert.verdict = Verdict::Shellable;
        cert.order = fs;
        cert.nodes = 1;
        return cert;
    }

    auto h = h_vector(c);
    Search s(fs, h, opts.budget);
    try {
        const bool found = s.run(first_facet_filter(c, opts));
        cert.verdict = found ? Verdict::Shellable : Verdict::NotShellable;
        if (found)
            for (int a : s.order()) cert.order.push_back(fs[a]);
    } catch (const Search::BudgetExceeded&) {
        cert.verdict = Verdict::Unknown;
    }
    cert.nodes = std::min(s.nodes(), opts.budget);
    return cert;
}

std::vector<Face> cycle_lex_order(int n, int k) {
    if (n < 4) throw InvalidInput("cycle_lex_order needs n >= 4");
    if (k < 3) throw InvalidInput("cycle_lex_order needs k >= 3");
    if (k >= n - 1) return {};
    auto facets = cut_complex(cycle_graph(n), k).facets();
    std::sort(facets.begin(), facets.end(), lex_less);
    return facets;
}

}  // namespace cutcx
