#include <algorithm>
#include <numeric>

#include "cutcx/cut.hpp"
#include "cutcx/error.hpp"

namespace cutcx {

namespace {

BettiPrediction spheres(std::int64_t count, int dim, std::string rule) {
    BettiPrediction p;
    p.rule = std::move(rule);
    p.dim = dim;
    p.count = count;
    if (count > 0) {
        p.status = BettiStatus::Wedge;
    } else {
        p.status = dim == 0 ? BettiStatus::Point : BettiStatus::Contractible;
        p.count = 0;
    }
    return p;
}

BettiPrediction void_prediction(std::string rule) {
    BettiPrediction p;
    p.status = BettiStatus::Void;
    p.rule = std::move(rule);
    return p;
}

std::vector<int> sorted_parts(const FamilySpec& spec) {
    std::vector<int> m = spec.name == "star" ? std::vector<int>{1, spec.params.at(0)} : spec.params;
    std::sort(m.begin(), m.end());
    return m;
}

bool is_multipartite(const std::string& f) { return f == "complete_multipartite" || f == "star"; }
bool is_forest_family(const std::string& f) { return f == "path" || f == "tree" || f == "forest"; }

}  // namespace

BettiPrediction predicted_betti(const FamilySpec& spec, int k) {
    if (k < 1) throw InvalidInput("k must be >= 1");
    const Graph g = build_family(spec);
    const int n = g.order();
    const std::string& f = spec.name;
    const auto& p = spec.params;

    if (k == 1) return void_prediction("k = 1");
    if (k > n) return void_prediction("k > n");
    if (k == n) {
        if (is_connected(g)) return void_prediction("k = n, connected");
        return spheres(1, -1, "k = n, disconnected: {empty face}");
    }

    if (f == "complete") return void_prediction("complete graph");
    if (f == "edgeless") return spheres(binom(n - 1, k - 1), n - k - 1, "edgeless: skeleton of a simplex");

    if (is_multipartite(f)) {
        const auto m = sorted_parts(spec);
        const int r = static_cast<int>(m.size());
        if (r == 1) return spheres(binom(n - 1, k - 1), n - k - 1, "edgeless: skeleton of a simplex");
        if (k > m.back()) return void_prediction("multipartite, k > largest part");
        if (k > m.front()) return spheres(0, n - k - 1, "multipartite, smallest part < k <= largest part");
        std::int64_t count = 1;
        int dim = r - 2;
        for (int mi : m) {
            count *= binom(mi - 1, k - 1);
            dim += mi - k;
        }
        return spheres(count, dim, "multipartite, k <= smallest part");
    }

    if (f == "cycle") {
        if (k == 2) return n == 3 ? void_prediction("triangle") : spheres(1, n - 4, "cycle, k = 2");
        if (k >= n - 1) return void_prediction("cycle, k >= n-1");
        return spheres(binom(n - 1, k - 1) - n, n - k - 1, "cycle, k >= 3");
    }

    if (is_forest_family(f)) {
        const auto z = connected_kset_census(g, k).count;
        if (z == binom(n, k)) return void_prediction("forest, every k-set connected");
        return spheres(binom(n - 1, k - 1) - z, n - k - 1, "forest");
    }

    if (f == "prism") {
        const int cols = p.at(0);
        if (k > cols) return void_prediction("prism, k > n");
        return spheres(binom(cols - 1, k - 1), 2 * cols - k - 2, "prism, k <= n");
    }

    if (f == "squared_cycle") {
        if (n <= 5) return void_prediction("squared cycle on <= 5 vertices is complete");
        if (n <= k + 3) return void_prediction("squared cycle, n <= k+3");
        if (n == k + 4) return spheres(1, 1, "squared cycle, n = k+4");
        if (k == 2) return spheres(1, n - 4, "squared cycle, k = 2");
        throw NotCovered("squared cycle with n >= k+5 has no closed form");
    }

    if (f == "kayak" && k == p.at(0)) {
        const int edges = k / 2;
        return spheres(edges - 1, 0, "kayak: disjoint edges");
    }

    if (f == "balloon" || f == "figure_eight") {
        const int n1 = p.at(0), n2 = p.at(1);
        const bool eight = f == "figure_eight";
        if (k == n - 1) {
            if (eight || n2 <= 2) return spheres(0, 0, "wedge point is the only cut vertex");
            throw NotCovered("balloon with a long tail has several cut vertices at k = n-1");
        }
        if (k >= 3 && k != n1 - 1 && !(eight && k == n2 - 1)) {
            const auto z = connected_kset_census(g, k).count;
            return spheres(binom(n - 1, k - 1) - z, n - k - 1, f + ", k >= 3");
        }
    }

    if (k == 2 && is_connected(g) && !has_triangle(g) && !is_tree(g))
        return spheres(static_cast<std::int64_t>(g.edge_count()) - n + 1, n - 4, "connected triangle-free, k = 2");

    throw NotCovered("no closed form for " + spec.str() + " at k = " + std::to_string(k));
}

std::optional<bool> predicted_shellable(const FamilySpec& spec, int k) {
    if (k < 1) throw InvalidInput("k must be >= 1");
    const Graph g = build_family(spec);
    const int n = g.order();
    const std::string& f = spec.name;
    const auto& p = spec.params;

    if (k == 1 || k >= n) return true;
    if (k == 2) return is_chordal(g).chordal;

    if (f == "edgeless" || f == "complete" || f == "threshold" || is_forest_family(f)) return true;
    if (is_multipartite(f)) {
        const auto m = sorted_parts(spec);
        if (m.size() == 1) return true;
        return k > m[m.size() - 2];
    }
    if (f == "cycle") return true;
    if (f == "prism") return k > p.at(0);
    if (f == "squared_cycle") {
        if (n <= k + 3) return true;
        if (n == k + 4) return false;
    }
    if (f == "kayak" && k == p.at(0)) return false;
    if (f == "balloon" && k != p.at(0) - 1) return true;
    if (f == "figure_eight" && k != p.at(0) - 1 && k != p.at(1) - 1) return true;
    if (k == 3 && is_chordal(g).chordal) return true;
    return std::nullopt;
}

}  // namespace cutcx
