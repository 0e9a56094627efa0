#include "cutcx/cut.hpp"

#include <algorithm>
#include <unordered_map>

#include "cutcx/error.hpp"

namespace cutcx {

std::vector<VertexSet> disconnected_ksets(const Graph& g, int k) {
    if (k < 1) throw InvalidInput("k must be >= 1");
    std::vector<VertexSet> out;
    if (k == 1) return out;
    for_each_ksubset(g.order(), k, [&](const VertexSet& s) {
        if (!is_connected_subset(g, s)) out.push_back(s);
    });
    return out;
}

SimplicialComplex cut_complex(const Graph& g, int k) {
    const auto d = disconnected_ksets(g, k);
    if (d.empty()) return SimplicialComplex::void_complex(g.order());
    const VertexSet all = g.vertices();
    std::vector<Face> facets;
    facets.reserve(d.size());
    for (const auto& s : d) facets.push_back(all - s);
    return SimplicialComplex::from_facets(std::move(facets), g.order());
}

ConnectedSetCensus connected_kset_census(const Graph& g, int k, std::optional<int> anchor) {
    if (k < 1 || k > g.order()) throw InvalidInput("census needs 1 <= k <= n");
    if (anchor && (*anchor < 0 || *anchor >= g.order())) throw InvalidInput("anchor vertex out of range");
    ConnectedSetCensus c;
    c.k = k;
    c.anchor = anchor;
    for_each_ksubset(g.order(), k, [&](const VertexSet& s) {
        if (!is_connected_subset(g, s)) return;
        ++c.count;
        if (anchor && s.test(*anchor)) ++c.anchored;
    });
    return c;
}

std::vector<Face> facets_via_ridges(const SimplicialComplex& delta_k, int k) {
    std::vector<Face> out;
    if (delta_k.is_void()) return out;
    std::unordered_map<Face, int> hits;
    for (const auto& f : delta_k.facets()) f.for_each([&](int v) { ++hits[f.without(v)]; });
    for (const auto& [r, c] : hits)
        if (c >= k) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

bool no_short_cycles(const Graph& g, int max_len) {
    const auto gi = girth(g);
    return !gi || *gi > max_len;
}

SkeletonCondition skeleton_condition_and_euler(const Graph& g, int k) {
    const int n = g.order();
    if (k < 2 || k > n - 1) throw InvalidInput("skeleton condition needs 2 <= k <= n-1");
    const auto census = connected_kset_census(g, k);
    if (census.count == binom(n, k)) throw VoidComplex();

    SkeletonCondition out;
    if (no_short_cycles(g, k + 1)) {
        out.holds = true;
        out.by_girth = true;
    } else {
        out.holds = true;
        for_each_ksubset(n, k, [&](const VertexSet& a) {
            if (!out.holds || !is_connected_subset(g, a)) return;
            (g.vertices() - a).for_each([&](int x) {
                if (!out.holds) return;
                bool found = false;
                a.for_each([&](int y) {
                    if (!found && !is_connected_subset(g, a.without(y).with(x))) found = true;
                });
                if (!found) out.holds = false;
            });
        });
    }
    if (out.holds) {
        const std::int64_t v = binom(n - 1, k - 1) - census.count;
        out.mu = ((n - k - 1) % 2 == 0) ? v : -v;
    }
    return out;
}

Realization realize_as_cut_complex(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplex();
    if (!c.is_pure()) throw InvalidInput("realization needs a pure complex");
    const auto verts = c.vertex_set().members();
    const int n = static_cast<int>(verts.size());
    if (n == 0) throw InvalidInput("realization needs a complex with at least one vertex");
    const int t = static_cast<int>(c.facets().size());
    const int d = c.dim();

    std::vector<int> index(c.ambient(), -1);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;

    Realization r;
    r.complex_vertex = verts;
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (int v : verts) labels.push_back(std::to_string(v + 1));

    if (t > 1) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
        for (int j = 0; j < t; ++j) {
            c.facets()[j].for_each([&](int v) { es.emplace_back(index[v], n + j); });
            labels.push_back("f" + std::to_string(j + 1));
        }
        r.graph = Graph::from_edge_list(n + t, es);
        r.k = n + t - (d + 1);
    } else if (n == 1) {
        es = {{0, 1}, {0, 2}};
        labels.push_back("f1");
        labels.push_back("f2");
        r.graph = Graph::from_edge_list(3, es);
        r.k = 2;
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) es.emplace_back(i, n + j);
            labels.push_back("f" + std::to_string(j + 1));
        }
        r.graph = Graph::from_edge_list(2 * n, es);
        r.k = n;
    }
    r.graph = r.graph.with_labels(std::move(labels));
    return r;
}

std::string to_string(BettiStatus s) {
    switch (s) {
    case BettiStatus::Wedge: return "wedge";
    case BettiStatus::Contractible: return "contractible";
    case BettiStatus::Void: return "void";
    case BettiStatus::Point: return "point";
    }
    return "?";
}

}  // namespace cutcx
