#include "cutcx/morse.hpp"

#include <algorithm>
#include <unordered_map>

#include "cutcx/cut.hpp"
#include "cutcx/error.hpp"

namespace cutcx {

namespace {

std::vector<Face> uncovered(const SimplicialComplex& c, const std::vector<MorsePair>& pairs) {
    std::unordered_map<Face, int> hits;
    for (const auto& p : pairs) {
        ++hits[p.lower];
        ++hits[p.upper];
    }
    std::vector<Face> out;
    for (const auto& f : c.faces())
        if (!hits.count(f)) out.push_back(f);
    return out;
}

void check_structure(const SimplicialComplex& c, const std::vector<MorsePair>& pairs) {
    std::unordered_map<Face, int> hits;
    for (const auto& p : pairs) {
        const Face gap = p.upper - p.lower;
        if (!p.lower.is_subset_of(p.upper) || gap.count() != 1)
            throw InvalidInput("matched faces must differ by exactly one vertex");
        if (!c.contains(p.upper)) throw InvalidInput("matched face " + p.upper.str() + " is not in the complex");
        if (++hits[p.lower] > 1 || ++hits[p.upper] > 1)
            throw InvalidInput("a face appears in more than one matched pair");
    }
}

}  // namespace

MorseMatching element_matching_sequence(const SimplicialComplex& c, const std::vector<int>& vertex_order) {
    VertexSet seen;
    for (int v : vertex_order) {
        if (v < 0 || v >= c.ambient()) throw InvalidInput("vertex " + std::to_string(v) + " outside the complex");
        if (seen.test(v)) throw InvalidInput("vertex " + std::to_string(v) + " repeated in matching order");
        seen.set(v);
    }
    MorseMatching m;
    m.complex = c;
    const auto faces = c.faces();
    std::unordered_map<Face, std::size_t> index;
    index.reserve(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
    std::vector<bool> matched(faces.size(), false);

    for (int a : vertex_order) {
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (matched[i] || faces[i].test(a)) continue;
            auto it = index.find(faces[i].with(a));
            if (it == index.end() || matched[it->second]) continue;
            matched[i] = matched[it->second] = true;
            m.pairs.push_back({faces[i], faces[it->second], a});
        }
    }
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (!matched[i]) m.critical.push_back(faces[i]);
    return m;
}

MorseMatching matching_from_pairs(const SimplicialComplex& c, std::vector<MorsePair> pairs) {
    check_structure(c, pairs);
    MorseMatching m;
    m.complex = c;
    m.pairs = std::move(pairs);
    m.critical = uncovered(c, m.pairs);
    return m;
}

std::int64_t MorseCensus::total() const {
    std::int64_t t = 0;
    for (const auto& [d, n] : critical_by_dim) t += n;
    return t;
}

std::int64_t MorseCensus::euler() const {
    std::int64_t e = 0;
    for (const auto& [d, n] : critical_by_dim) e += (d % 2 == 0) ? n : -n;
    return e;
}

MorseCensus verify_acyclic_and_critical(const MorseMatching& m) {
    check_structure(m.complex, m.pairs);
    MorseCensus census;
    for (const auto& f : uncovered(m.complex, m.pairs)) ++census.critical_by_dim[f.count() - 1];

    // V-paths alternate between consecutive dimensions: pair p leads to pair q when the
    // lower face of q is a different facet of the upper face of p.
    const std::size_t np = m.pairs.size();
    std::unordered_map<Face, std::size_t> by_lower;
    for (std::size_t i = 0; i < np; ++i) by_lower.emplace(m.pairs[i].lower, i);
    std::vector<std::vector<std::size_t>> next(np);
    for (std::size_t i = 0; i < np; ++i) {
        const auto& p = m.pairs[i];
        p.upper.for_each([&](int v) {
            const Face s = p.upper.without(v);
            if (s == p.lower) return;
            auto it = by_lower.find(s);
            if (it != by_lower.end()) next[i].push_back(it->second);
        });
    }

    std::vector<int> indeg(np, 0);
    for (const auto& out : next)
        for (auto j : out) ++indeg[j];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < np; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    std::size_t removed = 0;
    while (!ready.empty()) {
        auto i = ready.back();
        ready.pop_back();
        ++removed;
        for (auto j : next[i])
            if (--indeg[j] == 0) ready.push_back(j);
    }
    census.acyclic = removed == np;
    return census;
}

std::vector<int> tree_matching_order(const Graph& tree, int root) {
    if (!is_tree(tree)) throw InvalidInput("tree_matching_order needs a tree");
    const auto parent = bfs_parents(tree, root);
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i)
        tree.neighbors(order[i]).for_each([&](int w) {
            if (parent[w] == order[i]) order.push_back(w);
        });
    return order;
}

MorseMatching restricted_matching(const Graph& g) {
    if (!is_connected(g)) throw InvalidInput("restricted_matching needs a connected graph");
    if (has_triangle(g)) throw InvalidInput("restricted_matching needs a triangle-free graph");
    if (is_tree(g)) throw InvalidInput("graph is a tree; use tree_matching_order");

    const auto parent = bfs_parents(g, 0);
    std::vector<Edge> tree_edges;
    for (int v = 1; v < g.order(); ++v) tree_edges.emplace_back(parent[v], v);
    const Graph t = Graph::from_edge_list(g.order(), tree_edges);

    const auto full = element_matching_sequence(cut_complex(t, 2), tree_matching_order(t, 0));
    const auto sub = cut_complex(g, 2);
    std::vector<MorsePair> kept;
    for (const auto& p : full.pairs)
        if (sub.contains(p.upper)) kept.push_back(p);
    return matching_from_pairs(sub, std::move(kept));
}

std::vector<int> prism_matching_order(int n, int k) {
    if (k < 2 || n < k) throw InvalidInput("prism_matching_order needs n >= k >= 2");
    std::vector<int> order{0, n};
    for (int i = 1; i < n; ++i) order.push_back(i);
    return order;
}

}  // namespace cutcx
