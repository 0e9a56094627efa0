#include "cutcx/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "cutcx/error.hpp"

namespace cutcx {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InvalidInput("negative vertex count");
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    adj_[u].set(v);
    adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::string Graph::label(int v) const {
    if (!labels_.empty()) return labels_.at(v);
    return std::to_string(v + 1);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw InvalidInput("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph combine(CombineOp op, const Graph& g1, const Graph& g2, int v1, int v2) {
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<Edge> es;
    switch (op) {
    case CombineOp::Union:
    case CombineOp::Join: {
        for (auto [u, v] : g1.edges()) es.emplace_back(u, v);
        for (auto [u, v] : g2.edges()) es.emplace_back(u + n1, v + n1);
        if (op == CombineOp::Join)
            for (int u = 0; u < n1; ++u)
                for (int v = 0; v < n2; ++v) es.emplace_back(u, n1 + v);
        return Graph::from_edge_list(n1 + n2, es);
    }
    case CombineOp::Wedge: {
        if (v1 < 0 || v1 >= n1 || v2 < 0 || v2 >= n2) throw InvalidInput("wedge vertex out of range");
        auto map2 = [&](int v) { return v == v2 ? v1 : (v < v2 ? n1 + v : n1 + v - 1); };
        for (auto [u, v] : g1.edges()) es.emplace_back(u, v);
        for (auto [u, v] : g2.edges()) es.emplace_back(map2(u), map2(v));
        return Graph::from_edge_list(n1 + n2 - 1, es);
    }
    case CombineOp::Cartesian: {
        // (u, w) gets index w * n1 + u, so each copy of g1 is a contiguous block.
        for (int w = 0; w < n2; ++w)
            for (auto [a, b] : g1.edges()) es.emplace_back(w * n1 + a, w * n1 + b);
        for (int u = 0; u < n1; ++u)
            for (auto [a, b] : g2.edges()) es.emplace_back(a * n1 + u, b * n1 + u);
        return Graph::from_edge_list(n1 * n2, es);
    }
    }
    throw InvalidInput("unknown graph operation");
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.empty() && s.max() >= g.order()) throw InvalidInput("vertex out of range");
    const auto mem = s.members();
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < mem.size(); ++i) index[mem[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
    Graph h = Graph::from_edge_list(static_cast<int>(mem.size()), es);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int v : mem) labels.push_back(g.label(v));
        h = h.with_labels(std::move(labels));
    }
    return h;
}

Graph delete_vertices(const Graph& g, const VertexSet& w) {
    return induced_subgraph(g, g.vertices() - w);
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw InvalidInput("connectivity of the empty set is undefined");
    VertexSet seen;
    seen.set(s.min());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next &= s;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == s;
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || is_connected_subset(g, g.vertices());
}

int component_count(const Graph& g) {
    VertexSet left = g.vertices();
    int c = 0;
    while (!left.empty()) {
        ++c;
        VertexSet seen;
        seen.set(left.min());
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= seen;
            seen |= next;
            frontier = std::move(next);
        }
        left -= seen;
    }
    return c;
}

ChordalResult is_chordal(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        visit.push_back(best);
        g.neighbors(best).for_each([&](int u) {
            if (!numbered[u]) ++weight[u];
        });
    }
    std::vector<int> order(visit.rbegin(), visit.rend());

    VertexSet later = g.vertices();
    for (int v : order) {
        later.reset(v);
        const VertexSet nb = g.neighbors(v) & later;
        bool clique = true;
        nb.for_each([&](int x) {
            if (clique && !(nb.without(x)).is_subset_of(g.neighbors(x))) clique = false;
        });
        if (!clique) return {false, {}};
    }
    return {true, order};
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        parent[r] = -1;
        std::deque<int> q{r};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            g.neighbors(u).for_each([&](int w) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            });
        }
    }
    return best;
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return true;
    return false;
}

bool is_forest(const Graph& g) {
    return static_cast<int>(g.edge_count()) + component_count(g) == g.order();
}

bool is_tree(const Graph& g) {
    return g.order() > 0 && is_connected(g) && static_cast<int>(g.edge_count()) == g.order() - 1;
}

std::vector<int> bfs_parents(const Graph& g, int root) {
    if (root < 0 || root >= g.order()) throw InvalidInput("root out of range");
    std::vector<int> parent(g.order(), -2);
    parent[root] = -1;
    std::deque<int> q{root};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        g.neighbors(u).for_each([&](int w) {
            if (parent[w] == -2) {
                parent[w] = u;
                q.push_back(w);
            }
        });
    }
    return parent;
}

Graph read_graph_text(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            auto p = out.find_first_not_of(" \t\r");
            if (p != std::string::npos && out[p] != '#') return true;
        }
        return false;
    };
    if (!next_line(line)) throw InvalidInput("graph file: missing header line 'n m'");
    std::istringstream hs(line);
    long n = -1, m = -1;
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
        throw InvalidInput("graph file: malformed header '" + line + "'");
    std::vector<Edge> es;
    for (long i = 0; i < m; ++i) {
        if (!next_line(line)) throw InvalidInput("graph file: expected " + std::to_string(m) + " edges");
        std::istringstream ls(line);
        long u = -1, v = -1;
        if (!(ls >> u >> v) || (ls >> extra))
            throw InvalidInput("graph file: malformed edge line '" + line + "'");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(line)) throw InvalidInput("graph file: trailing content '" + line + "'");
    return Graph::from_edge_list(static_cast<int>(n), es);
}

void write_graph_text(std::ostream& out, const Graph& g) {
    const auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace cutcx
