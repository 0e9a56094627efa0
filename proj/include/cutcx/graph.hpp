#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutcx/vertex_set.hpp"

namespace cutcx {

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const;
    const VertexSet& neighbors(int v) const { return adj_.at(v); }
    bool adjacent(int u, int v) const { return adj_.at(u).test(v); }
    int degree(int v) const { return adj_.at(v).count(); }
    VertexSet vertices() const { return VertexSet::range(n_); }
    std::vector<Edge> edges() const;

    // Display name of v; defaults to the 1-based index.
    std::string label(int v) const;
    bool has_labels() const { return !labels_.empty(); }
    Graph with_labels(std::vector<std::string> labels) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;

    void add_edge(int u, int v);
};

enum class CombineOp { Union, Join, Wedge, Cartesian };

Graph combine(CombineOp op, const Graph& g1, const Graph& g2, int v1 = 0, int v2 = 0);
inline Graph disjoint_union(const Graph& a, const Graph& b) { return combine(CombineOp::Union, a, b); }
inline Graph graph_join(const Graph& a, const Graph& b) { return combine(CombineOp::Join, a, b); }
inline Graph wedge(const Graph& a, const Graph& b, int v1, int v2) { return combine(CombineOp::Wedge, a, b, v1, v2); }
inline Graph cartesian(const Graph& a, const Graph& b) { return combine(CombineOp::Cartesian, a, b); }

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertices(const Graph& g, const VertexSet& w);

bool is_connected_subset(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
int component_count(const Graph& g);

struct ChordalResult {
    bool chordal = false;
    std::vector<int> elimination_order;
};
ChordalResult is_chordal(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
bool has_triangle(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

// Parent array of a breadth-first tree from root: root maps to -1, unreached vertices to -2.
std::vector<int> bfs_parents(const Graph& g, int root);

Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

}  // namespace cutcx
