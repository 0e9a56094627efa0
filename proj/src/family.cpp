#include "cutcx/family.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "cutcx/error.hpp"

namespace cutcx {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

int parse_int(std::string_view s, std::string_view context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InvalidInput("bad integer '" + std::string(s) + "' in " + std::string(context));
    return v;
}

std::vector<int> parse_ints(std::string_view s, std::string_view context) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (auto part : split(s, ',')) out.push_back(parse_int(part, context));
    return out;
}

std::vector<Edge> parse_edges(std::string_view s, std::string_view context) {
    std::vector<Edge> out;
    if (s.empty()) return out;
    for (auto part : split(s, ',')) {
        auto ends = split(part, '-');
        if (ends.size() != 2) throw InvalidInput("bad edge '" + std::string(part) + "' in " + std::string(context));
        out.emplace_back(parse_int(ends[0], context), parse_int(ends[1], context));
    }
    return out;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidInput(msg);
}

struct Arity {
    int min_params;
    int max_params;
};

const std::map<std::string, Arity>& int_families() {
    static const std::map<std::string, Arity> m = {
        {"path", {1, 1}},          {"cycle", {1, 1}},
        {"complete", {1, 1}},      {"edgeless", {1, 1}},
        {"complete_multipartite", {1, 64}},
        {"bipartite", {2, 2}},     {"star", {1, 1}},
        {"prism", {1, 1}},         {"squared_cycle", {1, 1}},
        {"kneser", {2, 2}},        {"kayak", {1, 1}},
        {"petersen", {0, 0}},      {"balloon", {2, 2}},
        {"figure_eight", {2, 2}},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : int_families()) v.push_back(k);
        v.push_back("threshold");
        v.push_back("tree");
        v.push_back("forest");
        std::sort(v.begin(), v.end());
        return v;
    }();
    return names;
}

std::string FamilySpec::str() const {
    std::string s = name;
    if (name == "threshold") return s + ":" + bits;
    if (name == "tree" || name == "forest") {
        s += ':';
        if (name == "forest") s += std::to_string(params.at(0)) + ":";
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
        }
        return s;
    }
    if (params.empty()) return s;
    s += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(params[i]);
    }
    return s;
}

FamilySpec parse_family(std::string_view text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (spec.name == "threshold") {
        require(std::all_of(rest.begin(), rest.end(), [](char c) { return c == '0' || c == '1'; }),
                "threshold expects a string of 0/1 characters");
        spec.bits = std::string(rest);
    } else if (spec.name == "tree") {
        spec.edges = parse_edges(rest, text);
    } else if (spec.name == "forest") {
        auto c2 = rest.find(':');
        spec.params = {parse_int(rest.substr(0, c2), text)};
        if (c2 != std::string_view::npos) spec.edges = parse_edges(rest.substr(c2 + 1), text);
    } else {
        auto it = int_families().find(spec.name);
        if (it == int_families().end()) throw InvalidInput("unknown family '" + spec.name + "'");
        spec.params = parse_ints(rest, text);
        const int np = static_cast<int>(spec.params.size());
        require(np >= it->second.min_params && np <= it->second.max_params,
                "wrong number of parameters for family '" + spec.name + "'");
        if (spec.name == "bipartite") spec.name = "complete_multipartite";
    }
    build_family(spec);  // validates parameters
    return spec;
}

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, es);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, es);
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edge_list(n, es);
}

Graph edgeless_graph(int n) {
    require(n >= 1, "edgeless graph needs n >= 1");
    return Graph(n);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "multipartite graph needs at least one part");
    for (int m : parts) require(m >= 1, "multipartite part sizes must be >= 1");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) es.emplace_back(i, j);
    return Graph::from_edge_list(n, es);
}

Graph star_graph(int m) {
    require(m >= 1, "star needs m >= 1");
    return complete_multipartite({1, m});
}

Graph prism_graph(int n) {
    require(n >= 1, "prism needs n >= 1");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i) + "+");
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i) + "-");
    return cartesian(complete_graph(n), complete_graph(2)).with_labels(labels);
}

Graph squared_cycle(int n) {
    require(n >= 3, "squared cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        if ((i + 1) % n != i) es.emplace_back(i, (i + 1) % n);
        if ((i + 2) % n != i) es.emplace_back(i, (i + 2) % n);
    }
    return Graph::from_edge_list(n, es);
}

Graph kneser_graph(int m, int r) {
    require(r >= 1 && m >= r, "kneser needs m >= r >= 1");
    require(m <= 20, "kneser graph too large");
    std::vector<VertexSet> verts;
    for_each_ksubset(m, r, [&](const VertexSet& s) { verts.push_back(s); });
    std::sort(verts.begin(), verts.end(), lex_less);
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        labels.push_back(verts[i].str(1));
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!verts[i].intersects(verts[j])) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return Graph::from_edge_list(static_cast<int>(verts.size()), es).with_labels(labels);
}

Graph threshold_graph(const std::string& bits) {
    const int n = static_cast<int>(bits.size()) + 1;
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) {
        if (bits[v - 1] == '1') {
            for (int u = 0; u < v; ++u) es.emplace_back(u, v);
        } else {
            require(bits[v - 1] == '0', "threshold expects a string of 0/1 characters");
        }
    }
    return Graph::from_edge_list(n, es);
}

Graph kayak_graph(int k) {
    require(k >= 4, "kayak needs k >= 4");
    const int m = k / 2;
    const bool even = k % 2 == 0;
    const int numbered = even ? 2 * m : 2 * m + 2;
    const int a = numbered, b = numbered + 1;
    const int n = k + 2;
    std::vector<Edge> es;
    auto clique = [&](std::vector<int> vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) es.emplace_back(vs[i], vs[j]);
    };
    const int blocks = even ? m - 1 : m;
    for (int i = 1; i <= blocks; ++i) clique({2 * i - 2, 2 * i - 1, 2 * i, 2 * i + 1});
    clique({a, 0, 1});
    if (even) clique({b, 2 * m - 2, 2 * m - 1});
    std::vector<std::string> labels;
    for (int i = 1; i <= numbered; ++i) labels.push_back(std::to_string(i));
    labels.push_back("a");
    if (even) labels.push_back("b");
    return Graph::from_edge_list(n, es).with_labels(labels);
}

Graph petersen_graph() { return kneser_graph(5, 2); }

Graph balloon_graph(int n1, int n2) {
    require(n1 >= 3 && n2 >= 1, "balloon needs n1 >= 3 and n2 >= 1");
    return wedge(cycle_graph(n1), path_graph(n2), 0, 0);
}

Graph figure_eight_graph(int n1, int n2) {
    require(n1 >= 3 && n2 >= 3, "figure_eight needs both cycles of length >= 3");
    return wedge(cycle_graph(n1), cycle_graph(n2), 0, 0);
}

Graph build_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    const std::string& f = spec.name;
    if (f == "path") return path_graph(p.at(0));
    if (f == "cycle") return cycle_graph(p.at(0));
    if (f == "complete") return complete_graph(p.at(0));
    if (f == "edgeless") return edgeless_graph(p.at(0));
    if (f == "complete_multipartite" || f == "bipartite") return complete_multipartite(p);
    if (f == "star") return star_graph(p.at(0));
    if (f == "prism") return prism_graph(p.at(0));
    if (f == "squared_cycle") return squared_cycle(p.at(0));
    if (f == "kneser") return kneser_graph(p.at(0), p.at(1));
    if (f == "kayak") return kayak_graph(p.at(0));
    if (f == "petersen") return petersen_graph();
    if (f == "balloon") return balloon_graph(p.at(0), p.at(1));
    if (f == "figure_eight") return figure_eight_graph(p.at(0), p.at(1));
    if (f == "threshold") return threshold_graph(spec.bits);
    if (f == "tree" || f == "forest") {
        int n = 0;
        for (auto [u, v] : spec.edges) n = std::max({n, u + 1, v + 1});
        if (f == "forest") {
            require(p.at(0) >= n && p.at(0) >= 1, "forest vertex count too small for its edges");
            n = p.at(0);
        }
        if (f == "tree" && spec.edges.empty()) n = 1;
        Graph g = Graph::from_edge_list(n, spec.edges);
        require(is_forest(g), f + " edges contain a cycle");
        if (f == "tree") require(is_connected(g), "tree edges do not connect all vertices");
        return g;
    }
    throw InvalidInput("unknown family '" + f + "'");
}

}  // namespace cutcx
