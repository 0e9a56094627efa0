#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutcx/cut.hpp"
#include "cutcx/error.hpp"
#include "cutcx/family.hpp"
#include "cutcx/homology.hpp"
#include "oracles.hpp"

using namespace cutcx;

namespace {

std::vector<Face> faces1(std::initializer_list<std::initializer_list<int>> fs) {
    std::vector<Face> out;
    for (auto f : fs) {
        Face x;
        for (int v : f) x.set(v - 1);
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph one_based(int n, std::vector<Edge> e) {
    for (auto& [u, v] : e) --u, --v;
    return Graph::from_edge_list(n, e);
}

std::vector<Graph> small_corpus() {
    std::vector<Graph> gs;
    for (const char* f : {"cycle:5", "cycle:6", "path:5", "prism:3", "complete_multipartite:2,3", "kayak:4",
                          "threshold:0110", "squared_cycle:7", "star:4", "edgeless:4", "complete:4"})
        gs.push_back(family(f));
    std::mt19937 rng(2024);
    for (int t = 0; t < 30; ++t) gs.push_back(oracle::random_graph(rng, 4 + static_cast<int>(rng() % 4), 1, 2));
    return gs;
}

}  // namespace

TEST_CASE("disconnected k-sets") {
    CHECK(disconnected_ksets(cycle_graph(5), 1).empty());
    for (int k = 1; k <= 5; ++k) CHECK(disconnected_ksets(complete_graph(5), k).empty());
    CHECK(disconnected_ksets(cycle_graph(5), 2) == faces1({{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}));
}

TEST_CASE("small hand-checked cut complexes") {
    const Graph chordal5 = one_based(5, {{1, 3}, {1, 2}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
    CHECK(cut_complex(chordal5, 2).facets() == faces1({{2, 3, 4}, {1, 4, 5}, {1, 2, 4}}));
    CHECK(cut_complex(cycle_graph(5), 2).facets() == faces1({{2, 4, 5}, {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}}));
    CHECK(cut_complex(edgeless_graph(3), 3).is_empty_complex());
    CHECK(cut_complex(family("forest:5:0-1,2-3"), 5).is_empty_complex());
    CHECK(cut_complex(cycle_graph(5), 5).is_void());
    CHECK(cut_complex(cycle_graph(5), 1).is_void());
    CHECK(cut_complex(complete_graph(4), 2).is_void());
    CHECK(cut_complex(cycle_graph(5), 2).ambient() == 5);
}

TEST_CASE("cut complexes agree with brute force") {
    for (const auto& g : small_corpus())
        for (int k = 2; k <= g.order(); ++k) {
            const auto c = cut_complex(g, k);
            const auto ref = oracle::cut_facets(g, k);
            if (ref.empty()) {
                CHECK(c.is_void());
                continue;
            }
            CHECK(oracle::to_sets(c.facets()) == ref);
            CHECK(c.dim() == g.order() - k - 1);
        }
}

TEST_CASE("nesting of consecutive cut complexes") {
    for (const auto& g : small_corpus())
        for (int k = 2; k < g.order(); ++k) {
            const auto big = cut_complex(g, k), small = cut_complex(g, k + 1);
            for (const auto& f : small.faces()) CHECK(big.contains(f));
        }
}

TEST_CASE("link of a face is the cut complex of the deleted graph") {
    for (const auto& g : small_corpus())
        for (int k = 2; k < g.order(); ++k) {
            const auto c = cut_complex(g, k);
            if (c.is_void()) continue;
            for (const auto& w : c.faces()) {
                if (w.empty()) continue;
                const auto lk = link(c, w);
                const Graph h = delete_vertices(g, w);
                const auto expect = cut_complex(h, k);
                std::vector<int> back;
                for (int v = 0; v < g.order(); ++v)
                    if (!w.test(v)) back.push_back(v);
                CHECK(relabel(expect, back, g.order()) == lk);
            }
            // a non-face gives the void complex
            const Face all = g.vertices();
            CHECK(link(c, all).is_void());
        }
}

TEST_CASE("join decomposition") {
    const std::vector<Graph> parts{family("path:3"), family("cycle:4"), family("edgeless:3"), family("complete:3"),
                                   family("star:3")};
    for (const auto& a : parts)
        for (const auto& b : parts) {
            const Graph j = graph_join(a, b);
            const int na = a.order();
            for (int k = 2; k <= j.order(); ++k) {
                std::vector<Face> expect;
                const Face va = a.vertices();
                Face vb;
                for (int v = 0; v < b.order(); ++v) vb.set(v + na);
                const auto ca = cut_complex(a, k), cb = cut_complex(b, k);
                for (const auto& f : ca.facets()) expect.push_back(f | vb);
                for (const auto& f : cb.facets()) {
                    Face g = va;
                    f.for_each([&](int v) { g.set(v + na); });
                    expect.push_back(g);
                }
                std::sort(expect.begin(), expect.end());
                const auto got = cut_complex(j, k);
                if (expect.empty()) CHECK(got.is_void());
                else CHECK(got.facets() == expect);
            }
        }
}

TEST_CASE("facets from ridges") {
    CHECK(facets_via_ridges(cut_complex(cycle_graph(6), 2), 2) == cut_complex(cycle_graph(6), 3).facets());
    CHECK(facets_via_ridges(cut_complex(path_graph(5), 2), 2) == cut_complex(path_graph(5), 3).facets());
    const Graph k4e = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(cut_complex(k4e, 3).is_void());
    CHECK(facets_via_ridges(cut_complex(k4e, 2), 2).empty());

    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        const Graph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 5), 1, 3);
        for (int k = 2; k + 1 < g.order(); ++k) {
            const auto c = cut_complex(g, k);
            if (c.is_void()) continue;
            const auto next = cut_complex(g, k + 1);
            CHECK(facets_via_ridges(c, k) == (next.is_void() ? std::vector<Face>{} : next.facets()));
        }
    }
}

TEST_CASE("connected k-set census") {
    CHECK(connected_kset_census(path_graph(6), 3).count == 4);
    CHECK(connected_kset_census(cycle_graph(7), 3).count == 7);
    for (int a = 0; a < 7; ++a) CHECK(connected_kset_census(cycle_graph(7), 3, a).anchored == 3);
    std::mt19937 rng(4);
    for (int t = 0; t < 30; ++t) {
        const Graph g = oracle::random_graph(rng, 6, 1, 2);
        for (int k = 1; k <= 6; ++k) CHECK(connected_kset_census(g, k).count == oracle::connected_count(g, k));
    }
}

TEST_CASE("skeleton condition and the antichain formula") {
    const auto c6 = skeleton_condition_and_euler(cycle_graph(6), 3);
    CHECK(c6.holds);
    REQUIRE(c6.mu);
    CHECK(*c6.mu == 4);

    const auto k33 = skeleton_condition_and_euler(complete_multipartite({3, 3}), 2);
    CHECK(k33.holds);
    CHECK(*k33.mu == 4);

    const auto c4 = skeleton_condition_and_euler(cycle_graph(4), 2);
    CHECK(c4.holds);
    CHECK(*c4.mu == 1);
    CHECK(f_vector_and_euler(cut_complex(cycle_graph(4), 2)).mu == 1);

    CHECK_THROWS_AS(skeleton_condition_and_euler(complete_graph(5), 3), VoidComplex);

    for (const auto& g : small_corpus())
        for (int k = 2; k < g.order(); ++k) {
            const auto c = cut_complex(g, k);
            if (c.is_void()) continue;
            const auto sc = skeleton_condition_and_euler(g, k);
            if (sc.holds) CHECK(*sc.mu == f_vector_and_euler(c).mu);
        }
}

TEST_CASE("universal realization") {
    const auto disc = SimplicialComplex::from_facets(faces1({{1, 2, 5}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}}));
    const auto r = realize_as_cut_complex(disc);
    CHECK(r.graph.order() == 9);
    CHECK(r.k == 6);
    CHECK(is_chordal(r.graph).chordal);
    CHECK(relabel(cut_complex(r.graph, r.k), r.complex_vertex, disc.ambient()) == disc);

    const auto point = SimplicialComplex::from_facets({Face{0}});
    const auto rp = realize_as_cut_complex(point);
    CHECK(rp.k == 2);
    CHECK(rp.graph.order() == 3);
    CHECK(rp.graph.edge_count() == 2);
    CHECK(is_tree(rp.graph));

    CHECK_THROWS_AS(realize_as_cut_complex(SimplicialComplex::from_facets({{0, 1}, {2}})), InvalidInput);
}

TEST_CASE("realization round trip on random pure complexes") {
    std::mt19937 rng(8);
    for (int t = 0; t < 25; ++t) {
        const int n = 4 + static_cast<int>(rng() % 3), d = 1 + static_cast<int>(rng() % 3);
        std::vector<Face> fs;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) {
            Face f;
            while (f.count() < d) f.set(static_cast<int>(rng() % n));
            fs.push_back(f);
        }
        const auto c = SimplicialComplex::from_facets(fs, n);
        const auto r = realize_as_cut_complex(c);
        CHECK(is_chordal(r.graph).chordal);
        std::vector<int> map(r.graph.order(), -1);
        for (std::size_t i = 0; i < r.complex_vertex.size(); ++i) map[i] = r.complex_vertex[i];
        CHECK(relabel(cut_complex(r.graph, r.k), map, c.ambient()) == c);
    }
}

TEST_CASE("predicted Betti numbers") {
    const auto k34 = predicted_betti(parse_family("complete_multipartite:3,4"), 2);
    CHECK(k34.status == BettiStatus::Wedge);
    CHECK(k34.count == 6);
    CHECK(k34.dim == 3);

    const auto pr = predicted_betti(parse_family("prism:4"), 3);
    CHECK(pr.count == 3);
    CHECK(pr.dim == 3);

    const auto p6 = predicted_betti(parse_family("path:6"), 3);
    CHECK(p6.count == 6);
    CHECK(p6.dim == 2);

    CHECK(predicted_betti(parse_family("complete:6"), 3).status == BettiStatus::Void);
    CHECK(predicted_betti(parse_family("cycle:6"), 1).status == BettiStatus::Void);
    CHECK(predicted_betti(parse_family("edgeless:4"), 4).dim == -1);
    CHECK_THROWS_AS(predicted_betti(parse_family("petersen"), 3), NotCovered);
}

TEST_CASE("predicted Betti numbers agree with computed homology") {
    for (const char* f : {"complete_multipartite:2,3", "complete_multipartite:3,3", "complete_multipartite:1,2,3",
                          "edgeless:5", "cycle:6", "cycle:7", "prism:3", "prism:4", "path:6", "star:5",
                          "squared_cycle:8", "kayak:5", "balloon:5,3", "figure_eight:4,4"}) {
        const auto spec = parse_family(f);
        const Graph g = build_family(spec);
        for (int k = 1; k <= g.order() + 1; ++k) {
            BettiPrediction p;
            try {
                p = predicted_betti(spec, k);
            } catch (const NotCovered&) {
                continue;
            }
            INFO(f << " k=" << k);
            const auto c = cut_complex(g, k);
            if (p.status == BettiStatus::Void) {
                CHECK(c.is_void());
                continue;
            }
            REQUIRE_FALSE(c.is_void());
            const auto h = reduced_homology(c);
            CHECK(h.is_free());
            if (p.status == BettiStatus::Wedge) {
                CHECK(h.betti(p.dim) == p.count);
                CHECK(h.total_rank() == p.count);
            } else {
                CHECK(h.total_rank() == 0);
            }
        }
    }
}
