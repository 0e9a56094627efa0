#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutcx/cut.hpp"
#include "cutcx/family.hpp"
#include "cutcx/homology.hpp"
#include "oracles.hpp"

using namespace cutcx;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
    IntegerMatrix m(r, c);
    std::uniform_int_distribution<int> d(lo, hi);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

std::vector<std::vector<std::int64_t>> rows_of(const IntegerMatrix& m) {
    std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

SimplicialComplex rp2() {
    std::vector<Face> fs;
    for (auto t : std::vector<std::array<int, 3>>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                                  {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}})
        fs.push_back({t[0] - 1, t[1] - 1, t[2] - 1});
    return SimplicialComplex::from_facets(fs);
}

}  // namespace

TEST_CASE("Smith normal form small cases") {
    IntegerMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = 1;
    auto s = smith_normal_form(id);
    CHECK(s.rank == 3);
    CHECK(s.diagonal == std::vector<BigInt>{1, 1, 1});

    s = smith_normal_form(IntegerMatrix(3, 4));
    CHECK(s.rank == 0);
    CHECK(s.diagonal.empty());

    s = smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}});
    CHECK(s.diagonal == std::vector<BigInt>{2, 4});
}

TEST_CASE("2x2 invariant factors match gcd and determinant") {
    std::mt19937 rng(1);
    for (int t = 0; t < 500; ++t) {
        const auto m = random_matrix(rng, 2, 2, -30, 30);
        const std::int64_t det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        const std::int64_t g = oracle::gcd_all({m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
        const auto s = smith_normal_form(m);
        if (g == 0) {
            CHECK(s.rank == 0);
        } else if (det == 0) {
            CHECK(s.rank == 1);
            CHECK(s.diagonal[0] == g);
        } else {
            REQUIRE(s.rank == 2);
            CHECK(s.diagonal[0] == g);
            CHECK(s.diagonal[1] == (det < 0 ? -det : det) / g);
        }
    }
}

TEST_CASE("rank matches GF(p) elimination and factors divide") {
    std::mt19937 rng(2);
    for (int t = 0; t < 200; ++t) {
        const int r = 1 + static_cast<int>(rng() % 7), c = 1 + static_cast<int>(rng() % 7);
        const auto m = random_matrix(rng, r, c, -3, 3);
        const auto s = smith_normal_form(m);
        CHECK(s.rank == oracle::rank_mod_p(rows_of(m), 1'000'000'007));
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        for (const auto& d : s.diagonal) CHECK(d > 0);
    }
}

TEST_CASE("invariant factors do not depend on row and column order") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        const int r = 2 + static_cast<int>(rng() % 5), c = 2 + static_cast<int>(rng() % 5);
        const auto m = random_matrix(rng, r, c, -6, 6);
        std::vector<int> pr(r), pc(c);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        IntegerMatrix q(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) q(i, j) = m(pr[i], pc[j]);
        CHECK(smith_normal_form(m).diagonal == smith_normal_form(q).diagonal);
        CHECK(smith_normal_form(m).diagonal == smith_normal_form_exact(m).diagonal);
    }
}

TEST_CASE("overflow escalates to exact arithmetic") {
    const std::int64_t big = std::int64_t{1} << 40;
    IntegerMatrix m{{big, big + 1, 3}, {big - 1, big, 5}, {7, big + 3, big}};
    const auto s = smith_normal_form(m);
    const auto e = smith_normal_form_exact(m);
    CHECK(s.diagonal == e.diagonal);
    CHECK(s.escalated);
    CHECK(s.rank == 3);
}

TEST_CASE("boundary matrices") {
    const auto bm0 = boundary_matrices(SimplicialComplex::from_facets({Face{}}));
    CHECK(bm0.empty());

    const auto tri = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    const auto bm = boundary_matrices(tri);
    REQUIRE(bm.size() == 2);
    CHECK(bm[0].rows() == 1);
    CHECK(bm[0].cols() == 3);
    CHECK(bm[1].rows() == 3);
    CHECK(bm[1].cols() == 3);
    CHECK((bm[0] * bm[1]).is_zero());
    for (int c = 0; c < 3; ++c) {
        std::int64_t sum = 0;
        for (int r = 0; r < 3; ++r) sum += bm[1](r, c);
        CHECK(sum == 0);
    }

    const auto m5 = boundary_matrices(cut_complex(cycle_graph(5), 2));
    REQUIRE(m5.size() == 3);
    CHECK(m5[2].rows() == 10);
    CHECK(m5[2].cols() == 5);
}

TEST_CASE("boundary of boundary vanishes") {
    for (const char* f : {"cycle:7", "prism:3", "complete_multipartite:2,2,2", "squared_cycle:8", "path:6"}) {
        const Graph g = family(f);
        for (int k = 2; k < g.order(); ++k) {
            const auto c = cut_complex(g, k);
            if (c.is_void()) continue;
            const auto bm = boundary_matrices(c);
            for (std::size_t i = 0; i + 1 < bm.size(); ++i) CHECK((bm[i] * bm[i + 1]).is_zero());
        }
    }
}

TEST_CASE("reduced homology of small complexes") {
    const auto m = reduced_homology(cut_complex(cycle_graph(5), 2));
    CHECK(m.is_free());
    CHECK(m.support() == std::vector<int>{1});
    CHECK(m.betti(1) == 1);

    const auto s2 = reduced_homology(skeleton(SimplicialComplex::simplex({0, 1, 2, 3}), 2));
    CHECK(s2.betti(2) == 1);
    const std::vector<Face> tet{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    const auto sphere = reduced_homology(SimplicialComplex::from_facets(tet));
    CHECK(sphere.betti(2) == 1);
    CHECK(sphere.total_rank() == 1);

    const auto e = reduced_homology(SimplicialComplex::from_facets({Face{}}));
    CHECK(e.betti(-1) == 1);
    CHECK(e.euler() == -1);

    const auto p = reduced_homology(SimplicialComplex::from_facets({Face{4}}));
    CHECK(p.total_rank() == 0);
}

TEST_CASE("projective plane torsion") {
    const auto h = reduced_homology(rp2());
    CHECK(h.total_rank() == 0);
    REQUIRE(h.support() == std::vector<int>{1});
    CHECK(h.groups[2].torsion == std::vector<BigInt>{2});
    const auto mod2 = oracle::betti_mod_p(oracle::to_sets(rp2().facets()), 2);
    CHECK(mod2[2] == 1);
    CHECK(mod2[3] == 1);
}

TEST_CASE("Betti numbers agree with GF(p) ranks and Euler characteristic") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        const Graph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 3), 1, 2);
        for (int k = 2; k < g.order(); ++k) {
            const auto c = cut_complex(g, k);
            if (c.is_void()) continue;
            const auto h = reduced_homology(c);
            const auto ref = oracle::betti_mod_p(oracle::to_sets(c.facets()), 1'000'000'007);
            for (int d = -1; d <= c.dim(); ++d) CHECK(h.betti(d) == ref[d + 1]);
            CHECK(h.euler() == f_vector_and_euler(c).mu);
        }
    }
}

TEST_CASE("suspension shifts homology and join convolves it") {
    std::mt19937 rng(6);
    std::vector<SimplicialComplex> pool;
    for (const char* f : {"cycle:5", "cycle:4", "path:4", "complete_multipartite:2,2,2", "prism:3"}) {
        const Graph g = family(f);
        for (int k = 2; k < g.order(); ++k)
            if (auto c = cut_complex(g, k); !c.is_void() && c.face_count() < 60) pool.push_back(c);
    }
    for (const auto& c : pool) {
        const auto h = reduced_homology(c);
        const auto hs = reduced_homology(suspension(c));
        for (int r = 0; r <= c.dim() + 1; ++r) CHECK(hs.betti(r) == h.betti(r - 1));
    }
    for (int t = 0; t < 12; ++t) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        const auto ha = reduced_homology(a), hb = reduced_homology(b);
        if (!ha.is_free() || !hb.is_free()) continue;
        const auto j = join(a, b);
        if (j.face_count() > 3000) continue;
        const auto hj = reduced_homology(j);
        for (int r = -1; r <= j.dim(); ++r) {
            std::int64_t expect = 0;
            for (int p = -1; p <= a.dim(); ++p) expect += ha.betti(p) * hb.betti(r - 1 - p);
            CHECK(hj.betti(r) == expect);
        }
    }
}
