#include <unordered_map>

#include "cutcx/error.hpp"
#include "cutcx/homology.hpp"

namespace cutcx {

std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplex();
    const auto& levels = c.faces_by_size();
    std::vector<IntegerMatrix> out;
    for (std::size_t s = 1; s < levels.size(); ++s) {
        const auto& lower = levels[s - 1];
        const auto& upper = levels[s];
        std::unordered_map<Face, int> row_of;
        row_of.reserve(lower.size());
        for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], static_cast<int>(i));
        IntegerMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
        for (std::size_t j = 0; j < upper.size(); ++j) {
            int pos = 0;
            upper[j].for_each([&](int v) {
                m(row_of.at(upper[j].without(v)), static_cast<int>(j)) = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            });
        }
        out.push_back(std::move(m));
    }
    return out;
}

HomologyReport reduced_homology(const SimplicialComplex& c) {
    const auto bd = boundary_matrices(c);
    const auto& levels = c.faces_by_size();
    std::vector<SmithForm> snf;
    snf.reserve(bd.size());
    for (const auto& m : bd) snf.push_back(smith_normal_form(m));

    // snf[i] belongs to the map out of dimension i (faces of size i + 1).
    HomologyReport r;
    for (std::size_t s = 0; s < levels.size(); ++s) {
        HomologyGroup g;
        g.dim = static_cast<int>(s) - 1;
        const std::int64_t out_rank = s >= 1 ? snf[s - 1].rank : 0;
        const std::int64_t in_rank = s < snf.size() ? snf[s].rank : 0;
        g.rank = static_cast<std::int64_t>(levels[s].size()) - out_rank - in_rank;
        if (s < snf.size())
            for (const auto& d : snf[s].diagonal)
                if (d > 1) g.torsion.push_back(d);
        r.groups.push_back(std::move(g));
    }
    return r;
}

std::int64_t HomologyReport::betti(int d) const {
    for (const auto& g : groups)
        if (g.dim == d) return g.rank;
    return 0;
}

bool HomologyReport::is_free() const {
    for (const auto& g : groups)
        if (!g.torsion.empty()) return false;
    return true;
}

std::int64_t HomologyReport::euler() const {
    std::int64_t e = 0;
    for (const auto& g : groups) e += (g.dim % 2 == 0) ? g.rank : -g.rank;
    return e;
}

std::int64_t HomologyReport::total_rank() const {
    std::int64_t t = 0;
    for (const auto& g : groups) t += g.rank;
    return t;
}

std::vector<int> HomologyReport::support() const {
    std::vector<int> out;
    for (const auto& g : groups)
        if (g.rank != 0 || !g.torsion.empty()) out.push_back(g.dim);
    return out;
}

}  // namespace cutcx
