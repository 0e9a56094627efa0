#include "cutcx/complex.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "cutcx/error.hpp"

namespace cutcx {

struct SimplicialComplex::FaceCache {
    std::once_flag once;
    std::vector<std::vector<Face>> by_size;
};

SimplicialComplex SimplicialComplex::void_complex(int ambient) {
    SimplicialComplex c;
    c.ambient_ = std::max(ambient, 0);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces, int ambient) {
    int top = 0;
    for (const auto& f : faces)
        if (!f.empty()) top = std::max(top, f.max() + 1);
    if (ambient >= 0 && ambient < top) throw InvalidInput("face vertex outside the ambient vertex range");
    if (faces.empty()) return void_complex(ambient < 0 ? 0 : ambient);

    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (auto& f : faces) {
        bool maximal = true;
        for (const auto& g : kept)
            if (f.is_subset_of(g)) {
                maximal = false;
                break;
            }
        if (maximal) kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());

    SimplicialComplex c;
    c.void_ = false;
    c.ambient_ = ambient < 0 ? top : ambient;
    c.dim_ = -1;
    for (const auto& f : kept) c.dim_ = std::max(c.dim_, f.count() - 1);
    c.facets_ = std::move(kept);
    c.cache_ = std::make_shared<FaceCache>();
    return c;
}

SimplicialComplex SimplicialComplex::simplex(const Face& f, int ambient) {
    return from_facets({f}, ambient);
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.count() - 1 != dim_) return false;
    return true;
}

VertexSet SimplicialComplex::vertex_set() const {
    VertexSet v;
    for (const auto& f : facets_) v |= f;
    return v;
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const auto& g : facets_)
        if (f.is_subset_of(g)) return true;
    return false;
}

const std::vector<std::vector<Face>>& SimplicialComplex::faces_by_size() const {
    static const std::vector<std::vector<Face>> none;
    if (void_) return none;
    std::call_once(cache_->once, [this] {
        std::unordered_set<Face> all;
        for (const auto& f : facets_) for_each_subset(f, [&](const Face& s) { all.insert(s); });
        std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(dim_ + 2));
        for (const auto& s : all) by_size[s.count()].push_back(s);
        for (auto& v : by_size) std::sort(v.begin(), v.end());
        cache_->by_size = std::move(by_size);
    });
    return cache_->by_size;
}

std::vector<Face> SimplicialComplex::faces() const {
    std::vector<Face> out;
    for (const auto& level : faces_by_size()) out.insert(out.end(), level.begin(), level.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t SimplicialComplex::face_count() const {
    std::int64_t n = 0;
    for (const auto& level : faces_by_size()) n += static_cast<std::int64_t>(level.size());
    return n;
}

FVector f_vector_and_euler(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplex();
    FVector out;
    const auto& levels = c.faces_by_size();
    for (std::size_t s = 0; s < levels.size(); ++s) {
        const auto fs = static_cast<std::int64_t>(levels[s].size());
        out.f.push_back(fs);
        out.mu += (s % 2 == 1) ? fs : -fs;
    }
    return out;
}

SimplicialComplex local(LocalOp op, const SimplicialComplex& c, const Face& sigma) {
    const int amb = c.ambient();
    if (c.is_void()) return SimplicialComplex::void_complex(amb);
    std::vector<Face> out;
    switch (op) {
    case LocalOp::Link:
    case LocalOp::Star:
        if (!c.contains(sigma)) return SimplicialComplex::void_complex(amb);
        for (const auto& f : c.facets())
            if (sigma.is_subset_of(f)) out.push_back(op == LocalOp::Link ? f - sigma : f);
        break;
    case LocalOp::Deletion:
        if (sigma.empty()) return SimplicialComplex::void_complex(amb);
        if (!c.contains(sigma)) return c;
        for (const auto& f : c.facets()) {
            if (!sigma.is_subset_of(f)) {
                out.push_back(f);
            } else {
                sigma.for_each([&](int v) { out.push_back(f.without(v)); });
            }
        }
        break;
    }
    return SimplicialComplex::from_facets(std::move(out), amb);
}

SimplicialComplex skeleton(const SimplicialComplex& c, int d) {
    if (d < -1) throw InvalidInput("skeleton dimension must be >= -1");
    if (c.is_void()) return c;
    std::vector<Face> out;
    for (const auto& f : c.facets()) {
        if (f.count() <= d + 1) {
            out.push_back(f);
            continue;
        }
        const auto mem = f.members();
        for_each_ksubset(static_cast<int>(mem.size()), d + 1, [&](const VertexSet& idx) {
            Face s;
            idx.for_each([&](int i) { s.set(mem[i]); });
            out.push_back(s);
        });
    }
    return SimplicialComplex::from_facets(std::move(out), c.ambient());
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int amb = a.ambient() + b.ambient();
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(amb);
    std::vector<Face> out;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            Face h = f;
            g.for_each([&](int v) { h.set(v + a.ambient()); });
            out.push_back(h);
        }
    return SimplicialComplex::from_facets(std::move(out), amb);
}

SimplicialComplex cone(const SimplicialComplex& c) {
    return join(c, SimplicialComplex::simplex(Face{0}, 1));
}

SimplicialComplex suspension(const SimplicialComplex& c) {
    return join(c, SimplicialComplex::from_facets({Face{0}, Face{1}}, 2));
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& map, int ambient) {
    if (c.is_void()) return SimplicialComplex::void_complex(ambient);
    std::vector<Face> out;
    for (const auto& f : c.facets()) {
        Face g;
        f.for_each([&](int v) { g.set(map.at(v)); });
        out.push_back(g);
    }
    return SimplicialComplex::from_facets(std::move(out), ambient);
}

ComplexProperties properties(const SimplicialComplex& c) {
    ComplexProperties p;
    p.pure = c.is_pure();
    p.dim = c.dim();
    if (c.is_void()) return p;
    const auto& levels = c.faces_by_size();
    p.complete_skeleton = -1;
    for (int d = 0; d <= c.dim(); ++d) {
        if (static_cast<std::int64_t>(levels[d + 1].size()) != binom(c.ambient(), d + 1)) break;
        p.complete_skeleton = d;
    }
    return p;
}

}  // namespace cutcx
