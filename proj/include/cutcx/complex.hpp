#pragma once

#include <climits>
#include <cstdint>
#include <memory>
#include <vector>

#include "cutcx/vertex_set.hpp"

namespace cutcx {

inline constexpr int kVoidDim = INT_MIN;

class SimplicialComplex {
public:
    // The void complex (no faces at all).
    SimplicialComplex() = default;

    // Maximal faces of the given list; [] gives Void and [{}] gives {∅}.
    // ambient < 0 means one past the largest vertex used.
    static SimplicialComplex from_facets(std::vector<Face> faces, int ambient = -1);
    static SimplicialComplex void_complex(int ambient = 0);
    static SimplicialComplex simplex(const Face& f, int ambient = -1);

    bool is_void() const { return void_; }
    bool is_empty_complex() const { return !void_ && facets_.size() == 1 && facets_[0].empty(); }
    int ambient() const { return ambient_; }
    int dim() const { return dim_; }
    bool is_pure() const;

    // Facets in increasing bitmask order.
    const std::vector<Face>& facets() const& { return facets_; }
    std::vector<Face> facets() && { return std::move(facets_); }
    VertexSet vertex_set() const;
    bool contains(const Face& f) const;

    // faces_by_size()[s] lists the faces with s vertices, sorted by bitmask.
    const std::vector<std::vector<Face>>& faces_by_size() const;
    std::vector<Face> faces() const;
    std::int64_t face_count() const;

    bool operator==(const SimplicialComplex& o) const {
        return void_ == o.void_ && facets_ == o.facets_;
    }

private:
    struct FaceCache;
    bool void_ = true;
    int ambient_ = 0;
    int dim_ = kVoidDim;
    std::vector<Face> facets_;
    std::shared_ptr<FaceCache> cache_;
};

struct FVector {
    // f[0] = f_{-1} = 1, f[i + 1] = f_i.
    std::vector<std::int64_t> f;
    std::int64_t mu = 0;
};
FVector f_vector_and_euler(const SimplicialComplex& c);

enum class LocalOp { Link, Star, Deletion };
SimplicialComplex local(LocalOp op, const SimplicialComplex& c, const Face& sigma);
inline SimplicialComplex link(const SimplicialComplex& c, const Face& s) { return local(LocalOp::Link, c, s); }
inline SimplicialComplex star(const SimplicialComplex& c, const Face& s) { return local(LocalOp::Star, c, s); }
inline SimplicialComplex deletion(const SimplicialComplex& c, const Face& s) { return local(LocalOp::Deletion, c, s); }

SimplicialComplex skeleton(const SimplicialComplex& c, int d);
// Vertices of b are shifted by a.ambient().
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& c);
SimplicialComplex suspension(const SimplicialComplex& c);
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& map, int ambient);

struct ComplexProperties {
    bool pure = true;
    int dim = kVoidDim;
    int complete_skeleton = kVoidDim;
};
ComplexProperties properties(const SimplicialComplex& c);

}  // namespace cutcx
