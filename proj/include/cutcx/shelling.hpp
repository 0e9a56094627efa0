#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cutcx/complex.hpp"

namespace cutcx {

struct ShellingCheck {
    bool ok = false;
    // Positions (i, j), i < j, of the first pair violating the criterion.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};
ShellingCheck verify_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order);

enum class Verdict { Shellable, NotShellable, Unknown };

struct ShellingCertificate {
    Verdict verdict = Verdict::Unknown;
    std::vector<Face> order;
    std::uint64_t nodes = 0;
    bool void_complex = false;
};

struct ShellingOptions {
    std::uint64_t budget = 10'000'000;
    // Vertex permutations (image of each ambient vertex) used for symmetry reduction
    // of the first facet; ignored unless every one preserves the facet set.
    std::vector<std::vector<int>> automorphisms;
};

ShellingCertificate find_shelling(const SimplicialComplex& c, const ShellingOptions& opts = {});

// h-vector h_0 .. h_{d+1} of a pure complex.
std::vector<std::int64_t> h_vector(const SimplicialComplex& c);

// Facets of the k-cut complex of the n-cycle, as increasing vertex sequences in lexicographic order.
std::vector<Face> cycle_lex_order(int n, int k);

const char* to_string(Verdict v);

}  // namespace cutcx
