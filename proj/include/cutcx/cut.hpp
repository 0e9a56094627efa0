#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutcx/complex.hpp"
#include "cutcx/family.hpp"
#include "cutcx/graph.hpp"

namespace cutcx {

// k-subsets S with G[S] disconnected, in increasing bitmask order. Empty for k = 1.
std::vector<VertexSet> disconnected_ksets(const Graph& g, int k);

SimplicialComplex cut_complex(const Graph& g, int k);

struct ConnectedSetCensus {
    int k = 0;
    std::int64_t count = 0;
    std::optional<int> anchor;
    std::int64_t anchored = 0;
};
ConnectedSetCensus connected_kset_census(const Graph& g, int k, std::optional<int> anchor = std::nullopt);

// Ridges of a k-cut complex lying in at least k facets, sorted by bitmask.
std::vector<Face> facets_via_ridges(const SimplicialComplex& delta_k, int k);

// True when G has no cycle of length <= max_len.
bool no_short_cycles(const Graph& g, int max_len);

struct SkeletonCondition {
    bool holds = false;
    bool by_girth = false;
    std::optional<std::int64_t> mu;
};
SkeletonCondition skeleton_condition_and_euler(const Graph& g, int k);

struct Realization {
    Graph graph;
    int k = 0;
    // complex_vertex[i] is the vertex of the input complex represented by graph vertex i (i < n).
    std::vector<int> complex_vertex;
};
Realization realize_as_cut_complex(const SimplicialComplex& c);

enum class BettiStatus { Wedge, Contractible, Void, Point };

struct BettiPrediction {
    BettiStatus status = BettiStatus::Void;
    int dim = 0;
    std::int64_t count = 0;
    std::string rule;
};
BettiPrediction predicted_betti(const FamilySpec& spec, int k);

// Shellability claim for the family at k, or nullopt when no result applies.
std::optional<bool> predicted_shellable(const FamilySpec& spec, int k);

std::string to_string(BettiStatus s);

}  // namespace cutcx
