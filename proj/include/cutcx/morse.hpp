#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cutcx/complex.hpp"
#include "cutcx/graph.hpp"

namespace cutcx {

struct MorsePair {
    Face lower;
    Face upper;
    int vertex = -1;
};

struct MorseMatching {
    SimplicialComplex complex;
    std::vector<MorsePair> pairs;
    // Unmatched faces in increasing bitmask order (the empty face included when unmatched).
    std::vector<Face> critical;
};

MorseMatching element_matching_sequence(const SimplicialComplex& c, const std::vector<int>& vertex_order);

// Builds a matching from explicit pairs; critical cells are the faces of c left uncovered.
MorseMatching matching_from_pairs(const SimplicialComplex& c, std::vector<MorsePair> pairs);

struct MorseCensus {
    bool acyclic = false;
    // Dimension (-1 for the empty face) -> number of critical faces.
    std::map<int, std::int64_t> critical_by_dim;

    std::int64_t total() const;
    std::int64_t euler() const;
};
MorseCensus verify_acyclic_and_critical(const MorseMatching& m);

std::vector<int> tree_matching_order(const Graph& tree, int root);
MorseMatching restricted_matching(const Graph& g);
std::vector<int> prism_matching_order(int n, int k);

}  // namespace cutcx
