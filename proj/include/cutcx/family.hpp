#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cutcx/graph.hpp"

namespace cutcx {

// Parsed form of a family string such as "cycle:7", "complete_multipartite:2,2,3",
// "kneser:5,2", "threshold:0110", "tree:0-1,1-2,1-3" or "forest:6:0-1,2-3".
struct FamilySpec {
    std::string name;
    std::vector<int> params;
    std::vector<Edge> edges;
    std::string bits;

    std::string str() const;
};

FamilySpec parse_family(std::string_view text);
Graph build_family(const FamilySpec& spec);
inline Graph family(std::string_view text) { return build_family(parse_family(text)); }

// Names accepted by parse_family, for help output.
const std::vector<std::string>& family_names();

// Generators used by build_family.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph star_graph(int m);
Graph prism_graph(int n);
Graph squared_cycle(int n);
Graph kneser_graph(int m, int r);
Graph threshold_graph(const std::string& bits);
Graph kayak_graph(int k);
Graph petersen_graph();
Graph balloon_graph(int n1, int n2);
Graph figure_eight_graph(int n1, int n2);

}  // namespace cutcx
