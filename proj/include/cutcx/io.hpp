#pragma once

#include <json.hpp>

#include "cutcx/complex.hpp"
#include "cutcx/cut.hpp"
#include "cutcx/graph.hpp"
#include "cutcx/homology.hpp"
#include "cutcx/morse.hpp"
#include "cutcx/shelling.hpp"

namespace cutcx {

using Json = nlohmann::ordered_json;

Json face_json(const Face& f);
Face face_from_json(const Json& j);

// {"state":"void"} or {"facets":[[...],...],"ambient":n}
Json complex_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

Json homology_json(const HomologyReport& h);
Json certificate_json(const ShellingCertificate& c);
Json matching_json(const MorseMatching& m, const MorseCensus& census);
Json prediction_json(const BettiPrediction& p);
Json graph_json(const Graph& g);

}  // namespace cutcx
