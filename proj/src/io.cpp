#include "cutcx/io.hpp"

#include <limits>

#include "cutcx/error.hpp"

namespace cutcx {

namespace {

Json integer_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

}  // namespace

Json face_json(const Face& f) {
    Json a = Json::array();
    f.for_each([&](int v) { a.push_back(v); });
    return a;
}

Face face_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("face must be a JSON array of vertex indices");
    Face f;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000)
            throw InvalidInput("face entries must be non-negative integers");
        const int x = v.get<int>();
        if (f.test(x)) throw InvalidInput("face lists vertex " + std::to_string(x) + " twice");
        f.set(x);
    }
    return f;
}

Json complex_json(const SimplicialComplex& c) {
    if (c.is_void()) return Json{{"state", "void"}};
    Json facets = Json::array();
    for (const auto& f : c.facets()) facets.push_back(face_json(f));
    return Json{{"facets", facets}, {"ambient", c.ambient()}};
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("complex JSON must be an object");
    int ambient = -1;
    if (j.contains("ambient")) {
        if (!j["ambient"].is_number_integer() || j["ambient"].get<long long>() < 0)
            throw InvalidInput("ambient must be a non-negative integer");
        ambient = j["ambient"].get<int>();
    }
    if (j.contains("state")) {
        if (j["state"] != "void") throw InvalidInput("unknown complex state");
        if (j.contains("facets")) throw InvalidInput("void complex cannot list facets");
        return SimplicialComplex::void_complex(std::max(ambient, 0));
    }
    if (!j.contains("facets") || !j["facets"].is_array()) throw InvalidInput("complex JSON needs a facets array");
    std::vector<Face> faces;
    for (const auto& f : j["facets"]) faces.push_back(face_from_json(f));
    if (faces.empty()) throw InvalidInput("an empty facet list is written as {\"state\":\"void\"}");
    return SimplicialComplex::from_facets(std::move(faces), ambient);
}

Json homology_json(const HomologyReport& h) {
    Json a = Json::array();
    for (const auto& g : h.groups) {
        Json t = Json::array();
        for (const auto& x : g.torsion) t.push_back(integer_json(x));
        a.push_back(Json{{"dim", g.dim}, {"rank", g.rank}, {"torsion", t}});
    }
    return a;
}

Json certificate_json(const ShellingCertificate& c) {
    Json order = Json::array();
    for (const auto& f : c.order) order.push_back(face_json(f));
    Json j{{"verdict", to_string(c.verdict)}, {"order", order}, {"nodes", c.nodes}};
    if (c.void_complex) j["void"] = true;
    return j;
}

Json matching_json(const MorseMatching& m, const MorseCensus& census) {
    Json pairs = Json::array();
    for (const auto& p : m.pairs) pairs.push_back(Json{face_json(p.lower), face_json(p.upper)});
    Json by_dim = Json::object();
    for (const auto& [d, n] : census.critical_by_dim) by_dim[std::to_string(d)] = n;
    Json critical = Json::array();
    for (const auto& f : m.critical) critical.push_back(face_json(f));
    return Json{{"pairs", pairs},
                {"critical", critical},
                {"critical_by_dim", by_dim},
                {"acyclic", census.acyclic}};
}

Json prediction_json(const BettiPrediction& p) {
    Json j{{"status", to_string(p.status)}, {"rule", p.rule}};
    if (p.status == BettiStatus::Wedge) {
        j["dim"] = p.dim;
        j["count"] = p.count;
    }
    return j;
}

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json{u, v});
    Json j{{"n", g.order()}, {"edges", edges}};
    if (g.has_labels()) {
        Json labels = Json::array();
        for (int v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
        j["labels"] = labels;
    }
    return j;
}

}  // namespace cutcx
