#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cutcx/cut.hpp"
#include "cutcx/error.hpp"
#include "cutcx/family.hpp"
#include "cutcx/homology.hpp"
#include "cutcx/io.hpp"
#include "cutcx/morse.hpp"
#include "cutcx/shelling.hpp"

namespace cutcx::cli {

namespace {

struct GraphInput {
    Graph graph;
    std::optional<FamilySpec> family;
    std::string text;
};

GraphInput load_graph(const std::string& arg) {
    GraphInput in;
    in.text = arg;
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream f(arg);
        if (!f) throw InvalidInput("cannot open graph file " + arg);
        in.graph = read_graph_text(f);
        return in;
    }
    in.family = parse_family(arg);
    in.graph = build_family(*in.family);
    return in;
}

std::string show_face(const Graph& g, const Face& f) {
    std::string s = "{";
    bool first = true;
    f.for_each([&](int v) {
        if (!first) s += ',';
        first = false;
        s += g.label(v);
    });
    return s + "}";
}

std::string show_homology(const HomologyReport& h) {
    std::string s;
    for (const auto& g : h.groups) {
        if (g.rank == 0 && g.torsion.empty()) continue;
        if (!s.empty()) s += ", ";
        s += "H" + std::to_string(g.dim) + "=";
        std::string parts;
        if (g.rank) parts = "Z^" + std::to_string(g.rank);
        for (const auto& t : g.torsion) parts += (parts.empty() ? "" : "+") + std::string("Z/") + t.str();
        s += parts;
    }
    return s.empty() ? "all zero" : s;
}

std::string show_prediction(const BettiPrediction& p) {
    if (p.status == BettiStatus::Wedge)
        return std::to_string(p.count) + " sphere(s) in dim " + std::to_string(p.dim);
    return to_string(p.status);
}

bool prediction_matches(const BettiPrediction& p, const SimplicialComplex& c, const HomologyReport* h) {
    switch (p.status) {
    case BettiStatus::Void: return c.is_void();
    case BettiStatus::Point:
        if (c.is_void() || c.dim() != 0 || c.vertex_set().count() != 1) return false;
        [[fallthrough]];
    case BettiStatus::Contractible: return !c.is_void() && h && h->is_free() && h->total_rank() == 0;
    case BettiStatus::Wedge:
        return !c.is_void() && h && h->is_free() && h->support() == std::vector<int>{p.dim} &&
               h->betti(p.dim) == p.count;
    }
    return false;
}

std::string state_name(const SimplicialComplex& c) {
    if (c.is_void()) return "void";
    if (c.is_empty_complex()) return "empty_face_only";
    return "nonvoid";
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(12) << key << value << '\n';
}

struct Options {
    std::string graph;
    int k = 2;
    bool json = false;
    std::uint64_t budget = 10'000'000;
    std::string order = "tree";
    int root = 1;
    std::string path;
    std::string corpus;
    std::string experiment;
    int n = 0;
};

// Facet count, f-vector, and both Euler characteristic routes.
Json describe_complex(const GraphInput& in, int k, const SimplicialComplex& c, bool& mismatch) {
    const Graph& g = in.graph;
    Json j;
    j["input"] = Json{{"graph", in.text}, {"n", g.order()}, {"edges", g.edge_count()}, {"k", k}};
    j["state"] = state_name(c);
    j["complex"] = complex_json(c);
    j["facet_count"] = c.facets().size();
    j["dim"] = c.is_void() ? Json(nullptr) : Json(c.dim());
    if (c.is_void()) {
        j["f_vector"] = nullptr;
        j["mu"] = Json{{"f_vector", nullptr}, {"antichain", nullptr}, {"condition_holds", nullptr}};
        return j;
    }
    const auto fv = f_vector_and_euler(c);
    j["f_vector"] = fv.f;
    Json mu{{"f_vector", fv.mu}, {"antichain", nullptr}, {"condition_holds", nullptr}};
    if (k >= 2 && k <= g.order() - 1) {
        const auto sc = skeleton_condition_and_euler(g, k);
        mu["condition_holds"] = sc.holds;
        if (sc.mu) {
            mu["antichain"] = *sc.mu;
            if (*sc.mu != fv.mu) mismatch = true;
        }
    }
    j["mu"] = mu;
    return j;
}

void human_complex(std::ostream& out, const GraphInput& in, int k, const SimplicialComplex& c, const Json& j) {
    const Graph& g = in.graph;
    print_row(out, "graph", in.text + " (n=" + std::to_string(g.order()) + ", e=" + std::to_string(g.edge_count()) + ")");
    print_row(out, "k", std::to_string(k));
    if (c.is_void()) {
        print_row(out, "complex", "void");
        return;
    }
    print_row(out, "dim", std::to_string(c.dim()));
    print_row(out, "facets", std::to_string(c.facets().size()));
    std::string fl;
    for (const auto& f : c.facets()) fl += (fl.empty() ? "" : " ") + show_face(g, f);
    print_row(out, "", fl);
    std::string fv = "(";
    for (std::size_t i = 0; i < j["f_vector"].size(); ++i) fv += (i ? ", " : "") + j["f_vector"][i].dump();
    print_row(out, "f-vector", fv + ")");
    std::string mu = j["mu"]["f_vector"].dump() + " (f-vector)";
    if (!j["mu"]["antichain"].is_null()) mu += ", " + j["mu"]["antichain"].dump() + " (antichain formula)";
    else if (!j["mu"]["condition_holds"].is_null()) mu += ", antichain formula n/a (condition fails)";
    print_row(out, "mu", mu);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_build(const Options& o, std::ostream& out) {
    const auto in = load_graph(o.graph);
    const auto c = cut_complex(in.graph, o.k);
    bool mismatch = false;
    Json j = describe_complex(in, o.k, c, mismatch);
    if (o.json) emit(out, j);
    else human_complex(out, in, o.k, c, j);
    return mismatch ? 1 : 0;
}

int cmd_homology(const Options& o, std::ostream& out) {
    const auto in = load_graph(o.graph);
    const auto c = cut_complex(in.graph, o.k);
    bool mismatch = false;
    Json j = describe_complex(in, o.k, c, mismatch);
    std::optional<HomologyReport> h;
    if (!c.is_void()) {
        h = reduced_homology(c);
        j["homology"] = homology_json(*h);
        if (h->euler() != j["mu"]["f_vector"].get<std::int64_t>()) mismatch = true;
    } else {
        j["homology"] = nullptr;
    }
    std::string pred_text = "not covered";
    j["predicted"] = Json{{"status", "not_covered"}};
    j["match"] = nullptr;
    if (in.family) {
        try {
            const auto p = predicted_betti(*in.family, o.k);
            const bool ok = prediction_matches(p, c, h ? &*h : nullptr);
            j["predicted"] = prediction_json(p);
            j["match"] = ok;
            if (!ok) mismatch = true;
            pred_text = show_prediction(p) + " [" + p.rule + "] " + (ok ? "match" : "MISMATCH");
        } catch (const NotCovered&) {
        }
    }
    if (o.json) {
        emit(out, j);
    } else {
        human_complex(out, in, o.k, c, j);
        if (h) print_row(out, "homology", show_homology(*h));
        print_row(out, "predicted", pred_text);
    }
    return mismatch ? 1 : 0;
}

int cmd_shell(const Options& o, std::ostream& out) {
    const auto in = load_graph(o.graph);
    const auto c = cut_complex(in.graph, o.k);
    ShellingOptions so;
    so.budget = o.budget;
    const auto cert = find_shelling(c, so);
    bool mismatch = false;
    if (cert.verdict == Verdict::Shellable && !c.is_void() && !verify_shelling_order(c, cert.order).ok) mismatch = true;
    std::optional<bool> claim;
    if (in.family) claim = predicted_shellable(*in.family, o.k);
    if (claim && cert.verdict != Verdict::Unknown && *claim != (cert.verdict == Verdict::Shellable)) mismatch = true;

    if (o.json) {
        Json j{{"input", Json{{"graph", in.text}, {"n", in.graph.order()}, {"k", o.k}}},
               {"facet_count", c.facets().size()},
               {"shelling", certificate_json(cert)},
               {"predicted_shellable", claim ? Json(*claim) : Json(nullptr)}};
        emit(out, j);
    } else {
        print_row(out, "graph", in.text);
        print_row(out, "k", std::to_string(o.k));
        print_row(out, "facets", std::to_string(c.facets().size()));
        std::string v = c.is_void() ? "Shellable (void complex)" : cert.verdict == Verdict::Shellable ? "Shellable"
                                                              : cert.verdict == Verdict::NotShellable ? "NotShellable"
                                                                                                      : "Unknown (budget exceeded)";
        print_row(out, "verdict", v);
        print_row(out, "nodes", std::to_string(cert.nodes));
        if (!cert.order.empty() && !c.is_void()) {
            std::string s;
            for (const auto& f : cert.order) s += (s.empty() ? "" : " ") + show_face(in.graph, f);
            print_row(out, "order", s);
        }
        if (claim) print_row(out, "predicted", *claim ? "shellable" : "not shellable");
    }
    return mismatch ? 1 : 0;
}

std::vector<int> parse_order(const std::string& text, const GraphInput& in, int k) {
    if (text == "tree") return {};
    if (text == "prism") {
        if (!in.family || in.family->name != "prism") throw InvalidInput("--order prism needs a prism:n graph");
        return prism_matching_order(in.family->params.at(0), k);
    }
    std::vector<int> order;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw InvalidInput("");
        } catch (...) {
            throw InvalidInput("--order expects tree, prism, restricted, or a comma list of 1-based vertices");
        }
        if (v < 1 || v > in.graph.order()) throw InvalidInput("order vertex " + tok + " out of range");
        order.push_back(v - 1);
    }
    return order;
}

int cmd_morse(const Options& o, std::ostream& out) {
    const auto in = load_graph(o.graph);
    MorseMatching m;
    if (o.order == "restricted") {
        if (o.k != 2) throw InvalidInput("restricted matching is defined on the 2-cut complex");
        m = restricted_matching(in.graph);
    } else {
        const auto c = cut_complex(in.graph, o.k);
        std::vector<int> order = parse_order(o.order, in, o.k);
        if (o.order == "tree") order = tree_matching_order(in.graph, o.root - 1);
        m = element_matching_sequence(c, order);
    }
    const auto census = verify_acyclic_and_critical(m);
    if (o.json) {
        Json j{{"input", Json{{"graph", in.text}, {"n", in.graph.order()}, {"k", o.k}, {"order", o.order}}},
               {"matching", matching_json(m, census)}};
        emit(out, j);
    } else {
        print_row(out, "graph", in.text);
        print_row(out, "k", std::to_string(o.k));
        print_row(out, "order", o.order);
        print_row(out, "pairs", std::to_string(m.pairs.size()));
        print_row(out, "acyclic", census.acyclic ? "yes" : "NO");
        std::string s;
        for (const auto& [d, c] : census.critical_by_dim)
            s += (s.empty() ? "" : ", ") + std::string("dim ") + std::to_string(d) + ": " + std::to_string(c);
        print_row(out, "critical", s.empty() ? "none" : s);
        std::string cl;
        for (const auto& f : m.critical) cl += (cl.empty() ? "" : " ") + show_face(in.graph, f);
        if (!cl.empty()) print_row(out, "", cl);
    }
    return census.acyclic ? 0 : 1;
}

int cmd_realize(const Options& o, std::ostream& out) {
    std::ifstream f(o.path);
    if (!f) throw InvalidInput("cannot open complex file " + o.path);
    Json j;
    try {
        j = Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("complex file is not valid JSON: ") + e.what());
    }
    const auto c = complex_from_json(j);
    const auto r = realize_as_cut_complex(c);
    std::vector<int> to_complex(r.graph.order(), -1);
    for (std::size_t i = 0; i < r.complex_vertex.size(); ++i) to_complex[i] = r.complex_vertex[i];
    const auto back = cut_complex(r.graph, r.k);
    bool round_trip = !back.is_void() && back.vertex_set().max() < static_cast<int>(r.complex_vertex.size()) &&
                      relabel(back, to_complex, c.ambient()) == c;
    const bool chordal = is_chordal(r.graph).chordal;
    if (o.json) {
        emit(out, Json{{"k", r.k}, {"graph", graph_json(r.graph)}, {"round_trip", round_trip}, {"chordal", chordal}});
    } else {
        out << "# k = " << r.k << ", round trip " << (round_trip ? "ok" : "FAILED") << ", chordal "
            << (chordal ? "yes" : "no") << '\n';
        write_graph_text(out, r.graph);
    }
    return round_trip && chordal ? 0 : 1;
}

int cmd_experiment(const Options& o, std::ostream& out) {
    if (o.experiment != "squared-cycle") throw InvalidInput("unknown experiment '" + o.experiment + "'");
    if (o.k < 2 || o.n < 3) throw InvalidInput("experiment needs --k >= 2 and --n >= 3");
    const auto g = squared_cycle(o.n);
    const auto c = cut_complex(g, o.k);
    Json j{{"n", o.n}, {"k", o.k}, {"state", state_name(c)}};
    std::string computed = "void";
    if (!c.is_void()) {
        const auto h = reduced_homology(c);
        j["homology"] = homology_json(h);
        computed = show_homology(h);
    }
    std::string conj = "none recorded";
    if (o.k >= 3 && o.n == o.k + 5) {
        const long beta = static_cast<long>(o.k - 3) * (o.k - 2) * (o.k + 5) / 6;
        j["conjecture"] = Json{{"H3", 1}, {"H4", beta}};
        conj = "H3=Z^1, H4=Z^" + std::to_string(beta);
    } else if (o.k == 3 && o.n >= 9) {
        const auto beta = binom(o.n - 4, 2) - 9;
        j["conjecture"] = Json{{"top_rank", beta}, {"shellable", true}};
        conj = "shellable, H" + std::to_string(o.n - o.k - 1) + "=Z^" + std::to_string(beta);
    } else if (o.k >= 3 && o.n >= o.k + 6) {
        j["conjecture"] = Json{{"shellable", true}};
        conj = "shellable";
    }
    if (!j.contains("conjecture")) j["conjecture"] = nullptr;
    if (o.json) {
        emit(out, j);
    } else {
        print_row(out, "graph", "squared_cycle:" + std::to_string(o.n));
        print_row(out, "k", std::to_string(o.k));
        print_row(out, "computed", computed);
        print_row(out, "conjecture", conj);
    }
    return 0;
}

struct CorpusRow {
    std::string family;
    int kmin;
    int kmax;  // -1 means n
};

std::vector<CorpusRow> corpus(const std::string& name) {
    if (name != "table1-small") throw InvalidInput("unknown corpus '" + name + "' (available: table1-small)");
    std::vector<CorpusRow> rows;
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 4; ++n) rows.push_back({"complete_multipartite:" + std::to_string(m) + "," + std::to_string(n), 1, -1});
    for (std::string p : {"1,1,3", "1,2,2", "2,2,2", "1,2,3", "1,1,1,3", "2,2,3"})
        rows.push_back({"complete_multipartite:" + p, 1, -1});
    for (int n = 2; n <= 6; ++n) rows.push_back({"edgeless:" + std::to_string(n), 1, -1});
    rows.push_back({"complete:5", 1, -1});
    for (int n = 4; n <= 8; ++n) rows.push_back({"cycle:" + std::to_string(n), 1, -1});
    for (int n = 6; n <= 9; ++n) rows.push_back({"squared_cycle:" + std::to_string(n), 2, n - 4});
    for (int n = 2; n <= 4; ++n) rows.push_back({"prism:" + std::to_string(n), 1, -1});
    for (int n = 3; n <= 7; ++n) rows.push_back({"path:" + std::to_string(n), 1, -1});
    for (int m = 3; m <= 5; ++m) rows.push_back({"star:" + std::to_string(m), 1, -1});
    rows.push_back({"tree:0-1,1-2,1-3,3-4,3-5,5-6", 1, -1});
    rows.push_back({"forest:8:0-1,1-2,3-4,4-5,5-6", 1, -1});
    for (std::string b : {"0101", "1101", "01101", "00111"}) rows.push_back({"threshold:" + b, 1, -1});
    rows.push_back({"petersen", 2, 2});
    rows.push_back({"kneser:6,2", 2, 2});
    rows.push_back({"kayak:4", 2, -1});
    rows.push_back({"kayak:5", 2, -1});
    rows.push_back({"balloon:5,3", 2, -1});
    rows.push_back({"balloon:4,2", 2, -1});
    rows.push_back({"figure_eight:4,5", 2, -1});
    return rows;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto rows = corpus(o.corpus);
    Json results = Json::array();
    int mismatches = 0, checked = 0;
    if (!o.json)
        out << std::left << std::setw(34) << "family" << std::setw(4) << "k" << std::setw(8) << "facets" << std::setw(30)
            << "predicted" << std::setw(30) << "computed" << std::setw(20) << "shellable" << "status\n";
    for (const auto& row : rows) {
        const auto spec = parse_family(row.family);
        const Graph g = build_family(spec);
        const int kmax = row.kmax < 0 ? g.order() : row.kmax;
        for (int k = row.kmin; k <= kmax; ++k) {
            const auto c = cut_complex(g, k);
            std::vector<std::string> problems;
            std::optional<HomologyReport> h;
            if (!c.is_void()) {
                h = reduced_homology(c);
                if (h->euler() != f_vector_and_euler(c).mu) problems.push_back("euler");
                if (k >= 2 && k <= g.order() - 1) {
                    const auto sc = skeleton_condition_and_euler(g, k);
                    if (sc.mu && *sc.mu != h->euler()) problems.push_back("antichain");
                }
            }
            std::string pred_text = "not covered";
            Json pj = Json{{"status", "not_covered"}};
            try {
                const auto p = predicted_betti(spec, k);
                pred_text = show_prediction(p);
                pj = prediction_json(p);
                if (!prediction_matches(p, c, h ? &*h : nullptr)) problems.push_back("betti");
            } catch (const NotCovered&) {
            }
            std::string shell_text = "-";
            Json sj = nullptr;
            const auto claim = predicted_shellable(spec, k);
            if (claim && c.facets().size() <= 40) {
                ShellingOptions so;
                so.budget = 2'000'000;
                const auto cert = find_shelling(c, so);
                sj = certificate_json(cert);
                shell_text = std::string(*claim ? "yes" : "no") + "/" + to_string(cert.verdict);
                if (cert.verdict != Verdict::Unknown && *claim != (cert.verdict == Verdict::Shellable))
                    problems.push_back("shelling");
                if (cert.verdict == Verdict::Shellable && h &&
                    !(h->is_free() && (h->total_rank() == 0 || h->support() == std::vector<int>{c.dim()})))
                    problems.push_back("shelled-homology");
            }
            ++checked;
            if (!problems.empty()) ++mismatches;
            std::string status = "ok";
            for (std::size_t i = 0; i < problems.size(); ++i) status = (i ? status + "," : "MISMATCH:") + problems[i];
            const std::string computed = c.is_void() ? "void" : show_homology(*h);
            if (o.json) {
                results.push_back(Json{{"family", row.family},
                                       {"k", k},
                                       {"facet_count", c.facets().size()},
                                       {"predicted", pj},
                                       {"homology", h ? homology_json(*h) : Json(nullptr)},
                                       {"shellable_claim", claim ? Json(*claim) : Json(nullptr)},
                                       {"shelling", sj},
                                       {"ok", problems.empty()}});
            } else {
                out << std::left << std::setw(34) << row.family << std::setw(4) << k << std::setw(8) << c.facets().size()
                    << std::setw(30) << pred_text << std::setw(30) << computed << std::setw(20) << shell_text << status
                    << '\n';
            }
        }
    }
    if (o.json) {
        emit(out, Json{{"corpus", o.corpus}, {"checked", checked}, {"mismatches", mismatches}, {"rows", results}});
    } else {
        out << checked << " entries checked, " << mismatches << " mismatches\n";
    }
    return mismatches ? 1 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-cut complexes of graphs: construction, homology, shellability, Morse matchings"};
    app.require_subcommand(1);
    Options o;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", o.graph, "family string (e.g. cycle:7) or path to a text graph file")->required();
        sub->add_option("--k", o.k, "cut size k")->required();
        sub->add_flag("--json", o.json, "JSON output");
    };
    auto* build = app.add_subcommand("build", "facets, f-vector and reduced Euler characteristic");
    add_graph(build);
    auto* hom = app.add_subcommand("homology", "reduced integral homology with predicted values");
    add_graph(hom);
    auto* shell = app.add_subcommand("shell", "search for a shelling order");
    add_graph(shell);
    shell->add_option("--budget", o.budget, "node limit for the search");
    auto* morse = app.add_subcommand("morse", "element-matching discrete Morse function");
    add_graph(morse);
    morse->add_option("--order", o.order, "tree | prism | restricted | comma list of 1-based vertices");
    morse->add_option("--root", o.root, "root vertex (1-based) for --order tree");
    auto* realize = app.add_subcommand("realize", "realize a pure complex as a cut complex");
    realize->add_option("complex", o.path, "complex JSON file")->required();
    realize->add_flag("--json", o.json, "JSON output");
    auto* verify = app.add_subcommand("verify", "check closed forms and shellability claims over a corpus");
    verify->add_option("corpus", o.corpus, "corpus name (table1-small)")->required();
    verify->add_flag("--json", o.json, "JSON output");
    auto* exp = app.add_subcommand("experiment", "computations next to open conjectures");
    exp->add_option("name", o.experiment, "squared-cycle")->required();
    exp->add_option("--k", o.k, "cut size k")->required();
    exp->add_option("--n", o.n, "number of vertices")->required();
    exp->add_flag("--json", o.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) return cmd_build(o, out);
        if (*hom) return cmd_homology(o, out);
        if (*shell) return cmd_shell(o, out);
        if (*morse) return cmd_morse(o, out);
        if (*realize) return cmd_realize(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*exp) return cmd_experiment(o, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"cutcx"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cutcx::cli
