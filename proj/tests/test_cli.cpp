#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cutcx/cut.hpp"
#include "cutcx/error.hpp"
#include "cutcx/family.hpp"
#include "cutcx/io.hpp"

using namespace cutcx;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST_CASE("complex JSON round trip") {
    const auto c = cut_complex(cycle_graph(6), 3);
    CHECK(complex_from_json(complex_json(c)) == c);
    CHECK(complex_json(c)["ambient"] == 6);
    CHECK(complex_json(SimplicialComplex::void_complex(3)).dump() == R"({"state":"void"})");
    CHECK(complex_from_json(Json::parse(R"({"state":"void"})")).is_void());
    CHECK(complex_from_json(Json::parse(R"({"facets":[[]]})")).is_empty_complex());
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets":[[0,0]]})")), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets":[["a"]]})")), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"([1,2])")), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets":[]})")), InvalidInput);
}

TEST_CASE("build prints the Moebius strip facets") {
    const auto r = run({"build", "cycle:5", "--k", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["complex"]["facets"].dump() == "[[0,1,3],[0,2,3],[0,2,4],[1,2,4],[1,3,4]]");
    CHECK(j["f_vector"].dump() == "[1,5,10,5]");
    CHECK(j["mu"]["f_vector"] == -1);
    CHECK(j["mu"]["antichain"] == -1);
    CHECK(complex_from_json(j["complex"]) == cut_complex(cycle_graph(5), 2));

    const auto human = run({"build", "cycle:5", "--k", "2"});
    CHECK(human.code == 0);
    for (const char* f : {"{2,4,5}", "{1,2,4}", "{1,3,4}", "{1,3,5}", "{2,3,5}"})
        CHECK(human.out.find(f) != std::string::npos);
}

TEST_CASE("build round trips on other inputs") {
    for (const char* g : {"prism:3", "complete_multipartite:2,3", "kayak:5", "path:5"})
        for (const char* k : {"2", "3", "4"}) {
            const auto r = run({"build", g, "--k", k, "--json"});
            REQUIRE(r.code == 0);
            const auto j = Json::parse(r.out);
            CHECK(complex_from_json(j["complex"]) == cut_complex(family(g), std::stoi(k)));
        }
}

TEST_CASE("shell reports not shellable for the Moebius strip") {
    const auto r = run({"shell", "cycle:5", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("NotShellable") != std::string::npos);

    const auto j = Json::parse(run({"shell", "cycle:6", "--k", "3", "--json"}).out);
    CHECK(j["shelling"]["verdict"] == "shellable");
    CHECK(j["shelling"]["order"].size() == 14);
}

TEST_CASE("homology subcommand compares with predictions") {
    const auto j = Json::parse(run({"homology", "complete_multipartite:3,4", "--k", "2", "--json"}).out);
    CHECK(j["match"] == true);
    CHECK(j["homology"][4]["rank"] == 6);
    CHECK(j["predicted"]["count"] == 6);

    const auto v = run({"homology", "complete:4", "--k", "2", "--json"});
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["state"] == "void");

    const auto p = run({"homology", "petersen", "--k", "3"});
    CHECK(p.code == 0);
    CHECK(p.out.find("not covered") != std::string::npos);
}

TEST_CASE("graph files") {
    const auto path = temp_file("cutcx_c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    const auto r = run({"homology", path, "--k", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["homology"][2]["rank"] == 1);

    const auto bad = temp_file("cutcx_bad.txt", "5 2\n0 1\n");
    CHECK(run({"build", bad, "--k", "2"}).code == 2);
}

TEST_CASE("morse subcommand") {
    const auto j = Json::parse(run({"morse", "prism:3", "--k", "2", "--order", "prism", "--json"}).out);
    CHECK(j["matching"]["acyclic"] == true);
    CHECK(j["matching"]["critical_by_dim"]["2"] == 2);

    const auto t = Json::parse(run({"morse", "path:5", "--k", "2", "--order", "tree", "--json"}).out);
    CHECK(t["matching"]["critical"].empty());

    const auto rr = Json::parse(run({"morse", "petersen", "--k", "2", "--order", "restricted", "--json"}).out);
    CHECK(rr["matching"]["critical_by_dim"]["6"] == 6);

    const auto e = run({"morse", "cycle:5", "--k", "2", "--order", "1,3,5,2,4"});
    CHECK(e.code == 0);
    CHECK(run({"morse", "cycle:5", "--k", "2", "--order", "1,9"}).code == 2);
    CHECK(run({"morse", "cycle:5", "--k", "2", "--order", "prism"}).code == 2);
}

TEST_CASE("realize subcommand") {
    const auto path = temp_file("cutcx_disc.json", R"({"facets":[[0,1,4],[0,3,4],[1,2,4],[2,3,4]]})");
    const auto r = run({"realize", path, "--json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["k"] == 6);
    CHECK(j["graph"]["n"] == 9);
    CHECK(j["round_trip"] == true);

    const auto bad = temp_file("cutcx_bad.json", "{not json");
    CHECK(run({"realize", bad}).code == 2);
}

TEST_CASE("verify is deterministic and clean") {
    const auto a = run({"verify", "table1-small"});
    const auto b = run({"verify", "table1-small"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("0 mismatches") != std::string::npos);
    CHECK(run({"verify", "no-such-corpus"}).code == 2);
}

TEST_CASE("experiment prints without asserting") {
    const auto r = run({"experiment", "squared-cycle", "--k", "3", "--n", "8", "--json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["conjecture"]["H4"] == 0);
    CHECK(j["homology"].is_array());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"build"}).code == 2);
    CHECK(run({"build", "cycle:5"}).code == 2);
    CHECK(run({"build", "cycle:5", "--k", "x"}).code == 2);
    CHECK(run({"build", "nonsense:1", "--k", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
