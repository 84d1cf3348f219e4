#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ratsing/cli.hpp"
#include "ratsing/error.hpp"

using namespace ratsing;
using namespace ratsing::testing;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string graph_text(const std::vector<std::string>& args) {
    std::vector<std::string> full = {"graph"};
    full.insert(full.end(), args.begin(), args.end());
    const Run r = run_cli(full);
    REQUIRE(r.code == 0);
    return r.out;
}

}  // namespace

TEST_CASE("graph subcommands print the text format") {
    CHECK(graph_text({"cyclic", "--n", "7", "--q", "3"}) == serialize_graph(build_cyclic(7, 3)));
    CHECK(parse_graph(graph_text({"ade", "--family", "E", "--index", "8"})) == build_ade(AdeFamily::E, 8));
    CHECK(run_cli({"graph", "ade", "--family", "E", "--index", "9"}).code == 2);
    CHECK(run_cli({"graph", "ade", "--family", "F", "--index", "6"}).code == 2);
    CHECK(run_cli({"graph", "cyclic", "--n", "6", "--q", "4"}).code == 2);
}

TEST_CASE("graph file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "ratsing_cli_star.graph";
    {
        std::ofstream f(path);
        f << serialize_graph(star_graph());
    }
    const Run loaded = run_cli({"graph", "load", path.string()});
    REQUIRE(loaded.code == 0);
    CHECK(parse_graph(loaded.out) == star_graph());

    const auto out_path = std::filesystem::temp_directory_path() / "ratsing_cli_e6.graph";
    CHECK(run_cli({"graph", "ade", "--family", "E", "--index", "6", "--out", out_path.string()}).code == 0);
    const Run classified = run_cli({"--format", "json", "classify", "--ulrich", "--graph", out_path.string()});
    REQUIRE(classified.code == 0);
    const json doc = json::parse(classified.out);
    CHECK(doc["results"]["ulrich"].size() == 2);
    std::filesystem::remove(path);
    std::filesystem::remove(out_path);

    CHECK(run_cli({"validate", "--graph", "/nonexistent/graph.txt"}).code == 2);
}

TEST_CASE("classify pipelines") {
    const std::string e6 = graph_text({"ade", "--family", "E", "--index", "6"});
    const Run r = run_cli({"--format", "json", "classify", "--ulrich"}, e6);
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["tool"] == "ratsing");
    CHECK(doc["command"] == "classify");
    CHECK(doc["graph"]["vertices"] == 6);
    CHECK_FALSE(doc["results"].contains("special"));
    const auto& ulrich = doc["results"]["ulrich"];
    REQUIRE(ulrich.size() == 2);
    CHECK(ulrich[0]["colength"] == 1);
    CHECK(ulrich[1]["colength"] == 2);
    CHECK(ulrich[1]["cycle"] == json({2, 3, 4, 3, 2, 2}));
    CHECK(ulrich[1]["module_indices"] == json({1, 5}));
    CHECK(ulrich[1]["kind"] == "both");
    CHECK(ulrich[1]["chain"]["steps"][0]["increment"] == json({1, 1, 1, 1, 1, 0}));

    const std::string c73 = graph_text({"cyclic", "--n", "7", "--q", "3"});
    const json d73 = json::parse(run_cli({"--format", "json", "classify", "--ulrich"}, c73).out);
    REQUIRE(d73["results"]["ulrich"].size() == 1);
    CHECK(d73["results"]["ulrich"][0]["cycle"] == json({1, 1, 1}));

    const Run table = run_cli({"classify"}, c73);
    CHECK(table.code == 0);
    CHECK(table.out.find("E1=1 E2=2* E3=1") != std::string::npos);

    CHECK(run_cli({"classify", "--ulrich", "--max-steps", "1"}, serialize_graph(star_graph())).code == 1);
    CHECK(run_cli({"classify", "--special", "--ulrich"}, c73).code == 2);
}

TEST_CASE("validate exit codes") {
    const Run ok = run_cli({"--format", "json", "validate"}, graph_text({"ade", "--family", "E", "--index", "8"}));
    CHECK(ok.code == 0);
    const json doc = json::parse(ok.out);
    CHECK(doc["results"]["gorenstein"] == true);
    CHECK(doc["results"]["multiplicity"] == 2);

    CHECK(run_cli({"validate"}, "vertices 2\n").code == 1);
    CHECK(run_cli({"validate"}, "vertices 2\nedge 1 1\n").code == 2);
    CHECK(run_cli({"classify"}, "vertices 2\n").code == 1);
}

TEST_CASE("fundamental and invariants") {
    const std::string e6 = graph_text({"ade", "--family", "E", "--index", "6"});
    const json f = json::parse(run_cli({"--format", "json", "fundamental", "--support", "1,2,3,4,5"}, e6).out);
    CHECK(f["results"]["cycle"] == json({1, 1, 1, 1, 1, 0}));

    const std::string c73 = graph_text({"cyclic", "--n", "7", "--q", "3"});
    const Run r = run_cli({"--format", "json", "invariants", "--cycle", "1,2,1"}, c73);
    REQUIRE(r.code == 0);
    const json inv = json::parse(r.out)["results"];
    CHECK(inv["colength"] == 2);
    CHECK(inv["min_gens"] == 4);
    CHECK(inv["u_invariant"] == 1);
    CHECK(inv["special"] == true);
    CHECK(inv["ulrich"] == false);

    CHECK(run_cli({"invariants", "--cycle", "1,2"}, c73).code == 2);
    CHECK(run_cli({"invariants", "--cycle", "1,x,1"}, c73).code == 2);
    CHECK(run_cli({"fundamental", "--support", "1,3"}, c73).code == 1);
}

TEST_CASE("oracle and verify-rdp") {
    const json o = json::parse(
        run_cli({"--format", "json", "oracle", "--bound", "6"}, graph_text({"ade", "--family", "D", "--index", "4"})).out);
    CHECK(o["results"]["ulrich"].size() == 4);

    const Run v = run_cli({"--format", "json", "verify-rdp", "--family", "D", "--index", "6"});
    CHECK(v.code == 0);
    const json doc = json::parse(v.out);
    CHECK(doc["results"]["count"] == 5);
    CHECK(doc["results"]["match"] == true);
    CHECK(run_cli({"verify-rdp", "--family", "D", "--index", "2"}).code == 2);
}

TEST_CASE("help, version and usage errors") {
    CHECK(run_cli({"--help"}).code == 0);
    const Run version = run_cli({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("0.1.0") != std::string::npos);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--format", "xml", "validate"}).code == 2);
}

TEST_CASE("parse helpers") {
    CHECK(cli::parse_cycle("1,2,3") == Cycle{1, 2, 3});
    CHECK(cli::parse_cycle(" 4 , -1 ") == Cycle{4, -1});
    CHECK_THROWS_AS(cli::parse_cycle(""), DomainError);
    CHECK_THROWS_AS(cli::parse_cycle("1,,2"), DomainError);
    CHECK(cli::parse_vertex_list("3,1,3", 4) == VertexSet{0, 2});
    CHECK_THROWS(cli::parse_vertex_list("5", 4));
    CHECK_THROWS(cli::parse_vertex_list("0", 4));
}

TEST_CASE("big integers are emitted as strings") {
    const Integer big = Integer(1) << 70;
    CHECK(cli::to_json(Cycle(std::vector<Integer>{big, 3})) == json({big.str(), 3}));
}
