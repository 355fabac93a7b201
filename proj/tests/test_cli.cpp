#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sqpaint/cli.hpp"
#include "sqpaint/graph.hpp"
#include "sqpaint/graph_io.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sqpaint");
    std::ostringstream out, err;
    const int status = sqpaint::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(SQPAINT_DATA_DIR) + "/" + rel; }

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

} // namespace

TEST_CASE("cli: circulations from a file and by name") {
    const Run a = run({"circulations", "--in", data("figures/fig9a_k4e.arcs")});
    CHECK(a.status == 0);
    CHECK(a.out == "ee=2 eo=1 diff=1\n");
    CHECK(run({"circulations", "--graph", "fig9a_k4e"}).out == a.out);
    CHECK(run({"circulations", "--graph", "fig10d_k6ve3", "--json"}).out == "{\"ee\":4394,\"eo\":4393,\"diff\":1}\n");
    CHECK(run({"circulations", "--graph", "cycle_pendant", "--n", "7", "--serial"}).status == 0);
}

TEST_CASE("cli: graph verbs") {
    const std::string pet = temp_path("sqpaint_petersen.edges");
    {
        std::ofstream f(pet);
        f << "10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n";
    }
    const Run sq = run({"square", "--in", pet});
    CHECK(sq.status == 0);
    CHECK(sqpaint::parse_edge_list(sq.out).is_complete());
    CHECK(sqpaint::parse_edge_list(sq.out).order() == 10);
    CHECK(run({"girth", "--in", pet}).out == "girth=5\n");
    CHECK(run({"moore", "--graph", "petersen", "--json"}).out.find("\"moore\":true") != std::string::npos);
    CHECK(run({"power", "--graph", "cycle:9", "--d", "4"}).out.rfind("9 36\n", 0) == 0);
    CHECK(run({"girth", "--graph", "path", "--n", "5"}).out == "girth=inf\n");
    CHECK(run({"chromatic", "--graph", "bk15"}).out == "chi=8\n");
    CHECK(run({"clique", "--graph", "bk15", "--json"}).out.find("\"omega\":6") != std::string::npos);
    CHECK(run({"list-graphs"}).out.find("petersen") != std::string::npos);
    std::remove(pet.c_str());
}

TEST_CASE("cli: human and json output carry the same fields") {
    const Run h = run({"at-verify", "--graph", "fig9e_k3vp4"});
    const Run j = run({"at-verify", "--graph", "fig9e_k3vp4", "--json"});
    CHECK(h.status == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    for (const char* key : {"verdict", "budget_ok", "ee", "eo", "diff"}) {
        CHECK(parsed.contains(key));
        CHECK(h.out.find(std::string(key) + "=") != std::string::npos);
    }
    CHECK(parsed["ee"] == 108);
}

TEST_CASE("cli: exit status") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"girth", "--bogus"}).status == 2);
    CHECK(run({"girth"}).status == 2);
    CHECK(run({"paint", "--graph", "cycle:4", "--f", "all=x"}).status == 2);
    CHECK(run({"girth", "--graph", "nosuch"}).status == 1);
    CHECK(run({"girth", "--in", "/nonexistent/file"}).status == 1);
    CHECK(run({"at-verify", "--in", data("figures/fig9a_k4e.arcs"), "--f", "all=1"}).status == 1);
    const Run big = run({"choosable", "--graph", "cycle:9", "--f", "all=2"});
    CHECK(big.status == 1);
    CHECK(big.err.find("limit") != std::string::npos);
    CHECK(big.out.empty());
    CHECK(run({"paint", "--graph", "complete:10", "--f", "all=9"}).status == 1);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("cli: token specs") {
    CHECK(run({"paint", "--graph", "k4_minus_e", "--f", "lemma", "--deterministic"}).out.rfind("verdict=painter-wins", 0) == 0);
    CHECK(run({"paint", "--graph", "k4_minus_e", "--f", "d1:low=v1,w1,w2", "--deterministic"}).out ==
          run({"paint", "--graph", "k4_minus_e", "--f", "3,2,2,2", "--deterministic"}).out);
    CHECK(run({"paint", "--graph", "complete:4", "--f", "d1", "--deterministic"}).out.rfind("verdict=lister-wins", 0) == 0);
    CHECK(run({"paint", "--graph", "cycle:4", "--f", "2,2"}).status == 1);
}

TEST_CASE("cli: determinism") {
    for (std::vector<std::string> args : {std::vector<std::string>{"paint", "--graph", "c6_square", "--f", "all=3", "--json", "--deterministic"},
                                          {"choosable", "--graph", "cycle:5", "--f", "all=2", "--json", "--deterministic"},
                                          {"at-search", "--graph", "c6_square", "--f", "d1", "--deterministic"},
                                          {"verify-paper", "--json", "--deterministic", "--id", "fig9b_k3ve2"}}) {
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("cli: weak counts and diffs") {
    CHECK(run({"f1f2g", "--mode", "f1", "--n", "7"}).out == "f1(7)=1 closed_form=1\n");
    CHECK(run({"f1f2g", "--mode", "f3", "--n", "7"}).status == 2);
    CHECK(run({"diff", "--graph", "threeunlinked", "--w", "w2,w4,w5"}).status == 0);
}

TEST_CASE("cli: strategies and play") {
    const std::string strat = temp_path("sqpaint_strategy.json");
    const std::string script = temp_path("sqpaint_script.txt");
    {
        std::ofstream s(script);
        s << "0 1 2 3\n1 3\n";
    }
    CHECK(run({"paint", "--graph", "cycle:4", "--f", "all=2", "--save-strategy", strat}).status == 0);
    const Run p = run({"play", "--strategy", strat, "--script", script});
    CHECK(p.status == 0);
    CHECK(p.out.find("outcome=painter-win") != std::string::npos);
    CHECK(run({"play", "--graph", "cycle:4", "--f", "all=2", "--script", script}).out == p.out);
    {
        std::ofstream s(script);
        s << "0 9\n";
    }
    CHECK(run({"play", "--strategy", strat, "--script", script}).status == 1);
    CHECK(run({"paint", "--graph", "complete:3", "--f", "all=2", "--save-strategy", strat}).status == 1);
    std::remove(strat.c_str());
    std::remove(script.c_str());
}

TEST_CASE("cli: verify-paper") {
    const Run ok = run({"verify-paper"});
    CHECK(ok.status == 0);
    const Run bad = run({"verify-paper", "--id", "fig9a_k4e", "--corrupt", "fig9a_k4e"});
    CHECK(bad.status == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(run({"verify-paper", "--id", "nope"}).status == 1);
}
