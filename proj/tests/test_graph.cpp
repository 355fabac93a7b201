#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "sqpaint/error.hpp"
#include "sqpaint/graph_io.hpp"
#include "sqpaint/named_graphs.hpp"

using namespace sqpaint;

namespace {

Graph named(std::string_view id, int n) {
    const std::array<int, 1> p{n};
    return named_graph(id, p);
}

bool edge_subset(const Graph& a, const Graph& b) {
    for (Edge e : a.edges()) {
        if (!b.adjacent(e.u, e.v)) return false;
    }
    return true;
}

std::vector<Graph> corpus() {
    std::vector<Graph> out;
    for (const auto& info : named_graph_catalog()) {
        if (info.param.empty()) {
            out.push_back(named_graph(info.id));
        } else if (info.id == "cycle_pendant" || info.id == "cycle_2pendant") {
            out.push_back(named(info.id, 8));
        } else {
            for (int n : {3, 5, 6}) out.push_back(named(info.id, n));
        }
    }
    return out;
}

} // namespace

TEST_CASE("from_edges validates and collapses") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(k3.is_complete());
    CHECK(Graph::from_edges(2, {{0, 1}, {1, 0}}).size() == 1);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{-1, 2}}), doctest::Contains("-1"), InputError);
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("# a comment\n3 2\n0 1 # trailing\n1 2\n");
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), InputError);
    const Graph labelled = parse_edge_list("# labels: a b c\n3 1\n0 2\n");
    CHECK(labelled.label(2) == "c");
    CHECK(parse_edge_list(format_edge_list(labelled)).same_structure(labelled));
}

TEST_CASE("powers") {
    CHECK(square(named("cycle", 5)).is_complete());
    const Graph p4sq = square(named("path", 4));
    CHECK(p4sq.size() == 5);
    CHECK(p4sq.adjacent(0, 2));
    CHECK(p4sq.adjacent(1, 3));
    CHECK_FALSE(p4sq.adjacent(0, 3));
    CHECK(power(named_graph("petersen"), 2).is_complete());
    CHECK(power(named_graph("petersen"), 1).same_structure(named_graph("petersen")));

    for (const Graph& g : corpus()) {
        if (g.order() > 30) continue;
        for (int d = 1; d <= 3; ++d) CHECK(edge_subset(power(g, d), power(g, d + 1)));
        const int delta = g.max_degree();
        CHECK(square(g).max_degree() <= delta * delta);
    }
}

TEST_CASE("joins") {
    const Graph wheel = join(named("empty", 1), named("cycle", 4));
    CHECK(wheel.order() == 5);
    CHECK(wheel.size() == 8);
    const Graph k3e2 = join(named("complete", 3), named("empty", 2));
    CHECK(k3e2.order() == 5);
    CHECK(k3e2.size() == 9);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const Graph a = oracle::random_graph(rng, 1 + i % 4, 0.5);
        const Graph b = oracle::random_graph(rng, 1 + i % 5, 0.5);
        CHECK(are_isomorphic(join(a, b), join(b, a)));
    }
}

TEST_CASE("named graphs") {
    const Graph p = named_graph("petersen");
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(p.is_regular());
    CHECK(p.max_degree() == 3);
    const Graph bk = named_graph("bk15");
    CHECK(bk.order() == 15);
    CHECK(bk.is_regular());
    CHECK(bk.max_degree() == 8);
    const Graph e4 = named_graph("elspas4");
    CHECK(e4.order() == 15);
    CHECK(e4.max_degree() == 4);
    CHECK(e4.is_regular());
    CHECK(square(e4).is_complete());
    const Graph hs = named_graph("hoffman_singleton");
    CHECK(hs.order() == 50);
    CHECK(is_moore(hs));
    CHECK_THROWS_AS(named_graph("nope"), InputError);
    CHECK_THROWS_AS(named_graph("petersen", std::array{3}), InputError);
    CHECK_THROWS_AS(named_graph("cycle"), InputError);
    CHECK_THROWS_AS(named_graph_from_spec("cycle:2"), InputError);
    CHECK(named_graph_from_spec("cycle:7").order() == 7);
}

TEST_CASE("shipped edge-list fixtures match the built-in graphs") {
    for (const char* id : {"elspas4", "elspas5"}) {
        CAPTURE(id);
        const Graph file = read_edge_list(std::string(SQPAINT_DATA_DIR) + "/graphs/" + id + ".edges");
        CHECK(file.same_structure(named_graph(id)));
    }
    for (const auto& d : graph_fixture_digests()) {
        CAPTURE(d.id);
        CHECK(d.ok());
    }
}

TEST_CASE("girth") {
    CHECK(girth(named("cycle", 7)) == 7);
    CHECK(girth(named_graph("petersen")) == 5);
    CHECK(girth(named("path", 5)) == kInfiniteGirth);
    CHECK(girth(named("complete", 4)) == 3);
    for (const Graph& g : corpus()) {
        if (g.order() > 12) continue;
        CHECK(girth(g) == oracle::cycle_girth(g));
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const Graph g = oracle::random_graph(rng, 4 + i % 9, 0.25);
        CHECK(girth(g) == oracle::cycle_girth(g));
    }
}

TEST_CASE("clique and chromatic numbers") {
    CHECK(clique_number(named("complete", 6)) == 6);
    CHECK(clique_number(named_graph("bk15")) == 6);
    CHECK(clique_number(square(named_graph("elspas4"))) == 15);
    CHECK(popcount(maximum_clique(named_graph("bk15"))) == 6);
    CHECK(chromatic_number(named("cycle", 5)) == 3);
    CHECK(chromatic_number(named_graph("bk15")) == 8);
    CHECK(chromatic_number(join(named("complete", 3), named("cycle", 5))) == 6);
    CHECK(chromatic_number(named("empty", 4)) == 1);
    CHECK_THROWS_AS(chromatic_number(named("cycle", 21)), SizeLimitError);
    CHECK_THROWS_AS(clique_number(named("cycle", 65)), SizeLimitError);
}

TEST_CASE("high/low classification and Moore graphs") {
    const HighLowMarking p = classify_high_low(named_graph("petersen"));
    CHECK(p.low_vertices().empty());
    CHECK(classify_high_low(named("cycle", 4)).low_vertices().size() == 4);
    const HighLowMarking star = classify_high_low(named("star", 3));
    CHECK(star[0] == Level::low);
    CHECK(is_moore(named_graph("petersen")));
    CHECK(is_moore(named("cycle", 5)));
    CHECK_FALSE(is_moore(named("cycle", 6)));
    for (const Graph& g : corpus()) {
        if (g.order() > 64 || !is_moore(g)) continue;
        const int delta = g.max_degree();
        CHECK(clique_number(square(g)) == delta * delta + 1);
    }
}

TEST_CASE("induced subgraphs") {
    const Graph k5 = named("complete", 5);
    CHECK(induced(k5, std::vector<Vertex>{0, 1, 2}).graph.same_structure(named("complete", 3)));
    const Graph c6sq = named_graph("c6_square");
    CHECK(induced(c6sq, c6sq.all_vertices_mask()).graph.same_structure(c6sq));
    // the three-unlinked graph is the square of the pentagon with its pendants
    const Graph host = square(Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 5}, {3, 6}, {4, 7}}));
    CHECK(are_isomorphic(induced(host, host.all_vertices_mask()).graph, named_graph("threeunlinked")));
    const InducedSubgraph rest = delete_vertices(k5, std::vector<Vertex>{1, 3});
    CHECK(rest.original == std::vector<Vertex>{0, 2, 4});
}
