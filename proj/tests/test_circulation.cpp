#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "sqpaint/error.hpp"
#include "sqpaint/graph_io.hpp"
#include "sqpaint/lemma_orientations.hpp"

using namespace sqpaint;

namespace {

struct Caption {
    const char* id;
    std::int64_t ee, eo;
};

// Figure 9 and Figure 10 captions.
constexpr Caption kCaptions[] = {
    {"fig9a_k4e", 2, 1},        {"fig9b_k3ve2", 4, 3},       {"fig9c_k4ve2", 16, 17},
    {"fig9d_k2vc4", 30, 28},    {"fig9e_k3vp4", 108, 107},   {"fig9f_k3vk1p3", 88, 87},
    {"fig10a_k4v2e2", 512, 515}, {"fig10b_k4v2e2", 751, 750}, {"fig10c_k4v2e2", 1097, 1096},
    {"fig10d_k6ve3", 4394, 4393}, {"fig10e_c6sq", 22, 16},
};

Digraph triangle() { return Digraph::orient(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }

} // namespace

TEST_CASE("orient") {
    const Digraph t = triangle();
    CHECK(t.has_arc(2, 0));
    CHECK_FALSE(t.has_arc(0, 2));
    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const Digraph d = Digraph::orient(c4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(d.in_degree(3) == 2);
    CHECK(count_circulations(d) == CirculationCount{1, 0});
    CHECK_THROWS_AS(Digraph::orient(c4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}}), InputError);
    CHECK_THROWS_AS(Digraph::orient(c4, std::vector<Arc>{{0, 1}, {1, 0}, {1, 2}, {2, 3}, {0, 3}}), InputError);
    CHECK_THROWS_AS(Digraph::orient(c4, std::vector<Arc>{{0, 2}, {1, 2}, {2, 3}, {0, 3}}), InputError);
}

TEST_CASE("circulation counts: small cases") {
    CHECK(count_circulations(Digraph::orient(Graph::from_edges(3, {}), {})) == CirculationCount{1, 0});
    CHECK(count_circulations(triangle()) == CirculationCount{1, 1});
    CHECK(count_circulations(path_square_digraph(5)) == CirculationCount{1, 0});
    CHECK(path_square_digraph(2).arc_count() == 1);
    CHECK(path_square_digraph(4).arc_count() == 5);
}

TEST_CASE("figure captions, two independent counters") {
    for (const Caption& c : kCaptions) {
        CAPTURE(c.id);
        const LemmaOrientation lo = lemma_orientation(c.id);
        const CirculationCount got = count_circulations(lo.digraph);
        CHECK(got == CirculationCount{c.ee, c.eo});
        CHECK(count_circulations_serial(lo.digraph) == got);
        CHECK(oracle::dp_circulations(lo.digraph) == got);
        if (lo.digraph.arc_count() <= 24) CHECK(oracle::gray_circulations(lo.digraph) == got);
        CHECK(indegree_feasibility(lo.digraph, lo.f));
    }
}

TEST_CASE("shipped arc files match the built-in orientations") {
    const std::pair<const char*, const char*> files[] = {
        {"fig9a_k4e", "fig9a_k4e"},         {"fig9b_k3ve2", "fig9b_k3ve2"},     {"fig9c_k4ve2", "fig9c_k4ve2"},
        {"fig9d_k2vc4", "fig9d_k2vc4"},     {"fig9e_k3vp4", "fig9e_k3vp4"},     {"fig9f_k3vk1p3", "fig9f_k3vk1p3"},
        {"fig10a_k4v2e2", "fig10a_k4v2e2"}, {"fig10b_k4v2e2", "fig10b_k4v2e2"}, {"fig10c_k4v2e2", "fig10c_k4v2e2"},
        {"fig10d_k6ve3", "fig10d_k6ve3"},   {"fig10e_c6sq", "fig10e_c6sq"},     {"farlinked", "farlinked"},
        {"threeunlinked", "threeunlinked"}, {"b1b2", "b1b2"},
    };
    for (auto [file, id] : files) {
        CAPTURE(file);
        const Digraph d = parse_orientation(read_text_file(std::string(SQPAINT_DATA_DIR) + "/figures/" + file + ".arcs"));
        CHECK(d.arcs() == lemma_orientation(id).digraph.arcs());
    }
    const std::pair<const char*, const char*> cycles[] = {{"cycle_pendant7", "fig4_cycle_pendant7"},
                                                          {"cycle_2pendant8", "fig5_cycle_2pendant8"},
                                                          {"cycle_2pendant_edge8", "fig6_cycle_2pendant_edge8"}};
    for (auto [file, id] : cycles) {
        CAPTURE(file);
        const Digraph d = parse_orientation(read_text_file(std::string(SQPAINT_DATA_DIR) + "/figures/" + file + ".arcs"));
        CHECK(d.arcs() == transcribed_cycle_orientation(id).arcs());
    }
    CHECK(transcribed_cycle_orientation("fig4_cycle_pendant7").arcs() == lemma_orientation("cycle_pendant", 7).digraph.arcs());
    CHECK(transcribed_cycle_orientation("fig5_cycle_2pendant8").arcs() == lemma_orientation("cycle_2pendant", 8).digraph.arcs());
    CHECK(transcribed_cycle_orientation("fig6_cycle_2pendant_edge8").arcs() ==
          lemma_orientation("cycle_2pendant_edge8").digraph.arcs());
    for (const auto& d : orientation_fixture_digests()) {
        CAPTURE(d.id);
        CHECK(d.ok());
    }
}

TEST_CASE("farlinked orientation has in-degree at least two") {
    const Digraph d = lemma_orientation("farlinked").digraph;
    CHECK(d.order() == 7);
    for (Vertex v = 0; v < d.order(); ++v) CHECK(d.in_degree(v) >= 2);
    const Digraph k4e = lemma_orientation("fig9a_k4e").digraph;
    std::vector<int> profile;
    for (Vertex v = 0; v < 4; ++v) profile.push_back(k4e.in_degree(v));
    std::sort(profile.begin(), profile.end());
    CHECK(profile == std::vector<int>{1, 1, 1, 2});
    // the high degree-3 vertex needs the extra in-arc
    CHECK(k4e.in_degree(k4e.underlying().find_label("v2")) == 2);
}

TEST_CASE("random digraphs agree with the brute-force counters") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 80; ++i) {
        const Graph g = oracle::random_graph(rng, 4 + i % 6, 0.55);
        if (g.size() > 20) continue;
        const Digraph d = oracle::random_orientation(rng, g);
        const CirculationCount want = oracle::gray_circulations(d);
        CHECK(count_circulations(d) == want);
        CHECK(count_circulations_serial(d) == want);
        CHECK(oracle::dp_circulations(d) == want);
        CHECK(want.ee >= 1);

        std::vector<int> target(static_cast<std::size_t>(d.order()), 0);
        std::uniform_int_distribution<int> pick(0, d.order() - 1);
        const Vertex a = pick(rng);
        const Vertex b = pick(rng);
        ++target[static_cast<std::size_t>(a)];
        --target[static_cast<std::size_t>(b)];
        const CirculationCount w = oracle::gray_circulations(d.order(), d.arcs(), target);
        CHECK(count_with_imbalance(d, target) == w);
        CHECK(count_with_imbalance_serial(d, target) == w);
    }
}

TEST_CASE("reversal and arc-disjoint union") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_graph(rng, 5 + i % 4, 0.5);
        const Digraph d = oracle::random_orientation(rng, g);
        CHECK(count_circulations(d.reversed()) == count_circulations(d));
    }
    // split a random orientation into two arc-disjoint halves
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_graph(rng, 6, 0.6);
        const Digraph d = oracle::random_orientation(rng, g);
        std::vector<Arc> a, b;
        std::bernoulli_distribution coin(0.5);
        for (Arc x : d.arcs()) (coin(rng) ? a : b).push_back(x);
        const Digraph da = Digraph::from_arcs(6, a);
        const Digraph db = Digraph::from_arcs(6, b);
        const Digraph u = arc_union(da, db);
        CHECK(u.arc_count() == d.arc_count());
        CHECK(count_circulations(u).diff() == oracle::gray_circulations(u).diff());
    }
}

TEST_CASE("diff restricted by inclusion-exclusion") {
    const Digraph far = lemma_orientation("farlinked").digraph;
    const std::int64_t full = count_circulations(far).diff();
    CHECK(diff_restricted(far, {}) == full);
    // oracle: brute force over arc subsets that touch every vertex of W
    std::mt19937_64 rng(99);
    for (int i = 0; i < 25; ++i) {
        const Graph g = oracle::random_graph(rng, 6, 0.6);
        const Digraph d = oracle::random_orientation(rng, g);
        const std::vector<Vertex> w{0, static_cast<Vertex>(1 + i % 5)};
        std::int64_t want = 0;
        const auto& arcs = d.arcs();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << arcs.size()); ++s) {
            std::vector<int> bal(6, 0), touched(6, 0);
            for (std::size_t k = 0; k < arcs.size(); ++k) {
                if (!(s >> k & 1)) continue;
                ++bal[static_cast<std::size_t>(arcs[k].tail)];
                --bal[static_cast<std::size_t>(arcs[k].head)];
                touched[static_cast<std::size_t>(arcs[k].tail)] = touched[static_cast<std::size_t>(arcs[k].head)] = 1;
            }
            if (std::any_of(bal.begin(), bal.end(), [](int x) { return x != 0; })) continue;
            if (!touched[static_cast<std::size_t>(w[0])] || !touched[static_cast<std::size_t>(w[1])]) continue;
            want += __builtin_popcountll(s) % 2 ? -1 : 1;
        }
        CHECK(diff_restricted(d, w) == want);
    }
}

TEST_CASE("AT certificates") {
    const LemmaOrientation k6 = lemma_orientation("fig10d_k6ve3");
    const ATCertificate c = verify_at_certificate(k6.digraph, tokens_from_marking(k6.digraph.underlying(),
                                                                                    HighLowMarking::all_high(9)));
    CHECK(c.verdict);
    CHECK(c.count == CirculationCount{4394, 4393});
    const LemmaOrientation k3p4 = lemma_orientation("fig9e_k3vp4");
    CHECK(verify_at_certificate(k3p4.digraph, k3p4.f).verdict);
    CHECK(verify_at_certificate(k3p4.digraph, k3p4.f).count == CirculationCount{108, 107});
    CHECK_FALSE(verify_at_certificate(triangle(), TokenFn::constant(3, 2)).verdict);
    CHECK(verify_at_certificate(lemma_orientation("fig9a_k4e").digraph, lemma_orientation("fig9a_k4e").f).verdict);
    const Digraph path = Digraph::orient(Graph::from_edges(3, {{0, 1}, {1, 2}}), std::vector<Arc>{{0, 1}, {1, 2}});
    CHECK_FALSE(indegree_feasibility(path, tokens_from_marking(path.underlying(), HighLowMarking::all_high(3))));
    const LemmaOrientation k4 = lemma_orientation("fig10a_k4v2e2");
    CHECK(indegree_feasibility(k4.digraph, tokens_from_marking(k4.digraph.underlying(), HighLowMarking::all_high(8))));
}

TEST_CASE("orientation search") {
    const Graph c6sq = lemma_orientation("fig10e_c6sq").digraph.underlying();
    const OrientationSearch s = search_at_orientation(c6sq, tokens_from_marking(c6sq, HighLowMarking::all_high(6)), 1'000'000);
    REQUIRE(s.status == SearchStatus::found);
    CHECK(s.count.diff() != 0);
    CHECK(verify_at_certificate(*s.digraph, tokens_from_marking(c6sq, HighLowMarking::all_high(6))).verdict);

    const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(search_at_orientation(k4, TokenFn::constant(4, 3), 1'000'000).status == SearchStatus::exhausted);
    CHECK(search_at_orientation(k4, TokenFn::constant(4, 4), 1'000'000).status == SearchStatus::found);
    const OrientationSearch edge = search_at_orientation(Graph::from_edges(2, {{0, 1}}), TokenFn::constant(2, 2), 100);
    CHECK(edge.status == SearchStatus::found);
    CHECK(edge.count.diff() == 1);
    CHECK(search_at_orientation(k4, TokenFn::constant(4, 3), 3).status == SearchStatus::budget_exceeded);

    // exhaustive cross-check: found iff some orientation passes
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const Graph g = oracle::random_graph(rng, 5, 0.6);
        std::vector<int> fv(5);
        for (Vertex v = 0; v < 5; ++v) fv[static_cast<std::size_t>(v)] = 1 + static_cast<int>(rng() % 3);
        const TokenFn f{fv};
        bool any = false;
        const auto edges = g.edges();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << edges.size()) && !any; ++m) {
            std::vector<Arc> arcs;
            for (std::size_t k = 0; k < edges.size(); ++k) {
                arcs.push_back(m >> k & 1 ? Arc{edges[k].v, edges[k].u} : Arc{edges[k].u, edges[k].v});
            }
            any = verify_at_certificate(Digraph::orient(g, arcs), f).verdict;
        }
        CHECK((search_at_orientation(g, f, 10'000'000).status == SearchStatus::found) == any);
    }
}

TEST_CASE("weakly eulerian counts") {
    CHECK(weakly_eulerian_diff(2, WeakMode::f1) == -1);
    CHECK(weakly_eulerian_diff(3, WeakMode::f1) == 0);
    CHECK(weakly_eulerian_diff(4, WeakMode::f1) == 1);
    CHECK(weakly_eulerian_diff(4, WeakMode::g) == -1);
    CHECK(weakly_eulerian_diff(5, WeakMode::g) == 1);
    CHECK(weakly_eulerian_diff(6, WeakMode::g) == 0);
    for (int n = 2; n <= 12; ++n) CHECK(weakly_eulerian_diff(n, WeakMode::f1) == oracle::weak_diff(n, 1));
    for (int n = 4; n <= 12; ++n) {
        CHECK(weakly_eulerian_diff(n, WeakMode::f2) == oracle::weak_diff(n, 2));
        CHECK(weakly_eulerian_diff(n, WeakMode::g) == oracle::weak_diff(n, 0));
    }
    for (int n = 2; n <= 20; ++n) CHECK(f1_closed_form(n) == oracle::f1_by_residue(n));
    CHECK_THROWS_AS(parse_weak_mode("f3"), InputError);
}

TEST_CASE("limits are explicit errors") {
    const Graph big = Graph::from_edges(12, [] {
        std::vector<Edge> e;
        for (int u = 0; u < 12; ++u)
            for (int v = u + 1; v < 12; ++v) e.push_back({u, v});
        return e;
    }());
    std::vector<Arc> arcs;
    for (Edge e : big.edges()) arcs.push_back({e.u, e.v});
    CHECK_THROWS_AS(count_circulations(Digraph::orient(big, arcs)), SizeLimitError);
    CHECK_THROWS_AS(search_at_orientation(big, TokenFn::constant(12, 11), 10), SizeLimitError);
}
