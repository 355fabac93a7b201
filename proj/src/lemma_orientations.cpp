#include "sqpaint/lemma_orientations.hpp"

#include <map>

#include "sqpaint/error.hpp"
#include "sqpaint/graph_io.hpp"

namespace sqpaint {

namespace {

// Arc lists transcribed from the figure sources, vertices renumbered to the
// named graph's label order (v1.. first, then w1..). Indegrees match the
// figure labels.
struct Transcription {
    const char* id;
    const char* graph_id;
    std::vector<Arc> arcs;
    std::uint64_t digest;
};

const std::vector<Transcription>& transcriptions() {
    static const std::vector<Transcription> t = {
        {"fig9a_k4e", "k4_minus_e", {{0, 1}, {0, 2}, {1, 3}, {2, 1}, {3, 0}}, 0x621ee8548982b077ULL},
        {"fig9b_k3ve2", "k3_join_e2", {{0, 2}, {0, 3}, {0, 4}, {1, 0}, {1, 4}, {2, 1}, {3, 1}, {3, 2}, {4, 2}}, 0x126675b1e5a77619ULL},
        {"fig9c_k4ve2", "k4_join_e2",
         {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 4}, {1, 5}, {2, 1}, {2, 3}, {3, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}, 0x1167a23351245a39ULL},
        {"fig9d_k2vc4", "k2_join_c4",
         {{0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 5}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 4}}, 0x5970b0367e39ba77ULL},
        {"fig9e_k3vp4", "k3_join_p4",
         {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 0}, {1, 4}, {1, 6}, {2, 0}, {2, 1},
          {3, 1}, {3, 2}, {4, 2}, {4, 3}, {4, 5}, {5, 1}, {5, 2}, {5, 6}, {6, 2}}, 0x8e619297cb51971eULL},
        {"fig9f_k3vk1p3", "k3_join_k1_p3",
         {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 0}, {1, 2}, {1, 5}, {2, 0}, {2, 6},
          {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 4}, {6, 1}}, 0xba564ae04fb27d24ULL},
        {"fig10a_k4v2e2", "k4_join_2e2a",
         {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 0}, {1, 3}, {1, 5}, {1, 7}, {2, 0}, {2, 1},
          {3, 2}, {3, 4}, {3, 6}, {4, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 1}, {6, 2}, {7, 2}, {7, 3}}, 0xcfe8e425e4088211ULL},
        {"fig10b_k4v2e2", "k4_join_2e2b",
         {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 0}, {1, 3}, {1, 6}, {1, 7}, {2, 0}, {2, 1}, {2, 5},
          {3, 2}, {3, 4}, {4, 1}, {4, 2}, {4, 6}, {5, 1}, {5, 3}, {6, 2}, {6, 3}, {7, 2}, {7, 3}}, 0x5823ca39fa10e8f8ULL},
        {"fig10c_k4v2e2", "k4_join_2e2c",
         {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 0}, {1, 3}, {1, 5}, {1, 7}, {2, 0}, {2, 1}, {2, 6},
          {3, 2}, {3, 4}, {4, 1}, {4, 2}, {5, 2}, {5, 3}, {5, 7}, {6, 1}, {6, 3}, {6, 4}, {7, 2}, {7, 3}}, 0x310e153106d763e7ULL},
        {"fig10d_k6ve3", "k6_join_e3",
         {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 0}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 7}, {2, 0},
          {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 8}, {4, 8}, {5, 3}, {5, 4}, {5, 7}, {6, 1},
          {6, 3}, {6, 4}, {6, 5}, {7, 0}, {7, 2}, {7, 3}, {7, 4}, {8, 0}, {8, 1}, {8, 2}, {8, 5}}, 0xaf3e8f148f3c7c90ULL},
        {"fig10e_c6sq", "c6_square",
         {{0, 2}, {0, 4}, {1, 0}, {1, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 5}, {4, 3}, {4, 5}, {5, 0}, {5, 1}}, 0x9479ab656ab0c951ULL},
        {"farlinked", "farlinked",
         {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 4}, {2, 5}, {2, 6},
          {3, 0}, {3, 2}, {3, 4}, {4, 0}, {5, 0}, {5, 6}, {6, 3}, {6, 4}}, 0x0f62d8daab94fe33ULL},
        {"threeunlinked", "threeunlinked",
         {{0, 1}, {0, 4}, {0, 5}, {0, 7}, {1, 2}, {1, 4}, {1, 5}, {2, 0}, {2, 3}, {3, 0},
          {3, 1}, {3, 6}, {4, 2}, {4, 3}, {4, 6}, {4, 7}, {5, 2}, {6, 2}, {7, 3}}, 0xf9dd12be51247b6fULL},
        {"b1b2", "b1b2",
         {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {2, 0}, {2, 1},
          {2, 6}, {3, 0}, {3, 2}, {3, 4}, {4, 2}, {5, 2}, {6, 3}, {6, 4}}, 0xc0c8cb45a3f0bdd1ULL},
        {"fig4_cycle_pendant7", "cycle_pendant:7",
         {{0, 1}, {0, 2}, {0, 7}, {1, 2}, {1, 3}, {1, 7}, {2, 3}, {2, 4}, {3, 4},
          {3, 5}, {4, 5}, {4, 6}, {5, 0}, {5, 6}, {6, 0}, {6, 1}, {7, 6}}, 0x3d580e2e5ae604acULL},
        {"fig5_cycle_2pendant8", "cycle_2pendant:8",
         {{0, 1}, {0, 2}, {0, 8}, {1, 2}, {1, 3}, {1, 8}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5},
          {4, 6}, {4, 9}, {5, 6}, {5, 7}, {5, 9}, {6, 0}, {6, 7}, {7, 0}, {7, 1}, {8, 7}, {9, 3}}, 0x4f5ca2f6f2fcba5bULL},
        {"fig6_cycle_2pendant_edge8", "cycle_2pendant_edge8",
         {{0, 1}, {0, 2}, {0, 8}, {1, 2}, {1, 3}, {1, 8}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6},
          {4, 9}, {5, 6}, {5, 7}, {5, 9}, {6, 0}, {6, 7}, {7, 0}, {7, 1}, {8, 7}, {9, 3}, {9, 8}}, 0x8f6cf22c6f6e7e3dULL},
    };
    return t;
}

const Transcription& find_transcription(std::string_view id) {
    for (const auto& t : transcriptions()) {
        if (id == t.id) return t;
    }
    throw InputError("unknown orientation id '" + std::string(id) + "'");
}

Digraph build_transcription(const Transcription& t) {
    return Digraph::orient(named_graph_from_spec(t.graph_id), t.arcs);
}

// Cycle v1..vn (indices 0..n-1) with v_i -> v_{i+1}, v_i -> v_{i+2} (mod n);
// each pendant leaf p at cycle index a gets v_a -> p, v_{a+1} -> p and
// p -> v_{a-1}.
Digraph cycle_rule(const Graph& g, int n, const std::vector<int>& pendant_at, const std::vector<Arc>& extra) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.push_back({i, (i + 1) % n});
        arcs.push_back({i, (i + 2) % n});
    }
    int leaf = n;
    for (int a : pendant_at) {
        arcs.push_back({a, leaf});
        arcs.push_back({(a + 1) % n, leaf});
        arcs.push_back({leaf, (a + n - 1) % n});
        ++leaf;
    }
    arcs.insert(arcs.end(), extra.begin(), extra.end());
    return Digraph::orient(g, arcs);
}

const std::map<std::string, std::string, std::less<>>& figure_marking_graph() {
    static const std::map<std::string, std::string, std::less<>> m = {
        {"fig9a_k4e", "k4_minus_e"},       {"fig9b_k3ve2", "k3_join_e2"},     {"fig9c_k4ve2", "k4_join_e2"},
        {"fig9d_k2vc4", "k2_join_c4"},     {"fig9e_k3vp4", "k3_join_p4"},     {"fig9f_k3vk1p3", "k3_join_k1_p3"},
        {"fig10a_k4v2e2", "k4_join_2e2a"}, {"fig10b_k4v2e2", "k4_join_2e2b"}, {"fig10c_k4v2e2", "k4_join_2e2c"},
        {"fig10d_k6ve3", "k6_join_e3"},    {"fig10e_c6sq", "c6_square"},      {"farlinked", "farlinked"},
        {"threeunlinked", "threeunlinked"}, {"b1b2", "b1b2"},
    };
    return m;
}

LemmaOrientation finish(std::string id, std::string graph_id, Digraph d, HighLowMarking marking) {
    TokenFn f = tokens_from_marking(d.underlying(), marking);
    return {std::move(id), std::move(graph_id), std::move(d), std::move(marking), std::move(f)};
}

} // namespace

const std::vector<LemmaOrientationInfo>& lemma_orientation_catalog() {
    static const std::vector<LemmaOrientationInfo> c = [] {
        std::vector<LemmaOrientationInfo> out;
        for (const auto& [fig, gid] : std::vector<std::pair<std::string, std::string>>{
                 {"fig9a_k4e", "K4-e, v1 w1 w2 low"},
                 {"fig9b_k3ve2", "K3 v E2, v1 w1 low"},
                 {"fig9c_k4ve2", "K4 v E2, v1 low"},
                 {"fig9d_k2vc4", "K2 v C4"},
                 {"fig9e_k3vp4", "K3 v P4"},
                 {"fig9f_k3vk1p3", "K3 v (K1 + P3)"},
                 {"fig10a_k4v2e2", "K4 v E4"},
                 {"fig10b_k4v2e2", "K4 v (E4 + w1w3)"},
                 {"fig10c_k4v2e2", "K4 v (E4 + w1w3 + w2w4)"},
                 {"fig10d_k6ve3", "K6 v E3"},
                 {"fig10e_c6sq", "C6 squared"},
                 {"farlinked", "C5 with far-linked pendants, square minus x"},
                 {"threeunlinked", "C5 with three unlinked pendants, squared"},
                 {"b1b2", "C5 with pendants at v2, v5, square minus x"},
             }) {
            out.push_back({fig, false, 0, gid});
        }
        out.push_back({"cycle_pendant", true, 5, "squared n-cycle + leaf u at v1, rule orientation"});
        out.push_back({"cycle_2pendant", true, 7, "squared n-cycle + leaves w1, w5, rule orientation"});
        out.push_back({"cycle_2pendant_edge8", false, 0, "cycle_2pendant n=8 plus arc w5 -> w1"});
        return out;
    }();
    return c;
}

LemmaOrientation lemma_orientation(std::string_view id, std::optional<int> n) {
    const auto needs_n = id == "cycle_pendant" || id == "cycle_2pendant";
    if (needs_n && !n) throw InputError("orientation '" + std::string(id) + "' needs --n");
    if (!needs_n && n) throw InputError("orientation '" + std::string(id) + "' takes no n");

    if (id == "cycle_pendant" || id == "cycle_2pendant") {
        const bool two = id == "cycle_2pendant";
        const std::string graph_id = std::string(id) + ":" + std::to_string(*n);
        const Graph g = named_graph_from_spec(graph_id);
        Digraph d = two ? cycle_rule(g, *n, {0, 4}, {}) : cycle_rule(g, *n, {0}, {});
        return finish(std::string(id), graph_id, std::move(d), HighLowMarking::all_high(g.order()));
    }
    if (id == "cycle_2pendant_edge8") {
        const Graph g = named_graph("cycle_2pendant_edge8");
        Digraph d = cycle_rule(g, 8, {0, 4}, {{9, 8}});
        return finish(std::string(id), std::string(id), std::move(d), HighLowMarking::all_high(g.order()));
    }
    const auto it = figure_marking_graph().find(id);
    if (it == figure_marking_graph().end()) {
        throw InputError("unknown orientation id '" + std::string(id) + "' (see list-graphs)");
    }
    Digraph d = build_transcription(find_transcription(id));
    return finish(std::string(id), it->second, std::move(d), lemma_marking(it->second));
}

Digraph transcribed_cycle_orientation(std::string_view id) {
    if (!id.starts_with("fig4_") && !id.starts_with("fig5_") && !id.starts_with("fig6_")) {
        throw InputError("'" + std::string(id) + "' is not a cycle-family figure transcription");
    }
    return build_transcription(find_transcription(id));
}

std::vector<FixtureDigest> orientation_fixture_digests() {
    std::vector<FixtureDigest> out;
    for (const auto& t : transcriptions()) {
        out.push_back({t.id, t.digest, fnv1a(format_orientation(build_transcription(t)))});
    }
    return out;
}

} // namespace sqpaint
