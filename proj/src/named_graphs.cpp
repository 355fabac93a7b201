#include "sqpaint/named_graphs.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "sqpaint/error.hpp"
#include "sqpaint/graph_io.hpp"

namespace sqpaint {

namespace {

// Figure 2 (left): the 4-regular graph whose square is K15.
constexpr std::pair<int, int> kElspas4[] = {
    {0, 1},  {0, 3},  {0, 11},  {0, 12},  {1, 2},   {1, 7},   {1, 10},  {2, 3},   {2, 5},   {2, 14},
    {3, 4},  {3, 9},  {4, 5},   {4, 7},   {4, 13},  {5, 6},   {5, 11},  {6, 7},   {6, 9},   {6, 12},
    {7, 8},  {8, 9},  {8, 11},  {8, 14},  {9, 10},  {10, 11}, {10, 13}, {12, 13}, {12, 14}, {13, 14},
};

// Figure 2 (right): the 5-regular graph whose square is K24.
constexpr std::pair<int, int> kElspas5[] = {
    {0, 3},   {0, 5},   {0, 6},   {0, 7},   {0, 8},   {1, 2},   {1, 4},   {1, 6},   {1, 7},   {1, 8},
    {2, 5},   {2, 9},   {2, 10},  {2, 11},  {3, 4},   {3, 9},   {3, 10},  {3, 11},  {4, 12},  {4, 13},
    {4, 14},  {5, 12},  {5, 13},  {5, 14},  {6, 15},  {6, 19},  {6, 22},  {7, 16},  {7, 20},  {7, 23},
    {8, 17},  {8, 18},  {8, 21},  {9, 16},  {9, 18},  {9, 22},  {10, 17}, {10, 19}, {10, 23}, {11, 15},
    {11, 20}, {11, 21}, {12, 16}, {12, 19}, {12, 21}, {13, 17}, {13, 20}, {13, 22}, {14, 15}, {14, 18},
    {14, 23}, {15, 16}, {15, 17}, {16, 17}, {18, 19}, {18, 20}, {19, 20}, {21, 22}, {21, 23}, {22, 23},
};

constexpr std::uint64_t kElspas4Digest = 0x318aa8846dd9d484ULL;
constexpr std::uint64_t kElspas5Digest = 0x9215a8f53b3202cdULL;

std::vector<std::string> numbered(std::string_view prefix, int from, int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(std::string(prefix) + std::to_string(from + i));
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

Graph empty_graph(int n) { return Graph::from_edges(n, std::span<const Edge>{}); }

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph::from_edges(leaves + 1, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::from_edges(10, e);
}

// Robertson's pentagon/pentagram construction.
Graph hoffman_singleton() {
    auto p = [](int h, int j) { return 5 * h + ((j % 5) + 5) % 5; };
    auto q = [](int i, int j) { return 25 + 5 * i + ((j % 5) + 5) % 5; };
    std::vector<Edge> e;
    for (int a = 0; a < 5; ++a) {
        for (int j = 0; j < 5; ++j) {
            e.push_back({p(a, j), p(a, j + 1)});
            e.push_back({q(a, j), q(a, j + 2)});
        }
    }
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 5; ++i) e.push_back({p(h, j), q(i, h * i + j)});
    return Graph::from_edges(50, e);
}

// Five triangles D0..D4 with all edges between consecutive triangles (mod 5).
Graph bk15() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        const int base = 3 * i;
        const int next = 3 * ((i + 1) % 5);
        e.push_back({base, base + 1});
        e.push_back({base, base + 2});
        e.push_back({base + 1, base + 2});
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) e.push_back({base + a, next + b});
    }
    auto labels = std::vector<std::string>{};
    for (int i = 1; i <= 5; ++i)
        for (char c : {'a', 'b', 'c'}) labels.push_back("D" + std::to_string(i) + c);
    return Graph::from_edges(15, e).with_labels(labels);
}

Graph relabel(const Graph& g, std::vector<std::string> labels) { return g.with_labels(std::move(labels)); }

// 5-cycle v1..v5 with pendant leaves, squared; optional extra vertex x
// adjacent to the given vertices is squared along and then deleted.
Graph pentagon_with_pendants(const std::vector<int>& pendant_at, const std::vector<std::string>& leaf_names,
                             const std::vector<int>& x_neighbors) {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
    int next = 5;
    for (int at : pendant_at) e.push_back({at, next++});
    const int x = next;
    const bool has_x = !x_neighbors.empty();
    if (has_x) {
        for (int w : x_neighbors) e.push_back({w, x});
        ++next;
    }
    Graph h = Graph::from_edges(next, e);
    Graph g = square(h);
    if (has_x) {
        const Vertex drop[] = {x};
        g = delete_vertices(g, drop).graph;
    }
    return g.with_labels(concat(numbered("v", 1, 5), leaf_names));
}

// n-cycle v1..vn plus pendant leaves at the given cycle positions (0-based),
// squared; `extra` edges are added after squaring.
Graph cycle_with_pendants(int n, const std::vector<int>& pendant_at, const std::vector<std::string>& leaf_names,
                          const std::vector<Edge>& extra) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    int next = n;
    for (int at : pendant_at) e.push_back({at, next++});
    Graph g = square(Graph::from_edges(next, e));
    auto edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph::from_edges(next, edges).with_labels(concat(numbered("v", 1, n), leaf_names));
}

// K_k joined with the graph `inner` whose vertices are labelled w1...
Graph clique_join(int k, const Graph& inner) {
    return join(complete_graph(k), inner).with_labels(concat(numbered("v", 1, k), numbered("w", 1, inner.order())));
}

Graph from_pairs(int n, std::span<const std::pair<int, int>> pairs) { return graph_from_edges(n, pairs); }

struct Entry {
    NamedGraphInfo info;
    int min_param = 0; // only meaningful when info.param is nonempty
    std::function<Graph(int)> build;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> r;
        auto fixed = [&r](std::string id, std::string desc, std::function<Graph()> f) {
            r.push_back({{std::move(id), "", std::move(desc)}, 0, [f = std::move(f)](int) { return f(); }});
        };
        auto param = [&r](std::string id, std::string p, int min, std::string desc, std::function<Graph(int)> f) {
            r.push_back({{std::move(id), std::move(p), std::move(desc)}, min, std::move(f)});
        };
        param("path", "n>=1", 1, "path on n vertices", path_graph);
        param("cycle", "n>=3", 3, "cycle on n vertices", cycle_graph);
        param("complete", "n>=1", 1, "complete graph K_n", complete_graph);
        param("empty", "n>=0", 0, "edgeless graph E_n", empty_graph);
        param("star", "n>=1", 1, "star K_{1,n}, centre 0", star_graph);
        fixed("petersen", "Petersen graph (Moore, degree 3)", petersen);
        fixed("hoffman_singleton", "Hoffman-Singleton graph (Moore, degree 7)", hoffman_singleton);
        fixed("elspas4", "4-regular graph on 15 vertices whose square is K15", [] { return from_pairs(15, kElspas4); });
        fixed("elspas5", "5-regular graph on 24 vertices whose square is K24", [] { return from_pairs(24, kElspas5); });
        fixed("bk15", "8-regular graph on 15 vertices: five triangles in a ring", bk15);
        fixed("farlinked", "C5 + leaves at v2,v4 sharing a neighbour x; square minus x",
              [] { return pentagon_with_pendants({1, 3}, {"w2", "w4"}, {5, 6}); });
        fixed("threeunlinked", "square of C5 + leaves at v2,v4,v5",
              [] { return pentagon_with_pendants({1, 3, 4}, {"w2", "w4", "w5"}, {}); });
        fixed("b1b2", "C5 + leaves at v2,v5 where w5,v3 share a neighbour x; square minus x",
              [] { return pentagon_with_pendants({1, 4}, {"w2", "w5"}, {6, 2}); });
        param("cycle_pendant", "n>=5", 5, "square of C_n + one leaf u at v1",
              [](int n) { return cycle_with_pendants(n, {0}, {"u"}, {}); });
        param("cycle_2pendant", "n>=7", 7, "square of C_n + leaves w1 at v1 and w5 at v5",
              [](int n) { return cycle_with_pendants(n, {0, 4}, {"w1", "w5"}, {}); });
        fixed("cycle_2pendant_edge8", "cycle_2pendant:8 plus the edge w1w5",
              [] { return cycle_with_pendants(8, {0, 4}, {"w1", "w5"}, {{8, 9}}); });
        fixed("k4_minus_e", "K4 minus an edge; v1,v2 of degree 3, w1,w2 of degree 2",
              [] { return relabel(complement(Graph::from_edges(4, {{2, 3}})), {"v1", "v2", "w1", "w2"}); });
        fixed("k3_join_e2", "K3 v E2", [] { return clique_join(3, empty_graph(2)); });
        fixed("k4_join_e2", "K4 v E2", [] { return clique_join(4, empty_graph(2)); });
        fixed("k4_join_2e2a", "K4 v E4 (two nonadjacent pairs w1w2, w3w4)",
              [] { return clique_join(4, empty_graph(4)); });
        fixed("k4_join_2e2b", "K4 v (E4 + w1w3)", [] { return clique_join(4, Graph::from_edges(4, {{0, 2}})); });
        fixed("k4_join_2e2c", "K4 v (E4 + w1w3 + w2w4)",
              [] { return clique_join(4, Graph::from_edges(4, {{0, 2}, {1, 3}})); });
        fixed("k6_join_e3", "K6 v E3", [] { return clique_join(6, empty_graph(3)); });
        fixed("c6_square", "square of the 6-cycle v1..v6",
              [] { return relabel(square(cycle_graph(6)), numbered("v", 1, 6)); });
        fixed("k2_join_c4", "K2 v C4 (w1..w4 in cycle order)", [] { return clique_join(2, cycle_graph(4)); });
        fixed("k3_join_p4", "K3 v P4 (w1..w4 in path order)", [] { return clique_join(3, path_graph(4)); });
        fixed("k3_join_k1_p3", "K3 v (P3 + K1): path w1w2w3, isolated w4",
              [] { return clique_join(3, disjoint_union(path_graph(3), empty_graph(1))); });
        return r;
    }();
    return entries;
}

const Entry& find_entry(std::string_view id) {
    for (const auto& e : registry()) {
        if (e.info.id == id) return e;
    }
    throw InputError("unknown graph id '" + std::string(id) + "' (see list-graphs)");
}

} // namespace

const std::vector<NamedGraphInfo>& named_graph_catalog() {
    static const std::vector<NamedGraphInfo> catalog = [] {
        std::vector<NamedGraphInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return catalog;
}

Graph named_graph(std::string_view id, std::span<const int> params) {
    const Entry& e = find_entry(id);
    if (e.info.param.empty()) {
        if (!params.empty()) throw InputError("graph '" + std::string(id) + "' takes no parameter");
        return e.build(0);
    }
    if (params.size() != 1) {
        throw InputError("graph '" + std::string(id) + "' needs exactly one parameter (" + e.info.param + ")");
    }
    if (params[0] < e.min_param) {
        throw InputError("graph '" + std::string(id) + "': parameter " + std::to_string(params[0]) +
                         " violates " + e.info.param);
    }
    if (params[0] > 4096) throw InputError("graph '" + std::string(id) + "': parameter too large");
    return e.build(params[0]);
}

Graph named_graph_from_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) return named_graph(spec);
    const auto id = spec.substr(0, colon);
    const auto text = spec.substr(colon + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("graph parameter '" + std::string(text) + "' is not an integer");
    }
    const int params[] = {value};
    return named_graph(id, params);
}

HighLowMarking lemma_marking(std::string_view id) {
    static const std::map<std::string, std::vector<Vertex>, std::less<>> low = {
        {"k4_minus_e", {0, 2, 3}},
        {"k3_join_e2", {0, 3}},
        {"k4_join_e2", {0}},
    };
    const Graph g = named_graph(id);
    if (const auto it = low.find(id); it != low.end()) return HighLowMarking::with_low(g.order(), it->second);
    static const std::vector<std::string> all_high = {
        "k4_join_2e2a", "k4_join_2e2b", "k4_join_2e2c", "k6_join_e3", "c6_square", "k2_join_c4",
        "k3_join_p4", "k3_join_k1_p3", "farlinked", "threeunlinked", "b1b2", "cycle_2pendant_edge8"};
    for (const auto& h : all_high) {
        if (h == id) return HighLowMarking::all_high(g.order());
    }
    throw InputError("graph '" + std::string(id) + "' has no stated high/low marking");
}

std::vector<std::string> lemma_graph_ids() {
    return {"k4_minus_e", "k3_join_e2", "k4_join_e2", "k4_join_2e2a", "k4_join_2e2b", "k4_join_2e2c",
            "k6_join_e3", "c6_square",  "k2_join_c4", "k3_join_p4",   "k3_join_k1_p3"};
}

std::vector<FixtureDigest> graph_fixture_digests() {
    return {
        {"elspas4", kElspas4Digest, fnv1a(format_edge_list(named_graph("elspas4")))},
        {"elspas5", kElspas5Digest, fnv1a(format_edge_list(named_graph("elspas5")))},
    };
}

} // namespace sqpaint
