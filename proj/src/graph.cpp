#include "sqpaint/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "sqpaint/error.hpp"

namespace sqpaint {

namespace {

void require_mask_capacity(const Graph& g, const char* what) {
    if (g.order() > kMaskCapacity) {
        throw SizeLimitError(std::string(what) + ": graph has " + std::to_string(g.order()) +
                             " vertices, bitset engines support at most 64");
    }
}

} // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) {
        throw InputError("vertex count must be nonnegative, got " + std::to_string(n));
    }
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges) {
        const auto pair_text = "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw InputError("edge " + pair_text + " has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (e.u == e.v) {
            throw InputError("edge " + pair_text + " is a self-loop");
        }
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::size_t twice = 0;
    for (auto& row : g.adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        twice += row.size();
    }
    g.edge_count_ = twice / 2;
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    if (order() == 0) return 0;
    int best = degree(0);
    for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
    return best;
}

bool Graph::is_complete() const {
    const auto n = static_cast<std::size_t>(order());
    return edge_count_ == n * (n == 0 ? 0 : n - 1) / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

VertexMask Graph::neighbor_mask(Vertex v) const {
    require_mask_capacity(*this, "neighbor_mask");
    VertexMask m = 0;
    for (Vertex w : neighbors(v)) m |= bit(w);
    return m;
}

VertexMask Graph::all_vertices_mask() const {
    require_mask_capacity(*this, "all_vertices_mask");
    return order() == 64 ? ~VertexMask{0} : (bit(order()) - 1);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
        throw InputError("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                         std::to_string(order()));
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

Vertex Graph::find_label(std::string_view label) const {
    for (Vertex v = 0; v < order(); ++v) {
        if (this->label(v) == label) return v;
    }
    return -1;
}

int TokenFn::total() const { return std::accumulate(values.begin(), values.end(), 0); }

int TokenFn::max() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }

HighLowMarking HighLowMarking::with_low(int n, std::span<const Vertex> low) {
    auto m = all_high(n);
    for (Vertex v : low) {
        if (v < 0 || v >= n) throw InputError("low vertex " + std::to_string(v) + " out of range");
        m.levels[static_cast<std::size_t>(v)] = Level::low;
    }
    return m;
}

std::vector<Vertex> HighLowMarking::low_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v) {
        if ((*this)[v] == Level::low) out.push_back(v);
    }
    return out;
}

TokenFn tokens_from_marking(const Graph& g, const HighLowMarking& marking) {
    if (marking.size() != g.order()) {
        throw InputError("marking covers " + std::to_string(marking.size()) + " vertices, graph has " +
                         std::to_string(g.order()));
    }
    TokenFn f;
    f.values.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        f.values.push_back(marking[v] == Level::high ? g.degree(v) - 1 : g.degree(v));
    }
    return f;
}

void require_tokens_match(const Graph& g, const TokenFn& f) {
    if (f.size() != g.order()) {
        throw InputError("token function has " + std::to_string(f.size()) + " values, graph has " +
                         std::to_string(g.order()) + " vertices");
    }
    for (int x : f.values) {
        if (x < 0) throw InputError("token values must be nonnegative");
    }
}

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph power(const Graph& g, int d) {
    if (d < 1) throw InputError("power exponent must be at least 1, got " + std::to_string(d));
    const int n = g.order();
    std::vector<Edge> edges;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            if (dist[static_cast<std::size_t>(u)] == d) continue;
            for (Vertex w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        for (Vertex t = s + 1; t < n; ++t) {
            if (dist[static_cast<std::size_t>(t)] > 0) edges.push_back({s, t});
        }
    }
    auto result = Graph::from_edges(n, edges);
    return g.has_labels() ? result.with_labels(g.labels()) : result;
}

Graph square(const Graph& g) { return power(g, 2); }

namespace {

std::vector<std::string> concat_labels(const Graph& g, const Graph& h) {
    if (!g.has_labels() && !h.has_labels()) return {};
    std::vector<std::string> labels;
    for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
    for (Vertex v = 0; v < h.order(); ++v) labels.push_back(h.label(v));
    return labels;
}

} // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    const int shift = g.order();
    for (Edge e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
    return Graph::from_edges(g.order() + h.order(), edges).with_labels(concat_labels(g, h));
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    const int shift = g.order();
    for (Edge e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < h.order(); ++v) edges.push_back({u, v + shift});
    }
    return Graph::from_edges(g.order() + h.order(), edges).with_labels(concat_labels(g, h));
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) edges.push_back({u, v});
        }
    }
    return Graph::from_edges(g.order(), edges).with_labels(g.labels());
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    for (Vertex v : keep) {
        if (v < 0 || v >= g.order()) {
            throw InputError("induced: vertex " + std::to_string(v) + " is outside 0.." + std::to_string(g.order() - 1));
        }
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        const int a = index[static_cast<std::size_t>(e.u)];
        const int b = index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b});
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (Vertex v : keep) labels.push_back(g.label(v));
    }
    return {Graph::from_edges(static_cast<int>(keep.size()), edges).with_labels(std::move(labels)), std::move(keep)};
}

InducedSubgraph induced(const Graph& g, VertexMask vertices) {
    const auto vs = mask_to_vertices(vertices);
    return induced(g, vs);
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<bool> drop(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.order()) throw InputError("delete_vertices: vertex " + std::to_string(v) + " out of range");
        drop[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
    }
    return induced(g, keep);
}

int girth(const Graph& g) {
    const int n = g.order();
    int best = kInfiniteGirth;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            const int du = dist[static_cast<std::size_t>(u)];
            if (2 * du + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                auto& dw = dist[static_cast<std::size_t>(w)];
                if (dw < 0) {
                    dw = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    best = std::min(best, du + dw + 1);
                }
            }
        }
    }
    return best;
}

namespace {

// Max-clique search with greedy-colouring bounds over bitsets.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : n_(g.order()) {
        rows_.reserve(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) rows_.push_back(g.neighbor_mask(v));
    }

    VertexMask run() {
        const VertexMask all = n_ == 64 ? ~VertexMask{0} : (bit(n_) - 1);
        expand(0, 0, all);
        return best_;
    }

private:
    void expand(VertexMask current, int size, VertexMask candidates) {
        std::vector<Vertex> order;
        std::vector<int> bound;
        colour_sort(candidates, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bound[i] <= best_size_) return;
            const Vertex v = order[i];
            const VertexMask next = candidates & rows_[static_cast<std::size_t>(v)];
            const VertexMask grown = current | bit(v);
            if (next == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = grown;
                }
            } else {
                expand(grown, size + 1, next);
            }
            candidates &= ~bit(v);
        }
    }

    void colour_sort(VertexMask candidates, std::vector<Vertex>& order, std::vector<int>& bound) const {
        int colour = 0;
        VertexMask uncoloured = candidates;
        while (uncoloured) {
            ++colour;
            VertexMask available = uncoloured;
            while (available) {
                const Vertex v = lowest_vertex(available);
                available &= ~bit(v) & ~rows_[static_cast<std::size_t>(v)];
                uncoloured &= ~bit(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    int n_;
    std::vector<VertexMask> rows_;
    VertexMask best_ = 0;
    int best_size_ = 0;
};

} // namespace

VertexMask maximum_clique(const Graph& g) {
    if (g.order() > kCliqueLimit) {
        throw SizeLimitError("clique_number: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                             std::to_string(kCliqueLimit));
    }
    if (g.order() == 0) return 0;
    return CliqueSearch(g).run();
}

int clique_number(const Graph& g) { return popcount(maximum_clique(g)); }

namespace {

class ColouringSearch {
public:
    ColouringSearch(const Graph& g, int lower, int upper)
        : g_(g), n_(g.order()), lower_(lower), best_(upper), colour_(static_cast<std::size_t>(n_), -1) {}

    int run() {
        search(0, 0);
        return best_;
    }

private:
    std::uint32_t neighbour_colours(Vertex v) const {
        std::uint32_t used = 0;
        for (Vertex w : g_.neighbors(v)) {
            const int c = colour_[static_cast<std::size_t>(w)];
            if (c >= 0) used |= 1u << c;
        }
        return used;
    }

    // DSATUR: most saturated uncoloured vertex, ties by degree then index.
    Vertex pick() const {
        Vertex chosen = -1;
        int chosen_sat = -1;
        int chosen_deg = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
            const int sat = __builtin_popcount(neighbour_colours(v));
            const int deg = g_.degree(v);
            if (sat > chosen_sat || (sat == chosen_sat && deg > chosen_deg)) {
                chosen = v;
                chosen_sat = sat;
                chosen_deg = deg;
            }
        }
        return chosen;
    }

    void search(int coloured, int used) {
        if (best_ == lower_) return;
        if (coloured == n_) {
            best_ = std::min(best_, used);
            return;
        }
        const Vertex v = pick();
        const std::uint32_t forbidden = neighbour_colours(v);
        for (int c = 0; c < used && c < best_ - 1; ++c) {
            if (forbidden & (1u << c)) continue;
            colour_[static_cast<std::size_t>(v)] = c;
            search(coloured + 1, used);
            colour_[static_cast<std::size_t>(v)] = -1;
            if (best_ == lower_) return;
        }
        if (used + 1 < best_) {
            colour_[static_cast<std::size_t>(v)] = used;
            search(coloured + 1, used + 1);
            colour_[static_cast<std::size_t>(v)] = -1;
        }
    }

    const Graph& g_;
    int n_;
    int lower_;
    int best_;
    std::vector<int> colour_;
};

} // namespace

int chromatic_number(const Graph& g) {
    if (g.order() > kChromaticLimit) {
        throw SizeLimitError("chromatic_number: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                             std::to_string(kChromaticLimit));
    }
    if (g.order() == 0) return 0;
    const int lower = clique_number(g);
    // n+1 is a safe initial bound; the search improves it.
    return ColouringSearch(g, lower, g.order() + 1).run();
}

HighLowMarking classify_high_low(const Graph& g) {
    const Graph sq = square(g);
    const int delta = g.max_degree();
    HighLowMarking m = HighLowMarking::all_high(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (sq.degree(v) != delta * delta) m.levels[static_cast<std::size_t>(v)] = Level::low;
    }
    return m;
}

bool is_moore(const Graph& g) {
    if (g.order() == 0 || !g.is_regular()) return false;
    const int delta = g.max_degree();
    if (g.order() != delta * delta + 1) return false;
    return square(g).is_complete();
}

std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > kIsomorphismLimit) {
        throw SizeLimitError("canonical_form: " + std::to_string(n) + " vertices exceeds the limit of " +
                             std::to_string(kIsomorphismLimit));
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    std::string code(static_cast<std::size_t>(n * (n - 1) / 2), '0');
    do {
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                code[k++] = g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? '1' : '0';
            }
        }
        if (code > best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> dg, dh;
    for (Vertex v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

std::vector<Vertex> mask_to_vertices(VertexMask m) {
    std::vector<Vertex> out;
    while (m) {
        const Vertex v = lowest_vertex(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vs) {
    VertexMask m = 0;
    for (Vertex v : vs) {
        if (v < 0 || v >= kMaskCapacity) throw InputError("vertex " + std::to_string(v) + " does not fit a 64-bit mask");
        m |= bit(v);
    }
    return m;
}

} // namespace sqpaint
