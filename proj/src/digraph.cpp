#include "sqpaint/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "sqpaint/error.hpp"
#include "sqpaint/graph_io.hpp"

namespace sqpaint {

namespace {

std::string arc_text(const Graph& g, Arc a) { return g.label(a.tail) + "->" + g.label(a.head); }

} // namespace

Digraph Digraph::orient(const Graph& g, std::span<const Arc> arcs) {
    Digraph d;
    d.g_ = g;
    const auto n = static_cast<std::size_t>(g.order());
    d.out_.assign(n, {});
    d.in_.assign(n, {});
    // edge -> chosen arc, in edge order
    const auto edges = g.edges();
    std::vector<int> chosen(edges.size(), -1);
    auto edge_index = [&edges](Vertex u, Vertex v) -> long {
        const Edge key{std::min(u, v), std::max(u, v)};
        const auto it = std::lower_bound(edges.begin(), edges.end(), key);
        return (it != edges.end() && *it == key) ? it - edges.begin() : -1;
    };
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc a = arcs[i];
        if (a.tail < 0 || a.head < 0 || a.tail >= g.order() || a.head >= g.order()) {
            throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") is out of range");
        }
        const long e = edge_index(a.tail, a.head);
        if (e < 0) throw InputError("arc " + arc_text(g, a) + " is not an edge of the graph");
        auto& slot = chosen[static_cast<std::size_t>(e)];
        if (slot >= 0) throw InputError("edge " + g.label(edges[static_cast<std::size_t>(e)].u) + "-" +
                                        g.label(edges[static_cast<std::size_t>(e)].v) + " is oriented twice");
        slot = static_cast<int>(i);
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (chosen[e] < 0) {
            throw InputError("edge " + g.label(edges[e].u) + "-" + g.label(edges[e].v) + " has no orientation");
        }
        const Arc a = arcs[static_cast<std::size_t>(chosen[e])];
        d.arcs_.push_back(a);
        d.out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
        d.in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
    }
    for (auto& row : d.out_) std::sort(row.begin(), row.end());
    for (auto& row : d.in_) std::sort(row.begin(), row.end());
    return d;
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs, std::vector<std::string> labels) {
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (Arc a : arcs) edges.push_back({a.tail, a.head});
    const Graph g = Graph::from_edges(n, edges).with_labels(std::move(labels));
    return orient(g, arcs);
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    const auto& row = out_[static_cast<std::size_t>(tail)];
    return std::binary_search(row.begin(), row.end(), head);
}

Digraph Digraph::reversed() const {
    std::vector<Arc> flipped;
    flipped.reserve(arcs_.size());
    for (Arc a : arcs_) flipped.push_back({a.head, a.tail});
    return orient(g_, flipped);
}

Digraph Digraph::without_vertices(std::span<const Vertex> removed) const {
    const auto sub = delete_vertices(g_, removed);
    std::vector<int> index(static_cast<std::size_t>(order()), -1);
    for (std::size_t i = 0; i < sub.original.size(); ++i) index[static_cast<std::size_t>(sub.original[i])] = static_cast<int>(i);
    std::vector<Arc> kept;
    for (Arc a : arcs_) {
        const int t = index[static_cast<std::size_t>(a.tail)];
        const int h = index[static_cast<std::size_t>(a.head)];
        if (t >= 0 && h >= 0) kept.push_back({t, h});
    }
    return orient(sub.graph, kept);
}

Digraph arc_union(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order()) throw InputError("arc_union: digraphs have different vertex counts");
    std::vector<Arc> arcs = a.arcs();
    arcs.insert(arcs.end(), b.arcs().begin(), b.arcs().end());
    std::vector<Edge> edges;
    for (Arc x : arcs) edges.push_back({std::min(x.tail, x.head), std::max(x.tail, x.head)});
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InputError("arc_union: the digraphs share an underlying edge");
    }
    return Digraph::from_arcs(a.order(), arcs, a.underlying().labels());
}

Digraph parse_orientation(std::string_view text) {
    const PairList p = parse_pair_list(text);
    std::vector<Arc> arcs;
    for (auto [u, v] : p.pairs) {
        if (u == v) throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") is a self-loop");
        arcs.push_back({u, v});
    }
    std::vector<Edge> edges;
    for (Arc a : arcs) edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    std::sort(edges.begin(), edges.end());
    if (const auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
        throw InputError("edge " + std::to_string(it->u) + "-" + std::to_string(it->v) + " is oriented twice");
    }
    return Digraph::from_arcs(p.n, arcs, p.labels);
}

std::string format_orientation(const Digraph& d) {
    std::ostringstream out;
    if (d.underlying().has_labels()) {
        out << "# labels:";
        for (const auto& l : d.underlying().labels()) out << ' ' << l;
        out << '\n';
    }
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (Arc a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
    return out.str();
}

std::string to_dot(const Digraph& d, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (Vertex v = 0; v < d.order(); ++v) {
        out << "  " << v << " [label=\"" << d.label(v) << " (" << d.in_degree(v) << ")\"];\n";
    }
    for (Arc a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace sqpaint
