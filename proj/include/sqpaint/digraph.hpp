#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqpaint/graph.hpp"

namespace sqpaint {

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// An orientation of a simple graph: every underlying edge carries exactly
/// one direction.
class Digraph {
public:
    Digraph() = default;

    /// Arcs must cover each edge of g exactly once; a missing edge, a
    /// duplicated edge (in either direction) or a non-edge is an InputError.
    static Digraph orient(const Graph& g, std::span<const Arc> arcs);
    /// Underlying graph is built from the arcs themselves.
    static Digraph from_arcs(int n, std::span<const Arc> arcs, std::vector<std::string> labels = {});

    const Graph& underlying() const { return g_; }
    int order() const { return g_.order(); }
    std::size_t arc_count() const { return arcs_.size(); }
    /// Arcs listed in the underlying graph's edge order.
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }
    bool has_arc(Vertex tail, Vertex head) const;

    Digraph reversed() const;
    /// D - S with the surviving vertices renumbered in order (labels kept).
    Digraph without_vertices(std::span<const Vertex> removed) const;

    std::string label(Vertex v) const { return g_.label(v); }

private:
    Graph g_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// Arc-disjoint union on a shared vertex set: the arcs of both digraphs.
/// Both must have the same order and no common underlying edge.
Digraph arc_union(const Digraph& a, const Digraph& b);

/// `n m` header then `u v` lines meaning the arc u -> v.
Digraph parse_orientation(std::string_view text);
std::string format_orientation(const Digraph& d);
std::string to_dot(const Digraph& d, std::string_view name = "D");

} // namespace sqpaint
