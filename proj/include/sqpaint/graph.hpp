#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqpaint {

using Vertex = int;
/// Bitset over at most 64 vertices; bit v set means vertex v is in the set.
using VertexMask = std::uint64_t;

inline constexpr int kMaskCapacity = 64;
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built; labels
/// are carried for reporting only and never affect structure.
class Graph {
public:
    Graph() = default;

    /// Validates every pair (range, no self-loops) and collapses duplicates.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const { return order() == 0 || max_degree() == min_degree(); }
    bool is_complete() const;

    /// Edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Neighborhood as a bitset; requires order() <= 64.
    VertexMask neighbor_mask(Vertex v) const;
    VertexMask all_vertices_mask() const;

    Graph with_labels(std::vector<std::string> labels) const;
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// The recorded label, or the decimal index when unlabeled.
    std::string label(Vertex v) const;
    /// Index of the vertex carrying `label`, or -1.
    Vertex find_label(std::string_view label) const;

    /// Structural equality; labels are ignored.
    bool same_structure(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Per-vertex list size / token budget.
struct TokenFn {
    std::vector<int> values;

    static TokenFn constant(int n, int k) { return TokenFn{std::vector<int>(static_cast<std::size_t>(n), k)}; }
    int operator[](Vertex v) const { return values[static_cast<std::size_t>(v)]; }
    int size() const { return static_cast<int>(values.size()); }
    int total() const;
    int max() const;
    friend bool operator==(const TokenFn&, const TokenFn&) = default;
};

enum class Level : std::uint8_t { high, low };

/// high <=> d_{G^2}(v) = Delta(G)^2 when derived by classify_high_low. Lemma
/// instances also use it directly to mean "list size d(v)-1" versus "d(v)".
struct HighLowMarking {
    std::vector<Level> levels;

    static HighLowMarking all_high(int n) { return HighLowMarking{std::vector<Level>(static_cast<std::size_t>(n), Level::high)}; }
    static HighLowMarking with_low(int n, std::span<const Vertex> low);
    Level operator[](Vertex v) const { return levels[static_cast<std::size_t>(v)]; }
    int size() const { return static_cast<int>(levels.size()); }
    std::vector<Vertex> low_vertices() const;
    friend bool operator==(const HighLowMarking&, const HighLowMarking&) = default;
};

/// f(v) = d(v)-1 for high vertices and d(v) for low ones (degrees in `g`).
TokenFn tokens_from_marking(const Graph& g, const HighLowMarking& marking);

/// Throws InputError unless f is defined on exactly the vertices of g.
void require_tokens_match(const Graph& g, const TokenFn& f);

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> pairs);

/// Vertices at distance <= d become adjacent. power(g, 1) == g.
Graph power(const Graph& g, int d);
Graph square(const Graph& g);

/// Disjoint union of g and h (h shifted by |g|) plus every g-h edge.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> original;
};

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices);
InducedSubgraph induced(const Graph& g, VertexMask vertices);
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> vertices);

/// Shortest cycle length, kInfiniteGirth for forests.
int girth(const Graph& g);

/// Exact clique number by bitset branch-and-bound; order() <= 64.
int clique_number(const Graph& g);
/// A maximum clique as a vertex mask; order() <= 64.
VertexMask maximum_clique(const Graph& g);

/// Exact chromatic number (DSATUR branch-and-bound); order() <= 20.
int chromatic_number(const Graph& g);

HighLowMarking classify_high_low(const Graph& g);

bool is_moore(const Graph& g);

/// Canonical adjacency string under exhaustive relabeling; order() <= 10.
std::string canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

inline constexpr int kCliqueLimit = 64;
inline constexpr int kChromaticLimit = 20;
inline constexpr int kIsomorphismLimit = 10;

inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline Vertex lowest_vertex(VertexMask m) { return __builtin_ctzll(m); }
inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
std::vector<Vertex> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const Vertex> vs);

} // namespace sqpaint
