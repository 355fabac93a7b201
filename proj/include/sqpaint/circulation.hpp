#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sqpaint/digraph.hpp"
#include "sqpaint/graph.hpp"

namespace sqpaint {

struct CirculationCount {
    std::int64_t ee = 0;
    std::int64_t eo = 0;
    std::int64_t diff() const { return ee - eo; }
    friend bool operator==(const CirculationCount&, const CirculationCount&) = default;
};

inline constexpr std::size_t kMaxCountArcs = 64;

/// Even/odd Eulerian sub-digraphs (arc subsets with d+ = d- everywhere).
/// The work is split across OpenMP threads; the result is identical to the
/// serial version for every thread count.
CirculationCount count_circulations(const Digraph& d);
CirculationCount count_circulations_serial(const Digraph& d);

/// Arc subsets T with d+_T(v) - d-_T(v) = target[v] for every v, split by
/// parity of |T|. target all zero gives count_circulations.
CirculationCount count_with_imbalance(const Digraph& d, std::span<const int> target);
CirculationCount count_with_imbalance_serial(const Digraph& d, std::span<const int> target);

/// Sum over S subset of W of (-1)^|S| diff(D - S): the diff over circulations
/// in which every vertex of W is used.
std::int64_t diff_restricted(const Digraph& d, std::span<const Vertex> w);

/// d+(v) <= f(v)-1 everywhere (equivalently d-(v) >= d(v)-f(v)+1).
bool indegree_feasibility(const Digraph& d, const TokenFn& f);

struct ATCertificate {
    Digraph digraph;
    TokenFn f;
    CirculationCount count;
    bool budget_ok = false;
    bool verdict = false;
};

ATCertificate verify_at_certificate(const Digraph& d, const TokenFn& f);

enum class SearchStatus { found, exhausted, budget_exceeded };

std::string to_string(SearchStatus s);

struct OrientationSearch {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Digraph> digraph;
    CirculationCount count;
    std::uint64_t nodes = 0;
    std::uint64_t orientations_checked = 0;
};

inline constexpr std::size_t kMaxSearchEdges = 40;

/// Depth-first over edges in lexicographic order, trying u->v before v->u,
/// pruning on the out-degree budget. The first orientation (in that order)
/// with nonzero diff is returned, so the result is deterministic. `budget`
/// bounds search nodes; running out is reported distinctly from exhaustion.
OrientationSearch search_at_orientation(const Graph& g, const TokenFn& f, std::uint64_t budget);

/// Square of the path v1..vn with every arc pointing to the higher index.
Digraph path_square_digraph(int n);

enum class WeakMode { f1, f2, g };

WeakMode parse_weak_mode(std::string_view text);
std::string to_string(WeakMode m);
int weak_mode_minimum(WeakMode m);

/// even - odd over the (extra) weakly Eulerian subgraphs of the left-to-right
/// path square: f1/f2 have d+(v1) = d-(vn) = 1/2; g has d+(v1) = d-(vn) = 1,
/// d+(v2) = d-(v2)+1 and d-(v_{n-1}) = d+(v_{n-1})+1.
std::int64_t weakly_eulerian_diff(int n, WeakMode mode);

/// f1(n) = j where n = 3k + j, j in {-1,0,1}.
int f1_closed_form(int n);
/// g(n) = -j.
int g_closed_form(int n);

} // namespace sqpaint
