#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqpaint/graph.hpp"

namespace sqpaint {

inline constexpr int kMaxChoosableVertices = 7;
inline constexpr int kMaxChoosableTokens = 4;

/// lists[v] = the colors available at v (positive integers, ascending).
using ListAssignment = std::vector<std::vector<int>>;

struct ChoosabilityResult {
    bool choosable = true;
    /// A list assignment with |L(v)| = f(v) that has no proper coloring.
    std::optional<ListAssignment> witness;
    /// List assignments whose colorability was actually tested.
    std::uint64_t assignments_checked = 0;
};

/// Exact f-choosability. Rather than every assignment from a fixed color
/// pool, this searches the assignments that can be minimal counterexamples:
/// an assignment is determined up to renaming by its color classes
/// {v : c in L(v)}; splitting a class along the components it induces does
/// not change colorability, and a vertex owning a private color (or with
/// f(v) > d(v)) can always be colored last. So it suffices to test, for
/// every induced subgraph G[X] with f(v) <= d_X(v), the multisets of
/// connected classes of size >= 2 covering each v in X exactly f(v) times.
/// Parallel over the top-level branches; the witness is the first one in
/// the serial search order regardless of thread count.
ChoosabilityResult is_f_choosable(const Graph& g, const TokenFn& f);
ChoosabilityResult is_f_choosable_serial(const Graph& g, const TokenFn& f);

/// Proper coloring with c(v) in lists[v], if one exists (plain backtracking).
std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists);

} // namespace sqpaint
