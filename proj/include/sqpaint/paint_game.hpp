#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sqpaint/graph.hpp"
#include "sqpaint/strategy.hpp"

namespace sqpaint {

inline constexpr int kMaxPaintVertices = 10;
inline constexpr int kMaxPaintTokenSum = 60;
inline constexpr std::uint64_t kDefaultPaintBudget = 20'000'000;

struct SolverOptions {
    /// Painter only answers with maximal independent subsets of the
    /// presented set (off: every independent subset, including empty).
    bool restrict_to_maximal = true;
    /// Drop vertices with more tokens than uncolored neighbours before
    /// evaluating a position; also caps initial f(v) at d(v)+1.
    bool reduce_very_low = true;
    /// Distinct positions the search may evaluate before giving up.
    std::uint64_t node_budget = kDefaultPaintBudget;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::size_t memo_entries = 0;
    /// Vertices whose f(v) was lowered to d(v)+1 up front.
    int normalized_vertices = 0;
};

/// Exact Lister-Painter solver for one (graph, f). Positions are memoized
/// across queries, so one solver can answer many positions of one game.
class PaintSolver {
public:
    PaintSolver(const Graph& g, const TokenFn& f, SolverOptions options = {});

    const Graph& graph() const { return g_; }
    /// f after normalization.
    const TokenFn& tokens() const { return f_; }
    GameState initial_state() const;

    /// Throws SizeLimitError once the node budget is spent.
    bool painter_wins(const GameState& s);
    bool painter_wins() { return painter_wins(initial_state()); }

    /// Least (by sorted vertex list) maximal independent subset of
    /// `presented` after which Painter still wins; falls back to arbitrary
    /// independent subsets, then nullopt if the position is lost.
    std::optional<VertexMask> winning_response(const GameState& s, VertexMask presented);

    SolveStats stats() const;

private:
    bool solve(VertexMask u, std::uint64_t packed);
    VertexMask reduce(VertexMask u, std::uint64_t packed) const;
    const std::vector<VertexMask>& maximal_independent(VertexMask within);
    const std::vector<VertexMask>& all_independent(VertexMask within);
    std::uint64_t pack(const GameState& s) const;

    Graph g_;
    TokenFn f_;
    SolverOptions options_;
    int n_ = 0;
    std::vector<VertexMask> nbr_;
    std::unordered_map<std::uint64_t, bool> memo_;
    std::vector<std::unique_ptr<std::vector<VertexMask>>> mis_cache_;
    std::vector<std::unique_ptr<std::vector<VertexMask>>> ind_cache_;
    std::uint64_t nodes_ = 0;
    int normalized_ = 0;
};

struct PaintOutcome {
    bool painter_wins = false;
    /// Present when Painter wins: answers on demand from the solver's memo.
    std::optional<Strategy> strategy;
    SolveStats stats;
};

PaintOutcome is_f_paintable(const Graph& g, const TokenFn& f, SolverOptions options = {});
/// f(v) = d(v)-1 for high vertices and d(v) for low ones.
PaintOutcome is_d1_paintable(const Graph& g, const HighLowMarking& marking, SolverOptions options = {});

/// Strategy that consults a (shared) solver; used for extraction.
Strategy solver_strategy(std::shared_ptr<PaintSolver> solver);

/// Sorted-vertex-list order on sets, used for deterministic tie-breaking.
bool lex_less(VertexMask a, VertexMask b);

bool is_independent(const Graph& g, VertexMask set);

} // namespace sqpaint
