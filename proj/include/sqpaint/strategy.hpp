#pragma once

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "sqpaint/graph.hpp"

namespace sqpaint {

/// Raised by a strategy that has no answer for the position it was asked
/// about (e.g. a table strategy missing an entry).
class StrategyFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Uncolored vertex set plus remaining tokens (indexed by vertex; entries
/// of colored vertices are zero).
struct GameState {
    VertexMask uncolored = 0;
    std::vector<int> tokens;

    static GameState initial(const Graph& g, const TokenFn& f);
    friend bool operator==(const GameState&, const GameState&) = default;
    friend auto operator<=>(const GameState&, const GameState&) = default;
};

/// One Painter game in progress. respond() is called once per round with the
/// presented (nonempty, uncolored) set and returns the vertices painted.
class PainterSession {
public:
    virtual ~PainterSession() = default;
    virtual VertexMask respond(VertexMask presented) = 0;
    virtual std::unique_ptr<PainterSession> clone() const = 0;
    /// Identifies the session's internal state; two sessions with equal
    /// fingerprints answer every future sequence identically.
    virtual std::string fingerprint() const = 0;
};

class StrategyImpl {
public:
    virtual ~StrategyImpl() = default;
    virtual std::unique_ptr<PainterSession> start() const = 0;
    virtual std::string kind() const = 0;
};

/// A Painter strategy for a fixed (graph, f). Cheap to copy.
class Strategy {
public:
    Strategy(Graph g, TokenFn f, std::shared_ptr<const StrategyImpl> impl)
        : g_(std::move(g)), f_(std::move(f)), impl_(std::move(impl)) {}

    const Graph& graph() const { return g_; }
    const TokenFn& tokens() const { return f_; }
    std::string kind() const { return impl_->kind(); }
    std::unique_ptr<PainterSession> start() const { return impl_->start(); }

private:
    Graph g_;
    TokenFn f_;
    std::shared_ptr<const StrategyImpl> impl_;
};

/// Explicit response table keyed by (state, presented set).
struct StrategyTable {
    using Key = std::tuple<VertexMask, std::vector<int>, VertexMask>;
    std::map<Key, VertexMask> responses;
};

Strategy table_strategy(const Graph& g, const TokenFn& f, StrategyTable table);

/// JSON: {"n", "f", "edges", "entries": [{"uncolored", "tokens", "presented",
/// "response"}]} with vertex lists sorted ascending and tokens listed for the
/// uncolored vertices in order.
nlohmann::json strategy_table_to_json(const Graph& g, const TokenFn& f, const StrategyTable& table);
/// Inverse of strategy_table_to_json. The graph and f are read back too.
Strategy strategy_from_json(const nlohmann::json& j);

/// Two simultaneous games, as in lemma subgraphlemma. `h_vertices` induce H in g; strat_h plays on
/// induced(g, h_vertices) and strat_rest on g minus H (vertex order as
/// produced by induced/delete_vertices). Per round: answer the rest first,
/// then present to H what is left of the round after removing neighbours of
/// the rest's answer. Throws InputError unless f >= f_rest on the rest and
/// f(v) >= (d_G(v) - d_H(v)) + f_H(v) on H.
Strategy combine_strategies(const Graph& g, std::span<const Vertex> h_vertices, const Strategy& strat_h,
                            const Strategy& strat_rest, const TokenFn& f);

} // namespace sqpaint
