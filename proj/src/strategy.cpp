#include "sqpaint/strategy.hpp"

#include <sstream>

#include "sqpaint/error.hpp"

namespace sqpaint {

namespace {

void apply_round(GameState& s, VertexMask presented, VertexMask painted) {
    s.uncolored &= ~painted;
    for (VertexMask m = painted; m; m &= m - 1) s.tokens[static_cast<std::size_t>(lowest_vertex(m))] = 0;
    for (VertexMask m = presented & ~painted; m; m &= m - 1) {
        auto& t = s.tokens[static_cast<std::size_t>(lowest_vertex(m))];
        if (t > 0) --t;
    }
}

std::string state_text(const GameState& s) {
    std::ostringstream out;
    out << s.uncolored;
    for (int t : s.tokens) out << ',' << t;
    return out.str();
}

class TableSession final : public PainterSession {
public:
    TableSession(std::shared_ptr<const StrategyTable> table, GameState state)
        : table_(std::move(table)), state_(std::move(state)) {}

    VertexMask respond(VertexMask presented) override {
        const auto it = table_->responses.find({state_.uncolored, state_.tokens, presented});
        if (it == table_->responses.end()) {
            throw StrategyFault("strategy table has no entry for state " + state_text(state_) + " and presented set " +
                                std::to_string(presented));
        }
        apply_round(state_, presented, it->second);
        return it->second;
    }

    std::unique_ptr<PainterSession> clone() const override { return std::make_unique<TableSession>(*this); }
    std::string fingerprint() const override { return "table:" + state_text(state_); }

private:
    std::shared_ptr<const StrategyTable> table_;
    GameState state_;
};

class TableStrategyImpl final : public StrategyImpl {
public:
    TableStrategyImpl(GameState start, StrategyTable table)
        : start_(std::move(start)), table_(std::make_shared<const StrategyTable>(std::move(table))) {}
    std::unique_ptr<PainterSession> start() const override { return std::make_unique<TableSession>(table_, start_); }
    std::string kind() const override { return "table"; }

private:
    GameState start_;
    std::shared_ptr<const StrategyTable> table_;
};

nlohmann::json mask_json(VertexMask m) { return mask_to_vertices(m); }

VertexMask json_mask(const nlohmann::json& j, int n) {
    VertexMask m = 0;
    for (const auto& x : j) {
        const int v = x.get<int>();
        if (v < 0 || v >= n) throw InputError("strategy JSON names vertex " + std::to_string(v) + " out of range");
        m |= bit(v);
    }
    return m;
}

} // namespace

Strategy table_strategy(const Graph& g, const TokenFn& f, StrategyTable table) {
    return Strategy(g, f, std::make_shared<TableStrategyImpl>(GameState::initial(g, f), std::move(table)));
}

nlohmann::json strategy_table_to_json(const Graph& g, const TokenFn& f, const StrategyTable& table) {
    nlohmann::json edges = nlohmann::json::array();
    for (Edge e : g.edges()) edges.push_back({e.u, e.v});
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, response] : table.responses) {
        const auto& [uncolored, tokens, presented] = key;
        nlohmann::json tok = nlohmann::json::array();
        for (VertexMask m = uncolored; m; m &= m - 1) tok.push_back(tokens[static_cast<std::size_t>(lowest_vertex(m))]);
        entries.push_back({{"uncolored", mask_json(uncolored)},
                           {"tokens", tok},
                           {"presented", mask_json(presented)},
                           {"response", mask_json(response)}});
    }
    return {{"n", g.order()}, {"f", f.values}, {"edges", edges}, {"entries", entries}};
}

Strategy strategy_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        const Graph g = Graph::from_edges(n, edges);
        const TokenFn f{j.at("f").get<std::vector<int>>()};
        require_tokens_match(g, f);
        StrategyTable table;
        for (const auto& e : j.at("entries")) {
            const VertexMask uncolored = json_mask(e.at("uncolored"), n);
            const auto tok = e.at("tokens").get<std::vector<int>>();
            if (static_cast<int>(tok.size()) != popcount(uncolored)) {
                throw InputError("strategy JSON entry lists the wrong number of tokens");
            }
            std::vector<int> tokens(static_cast<std::size_t>(n), 0);
            std::size_t i = 0;
            for (VertexMask m = uncolored; m; m &= m - 1) tokens[static_cast<std::size_t>(lowest_vertex(m))] = tok[i++];
            table.responses[{uncolored, tokens, json_mask(e.at("presented"), n)}] = json_mask(e.at("response"), n);
        }
        return table_strategy(g, f, std::move(table));
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed strategy JSON: ") + ex.what());
    }
}

namespace {

struct CombinedLayout {
    Graph g;
    std::vector<Vertex> h_orig;
    std::vector<Vertex> rest_orig;
};

class CombinedSession final : public PainterSession {
public:
    CombinedSession(std::shared_ptr<const CombinedLayout> layout, std::unique_ptr<PainterSession> h,
                    std::unique_ptr<PainterSession> rest)
        : layout_(std::move(layout)), h_(std::move(h)), rest_(std::move(rest)) {}

    CombinedSession(const CombinedSession& o) : layout_(o.layout_), h_(o.h_->clone()), rest_(o.rest_->clone()) {}

    VertexMask respond(VertexMask presented) override {
        const auto& rest_orig = layout_->rest_orig;
        const auto& h_orig = layout_->h_orig;
        VertexMask rest_presented = 0;
        for (std::size_t i = 0; i < rest_orig.size(); ++i) {
            if (presented & bit(rest_orig[i])) rest_presented |= bit(static_cast<Vertex>(i));
        }
        VertexMask painted = 0;
        if (rest_presented) {
            const VertexMask r = rest_->respond(rest_presented);
            for (VertexMask m = r; m; m &= m - 1) painted |= bit(rest_orig[static_cast<std::size_t>(lowest_vertex(m))]);
        }
        // H vertices next to this round's rest colour sit the round out in H's game
        VertexMask blocked = 0;
        for (VertexMask m = painted; m; m &= m - 1) blocked |= layout_->g.neighbor_mask(lowest_vertex(m));
        VertexMask h_presented = 0;
        for (std::size_t i = 0; i < h_orig.size(); ++i) {
            const Vertex v = h_orig[i];
            if ((presented & bit(v)) && !(blocked & bit(v))) h_presented |= bit(static_cast<Vertex>(i));
        }
        if (h_presented) {
            const VertexMask r = h_->respond(h_presented);
            for (VertexMask m = r; m; m &= m - 1) painted |= bit(h_orig[static_cast<std::size_t>(lowest_vertex(m))]);
        }
        return painted;
    }

    std::unique_ptr<PainterSession> clone() const override { return std::make_unique<CombinedSession>(*this); }
    std::string fingerprint() const override { return "combined(" + rest_->fingerprint() + "|" + h_->fingerprint() + ")"; }

private:
    std::shared_ptr<const CombinedLayout> layout_;
    std::unique_ptr<PainterSession> h_;
    std::unique_ptr<PainterSession> rest_;
};

class CombinedStrategyImpl final : public StrategyImpl {
public:
    CombinedStrategyImpl(CombinedLayout layout, Strategy h, Strategy rest)
        : layout_(std::make_shared<const CombinedLayout>(std::move(layout))), h_(std::move(h)), rest_(std::move(rest)) {}

    std::unique_ptr<PainterSession> start() const override {
        return std::make_unique<CombinedSession>(layout_, h_.start(), rest_.start());
    }
    std::string kind() const override { return "combined(" + rest_.kind() + "," + h_.kind() + ")"; }

private:
    std::shared_ptr<const CombinedLayout> layout_;
    Strategy h_;
    Strategy rest_;
};

} // namespace

Strategy combine_strategies(const Graph& g, std::span<const Vertex> h_vertices, const Strategy& strat_h,
                            const Strategy& strat_rest, const TokenFn& f) {
    require_tokens_match(g, f);
    const auto h = induced(g, h_vertices);
    const auto rest = delete_vertices(g, h.original);
    if (!strat_h.graph().same_structure(h.graph)) {
        throw InputError("combine: the H strategy is not for the subgraph induced by the given vertices");
    }
    if (!strat_rest.graph().same_structure(rest.graph)) {
        throw InputError("combine: the rest strategy is not for G minus H");
    }
    for (std::size_t i = 0; i < rest.original.size(); ++i) {
        const Vertex v = rest.original[i];
        if (f[v] < strat_rest.tokens()[static_cast<Vertex>(i)]) {
            throw InputError("combine: f(" + g.label(v) + ")=" + std::to_string(f[v]) +
                             " is below the rest strategy's budget " +
                             std::to_string(strat_rest.tokens()[static_cast<Vertex>(i)]));
        }
    }
    for (std::size_t i = 0; i < h.original.size(); ++i) {
        const Vertex v = h.original[i];
        const int need = (g.degree(v) - h.graph.degree(static_cast<Vertex>(i))) + strat_h.tokens()[static_cast<Vertex>(i)];
        if (f[v] < need) {
            throw InputError("combine: f(" + g.label(v) + ")=" + std::to_string(f[v]) + " is below (d_G - d_H) + f_H = " +
                             std::to_string(need));
        }
    }
    return Strategy(g, f,
                    std::make_shared<CombinedStrategyImpl>(CombinedLayout{g, h.original, rest.original}, strat_h, strat_rest));
}

} // namespace sqpaint
