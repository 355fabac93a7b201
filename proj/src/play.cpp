#include "sqpaint/play.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

#include "sqpaint/error.hpp"
#include "sqpaint/paint_game.hpp"

namespace sqpaint {

std::string to_string(PlayOutcome o) {
    switch (o) {
        case PlayOutcome::painter_win: return "painter-win";
        case PlayOutcome::lister_win: return "lister-win";
        case PlayOutcome::script_exhausted: return "script-exhausted";
        case PlayOutcome::malformed_step: return "malformed-step";
        case PlayOutcome::illegal_response: return "illegal-response";
        case PlayOutcome::strategy_fault: return "strategy-fault";
    }
    return "?";
}

ListerScript parse_lister_script(std::string_view text) {
    ListerScript script;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<Vertex> step;
        bool any = false;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != ',') ++j;
            const std::string_view tok = line.substr(i, j - i);
            int v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw InputError("lister script line " + std::to_string(line_no) + ": '" + std::string(tok) +
                                 "' is not a vertex index");
            }
            step.push_back(v);
            any = true;
            i = j;
        }
        // blank and comment-only lines are skipped
        if (any) script.push_back(std::move(step));
        if (end == text.size()) break;
    }
    return script;
}

namespace {

struct Referee {
    const Graph& g;

    /// Applies a validated response; returns true when Lister has won.
    bool apply(GameState& s, VertexMask presented, VertexMask painted) const {
        s.uncolored &= ~painted;
        for (VertexMask m = painted; m; m &= m - 1) s.tokens[static_cast<std::size_t>(lowest_vertex(m))] = 0;
        bool lost = false;
        for (VertexMask m = presented & ~painted; m; m &= m - 1) {
            auto& t = s.tokens[static_cast<std::size_t>(lowest_vertex(m))];
            if (--t <= 0) lost = true;
        }
        return lost;
    }

    /// "" when `painted` is a legal answer to `presented`.
    std::string check_response(VertexMask presented, VertexMask painted) const {
        if (painted & ~presented) return "painted vertices that were not presented";
        if (!is_independent(g, painted)) return "painted set is not independent";
        return {};
    }

    VertexMask starved(const GameState& s) const {
        VertexMask out = 0;
        for (VertexMask m = s.uncolored; m; m &= m - 1) {
            if (s.tokens[static_cast<std::size_t>(lowest_vertex(m))] <= 0) out |= bit(lowest_vertex(m));
        }
        return out;
    }
};

std::string set_text(const Graph& g, VertexMask m) {
    std::string out = "{";
    for (VertexMask x = m; x; x &= x - 1) {
        if (out.size() > 1) out += ',';
        out += g.label(lowest_vertex(x));
    }
    return out + "}";
}

void require_same_graph(const Strategy& strategy, const Graph& g) {
    require_tokens_match(strategy.graph(), strategy.tokens());
    if (!strategy.graph().same_structure(g)) throw InputError("the strategy was built for a different graph");
    if (g.order() > kMaskCapacity) throw SizeLimitError("game play supports at most 64 vertices");
}

} // namespace

PlayTrace play(const Strategy& strategy, const Graph& g, const TokenFn& f, const ListerScript& script) {
    require_tokens_match(g, f);
    require_same_graph(strategy, g);
    const Referee ref{g};
    GameState s = GameState::initial(g, f);
    PlayTrace trace;
    trace.uncolored = s.uncolored;
    if (const VertexMask dead = ref.starved(s)) {
        trace.outcome = PlayOutcome::lister_win;
        trace.message = "vertices " + set_text(g, dead) + " start with no tokens";
        return trace;
    }
    auto session = strategy.start();
    for (std::size_t r = 0; r < script.size(); ++r) {
        if (s.uncolored == 0) break;
        const int round = static_cast<int>(r);
        VertexMask presented = 0;
        std::string bad;
        for (Vertex v : script[r]) {
            if (v < 0 || v >= g.order()) {
                bad = "vertex " + std::to_string(v) + " is out of range";
                break;
            }
            if (!(s.uncolored & bit(v))) {
                bad = "vertex " + g.label(v) + " is already colored";
                break;
            }
            presented |= bit(v);
        }
        if (bad.empty() && presented == 0) bad = "empty presented set";
        if (!bad.empty()) {
            trace.outcome = PlayOutcome::malformed_step;
            trace.round = round;
            trace.message = "round " + std::to_string(round) + ": " + bad;
            trace.uncolored = s.uncolored;
            return trace;
        }
        VertexMask painted = 0;
        try {
            painted = session->respond(presented);
        } catch (const StrategyFault& e) {
            trace.outcome = PlayOutcome::strategy_fault;
            trace.round = round;
            trace.message = e.what();
            trace.uncolored = s.uncolored;
            return trace;
        }
        if (const std::string why = ref.check_response(presented, painted); !why.empty()) {
            trace.outcome = PlayOutcome::illegal_response;
            trace.round = round;
            trace.message = "round " + std::to_string(round) + ": " + why + " (" + set_text(g, painted) + ")";
            trace.uncolored = s.uncolored;
            return trace;
        }
        const bool lost = ref.apply(s, presented, painted);
        trace.rounds.push_back({presented, painted, s.tokens});
        trace.uncolored = s.uncolored;
        if (lost) {
            trace.outcome = PlayOutcome::lister_win;
            trace.round = round;
            trace.message = "vertices " + set_text(g, ref.starved(s)) + " ran out of tokens";
            return trace;
        }
    }
    trace.outcome = s.uncolored == 0 ? PlayOutcome::painter_win : PlayOutcome::script_exhausted;
    if (s.uncolored) trace.message = "script ended with " + set_text(g, s.uncolored) + " uncolored";
    return trace;
}

namespace {

using VisitKey = std::tuple<VertexMask, std::vector<int>, std::string>;

class Explorer {
public:
    Explorer(const Graph& g, std::uint64_t budget, StrategyTable* table)
        : ref_{g}, g_(g), budget_(budget), table_(table) {}

    /// Returns a losing continuation for Painter, or nullopt if none exists.
    std::optional<ListerScript> explore(const GameState& s, const PainterSession& session) {
        VisitKey key{s.uncolored, s.tokens, session.fingerprint()};
        if (done_.count(key)) return std::nullopt;
        if (++positions_ > budget_) {
            throw SizeLimitError("adversary: position budget of " + std::to_string(budget_) + " exhausted");
        }
        for (VertexMask presented = s.uncolored; presented; presented = (presented - 1) & s.uncolored) {
            auto next = session.clone();
            VertexMask painted = 0;
            try {
                painted = next->respond(presented);
            } catch (const StrategyFault& e) {
                if (table_) throw;
                message_ = std::string("strategy fault: ") + e.what();
                return ListerScript{mask_to_vertices(presented)};
            }
            if (const std::string why = ref_.check_response(presented, painted); !why.empty()) {
                if (table_) throw StrategyFault("strategy gave an illegal response: " + why);
                message_ = "illegal response: " + why;
                return ListerScript{mask_to_vertices(presented)};
            }
            if (table_) record(s, presented, painted);
            GameState child = s;
            if (ref_.apply(child, presented, painted)) {
                message_ = "vertices " + set_text(g_, ref_.starved(child)) + " ran out of tokens";
                if (table_) continue;
                return ListerScript{mask_to_vertices(presented)};
            }
            if (child.uncolored == 0) continue;
            if (auto rest = explore(child, *next)) {
                rest->insert(rest->begin(), mask_to_vertices(presented));
                return rest;
            }
        }
        done_.insert(std::move(key));
        return std::nullopt;
    }

    std::uint64_t positions() const { return positions_; }
    const std::string& message() const { return message_; }

private:
    void record(const GameState& s, VertexMask presented, VertexMask painted) {
        const auto [it, fresh] = table_->responses.emplace(StrategyTable::Key{s.uncolored, s.tokens, presented}, painted);
        if (!fresh && it->second != painted) {
            throw StrategyFault("strategy answers the same position differently depending on history; "
                                "it cannot be written as a table");
        }
    }

    Referee ref_;
    const Graph& g_;
    std::uint64_t budget_;
    StrategyTable* table_;
    std::set<VisitKey> done_;
    std::uint64_t positions_ = 0;
    std::string message_;
};

} // namespace

AdversaryResult exhaustive_adversary(const Strategy& strategy, const Graph& g, const TokenFn& f, std::uint64_t budget) {
    require_tokens_match(g, f);
    require_same_graph(strategy, g);
    if (g.order() > kMaxAdversaryVertices) {
        throw SizeLimitError("adversary: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                             std::to_string(kMaxAdversaryVertices));
    }
    AdversaryResult out;
    const GameState start = GameState::initial(g, f);
    if (const VertexMask dead = Referee{g}.starved(start)) {
        out.painter_always_wins = false;
        out.refutation = ListerScript{};
        out.message = "vertices " + set_text(g, dead) + " start with no tokens";
        return out;
    }
    if (start.uncolored == 0) return out;
    Explorer ex(g, budget, nullptr);
    const auto session = strategy.start();
    out.refutation = ex.explore(start, *session);
    out.painter_always_wins = !out.refutation.has_value();
    out.positions = ex.positions();
    if (out.refutation) out.message = ex.message();
    return out;
}

StrategyTable materialize_table(const Strategy& strategy, const Graph& g, const TokenFn& f, std::uint64_t budget) {
    require_tokens_match(g, f);
    require_same_graph(strategy, g);
    if (g.order() > kMaxAdversaryVertices) {
        throw SizeLimitError("materialize: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                             std::to_string(kMaxAdversaryVertices));
    }
    StrategyTable table;
    const GameState start = GameState::initial(g, f);
    if (start.uncolored == 0 || Referee{g}.starved(start)) return table;
    Explorer ex(g, budget, &table);
    const auto session = strategy.start();
    ex.explore(start, *session);
    return table;
}

} // namespace sqpaint
