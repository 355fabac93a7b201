#include "sqpaint/paint_game.hpp"

#include <algorithm>
#include <sstream>

#include "sqpaint/error.hpp"

namespace sqpaint {

namespace {

constexpr int kNibble = 4;
constexpr std::uint64_t kNibbleMask = 0xF;

int nibble(std::uint64_t packed, Vertex v) { return static_cast<int>((packed >> (kNibble * v)) & kNibbleMask); }

std::uint64_t clear_nibbles(std::uint64_t packed, VertexMask set) {
    for (VertexMask m = set; m; m &= m - 1) packed &= ~(kNibbleMask << (kNibble * lowest_vertex(m)));
    return packed;
}

std::uint64_t decrement(std::uint64_t packed, VertexMask set) {
    for (VertexMask m = set; m; m &= m - 1) packed -= std::uint64_t{1} << (kNibble * lowest_vertex(m));
    return packed;
}

} // namespace

bool lex_less(VertexMask a, VertexMask b) {
    while (a && b) {
        const Vertex x = lowest_vertex(a);
        const Vertex y = lowest_vertex(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

bool is_independent(const Graph& g, VertexMask set) {
    for (VertexMask m = set; m; m &= m - 1) {
        if (g.neighbor_mask(lowest_vertex(m)) & set) return false;
    }
    return true;
}

GameState GameState::initial(const Graph& g, const TokenFn& f) {
    require_tokens_match(g, f);
    return {g.all_vertices_mask(), f.values};
}

PaintSolver::PaintSolver(const Graph& g, const TokenFn& f, SolverOptions options)
    : g_(g), f_(f), options_(options), n_(g.order()) {
    require_tokens_match(g, f);
    if (n_ > kMaxPaintVertices) {
        throw SizeLimitError("paint solver: " + std::to_string(n_) + " vertices exceeds the limit of " +
                             std::to_string(kMaxPaintVertices));
    }
    for (Vertex v = 0; v < n_; ++v) {
        auto& x = f_.values[static_cast<std::size_t>(v)];
        if (options_.reduce_very_low && x > g.degree(v) + 1) {
            x = g.degree(v) + 1;
            ++normalized_;
        }
        if (x > static_cast<int>(kNibbleMask)) {
            throw SizeLimitError("paint solver: f(" + std::to_string(v) + ")=" + std::to_string(x) +
                                 " does not fit the 4-bit token encoding");
        }
    }
    if (f_.total() > kMaxPaintTokenSum) {
        throw SizeLimitError("paint solver: token sum " + std::to_string(f_.total()) + " exceeds the limit of " +
                             std::to_string(kMaxPaintTokenSum));
    }
    for (Vertex v = 0; v < n_; ++v) nbr_.push_back(g.neighbor_mask(v));
    mis_cache_.resize(std::size_t{1} << n_);
    ind_cache_.resize(std::size_t{1} << n_);
}

GameState PaintSolver::initial_state() const { return GameState::initial(g_, f_); }

std::uint64_t PaintSolver::pack(const GameState& s) const {
    if (static_cast<int>(s.tokens.size()) != n_) throw InputError("game state has the wrong number of token entries");
    std::uint64_t packed = 0;
    for (VertexMask m = s.uncolored; m; m &= m - 1) {
        const Vertex v = lowest_vertex(m);
        const int t = s.tokens[static_cast<std::size_t>(v)];
        if (t < 0 || t > static_cast<int>(kNibbleMask)) throw InputError("token value out of range in game state");
        packed |= static_cast<std::uint64_t>(t) << (kNibble * v);
    }
    return packed;
}

bool PaintSolver::painter_wins(const GameState& s) {
    if (s.uncolored & ~g_.all_vertices_mask()) throw InputError("game state names a vertex outside the graph");
    return solve(s.uncolored, pack(s));
}

VertexMask PaintSolver::reduce(VertexMask u, std::uint64_t packed) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexMask m = u; m; m &= m - 1) {
            const Vertex v = lowest_vertex(m);
            if (nibble(packed, v) > popcount(nbr_[static_cast<std::size_t>(v)] & u)) {
                u &= ~bit(v);
                changed = true;
            }
        }
    }
    return u;
}

const std::vector<VertexMask>& PaintSolver::all_independent(VertexMask within) {
    auto& slot = ind_cache_[within];
    if (!slot) {
        auto sets = std::make_unique<std::vector<VertexMask>>();
        // extend independent sets vertex by vertex (in increasing order)
        sets->push_back(0);
        for (VertexMask m = within; m; m &= m - 1) {
            const Vertex v = lowest_vertex(m);
            const std::size_t existing = sets->size();
            for (std::size_t i = 0; i < existing; ++i) {
                const VertexMask s = (*sets)[i];
                if (!(s & nbr_[static_cast<std::size_t>(v)])) sets->push_back(s | bit(v));
            }
        }
        std::sort(sets->begin(), sets->end(), lex_less);
        slot = std::move(sets);
    }
    return *slot;
}

const std::vector<VertexMask>& PaintSolver::maximal_independent(VertexMask within) {
    auto& slot = mis_cache_[within];
    if (!slot) {
        auto sets = std::make_unique<std::vector<VertexMask>>();
        for (VertexMask s : all_independent(within)) {
            bool maximal = true;
            for (VertexMask m = within & ~s; m; m &= m - 1) {
                if (!(nbr_[static_cast<std::size_t>(lowest_vertex(m))] & s)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) sets->push_back(s);
        }
        slot = std::move(sets);
    }
    return *slot;
}

bool PaintSolver::solve(VertexMask u, std::uint64_t packed) {
    if (options_.reduce_very_low) {
        const VertexMask kept = reduce(u, packed);
        packed = clear_nibbles(packed, u & ~kept);
        u = kept;
    }
    if (u == 0) return true;
    for (VertexMask m = u; m; m &= m - 1) {
        if (nibble(packed, lowest_vertex(m)) == 0) return false;
    }
    const std::uint64_t key = packed | (static_cast<std::uint64_t>(u) << (kNibble * kMaxPaintVertices));
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > options_.node_budget) {
        throw SizeLimitError("paint solver: node budget of " + std::to_string(options_.node_budget) +
                             " positions exhausted");
    }

    bool result = true;
    for (VertexMask s = u; s && result; s = (s - 1) & u) {
        // vertices on their last token must be painted this round
        VertexMask forced = 0;
        VertexMask forced_nbrs = 0;
        for (VertexMask m = s; m; m &= m - 1) {
            const Vertex v = lowest_vertex(m);
            if (nibble(packed, v) == 1) {
                forced |= bit(v);
                forced_nbrs |= nbr_[static_cast<std::size_t>(v)];
            }
        }
        if (forced & forced_nbrs) {
            result = false;
            break;
        }
        const VertexMask free = s & ~forced & ~forced_nbrs;
        const auto& options = options_.restrict_to_maximal ? maximal_independent(free) : all_independent(free);
        bool answered = false;
        for (VertexMask extra : options) {
            const VertexMask painted = forced | extra;
            const std::uint64_t child = decrement(clear_nibbles(packed, painted), s & ~painted);
            if (solve(u & ~painted, child)) {
                answered = true;
                break;
            }
        }
        if (!answered) result = false;
    }
    memo_.emplace(key, result);
    return result;
}

std::optional<VertexMask> PaintSolver::winning_response(const GameState& s, VertexMask presented) {
    if (presented == 0 || (presented & ~s.uncolored)) {
        throw InputError("presented set must be a nonempty subset of the uncolored vertices");
    }
    VertexMask forced = 0;
    VertexMask forced_nbrs = 0;
    for (VertexMask m = presented; m; m &= m - 1) {
        const Vertex v = lowest_vertex(m);
        if (s.tokens[static_cast<std::size_t>(v)] <= 1) {
            forced |= bit(v);
            forced_nbrs |= nbr_[static_cast<std::size_t>(v)];
        }
    }
    if (forced & forced_nbrs) return std::nullopt;
    const VertexMask free = presented & ~forced & ~forced_nbrs;
    auto try_options = [&](const std::vector<VertexMask>& options) -> std::optional<VertexMask> {
        for (VertexMask extra : options) {
            const VertexMask painted = forced | extra;
            GameState child = s;
            child.uncolored &= ~painted;
            for (VertexMask m = painted; m; m &= m - 1) child.tokens[static_cast<std::size_t>(lowest_vertex(m))] = 0;
            for (VertexMask m = presented & ~painted; m; m &= m - 1) --child.tokens[static_cast<std::size_t>(lowest_vertex(m))];
            if (painter_wins(child)) return painted;
        }
        return std::nullopt;
    };
    if (auto r = try_options(maximal_independent(free))) return r;
    return try_options(all_independent(free));
}

SolveStats PaintSolver::stats() const { return {nodes_, memo_.size(), normalized_}; }

namespace {

class SolverSession final : public PainterSession {
public:
    SolverSession(std::shared_ptr<PaintSolver> solver, GameState state)
        : solver_(std::move(solver)), state_(std::move(state)) {}

    VertexMask respond(VertexMask presented) override {
        presented &= state_.uncolored;
        if (presented == 0) return 0;
        VertexMask painted = 0;
        if (auto r = solver_->winning_response(state_, presented)) {
            painted = *r;
        } else {
            // lost position: paint greedily (least vertices first) and let play() report it
            for (VertexMask m = presented; m; m &= m - 1) {
                const Vertex v = lowest_vertex(m);
                if (!(solver_->graph().neighbor_mask(v) & painted)) painted |= bit(v);
            }
        }
        state_.uncolored &= ~painted;
        for (VertexMask m = painted; m; m &= m - 1) state_.tokens[static_cast<std::size_t>(lowest_vertex(m))] = 0;
        for (VertexMask m = presented & ~painted; m; m &= m - 1) {
            auto& t = state_.tokens[static_cast<std::size_t>(lowest_vertex(m))];
            if (t > 0) --t;
        }
        return painted;
    }

    std::unique_ptr<PainterSession> clone() const override { return std::make_unique<SolverSession>(*this); }

    std::string fingerprint() const override {
        std::ostringstream out;
        out << "solver:" << state_.uncolored;
        for (int t : state_.tokens) out << ',' << t;
        return out.str();
    }

private:
    std::shared_ptr<PaintSolver> solver_;
    GameState state_;
};

class SolverStrategyImpl final : public StrategyImpl {
public:
    explicit SolverStrategyImpl(std::shared_ptr<PaintSolver> solver) : solver_(std::move(solver)) {}
    std::unique_ptr<PainterSession> start() const override {
        return std::make_unique<SolverSession>(solver_, solver_->initial_state());
    }
    std::string kind() const override { return "solver"; }

private:
    std::shared_ptr<PaintSolver> solver_;
};

} // namespace

Strategy solver_strategy(std::shared_ptr<PaintSolver> solver) {
    Graph g = solver->graph();
    TokenFn f = solver->tokens();
    return Strategy(std::move(g), std::move(f), std::make_shared<SolverStrategyImpl>(std::move(solver)));
}

PaintOutcome is_f_paintable(const Graph& g, const TokenFn& f, SolverOptions options) {
    auto solver = std::make_shared<PaintSolver>(g, f, options);
    PaintOutcome out;
    out.painter_wins = solver->painter_wins();
    out.stats = solver->stats();
    if (out.painter_wins) out.strategy = solver_strategy(solver);
    return out;
}

PaintOutcome is_d1_paintable(const Graph& g, const HighLowMarking& marking, SolverOptions options) {
    return is_f_paintable(g, tokens_from_marking(g, marking), options);
}

} // namespace sqpaint
