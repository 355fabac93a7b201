#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqpaint/graph.hpp"
#include "sqpaint/strategy.hpp"

namespace sqpaint {

enum class PlayOutcome {
    painter_win,
    lister_win,
    script_exhausted,
    malformed_step,
    illegal_response,
    strategy_fault,
};

std::string to_string(PlayOutcome o);

struct PlayRound {
    VertexMask presented = 0;
    VertexMask painted = 0;
    /// Remaining tokens per vertex after the round (0 for colored vertices).
    std::vector<int> tokens;
};

struct PlayTrace {
    std::vector<PlayRound> rounds;
    PlayOutcome outcome = PlayOutcome::script_exhausted;
    /// Round index (0-based) the outcome refers to, -1 when not tied to one.
    int round = -1;
    std::string message;
    VertexMask uncolored = 0;
};

/// A Lister script: raw vertex lists, validated by play() so that a bad step
/// is reported at its round rather than rejected up front.
using ListerScript = std::vector<std::vector<Vertex>>;

/// One vertex set per line, space separated; '#' starts a comment. Only
/// non-integer text is an error here (InputError with the line number).
ListerScript parse_lister_script(std::string_view text);

/// Referee a game of `strategy` against the scripted Lister on (g, f). Never
/// throws for adversarial scripts or misbehaving strategies.
PlayTrace play(const Strategy& strategy, const Graph& g, const TokenFn& f, const ListerScript& script);

struct AdversaryResult {
    bool painter_always_wins = true;
    std::uint64_t positions = 0;
    /// When Painter can be beaten: a Lister script that does it.
    std::optional<ListerScript> refutation;
    std::string message;
};

inline constexpr int kMaxAdversaryVertices = 10;

/// Every Lister move sequence against `strategy` (memoized on the position
/// and the session fingerprint). Throws SizeLimitError past `budget`
/// positions or kMaxAdversaryVertices.
AdversaryResult exhaustive_adversary(const Strategy& strategy, const Graph& g, const TokenFn& f,
                                     std::uint64_t budget = 5'000'000);

/// Records the strategy's answer to every (position, presented set) reachable
/// when it plays on (g, f). The table replays identically. Throws
/// StrategyFault if the strategy does.
StrategyTable materialize_table(const Strategy& strategy, const Graph& g, const TokenFn& f,
                                std::uint64_t budget = 5'000'000);

} // namespace sqpaint
