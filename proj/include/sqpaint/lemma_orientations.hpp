#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqpaint/digraph.hpp"
#include "sqpaint/graph.hpp"
#include "sqpaint/named_graphs.hpp"

namespace sqpaint {

struct LemmaOrientation {
    std::string id;
    /// named_graph id of the underlying graph (with ":n" for the cycle families).
    std::string graph_id;
    Digraph digraph;
    HighLowMarking marking;
    /// f(v) = d(v)-1 for high vertices, d(v) for low ones.
    TokenFn f;
};

struct LemmaOrientationInfo {
    std::string id;
    bool takes_n = false;
    int min_n = 0;
    std::string description;
};

const std::vector<LemmaOrientationInfo>& lemma_orientation_catalog();

/// The canned orientations: the eleven small-graph figures (fig9a_k4e ..
/// fig10e_c6sq), the three pentagon orientations (farlinked, threeunlinked,
/// b1b2) and the cycle families (cycle_pendant n, cycle_2pendant n,
/// cycle_2pendant_edge8) built by their orientation rule. Each transcribed
/// arc list is oriented against the corresponding named graph, so a
/// transcription that disagrees with the graph is rejected.
LemmaOrientation lemma_orientation(std::string_view id, std::optional<int> n = std::nullopt);

/// Figure transcriptions of the rule-built cycle orientations (n = 7, 8, 8):
/// ids fig4_cycle_pendant7, fig5_cycle_2pendant8, fig6_cycle_2pendant_edge8.
Digraph transcribed_cycle_orientation(std::string_view id);

/// FNV-1a digests over format_orientation() of every transcribed arc list.
std::vector<FixtureDigest> orientation_fixture_digests();

} // namespace sqpaint
