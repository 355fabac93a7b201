#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqpaint/graph.hpp"

namespace sqpaint {

struct NamedGraphInfo {
    std::string id;
    /// "" when the graph takes no parameter, otherwise e.g. "n>=3".
    std::string param;
    std::string description;
};

/// Catalog in a fixed order (used by list-graphs).
const std::vector<NamedGraphInfo>& named_graph_catalog();

/// Throws InputError for an unknown id, a missing/extra parameter, or an
/// out-of-range one.
Graph named_graph(std::string_view id, std::span<const int> params = {});

/// "<id>" or "<id>:<param>", e.g. "cycle:7".
Graph named_graph_from_spec(std::string_view spec);

/// The high/low marking the small direct-proof graphs are stated with
/// (K4-e: one degree-3 vertex high; K3vE2: v1, w1 low; K4vE2: v1 low);
/// every other vertex is high. Throws InputError for ids without a marking.
HighLowMarking lemma_marking(std::string_view id);

/// Ids of the small join-type graphs with a stated marking, in catalog order.
std::vector<std::string> lemma_graph_ids();

struct FixtureDigest {
    std::string id;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    bool ok() const { return expected == actual; }
};

/// FNV-1a over format_edge_list() of each transcribed edge-list fixture.
std::vector<FixtureDigest> graph_fixture_digests();

} // namespace sqpaint
