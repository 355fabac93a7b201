#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqpaint/graph.hpp"

namespace sqpaint {

/// Parsed `n m` header plus m vertex pairs. A `# labels: a b c` comment
/// attaches vertex labels; every other `#` comment is ignored.
struct PairList {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::string> labels;
};

PairList parse_pair_list(std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

/// `n m` header then one `u v` line per edge (u < v, sorted). Labels, when
/// present, are emitted as a `# labels:` line before the header.
std::string format_edge_list(const Graph& g);
std::string to_dot(const Graph& g, std::string_view name = "G");

/// 64-bit FNV-1a; guards transcribed fixtures against accidental edits.
std::uint64_t fnv1a(std::string_view text);

} // namespace sqpaint
