#include "sqpaint/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "sqpaint/error.hpp"

namespace sqpaint {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

PairList parse_pair_list(std::string_view text) {
    PairList out;
    bool have_header = false;
    std::size_t expected = 0;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            constexpr std::string_view tag = "labels:";
            auto body = trim(line.substr(1));
            if (body.starts_with(tag)) {
                std::istringstream ls{std::string(body.substr(tag.size()))};
                out.labels.clear();
                for (std::string token; ls >> token;) out.labels.push_back(token);
            }
            continue;
        }
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        std::istringstream ls{std::string(line)};
        long long a = 0, b = 0;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw InputError("line " + std::to_string(line_no) + ": expected two integers, got '" + std::string(line) + "'");
        }
        if (!have_header) {
            if (a < 0 || b < 0 || a > 1'000'000 || b > 100'000'000) {
                throw InputError("line " + std::to_string(line_no) + ": header counts out of range");
            }
            out.n = static_cast<int>(a);
            expected = static_cast<std::size_t>(b);
            have_header = true;
            continue;
        }
        if (a < 0 || b < 0 || a >= out.n || b >= out.n) {
            throw InputError("line " + std::to_string(line_no) + ": pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ") has an endpoint outside 0.." + std::to_string(out.n - 1));
        }
        out.pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (!have_header) throw InputError("missing 'n m' header line");
    if (out.pairs.size() != expected) {
        throw InputError("header declares " + std::to_string(expected) + " pairs but " +
                         std::to_string(out.pairs.size()) + " were given");
    }
    if (!out.labels.empty() && static_cast<int>(out.labels.size()) != out.n) {
        throw InputError("labels line names " + std::to_string(out.labels.size()) + " vertices, header says " +
                         std::to_string(out.n));
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph parse_edge_list(std::string_view text) {
    const PairList p = parse_pair_list(text);
    return graph_from_edges(p.n, p.pairs).with_labels(p.labels);
}

Graph read_edge_list(const std::filesystem::path& path) { return parse_edge_list(read_text_file(path)); }

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    if (g.has_labels()) {
        out << "# labels:";
        for (const auto& l : g.labels()) out << ' ' << l;
        out << '\n';
    }
    out << g.order() << ' ' << g.size() << '\n';
    for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (Edge e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace sqpaint
