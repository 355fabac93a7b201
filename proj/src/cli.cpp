#include "sqpaint/cli.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqpaint/choosability.hpp"
#include "sqpaint/circulation.hpp"
#include "sqpaint/error.hpp"
#include "sqpaint/graph_io.hpp"
#include "sqpaint/lemma_orientations.hpp"
#include "sqpaint/named_graphs.hpp"
#include "sqpaint/paint_game.hpp"
#include "sqpaint/paperverify.hpp"
#include "sqpaint/play.hpp"

namespace sqpaint {

namespace {

using json = nlohmann::ordered_json;

/// Bad flag values; reported like CLI11's own parse errors (exit 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Opts {
    std::string in;
    std::string graph;
    std::optional<int> n;
    std::string f;
    std::string mode;
    std::string w;
    std::string script;
    std::string strategy;
    std::string save_strategy;
    std::vector<std::string> ids;
    std::string corrupt;
    int d = 2;
    std::uint64_t budget = 0;
    bool json = false;
    bool deterministic = false;
    bool serial = false;
    bool unrestricted = false;
    bool no_reduce = false;
};

struct Result {
    json j = json::object();
    std::string text;
    int status = 0;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return std::round(ms * 1000) / 1000;
}

int parse_int(std::string_view s, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError(std::string(what) + ": '" + std::string(s) + "' is not an integer");
    }
    return v;
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string_view::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// Vertex indices or labels, comma or space separated.
std::vector<Vertex> parse_vertices(const Graph& g, std::string_view text) {
    std::vector<Vertex> out;
    for (const std::string& tok : split(text, ", ")) {
        Vertex v = g.find_label(tok);
        if (v < 0) {
            if (tok.find_first_not_of("0123456789") != std::string::npos) {
                throw InputError("no vertex labelled '" + tok + "'");
            }
            v = parse_int(tok, "vertex");
        }
        if (v < 0 || v >= g.order()) throw InputError("vertex " + tok + " is out of range");
        out.push_back(v);
    }
    return out;
}

std::string graph_spec(const Opts& o) {
    if (o.n && o.graph.find(':') == std::string::npos) return o.graph + ":" + std::to_string(*o.n);
    return o.graph;
}

void require_one_source(const Opts& o) {
    if (!o.in.empty() && !o.graph.empty()) throw UsageError("give either --in or --graph, not both");
    if (o.in.empty() && o.graph.empty()) throw UsageError("an input is required: --in <path> or --graph <id>");
}

Graph load_graph(const Opts& o) {
    require_one_source(o);
    if (!o.in.empty()) return read_edge_list(o.in);
    return named_graph_from_spec(graph_spec(o));
}

struct LoadedDigraph {
    Digraph d;
    std::optional<TokenFn> lemma_f;
};

LoadedDigraph load_digraph(const Opts& o) {
    require_one_source(o);
    if (!o.in.empty()) return {parse_orientation(read_text_file(o.in)), std::nullopt};
    LemmaOrientation lo = lemma_orientation(o.graph, o.n);
    return {std::move(lo.digraph), std::move(lo.f)};
}

/// all=<k> | v0,v1,... | d1[:low=<vertices>] | lemma
TokenFn parse_tokens(const Opts& o, const Graph& g) {
    const std::string& spec = o.f;
    if (spec.empty()) throw UsageError("--f is required");
    if (spec.rfind("all=", 0) == 0) return TokenFn::constant(g.order(), parse_int(spec.substr(4), "--f all"));
    if (spec == "lemma") {
        if (o.graph.empty()) throw UsageError("--f lemma needs a named --graph");
        return tokens_from_marking(g, lemma_marking(o.graph));
    }
    if (spec.rfind("d1", 0) == 0) {
        const std::string rest = spec.substr(2);
        if (rest.empty()) return tokens_from_marking(g, HighLowMarking::all_high(g.order()));
        if (rest.rfind(":low=", 0) != 0) throw UsageError("--f: expected d1 or d1:low=<vertices>");
        const auto low = parse_vertices(g, rest.substr(5));
        return tokens_from_marking(g, HighLowMarking::with_low(g.order(), low));
    }
    TokenFn f;
    for (const std::string& tok : split(spec, ",")) f.values.push_back(parse_int(tok, "--f"));
    if (f.size() != g.order()) {
        throw InputError("--f lists " + std::to_string(f.size()) + " values for " + std::to_string(g.order()) + " vertices");
    }
    return f;
}

json edges_json(const Graph& g) {
    json e = json::array();
    for (Edge x : g.edges()) e.push_back({x.u, x.v});
    return e;
}

json arcs_json(const Digraph& d) {
    json e = json::array();
    for (Arc a : d.arcs()) e.push_back({a.tail, a.head});
    return e;
}

std::string set_text(const Graph& g, VertexMask m) {
    std::string out = "{";
    for (VertexMask x = m; x; x &= x - 1) {
        if (out.size() > 1) out += ',';
        out += g.label(lowest_vertex(x));
    }
    return out + "}";
}

json labels_json(const Graph& g, VertexMask m) {
    json out = json::array();
    for (VertexMask x = m; x; x &= x - 1) out.push_back(g.label(lowest_vertex(x)));
    return out;
}

std::string tokens_text(const TokenFn& f) {
    std::string out;
    for (int x : f.values) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

// ---- verbs --------------------------------------------------------------------

Result cmd_power(const Opts& o, int d) {
    if (d < 1) throw UsageError("--d must be at least 1");
    const Graph g = power(load_graph(o), d);
    Result r;
    r.j = {{"n", g.order()}, {"m", g.size()}, {"complete", g.is_complete()}, {"edges", edges_json(g)}};
    r.text = format_edge_list(g);
    return r;
}

Result cmd_girth(const Opts& o) {
    const int girth_value = girth(load_graph(o));
    Result r;
    if (girth_value == kInfiniteGirth) {
        r.j = {{"girth", "inf"}};
        r.text = "girth=inf\n";
    } else {
        r.j = {{"girth", girth_value}};
        r.text = "girth=" + std::to_string(girth_value) + "\n";
    }
    return r;
}

Result cmd_clique(const Opts& o) {
    const Graph g = load_graph(o);
    const VertexMask c = maximum_clique(g);
    Result r;
    r.j = {{"omega", popcount(c)}, {"clique", labels_json(g, c)}};
    r.text = "omega=" + std::to_string(popcount(c)) + " clique=" + set_text(g, c) + "\n";
    return r;
}

Result cmd_chromatic(const Opts& o) {
    const int chi = chromatic_number(load_graph(o));
    Result r;
    r.j = {{"chi", chi}};
    r.text = "chi=" + std::to_string(chi) + "\n";
    return r;
}

Result cmd_moore(const Opts& o) {
    const Graph g = load_graph(o);
    const bool m = is_moore(g);
    Result r;
    r.j = {{"moore", m}, {"n", g.order()}, {"max_degree", g.max_degree()}};
    r.text = std::string("moore=") + (m ? "true" : "false") + " n=" + std::to_string(g.order()) +
             " max_degree=" + std::to_string(g.max_degree()) + "\n";
    return r;
}

Result cmd_circulations(const Opts& o) {
    const Digraph d = load_digraph(o).d;
    const CirculationCount c = o.serial ? count_circulations_serial(d) : count_circulations(d);
    Result r;
    r.j = {{"ee", c.ee}, {"eo", c.eo}, {"diff", c.diff()}};
    r.text = "ee=" + std::to_string(c.ee) + " eo=" + std::to_string(c.eo) + " diff=" + std::to_string(c.diff()) + "\n";
    return r;
}

Result cmd_diff(const Opts& o) {
    const Digraph d = load_digraph(o).d;
    const std::vector<Vertex> w = parse_vertices(d.underlying(), o.w);
    const std::int64_t full = count_circulations(d).diff();
    const std::int64_t restricted = diff_restricted(d, w);
    Result r;
    r.j = {{"diff", full}, {"w", labels_json(d.underlying(), vertices_to_mask(w))}, {"restricted", restricted}};
    r.text = "diff=" + std::to_string(full) + " w=" + set_text(d.underlying(), vertices_to_mask(w)) +
             " restricted=" + std::to_string(restricted) + "\n";
    return r;
}

Result cmd_at_verify(const Opts& o) {
    const LoadedDigraph ld = load_digraph(o);
    TokenFn f;
    if (o.f.empty()) {
        if (!ld.lemma_f) throw UsageError("--f is required for an orientation read from a file");
        f = *ld.lemma_f;
    } else {
        f = parse_tokens(o, ld.d.underlying());
    }
    const ATCertificate cert = verify_at_certificate(ld.d, f);
    Result r;
    r.j = {{"verdict", cert.verdict}, {"budget_ok", cert.budget_ok}, {"ee", cert.count.ee},
           {"eo", cert.count.eo}, {"diff", cert.count.diff()}, {"f", f.values}, {"arcs", arcs_json(ld.d)}};
    r.text = std::string("verdict=") + (cert.verdict ? "true" : "false") + " budget_ok=" + (cert.budget_ok ? "true" : "false") +
             " ee=" + std::to_string(cert.count.ee) + " eo=" + std::to_string(cert.count.eo) +
             " diff=" + std::to_string(cert.count.diff()) + "\nf=" + tokens_text(f) + "\n";
    r.status = cert.verdict ? 0 : 1;
    return r;
}

Result cmd_at_search(const Opts& o) {
    const Graph g = load_graph(o);
    const TokenFn f = parse_tokens(o, g);
    const auto start = Clock::now();
    const OrientationSearch s = search_at_orientation(g, f, o.budget ? o.budget : 50'000'000);
    Result r;
    r.j = {{"status", to_string(s.status)}, {"nodes", s.nodes}, {"orientations_checked", s.orientations_checked}};
    r.text = "status=" + to_string(s.status) + " nodes=" + std::to_string(s.nodes) +
             " orientations_checked=" + std::to_string(s.orientations_checked);
    if (s.digraph) {
        r.j["ee"] = s.count.ee;
        r.j["eo"] = s.count.eo;
        r.j["diff"] = s.count.diff();
        r.j["arcs"] = arcs_json(*s.digraph);
        r.text += " ee=" + std::to_string(s.count.ee) + " eo=" + std::to_string(s.count.eo) +
                  " diff=" + std::to_string(s.count.diff()) + "\n" + format_orientation(*s.digraph);
    } else {
        r.text += "\n";
    }
    if (!o.deterministic) r.j["elapsed_ms"] = elapsed_ms(start);
    if (s.status == SearchStatus::budget_exceeded) r.status = 1;
    return r;
}

Result cmd_f1f2g(const Opts& o) {
    if (o.mode.empty()) throw UsageError("--mode f1|f2|g is required");
    if (!o.n) throw UsageError("--n is required");
    WeakMode mode;
    try {
        mode = parse_weak_mode(o.mode);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
    const int n = *o.n;
    const std::int64_t value = weakly_eulerian_diff(n, mode);
    const int closed = mode == WeakMode::f1 ? f1_closed_form(n) : mode == WeakMode::g ? g_closed_form(n) : -f1_closed_form(n - 2);
    Result r;
    const std::string name = to_string(mode);
    r.j = {{"mode", name}, {"n", n}, {"value", value}, {"closed_form", closed}};
    r.text = name + "(" + std::to_string(n) + ")=" + std::to_string(value) + " closed_form=" + std::to_string(closed) + "\n";
    return r;
}

Result cmd_paint(const Opts& o) {
    const Graph g = load_graph(o);
    const TokenFn f = parse_tokens(o, g);
    SolverOptions opt;
    opt.restrict_to_maximal = !o.unrestricted;
    opt.reduce_very_low = !o.no_reduce;
    if (o.budget) opt.node_budget = o.budget;
    const auto start = Clock::now();
    const PaintOutcome out = is_f_paintable(g, f, opt);
    Result r;
    const std::string verdict = out.painter_wins ? "painter-wins" : "lister-wins";
    r.j = {{"verdict", verdict},
           {"f", f.values},
           {"positions", out.stats.nodes},
           {"memo_entries", out.stats.memo_entries},
           {"normalized_vertices", out.stats.normalized_vertices}};
    r.text = "verdict=" + verdict + " positions=" + std::to_string(out.stats.nodes) +
             " memo_entries=" + std::to_string(out.stats.memo_entries) +
             " normalized_vertices=" + std::to_string(out.stats.normalized_vertices) + "\nf=" + tokens_text(f) + "\n";
    if (!o.save_strategy.empty()) {
        if (!out.strategy) throw InputError("Lister wins; there is no Painter strategy to save");
        const StrategyTable table = materialize_table(*out.strategy, g, f);
        std::ofstream file(o.save_strategy);
        if (!file) throw InputError("cannot write " + o.save_strategy);
        file << strategy_table_to_json(g, f, table).dump() << "\n";
        r.j["strategy_entries"] = table.responses.size();
        r.text += "strategy_entries=" + std::to_string(table.responses.size()) + " written to " + o.save_strategy + "\n";
    }
    if (!o.deterministic) r.j["elapsed_ms"] = elapsed_ms(start);
    return r;
}

Result cmd_choosable(const Opts& o) {
    const Graph g = load_graph(o);
    const TokenFn f = parse_tokens(o, g);
    const auto start = Clock::now();
    const ChoosabilityResult c = o.serial ? is_f_choosable_serial(g, f) : is_f_choosable(g, f);
    Result r;
    r.j = {{"choosable", c.choosable}, {"f", f.values}, {"assignments_checked", c.assignments_checked}};
    r.text = std::string("choosable=") + (c.choosable ? "true" : "false") +
             " assignments_checked=" + std::to_string(c.assignments_checked) + "\nf=" + tokens_text(f) + "\n";
    if (c.witness) {
        r.j["witness"] = *c.witness;
        r.text += "uncolorable lists:\n";
        for (Vertex v = 0; v < g.order(); ++v) {
            r.text += "  " + g.label(v) + ":";
            for (int col : (*c.witness)[static_cast<std::size_t>(v)]) r.text += " " + std::to_string(col);
            r.text += "\n";
        }
    }
    if (!o.deterministic) r.j["elapsed_ms"] = elapsed_ms(start);
    return r;
}

Result cmd_play(const Opts& o) {
    if (o.script.empty()) throw UsageError("--script is required");
    Graph g;
    TokenFn f;
    std::optional<Strategy> strategy;
    if (!o.strategy.empty()) {
        if (!o.in.empty() || !o.graph.empty()) {
            throw UsageError("--strategy carries its own graph and f; drop --in/--graph");
        }
        try {
            strategy = strategy_from_json(nlohmann::json::parse(read_text_file(o.strategy)));
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("strategy file is not JSON: ") + e.what());
        }
        g = strategy->graph();
        f = o.f.empty() ? strategy->tokens() : parse_tokens(o, g);
    } else {
        g = load_graph(o);
        f = parse_tokens(o, g);
        SolverOptions opt;
        if (o.budget) opt.node_budget = o.budget;
        strategy = solver_strategy(std::make_shared<PaintSolver>(g, f, opt));
    }
    const ListerScript script = parse_lister_script(read_text_file(o.script));
    const PlayTrace t = play(*strategy, g, f, script);
    Result r;
    json rounds = json::array();
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        const PlayRound& pr = t.rounds[i];
        rounds.push_back({{"presented", labels_json(g, pr.presented)}, {"painted", labels_json(g, pr.painted)}, {"tokens", pr.tokens}});
        r.text += "round " + std::to_string(i) + ": presented " + set_text(g, pr.presented) + " painted " +
                  set_text(g, pr.painted) + "\n";
    }
    r.j = {{"outcome", to_string(t.outcome)}, {"round", t.round}, {"message", t.message},
           {"uncolored", labels_json(g, t.uncolored)}, {"rounds", rounds}};
    r.text += "outcome=" + to_string(t.outcome);
    if (t.round >= 0) r.text += " round=" + std::to_string(t.round);
    r.text += "\n";
    if (!t.message.empty()) r.text += t.message + "\n";
    if (t.outcome == PlayOutcome::malformed_step || t.outcome == PlayOutcome::illegal_response ||
        t.outcome == PlayOutcome::strategy_fault) {
        r.status = 1;
    }
    return r;
}

Result cmd_verify_paper(const Opts& o) {
    VerifyOptions vo;
    if (!o.corrupt.empty()) vo.corrupt = o.corrupt;
    if (o.budget) vo.paint_budget = o.budget;
    Report rep;
    if (o.ids.empty()) {
        rep = verify_all(vo);
    } else {
        for (const std::string& id : o.ids) rep.certificates.push_back(verify_certificate(id, vo));
    }
    Result r;
    // JSON lines rather than one document; emitted verbatim by run_cli
    r.text = o.json ? report_json_lines(rep, o.deterministic) : report_table(rep, o.deterministic);
    r.j = nullptr;
    r.status = rep.ok() ? 0 : 1;
    return r;
}

Result cmd_list_graphs() {
    Result r;
    json graphs = json::array();
    std::ostringstream text;
    text << "graphs:\n";
    for (const NamedGraphInfo& info : named_graph_catalog()) {
        graphs.push_back({{"id", info.id}, {"param", info.param}, {"description", info.description}});
        text << "  " << std::left << std::setw(22) << (info.param.empty() ? info.id : info.id + " (" + info.param + ")")
             << " " << info.description << "\n";
    }
    json orientations = json::array();
    text << "orientations:\n";
    for (const LemmaOrientationInfo& info : lemma_orientation_catalog()) {
        orientations.push_back({{"id", info.id}, {"takes_n", info.takes_n}, {"description", info.description}});
        const std::string name = info.takes_n ? info.id + " (n>=" + std::to_string(info.min_n) + ")" : info.id;
        text << "  " << std::left << std::setw(22) << name << " " << info.description << "\n";
    }
    r.j = {{"graphs", graphs}, {"orientations", orientations}};
    r.text = text.str();
    return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for graph squares, paintability and Alon-Tarsi orientations", "sqpaint"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    std::optional<int> n_value;

    const auto graph_input = [&](CLI::App* sub) {
        sub->add_option("--in", o.in, "edge-list file");
        sub->add_option("--graph", o.graph, "named graph id, e.g. petersen or cycle:7");
        sub->add_option("--n", o.n, "parameter for --graph families");
    };
    const auto digraph_input = [&](CLI::App* sub) {
        sub->add_option("--in", o.in, "orientation file (n m header, then arcs u v)");
        sub->add_option("--graph", o.graph, "canned orientation id, e.g. fig9a_k4e or cycle_pendant");
        sub->add_option("--n", o.n, "parameter for the cycle orientation families");
    };
    const auto output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_flag("--deterministic", o.deterministic, "omit timing fields");
    };
    const auto tokens = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--f", o.f, "all=<k> | v0,v1,.. | d1[:low=<vertices>] | lemma");
        if (required) opt->required();
    };

    auto* square_cmd = app.add_subcommand("square", "square of a graph (edge list)");
    graph_input(square_cmd);
    output_flags(square_cmd);
    auto* power_cmd = app.add_subcommand("power", "d-th power of a graph (edge list)");
    graph_input(power_cmd);
    power_cmd->add_option("--d", o.d, "distance")->required();
    output_flags(power_cmd);
    auto* girth_cmd = app.add_subcommand("girth", "shortest cycle length");
    graph_input(girth_cmd);
    output_flags(girth_cmd);
    auto* clique_cmd = app.add_subcommand("clique", "clique number");
    graph_input(clique_cmd);
    output_flags(clique_cmd);
    auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic number (n <= 20)");
    graph_input(chromatic_cmd);
    output_flags(chromatic_cmd);
    auto* moore_cmd = app.add_subcommand("moore", "Moore-graph test");
    graph_input(moore_cmd);
    output_flags(moore_cmd);
    auto* circ_cmd = app.add_subcommand("circulations", "even/odd Eulerian subgraph counts");
    digraph_input(circ_cmd);
    circ_cmd->add_flag("--serial", o.serial, "single-threaded reference counter");
    output_flags(circ_cmd);
    auto* diff_cmd = app.add_subcommand("diff", "diff, and diff restricted to circulations using every vertex of --w");
    digraph_input(diff_cmd);
    diff_cmd->add_option("--w", o.w, "vertices (indices or labels)")->required();
    output_flags(diff_cmd);
    auto* atv_cmd = app.add_subcommand("at-verify", "check an Alon-Tarsi certificate");
    digraph_input(atv_cmd);
    tokens(atv_cmd, false);
    output_flags(atv_cmd);
    auto* ats_cmd = app.add_subcommand("at-search", "search for an orientation certifying f");
    graph_input(ats_cmd);
    tokens(ats_cmd, true);
    ats_cmd->add_option("--budget", o.budget, "search node limit");
    output_flags(ats_cmd);
    auto* weak_cmd = app.add_subcommand("f1f2g", "weakly Eulerian path-square counts");
    weak_cmd->add_option("--mode", o.mode, "f1 | f2 | g")->required();
    weak_cmd->add_option("--n", o.n, "path length")->required();
    output_flags(weak_cmd);
    auto* paint_cmd = app.add_subcommand("paint", "exact Lister-Painter game value");
    graph_input(paint_cmd);
    tokens(paint_cmd, true);
    paint_cmd->add_option("--budget", o.budget, "position limit");
    paint_cmd->add_option("--save-strategy", o.save_strategy, "write Painter's strategy table (JSON)");
    paint_cmd->add_flag("--unrestricted", o.unrestricted, "let Painter answer with any independent set");
    paint_cmd->add_flag("--no-reduce", o.no_reduce, "keep vertices with more tokens than neighbours");
    output_flags(paint_cmd);
    auto* choose_cmd = app.add_subcommand("choosable", "exact f-choosability (n <= 7, f <= 4)");
    graph_input(choose_cmd);
    tokens(choose_cmd, true);
    choose_cmd->add_flag("--serial", o.serial, "single-threaded reference search");
    output_flags(choose_cmd);
    auto* play_cmd = app.add_subcommand("play", "replay a Lister script against a Painter strategy");
    graph_input(play_cmd);
    tokens(play_cmd, false);
    play_cmd->add_option("--script", o.script, "one presented set per line")->required();
    play_cmd->add_option("--strategy", o.strategy, "strategy table (JSON); default: the exact solver");
    play_cmd->add_option("--budget", o.budget, "solver position limit");
    output_flags(play_cmd);
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the certificate suite");
    verify_cmd->add_option("--id", o.ids, "run only these certificates");
    verify_cmd->add_option("--budget", o.budget, "game-solver position limit");
    verify_cmd->add_option("--corrupt", o.corrupt, "fault injection: damage this certificate's fixture")
        ->group("");
    output_flags(verify_cmd);
    auto* list_cmd = app.add_subcommand("list-graphs", "named graphs and canned orientations");
    output_flags(list_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    Result r;
    try {
        if (square_cmd->parsed()) r = cmd_power(o, 2);
        else if (power_cmd->parsed()) r = cmd_power(o, o.d);
        else if (girth_cmd->parsed()) r = cmd_girth(o);
        else if (clique_cmd->parsed()) r = cmd_clique(o);
        else if (chromatic_cmd->parsed()) r = cmd_chromatic(o);
        else if (moore_cmd->parsed()) r = cmd_moore(o);
        else if (circ_cmd->parsed()) r = cmd_circulations(o);
        else if (diff_cmd->parsed()) r = cmd_diff(o);
        else if (atv_cmd->parsed()) r = cmd_at_verify(o);
        else if (ats_cmd->parsed()) r = cmd_at_search(o);
        else if (weak_cmd->parsed()) r = cmd_f1f2g(o);
        else if (paint_cmd->parsed()) r = cmd_paint(o);
        else if (choose_cmd->parsed()) r = cmd_choosable(o);
        else if (play_cmd->parsed()) r = cmd_play(o);
        else if (verify_cmd->parsed()) r = cmd_verify_paper(o);
        else if (list_cmd->parsed()) r = cmd_list_graphs();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (o.json && !r.j.is_null()) {
        out << r.j.dump() << "\n";
    } else {
        out << r.text;
    }
    out.flush();
    return r.status;
}

} // namespace sqpaint
