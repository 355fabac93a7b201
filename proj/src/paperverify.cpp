#include "sqpaint/paperverify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include "sqpaint/choosability.hpp"
#include "sqpaint/circulation.hpp"
#include "sqpaint/error.hpp"
#include "sqpaint/graph_io.hpp"
#include "sqpaint/lemma_orientations.hpp"
#include "sqpaint/named_graphs.hpp"
#include "sqpaint/paint_game.hpp"

namespace sqpaint {

std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::circulation_count: return "circulation-count";
        case CertKind::at_verdict: return "at-verdict";
        case CertKind::paint_verdict: return "paint-verdict";
        case CertKind::structural: return "structural";
        case CertKind::formula_identity: return "formula-identity";
    }
    return "?";
}

int Report::passed() const {
    int k = 0;
    for (const auto& c : certificates) k += c.pass ? 1 : 0;
    return k;
}

int Report::failed() const { return static_cast<int>(certificates.size()) - passed(); }

namespace {

struct Outcome {
    std::string expected;
    std::string observed;
    std::string note;
};

struct Ctx {
    bool corrupt = false;
    std::uint64_t paint_budget = 0;
    int lo = 0;
    int hi = 0;
};

using CheckFn = std::function<Outcome(const Ctx&)>;

struct Entry {
    CheckInfo info;
    CheckFn run;
};

// ---- fault injection -------------------------------------------------------

Digraph damage(const Digraph& d) {
    auto arcs = d.arcs();
    // flipping a single arc happens to preserve some counts; flip two
    if (!arcs.empty()) std::swap(arcs.front().tail, arcs.front().head);
    if (arcs.size() > 1) std::swap(arcs.back().tail, arcs.back().head);
    return Digraph::from_arcs(d.order(), arcs, d.underlying().labels());
}

Graph damage(const Graph& g) {
    auto edges = g.edges();
    if (!edges.empty()) edges.erase(edges.begin());
    return Graph::from_edges(g.order(), edges).with_labels(g.labels());
}

// ---- helpers ----------------------------------------------------------------

std::string count_text(const CirculationCount& c) {
    return "ee=" + std::to_string(c.ee) + " eo=" + std::to_string(c.eo);
}

std::string hex(std::uint64_t x) {
    std::ostringstream out;
    out << "0x" << std::hex << std::setw(16) << std::setfill('0') << x;
    return out.str();
}

std::vector<Vertex> labelled(const Digraph& d, const std::vector<const char*>& names) {
    std::vector<Vertex> out;
    for (const char* name : names) {
        const Vertex v = d.underlying().find_label(name);
        if (v < 0) throw InputError(std::string("orientation has no vertex labelled ") + name);
        out.push_back(v);
    }
    return out;
}

std::string complete_text(const Graph& g) {
    if (g.is_complete()) return "K" + std::to_string(g.order());
    return "not complete: " + std::to_string(g.size()) + " of " +
           std::to_string(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order() - 1) / 2) + " edges";
}

std::string regular_text(const Graph& g) {
    std::string out = "n=" + std::to_string(g.order());
    if (g.is_regular()) return out + " regular=" + std::to_string(g.max_degree());
    return out + " degrees " + std::to_string(g.min_degree()) + ".." + std::to_string(g.max_degree());
}

Graph fixture_graph(const char* id, bool corrupt) {
    Graph g = named_graph(id);
    return corrupt ? damage(g) : g;
}

// ---- check families ---------------------------------------------------------

struct FigureClaim {
    const char* id;
    std::int64_t ee;
    std::int64_t eo;
    const char* citation;
};

const FigureClaim kFigures[] = {
    {"fig9a_k4e", 2, 1, "Figure 9(a), \"Lemma K4-e: EE=2, EO=1\""},
    {"fig9b_k3ve2", 4, 3, "Figure 9(b), \"Lemma K3vE2: EE=4, EO=3\""},
    {"fig9c_k4ve2", 16, 17, "Figure 9(c), \"Lemma K4vE2: EE=16, EO=17\""},
    {"fig9d_k2vc4", 30, 28, "Figure 9(d), \"Lemma K2vC4: EE=30, EO=28\""},
    {"fig9e_k3vp4", 108, 107, "Figure 9(e), \"Lemma K3vP4: EE=108, EO=107\""},
    {"fig9f_k3vk1p3", 88, 87, "Figure 9(f), \"Lemma K3vK1+P3: EE=88, EO=87\""},
    {"fig10a_k4v2e2", 512, 515, "Figure 10(a), \"Lemma K4v2E2a: EE=512, EO=515\""},
    {"fig10b_k4v2e2", 751, 750, "Figure 10(b), \"Lemma K4v2E2b: EE=751, EO=750\""},
    {"fig10c_k4v2e2", 1097, 1096, "Figure 10(c), \"Lemma K4v2E2c: EE=1097, EO=1096\""},
    {"fig10d_k6ve3", 4394, 4393, "Figure 10(d), \"Lemma K6vE3: EE=4394, EO=4393\""},
    {"fig10e_c6sq", 22, 16, "Figure 10(e), \"Lemma C6: EE=22, EO=16\""},
};

Outcome figure_count(const FigureClaim& claim, const Ctx& ctx) {
    Digraph d = lemma_orientation(claim.id).digraph;
    if (ctx.corrupt) d = damage(d);
    const CirculationCount c = count_circulations(d);
    return {count_text({claim.ee, claim.eo}), count_text(c), "diff=" + std::to_string(c.diff())};
}

Outcome at_verdict(const char* id, const Ctx& ctx) {
    const LemmaOrientation lo = lemma_orientation(id);
    TokenFn f = lo.f;
    if (ctx.corrupt) {
        for (int& x : f.values) --x;
    }
    const ATCertificate cert = verify_at_certificate(lo.digraph, f);
    return {"verdict=true", std::string("verdict=") + (cert.verdict ? "true" : "false"),
            std::string("budget_ok=") + (cert.budget_ok ? "true" : "false") + " diff=" + std::to_string(cert.count.diff())};
}

struct PentagonClaim {
    const char* id;
    std::int64_t magnitude;
    std::vector<const char*> w;
    const char* citation;
};

Outcome pentagon_diff(const PentagonClaim& claim, const Ctx& ctx) {
    Digraph d = lemma_orientation(claim.id).digraph;
    if (ctx.corrupt) d = damage(d);
    const CirculationCount c = count_circulations(d);
    const std::int64_t restricted = diff_restricted(d, labelled(d, claim.w));
    return {"|diff|=" + std::to_string(claim.magnitude), "|diff|=" + std::to_string(std::llabs(c.diff())),
            count_text(c) + " diff=" + std::to_string(c.diff()) + " restricted=" + std::to_string(restricted)};
}

struct PaintClaim {
    const char* id;
    const char* graph;
    /// 0: the lemma's marking; otherwise f == constant.
    int constant;
    bool painter;
    const char* citation;
};

Outcome paint_verdict(const PaintClaim& claim, const Ctx& ctx) {
    const Graph g = named_graph_from_spec(claim.graph);
    TokenFn f = claim.constant ? TokenFn::constant(g.order(), claim.constant)
                               : tokens_from_marking(g, lemma_marking(claim.graph));
    if (ctx.corrupt) {
        // fewer tokens for a claimed Painter win, plenty for a claimed Lister win
        for (int& x : f.values) x += claim.painter ? -1 : 2;
    }
    SolverOptions opt;
    opt.node_budget = ctx.paint_budget;
    const PaintOutcome out = is_f_paintable(g, f, opt);
    const auto verdict = [](bool w) { return std::string(w ? "painter-wins" : "lister-wins"); };
    std::ostringstream note;
    note << "f=";
    for (std::size_t i = 0; i < f.values.size(); ++i) note << (i ? "," : "") << f.values[i];
    note << " positions=" << out.stats.nodes;
    return {verdict(claim.painter), verdict(out.painter_wins), note.str()};
}

std::string value_list(int lo, int hi, const std::function<std::int64_t(int)>& fn) {
    std::string out;
    for (int n = lo; n <= hi; ++n) {
        if (!out.empty()) out += ' ';
        out += std::to_string(n) + ":" + std::to_string(fn(n));
    }
    return out;
}

Outcome weak_formula(WeakMode mode, const std::function<std::int64_t(int)>& closed, const Ctx& ctx) {
    const int shift = ctx.corrupt ? 1 : 0;
    return {value_list(ctx.lo, ctx.hi, closed),
            value_list(ctx.lo, ctx.hi, [&](int n) { return weakly_eulerian_diff(n + shift, mode); }), ""};
}

Digraph family(const char* id, int n, bool corrupt) {
    Digraph d = lemma_orientation(id, n).digraph;
    return corrupt ? damage(d) : d;
}

Outcome cycle_pendant(const Ctx& ctx) {
    std::string full;
    const auto restricted = [&](int n) {
        const Digraph d = family("cycle_pendant", n, ctx.corrupt);
        full += (full.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(count_circulations(d).diff());
        return diff_restricted(d, labelled(d, {"u"}));
    };
    const auto closed = [](int n) -> std::int64_t { return -1 + f1_closed_form(n - 1) - 2 * f1_closed_form(n - 2); };
    Outcome o{value_list(ctx.lo, ctx.hi, closed), value_list(ctx.lo, ctx.hi, restricted), ""};
    o.note = "diff over circulations using u; full diff " + full;
    return o;
}

Outcome cycle_pendant_nonzero(const Ctx& ctx) {
    std::string expected, observed;
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        const Digraph d = family("cycle_pendant", n, ctx.corrupt);
        const std::int64_t r = diff_restricted(d, labelled(d, {"u"}));
        expected += (expected.empty() ? "" : " ") + std::to_string(n) + (n % 3 != 2 ? ":nonzero" : ":zero");
        observed += (observed.empty() ? "" : " ") + std::to_string(n) + (r != 0 ? ":nonzero" : ":zero");
    }
    return {expected, observed, "diff over circulations using u"};
}

Outcome cycle_2pendant(const Ctx& ctx) {
    std::string full;
    const auto restricted = [&](int n) {
        const Digraph d = family("cycle_2pendant", n, ctx.corrupt);
        full += (full.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(count_circulations(d).diff());
        return diff_restricted(d, labelled(d, {"w1", "w5"}));
    };
    const auto closed = [](int n) -> std::int64_t {
        if (n == 7) return -1;
        return 1 - 2 * (f1_closed_form(n - 4) + f1_closed_form(n - 6));
    };
    Outcome o{value_list(ctx.lo, ctx.hi, closed), value_list(ctx.lo, ctx.hi, restricted), ""};
    o.note = "diff over circulations using w1 and w5; full diff " + full;
    return o;
}

Outcome edge8(const Ctx& ctx) {
    Digraph with_edge = lemma_orientation("cycle_2pendant_edge8").digraph;
    if (ctx.corrupt) with_edge = damage(with_edge);
    const Digraph base = lemma_orientation("cycle_2pendant", 8).digraph;
    const std::int64_t a = count_circulations(with_edge).diff();
    const std::int64_t b = count_circulations(base).diff();
    const std::string same = "diff(D8 + w5w1) = diff(D8)";
    return {same, a == b ? same : "diff(D8 + w5w1) = " + std::to_string(a) + ", diff(D8) = " + std::to_string(b),
            "diff=" + std::to_string(a)};
}

Outcome digest_check(const char* id, std::uint64_t expected, const Ctx& ctx) {
    std::uint64_t actual = fnv1a(format_edge_list(named_graph(id)));
    if (ctx.corrupt) actual = fnv1a(format_edge_list(fixture_graph(id, true)));
    return {hex(expected), hex(actual), ""};
}

Outcome orientation_digests(const Ctx& ctx) {
    std::string expected, observed;
    bool first = true;
    for (const auto& d : orientation_fixture_digests()) {
        std::uint64_t actual = d.actual;
        if (ctx.corrupt && first) actual ^= 1;  // pretend one transcription was edited
        expected += (expected.empty() ? "" : " ") + d.id + ":" + hex(d.expected);
        observed += (observed.empty() ? "" : " ") + d.id + ":" + hex(actual);
        first = false;
    }
    return {expected, observed, ""};
}

Outcome rule_vs_transcription(const Ctx& ctx) {
    struct Pair {
        const char* figure;
        const char* rule;
        std::optional<int> n;
    };
    const Pair pairs[] = {{"fig4_cycle_pendant7", "cycle_pendant", 7},
                          {"fig5_cycle_2pendant8", "cycle_2pendant", 8},
                          {"fig6_cycle_2pendant_edge8", "cycle_2pendant_edge8", std::nullopt}};
    std::string expected, observed;
    for (const Pair& p : pairs) {
        Digraph fig = transcribed_cycle_orientation(p.figure);
        if (ctx.corrupt) fig = damage(fig);
        const Digraph rule = lemma_orientation(p.rule, p.n).digraph;
        expected += std::string(expected.empty() ? "" : " ") + p.figure + ":equal";
        observed += std::string(observed.empty() ? "" : " ") + p.figure + (fig.arcs() == rule.arcs() ? ":equal" : ":differs");
    }
    return {expected, observed, ""};
}

Outcome cross_engine(const Ctx& ctx, bool with_choosability) {
    int instances = 0;
    int violations = 0;
    std::string used;
    for (const FigureClaim& claim : kFigures) {
        const LemmaOrientation lo = lemma_orientation(claim.id);
        const Graph& g = lo.digraph.underlying();
        if (with_choosability && (g.order() > kMaxChoosableVertices || lo.f.max() > kMaxChoosableTokens)) continue;
        ++instances;
        used += (used.empty() ? "" : ",") + std::string(claim.id);
        const bool at = verify_at_certificate(lo.digraph, lo.f).verdict;
        TokenFn paint_f = lo.f;
        if (ctx.corrupt) {
            for (int& x : paint_f.values) --x;
        }
        SolverOptions opt;
        opt.node_budget = ctx.paint_budget;
        const bool paint = is_f_paintable(g, paint_f, opt).painter_wins;
        if (at && !paint) ++violations;
        if (with_choosability && paint && !is_f_choosable(g, paint_f).choosable) ++violations;
    }
    return {"violations=0", "violations=" + std::to_string(violations),
            "instances=" + std::to_string(instances) + " (" + used + ")"};
}

// ---- the registry -----------------------------------------------------------

std::vector<Entry> build_registry() {
    std::vector<Entry> r;
    const auto add = [&](std::string id, CertKind kind, std::string citation, CheckFn fn, int lo = 0, int hi = 0) {
        r.push_back({{std::move(id), kind, std::move(citation), lo, hi}, std::move(fn)});
    };
    using K = CertKind;

    add("elspas4_fixture", K::structural, "Figure 2 (left) edge list, transcribed",
        [](const Ctx& c) { return digest_check("elspas4", graph_fixture_digests()[0].expected, c); });
    add("elspas5_fixture", K::structural, "Figure 2 (right) edge list, transcribed",
        [](const Ctx& c) { return digest_check("elspas5", graph_fixture_digests()[1].expected, c); });
    add("orientation_fixtures", K::structural, "Figures 3-10 arc lists, transcribed", orientation_digests);
    add("elspas4_regular", K::structural, "Figure 2, \"a 4-regular graph $G_1$\"", [](const Ctx& c) {
        return Outcome{"n=15 regular=4", regular_text(fixture_graph("elspas4", c.corrupt)), ""};
    });
    add("elspas4_square", K::structural, "Figure 2, \"$G_1^2=K_{15}$\"", [](const Ctx& c) {
        return Outcome{"K15", complete_text(square(fixture_graph("elspas4", c.corrupt))), ""};
    });
    add("elspas5_regular", K::structural, "Figure 2, \"a 5-regular graph $G_2$\"", [](const Ctx& c) {
        return Outcome{"n=24 regular=5", regular_text(fixture_graph("elspas5", c.corrupt)), ""};
    });
    add("elspas5_square", K::structural, "Figure 2, \"$G_2^2=K_{24}$\"", [](const Ctx& c) {
        return Outcome{"K24", complete_text(square(fixture_graph("elspas5", c.corrupt))), ""};
    });
    add("petersen_moore", K::structural, "Section 1, \"the sole example when $\\Delta=3$ is the Petersen graph\"",
        [](const Ctx& c) {
            return Outcome{"moore=true", std::string("moore=") + (is_moore(fixture_graph("petersen", c.corrupt)) ? "true" : "false"), ""};
        });
    add("petersen_square", K::structural, "Section 1, \"such that $G^2=K_{\\Delta^2+1}$\"", [](const Ctx& c) {
        return Outcome{"K10", complete_text(square(fixture_graph("petersen", c.corrupt))), ""};
    });
    add("c5_moore", K::structural, "Section 3, \"the 5-cycle, the Peterson graph\"", [](const Ctx& c) {
        Graph g = named_graph_from_spec("cycle:5");
        if (c.corrupt) g = damage(g);
        return Outcome{"moore=true", std::string("moore=") + (is_moore(g) ? "true" : "false"), ""};
    });
    add("hoffman_singleton_moore", K::structural, "Section 1, \"When $\\Delta\\in\\{2,3,7\\}$ Moore graphs exist\"",
        [](const Ctx& c) {
            const Graph g = fixture_graph("hoffman_singleton", c.corrupt);
            return Outcome{"moore=true", std::string("moore=") + (is_moore(g) ? "true" : "false"), regular_text(g)};
        });
    add("bk15_regular", K::structural, "Section 1, \"an 8-regular graph on 15 vertices\"", [](const Ctx& c) {
        return Outcome{"n=15 regular=8", regular_text(fixture_graph("bk15", c.corrupt)), ""};
    });
    add("bk15_chromatic", K::structural, "Section 1, \"with clique number 6 and chromatic number 8\"", [](const Ctx& c) {
        const Graph g = fixture_graph("bk15", c.corrupt);
        return Outcome{"chi=8 omega=6",
                       "chi=" + std::to_string(chromatic_number(g)) + " omega=" + std::to_string(clique_number(g)), ""};
    });
    add("k3vp3_iso_k4ve2", K::structural, "lemma K3vK1+P3 proof, \"$K_3\\vee P_3 \\cong K_4 \\vee E_2$\"", [](const Ctx& c) {
        Graph a = join(named_graph_from_spec("complete:3"), named_graph_from_spec("path:3"));
        if (c.corrupt) a = damage(a);
        const Graph b = join(named_graph_from_spec("complete:4"), named_graph_from_spec("empty:2"));
        return Outcome{"isomorphic", are_isomorphic(a, b) ? "isomorphic" : "not isomorphic", ""};
    });
    add("figure_rule_transcription", K::structural,
        "Figures 4-6 versus the orientation rules of lemmas cycle+pendant, cycle+2pendant, cycle+2pendant+edge", rule_vs_transcription);

    for (const FigureClaim& claim : kFigures) {
        add(claim.id, K::circulation_count, claim.citation, [&claim](const Ctx& c) { return figure_count(claim, c); });
    }
    for (const FigureClaim& claim : kFigures) {
        add(std::string("at_") + claim.id, K::at_verdict,
            "Theorem B with the figure's orientation; Figures 9-10, \"Good orientations for the AT versions\"",
            [&claim](const Ctx& c) { return at_verdict(claim.id, c); });
    }

    static const PentagonClaim kPentagons[] = {
        {"farlinked", 2, {"w2", "w4"}, "lemma farlinked, \"we get $|{\\rm diff}(D)|=2$\""},
        {"threeunlinked", 1, {"w2", "w4", "w5"}, "lemma 3unlinked, \"in fact $|{\\rm diff}(\\overrightarrow{D})|=1$\""},
        {"b1b2", 1, {"w2", "w5"}, "lemma B1B2, \"we have one more odd circulation than even\""},
    };
    for (const PentagonClaim& claim : kPentagons) {
        add(std::string("lemma_") + claim.id, K::circulation_count, claim.citation,
            [&claim](const Ctx& c) { return pentagon_diff(claim, c); });
    }
    for (const PentagonClaim& claim : kPentagons) {
        add(std::string("at_lemma_") + claim.id, K::at_verdict,
            "lemmas farlinked, 3unlinked, B1B2: \"Since each vertex has at least two in-edges\"",
            [&claim](const Ctx& c) { return at_verdict(claim.id, c); });
    }

    add("f1_closed_form", K::formula_identity, "lemma path-lemma, \"If $n=3k+j$ ... then $f_1(n)=j$\"",
        [](const Ctx& c) { return weak_formula(WeakMode::f1, f1_closed_form, c); }, 2, 20);
    add("f2_closed_form", K::formula_identity, "lemma path-lemma, \"for $n\\ge 4$ also $f_2(n)=-f_1(n-2)$\"",
        [](const Ctx& c) { return weak_formula(WeakMode::f2, [](int n) { return -f1_closed_form(n - 2); }, c); }, 4,
        18);
    add("g_closed_form", K::formula_identity, "lemma path-lemma2, \"then $g(n) = -j$\"",
        [](const Ctx& c) { return weak_formula(WeakMode::g, g_closed_form, c); }, 4, 18);
    add("cycle_pendant_diff", K::formula_identity, "lemma cycle+pendant, \"$-1+f_1(n-1)-2f_1(n-2)$\"", cycle_pendant, 5, 13);
    add("cycle_pendant_nonzero", K::formula_identity, "lemma cycle+pendant, \"${\\rm diff}\\ne 0$ when $n\\not\\equiv 2 \\bmod 3$\"",
        cycle_pendant_nonzero, 5, 13);
    add("cycle_2pendant_diff", K::formula_identity,
        "lemma cycle+2pendant, \"$1 - 2(f_1(n-4) + f_1(n-6))$\" and \"$= -1$\" at $n=7$", cycle_2pendant, 7, 13);
    add("cycle_2pendant_edge8_diff", K::formula_identity,
        "lemma cycle+2pendant+edge, \"the circulations ... containing $w_5w_1$ are half odd and half even\"", edge8);

    static const PaintClaim kPaint[] = {
        {"lemma_k4e_paint", "k4_minus_e", 0, true, "lemma K4-e, \"$K_4-e$ with one degree 3 vertex high ... is $f$-paintable\""},
        {"lemma_k3ve2_paint", "k3_join_e2", 0, true, "lemma K3vE2, \"$K_3 \\vee E_2$ with a low vertex in the $K_3$ and a low vertex in the $E_2$\""},
        {"lemma_k4ve2_paint", "k4_join_e2", 0, true, "lemma K4vE2, \"$K_4 \\vee E_2$ with a low vertex in the $K_4$\""},
        {"lemma_k4v2e2a_paint", "k4_join_2e2a", 0, true, "lemma K4v2E2, \"$K_4 \\vee H$ with $H$ containing two disjoint nonadjacent pairs\""},
        {"lemma_k4v2e2b_paint", "k4_join_2e2b", 0, true, "lemma K4v2E2, \"$K_4 \\vee H$ with $H$ containing two disjoint nonadjacent pairs\""},
        {"lemma_k4v2e2c_paint", "k4_join_2e2c", 0, true, "lemma K4v2E2, \"$K_4 \\vee H$ with $H$ containing two disjoint nonadjacent pairs\""},
        {"lemma_k6ve3_paint", "k6_join_e3", 0, true, "lemma K6vE3, \"If $G$ is $K_6 \\vee E_3$, then $G$ is $d_1$-paintable\""},
        {"lemma_c6_paint", "c6_square", 0, true, "lemma C6, \"If $G$ is $C_6^2$, then $G$ is $d_1$-paintable\""},
        {"lemma_k2vc4_paint", "k2_join_c4", 0, true, "lemma K2vC4, \"If $G$ is $K_2\\vee C_4$, then $G$ is $d_1$-paintable\""},
        {"lemma_k3vp4_paint", "k3_join_p4", 0, true, "lemma K3vP4, \"If $G$ $K_3\\vee P_4$, then $G$ is $d_1$-paintable\""},
        {"lemma_k3vk1p3_paint", "k3_join_k1_p3", 0, true, "lemma K3vK1+P3, \"If $G$ is $K_3\\vee (K_1+P_3)$, then $G$ is $d_1$-paintable\""},
        {"c4_two_paintable", "cycle:4", 2, true, "lemma C6 proof, \"since $C_4$ is 2-paintable\""},
        {"k3_two_lister", "complete:3", 2, false, "a triangle needs three colors"},
        {"k4_two_lister", "complete:4", 2, false, "$K_4$ needs four colors"},
    };
    for (const PaintClaim& claim : kPaint) {
        add(claim.id, K::paint_verdict, claim.citation, [&claim](const Ctx& c) { return paint_verdict(claim, c); });
    }

    add("cross_engine_at_paint", K::at_verdict,
        "Theorem B, \"then $\\vec{D}$ is $f$-paintable\": AT verdict implies a Painter win",
        [](const Ctx& c) { return cross_engine(c, false); });
    add("chain_at_paint_choosable", K::at_verdict,
        "Theorem B, and paintable implies choosable, on every figure instance small enough for all three engines",
        [](const Ctx& c) { return cross_engine(c, true); });
    return r;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = build_registry();
    return r;
}

const Entry& find_entry(std::string_view id) {
    for (const Entry& e : registry()) {
        if (e.info.id == id) return e;
    }
    throw InputError("unknown certificate id '" + std::string(id) + "'");
}

Certificate run_entry(const Entry& e, const VerifyOptions& options, int lo, int hi) {
    Certificate cert;
    cert.id = e.info.id;
    cert.kind = e.info.kind;
    cert.citation = e.info.citation;
    const Ctx ctx{options.corrupt && *options.corrupt == e.info.id, options.paint_budget, lo, hi};
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = e.run(ctx);
        cert.expected = std::move(o.expected);
        cert.observed = std::move(o.observed);
        cert.note = std::move(o.note);
        cert.pass = cert.observed == cert.expected;
    } catch (const std::exception& ex) {
        cert.observed = std::string("error: ") + ex.what();
        cert.pass = false;
    }
    cert.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

} // namespace

const std::vector<CheckInfo>& certificate_registry() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const Entry& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

Certificate verify_certificate(std::string_view id, const VerifyOptions& options) {
    const Entry& e = find_entry(id);
    return run_entry(e, options, e.info.lo, e.info.hi);
}

Certificate verify_lemma(std::string_view id, const VerifyOptions& options) {
    if (find_entry(id).info.kind == CertKind::structural) {
        throw InputError("'" + std::string(id) + "' is a structural check, not a lemma");
    }
    return verify_certificate(id, options);
}

Certificate verify_structural(std::string_view id, const VerifyOptions& options) {
    if (find_entry(id).info.kind != CertKind::structural) {
        throw InputError("'" + std::string(id) + "' is not a structural check");
    }
    return verify_certificate(id, options);
}

Certificate verify_formula(std::string_view id, int lo, int hi, const VerifyOptions& options) {
    const Entry& e = find_entry(id);
    if (e.info.kind != CertKind::formula_identity || e.info.lo == e.info.hi) {
        throw InputError("'" + std::string(id) + "' is not a ranged formula identity");
    }
    if (lo > hi) throw InputError("empty range");
    if (lo < e.info.lo) {
        throw InputError("'" + std::string(id) + "' is only defined from n=" + std::to_string(e.info.lo));
    }
    // arc counts grow linearly in n; keep within the brute-force budget
    if (hi > 30) throw SizeLimitError("formula range up to n=" + std::to_string(hi) + " exceeds the brute-force limit of 30");
    return run_entry(e, options, lo, hi);
}

Report verify_all(const VerifyOptions& options) {
    Report r;
    for (const Entry& e : registry()) r.certificates.push_back(run_entry(e, options, e.info.lo, e.info.hi));
    return r;
}

nlohmann::json certificate_to_json(const Certificate& c, bool deterministic) {
    nlohmann::json j = {{"id", c.id},         {"kind", to_string(c.kind)}, {"expected", c.expected},
                        {"citation", c.citation}, {"observed", c.observed},   {"pass", c.pass}};
    if (!c.note.empty()) j["note"] = c.note;
    if (!deterministic) j["runtime_ms"] = std::round(c.runtime_ms * 1000) / 1000;
    return j;
}

std::string report_json_lines(const Report& r, bool deterministic) {
    std::string out;
    for (const auto& c : r.certificates) out += certificate_to_json(c, deterministic).dump() + "\n";
    nlohmann::json summary = {{"summary", {{"certificates", r.certificates.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
    out += summary.dump() + "\n";
    return out;
}

std::string report_table(const Report& r, bool deterministic) {
    std::size_t w = 2;
    for (const auto& c : r.certificates) w = std::max(w, c.id.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(w)) << "id" << "  " << std::setw(17) << "kind" << "  result";
    if (!deterministic) out << "  " << std::right << std::setw(10) << "ms";
    out << "\n";
    for (const auto& c : r.certificates) {
        out << std::left << std::setw(static_cast<int>(w)) << c.id << "  " << std::setw(17) << to_string(c.kind) << "  "
            << (c.pass ? "PASS" : "FAIL");
        if (!deterministic) out << "  " << std::right << std::setw(10) << std::fixed << std::setprecision(1) << c.runtime_ms;
        out << "\n";
        if (!c.pass) out << "    expected: " << c.expected << "\n    observed: " << c.observed << "\n";
    }
    out << r.passed() << "/" << r.certificates.size() << " certificates pass\n";
    return out.str();
}

} // namespace sqpaint
