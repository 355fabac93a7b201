// One line per acceptance criterion; exit status 0 iff every criterion holds.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sqpaint/choosability.hpp"
#include "sqpaint/circulation.hpp"
#include "sqpaint/lemma_orientations.hpp"
#include "sqpaint/named_graphs.hpp"
#include "sqpaint/paint_game.hpp"

using namespace sqpaint;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (pass) detail.str("");
        else detail << "; ";
        pass = false;
        detail << what;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// ---- 1 -------------------------------------------------------------------------

void figure_captions(Verdict& v) {
    struct Caption {
        const char* id;
        std::int64_t ee, eo;
    };
    constexpr Caption captions[] = {
        {"fig9a_k4e", 2, 1},         {"fig9b_k3ve2", 4, 3},       {"fig9c_k4ve2", 16, 17},
        {"fig9d_k2vc4", 30, 28},     {"fig9e_k3vp4", 108, 107},   {"fig9f_k3vk1p3", 88, 87},
        {"fig10a_k4v2e2", 512, 515}, {"fig10b_k4v2e2", 751, 750}, {"fig10c_k4v2e2", 1097, 1096},
        {"fig10d_k6ve3", 4394, 4393}, {"fig10e_c6sq", 22, 16},
    };
    int ok = 0;
    for (const Caption& c : captions) {
        const Digraph d = lemma_orientation(c.id).digraph;
        const CirculationCount got = count_circulations(d);
        const CirculationCount indep = oracle::dp_circulations(d);
        if (got != CirculationCount{c.ee, c.eo} || indep != got) {
            v.fail(std::string(c.id) + " gave (" + std::to_string(got.ee) + "," + std::to_string(got.eo) + ")");
        } else {
            ++ok;
        }
    }
    if (v.pass) v.detail << ok << "/11 captions, engine and independent DP counter agree";
}

// ---- 2 -------------------------------------------------------------------------

void pentagon_diffs(Verdict& v) {
    const std::pair<const char*, std::int64_t> claims[] = {{"farlinked", 2}, {"threeunlinked", 1}, {"b1b2", 1}};
    for (auto [id, want] : claims) {
        const std::int64_t diff = count_circulations(lemma_orientation(id).digraph).diff();
        v.detail << (want == 2 ? "" : ", ") << id << " diff=" << diff;
        if (std::llabs(diff) != want) v.fail(std::string(id) + ": |diff|=" + std::to_string(std::llabs(diff)));
    }
}

// ---- 3 -------------------------------------------------------------------------

void path_lemmas(Verdict& v) {
    int checked = 0;
    for (int n = 2; n <= 20; ++n, ++checked) {
        if (weakly_eulerian_diff(n, WeakMode::f1) != oracle::f1_by_residue(n)) v.fail("f1(" + std::to_string(n) + ")");
    }
    for (int n = 4; n <= 18; ++n, checked += 2) {
        if (weakly_eulerian_diff(n, WeakMode::f2) != -oracle::f1_by_residue(n - 2)) v.fail("f2(" + std::to_string(n) + ")");
        if (weakly_eulerian_diff(n, WeakMode::g) != -oracle::f1_by_residue(n)) v.fail("g(" + std::to_string(n) + ")");
    }
    // the engine's counts against the definition itself on the small end
    for (int n = 4; n <= 12; ++n) {
        if (weakly_eulerian_diff(n, WeakMode::f1) != oracle::weak_diff(n, 1) ||
            weakly_eulerian_diff(n, WeakMode::f2) != oracle::weak_diff(n, 2) ||
            weakly_eulerian_diff(n, WeakMode::g) != oracle::weak_diff(n, 0)) {
            v.fail("definition mismatch at n=" + std::to_string(n));
        }
    }
    if (v.pass) v.detail << checked << " closed-form values; n<=12 re-counted from the definition";
}

// ---- 4 -------------------------------------------------------------------------

std::int64_t restricted(const Digraph& d, std::initializer_list<const char*> labels) {
    std::vector<Vertex> w;
    for (const char* l : labels) w.push_back(d.underlying().find_label(l));
    return diff_restricted(d, w);
}

void cycle_pendant(Verdict& v) {
    std::ostringstream values;
    for (int n = 5; n <= 13; ++n) {
        const Digraph d = lemma_orientation("cycle_pendant", n).digraph;
        const std::int64_t got = restricted(d, {"u"});
        const std::int64_t want = -1 + oracle::f1_by_residue(n - 1) - 2 * oracle::f1_by_residue(n - 2);
        values << got << (n < 13 ? "," : "");
        if (got != want) v.fail("n=" + std::to_string(n) + ": " + std::to_string(got) + " != " + std::to_string(want));
        if ((got != 0) != (n % 3 != 2)) v.fail("n=" + std::to_string(n) + ": zero pattern");
    }
    if (v.pass) v.detail << "diff over circulations through u, n=5..13: " << values.str();
}

// ---- 5 -------------------------------------------------------------------------

void cycle_2pendant(Verdict& v) {
    std::ostringstream values;
    for (int n = 7; n <= 13; ++n) {
        const Digraph d = lemma_orientation("cycle_2pendant", n).digraph;
        const std::int64_t got = restricted(d, {"w1", "w5"});
        const std::int64_t want =
            n == 7 ? -1 : 1 - 2 * (oracle::f1_by_residue(n - 4) + oracle::f1_by_residue(n - 6));
        values << got << (n < 13 ? "," : "");
        if (got != want) v.fail("n=" + std::to_string(n) + ": " + std::to_string(got) + " != " + std::to_string(want));
    }
    const std::int64_t with_edge = count_circulations(lemma_orientation("cycle_2pendant_edge8").digraph).diff();
    const std::int64_t without = count_circulations(lemma_orientation("cycle_2pendant", 8).digraph).diff();
    if (with_edge != without) v.fail("edge8: " + std::to_string(with_edge) + " != " + std::to_string(without));
    if (v.pass) v.detail << "n=7..13: " << values.str() << "; edge8 diff " << with_edge << " = " << without;
}

// ---- 6 -------------------------------------------------------------------------

void game_solver(Verdict& v) {
    const char* painter[] = {"k4_minus_e", "k3_join_e2", "k4_join_e2", "k2_join_c4", "k3_join_p4", "k3_join_k1_p3", "c6_square"};
    double slowest = 0;
    for (const char* id : painter) {
        const Graph g = named_graph(id);
        const auto t = Clock::now();
        const bool wins = is_f_paintable(g, tokens_from_marking(g, lemma_marking(id))).painter_wins;
        const double s = seconds_since(t);
        slowest = std::max(slowest, s);
        if (!wins) v.fail(std::string(id) + ": Lister wins");
        if (s > 60) v.fail(std::string(id) + ": " + std::to_string(s) + " s");
    }
    const std::array<int, 1> four{4}, three{3};
    if (is_f_paintable(named_graph("complete", four), TokenFn::constant(4, 2)).painter_wins) v.fail("K4 f=2: Painter wins");
    if (is_f_paintable(named_graph("complete", three), TokenFn::constant(3, 2)).painter_wins) v.fail("K3 f=2: Painter wins");
    if (v.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", slowest);
        v.detail << "7 Painter wins, 2 Lister wins; slowest solve " << buf << " s";
    }
}

// ---- 7 -------------------------------------------------------------------------

void chain(Verdict& v) {
    int instances = 0, at_true = 0, violations = 0;
    const auto check = [&](const Graph& g, const TokenFn& f, const std::string& name) {
        const OrientationSearch at = search_at_orientation(g, f, 50'000'000);
        if (at.status == SearchStatus::budget_exceeded) return;
        const bool paint = is_f_paintable(g, f).painter_wins;
        const bool choose = is_f_choosable(g, f).choosable;
        ++instances;
        at_true += at.status == SearchStatus::found;
        if ((at.status == SearchStatus::found && !paint) || (paint && !choose)) {
            ++violations;
            v.fail(name);
        }
    };
    for (const std::string& id : lemma_graph_ids()) {
        const Graph g = named_graph(id);
        const TokenFn f = tokens_from_marking(g, lemma_marking(id));
        if (g.order() <= kMaxChoosableVertices && f.max() <= kMaxChoosableTokens) check(g, f, id);
    }
    std::mt19937_64 rng(20240607);
    for (int i = 0; i < 150; ++i) {
        const int n = 3 + i % 4;
        const Graph g = oracle::random_graph(rng, n, 0.6);
        std::vector<int> fv(static_cast<std::size_t>(n));
        for (auto& x : fv) x = 1 + static_cast<int>(rng() % 3);
        check(g, TokenFn{fv}, "random #" + std::to_string(i));
    }
    if (v.pass) v.detail << instances << " instances (" << at_true << " AT-certified), " << violations << " violations";
}

// ---- 8 -------------------------------------------------------------------------

void structural(Verdict& v) {
    const Graph e4 = named_graph("elspas4"), e5 = named_graph("elspas5"), pet = named_graph("petersen"), bk = named_graph("bk15");
    const auto expect = [&](bool ok, const char* what) {
        if (!ok) v.fail(what);
    };
    expect(square(e4).is_complete() && e4.order() == 15, "elspas4 square is not K15");
    expect(square(e5).is_complete() && e5.order() == 24, "elspas5 square is not K24");
    expect(e4.is_regular() && e4.max_degree() == 4, "elspas4 not 4-regular");
    expect(e5.is_regular() && e5.max_degree() == 5, "elspas5 not 5-regular");
    expect(is_moore(pet), "petersen not Moore");
    expect(square(pet).is_complete() && pet.order() == 10, "petersen square is not K10");
    expect(bk.is_regular() && bk.max_degree() == 8 && bk.order() == 15, "bk15 not 8-regular on 15 vertices");
    const int omega = clique_number(bk), chi = chromatic_number(bk);
    expect(omega == 6, "bk15 omega");
    expect(chi == 8, "bk15 chi");
    if (v.pass) v.detail << "elspas4^2=K15, elspas5^2=K24, petersen Moore with square K10, bk15 8-regular omega=" << omega
                         << " chi=" << chi;
}

// ---- 9 -------------------------------------------------------------------------

/// One graph per isomorphism class on n vertices.
std::vector<Graph> all_graphs(int n) {
    std::set<std::string> seen;
    std::vector<Graph> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
        Graph g = oracle::graph_from_mask(n, m);
        if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<TokenFn> token_corpus(const Graph& g, std::mt19937_64& rng) {
    const int n = g.order();
    std::vector<TokenFn> out;
    if (n <= 4) {
        int total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (int code = 0; code < total; ++code) {
            TokenFn f;
            for (int i = 0, c = code; i < n; ++i, c /= 3) f.values.push_back(1 + c % 3);
            out.push_back(f);
        }
        return out;
    }
    for (int k = 1; k <= 3; ++k) out.push_back(TokenFn::constant(n, k));
    TokenFn deg, deg_minus, deg_plus;
    for (Vertex v = 0; v < n; ++v) {
        deg.values.push_back(std::max(g.degree(v), 1));
        deg_minus.values.push_back(std::max(g.degree(v) - 1, 1));
        deg_plus.values.push_back(g.degree(v) + 1);
    }
    out.push_back(deg);
    out.push_back(deg_minus);
    out.push_back(deg_plus);
    for (int r = 0; r < 3; ++r) {
        TokenFn f;
        for (int i = 0; i < n; ++i) f.values.push_back(1 + static_cast<int>(rng() % 4));
        out.push_back(f);
    }
    return out;
}

void properties(Verdict& v) {
    SolverOptions maximal, unrestricted;
    maximal.reduce_very_low = false;
    unrestricted.reduce_very_low = false;
    unrestricted.restrict_to_maximal = false;

    std::mt19937_64 rng(77);
    int graphs = 0, restriction_cases = 0, very_low_cases = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            ++graphs;
            for (const TokenFn& f : token_corpus(g, rng)) {
                const bool value = is_f_paintable(g, f, maximal).painter_wins;
                ++restriction_cases;
                if (value != is_f_paintable(g, f, unrestricted).painter_wins) {
                    v.fail("restriction changes the value");
                    return;
                }
                for (Vertex x = 0; x < n; ++x) {
                    if (f[x] <= g.degree(x)) continue;
                    const std::vector<Vertex> drop{x};
                    const InducedSubgraph rest = delete_vertices(g, drop);
                    TokenFn fr;
                    for (Vertex u : rest.original) fr.values.push_back(f[u]);
                    ++very_low_cases;
                    if (value != is_f_paintable(rest.graph, fr, maximal).painter_wins) {
                        v.fail("deleting a very low vertex changes the value");
                        return;
                    }
                }
            }
        }
    }

    // the shape from lemma subgraphlemmaAT: H, D\H, every cross arc from H into D\H
    int products = 0;
    for (int i = 0; i < 100; ++i) {
        const int a = 2 + i % 4, b = 2 + (i / 4) % 4;
        const Digraph h = oracle::random_orientation(rng, oracle::random_graph(rng, a, 0.7));
        const Digraph r = oracle::random_orientation(rng, oracle::random_graph(rng, b, 0.7));
        std::vector<Arc> arcs = h.arcs();
        for (Arc x : r.arcs()) arcs.push_back({x.tail + a, x.head + a});
        std::bernoulli_distribution coin(0.4);
        for (int u = 0; u < a; ++u) {
            for (int w = 0; w < b; ++w) {
                if (coin(rng)) arcs.push_back({u, a + w});
            }
        }
        const Digraph d = Digraph::from_arcs(a + b, arcs);
        if (d.arc_count() > 24) continue;
        ++products;
        const std::int64_t whole = oracle::gray_circulations(d).diff();
        if (count_circulations(d).diff() != whole || whole != count_circulations(h).diff() * count_circulations(r).diff()) {
            v.fail("diff not multiplicative");
            return;
        }
    }

    int reversals = 0;
    for (int i = 0; i < 100; ++i, ++reversals) {
        const Digraph d = oracle::random_orientation(rng, oracle::random_graph(rng, 4 + i % 5, 0.6));
        if (count_circulations(d.reversed()) != count_circulations(d)) {
            v.fail("reversal changed (ee, eo)");
            return;
        }
    }

    int monotone = 0, painter_side = 0;
    for (int i = 0; i < 200; ++i, ++monotone) {
        const int n = 3 + i % 4;
        const Graph g = oracle::random_graph(rng, n, 0.55);
        TokenFn f;
        for (int k = 0; k < n; ++k) f.values.push_back(1 + static_cast<int>(rng() % 3));
        TokenFn up = f;
        up.values[rng() % static_cast<std::size_t>(n)] += 1;
        const bool base = is_f_paintable(g, f).painter_wins;
        painter_side += base;
        if (base && !is_f_paintable(g, up).painter_wins) {
            v.fail("paintability not monotone in f");
            return;
        }
    }
    v.detail << graphs << " graphs (all on <=6 vertices up to isomorphism): " << restriction_cases
             << " restriction cases, " << very_low_cases << " very-low deletions; " << products << " products, "
             << reversals << " reversals, " << monotone << " monotonicity instances (" << painter_side
             << " Painter wins raised)";
}

} // namespace

int main() {
    const std::pair<const char*, std::function<void(Verdict&)>> criteria[] = {
        {"figure captions", figure_captions},
        {"pentagon |diff|", pentagon_diffs},
        {"f1/f2/g closed forms", path_lemmas},
        {"cycle+pendant", cycle_pendant},
        {"cycle+2pendant", cycle_2pendant},
        {"exact game solver", game_solver},
        {"AT => paintable => choosable", chain},
        {"structural suite", structural},
        {"property suites", properties},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Verdict v;
        const auto t = Clock::now();
        try {
            run(v);
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::printf("criterion %d %s: %s (%.1f s) %s\n", index, v.pass ? "PASS" : "FAIL", name, seconds_since(t),
                    v.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
