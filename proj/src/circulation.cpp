#include "sqpaint/circulation.hpp"

#include <algorithm>
#include <cstdlib>

#include <omp.h>

#include "sqpaint/error.hpp"

namespace sqpaint {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("circulation count exceeds the 64-bit range");
    return r;
}

CirculationCount& accumulate(CirculationCount& into, const CirculationCount& add) {
    into.ee = checked_add(into.ee, add.ee);
    into.eo = checked_add(into.eo, add.eo);
    return into;
}

// Depth-first over arcs in a fixed order, tracking the residual imbalance
// (out - in - target) per vertex. A branch dies as soon as some vertex has
// more residual imbalance than undecided incident arcs left to fix it.
class ImbalanceCounter {
public:
    ImbalanceCounter(const Digraph& d, std::span<const int> target) : n_(d.order()) {
        if (d.arc_count() > kMaxCountArcs) {
            throw SizeLimitError("circulation count: " + std::to_string(d.arc_count()) + " arcs exceeds the limit of " +
                                 std::to_string(kMaxCountArcs));
        }
        if (static_cast<int>(target.size()) != n_) {
            throw InputError("imbalance target has " + std::to_string(target.size()) + " entries for " +
                             std::to_string(n_) + " vertices");
        }
        arcs_ = processing_order(d);
        remaining_after_.assign(arcs_.size() + 1, std::vector<int>(static_cast<std::size_t>(n_), 0));
        for (std::size_t i = arcs_.size(); i-- > 0;) {
            remaining_after_[i] = remaining_after_[i + 1];
            ++remaining_after_[i][static_cast<std::size_t>(arcs_[i].tail)];
            ++remaining_after_[i][static_cast<std::size_t>(arcs_[i].head)];
        }
        start_.assign(target.begin(), target.end());
        for (auto& x : start_) x = -x;
        feasible_ = true;
        for (int v = 0; v < n_; ++v) {
            if (std::abs(start_[static_cast<std::size_t>(v)]) > remaining_after_[0][static_cast<std::size_t>(v)]) feasible_ = false;
        }
    }

    CirculationCount serial() const {
        CirculationCount out;
        if (!feasible_) return out;
        auto imbalance = start_;
        descend(0, imbalance, false, out);
        return out;
    }

    CirculationCount parallel() const {
        // one thread: splitting only adds prefix bookkeeping
        if (omp_get_max_threads() == 1) return serial();
        CirculationCount out;
        if (!feasible_) return out;
        const std::size_t split = std::min<std::size_t>(arcs_.size(), kSplitDepth);
        std::vector<Prefix> prefixes;
        auto imbalance = start_;
        collect(0, split, imbalance, false, prefixes);
        std::vector<CirculationCount> partial(prefixes.size());
        bool overflow = false;
        const long count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(|| : overflow)
        for (long i = 0; i < count; ++i) {
            try {
                auto local = prefixes[static_cast<std::size_t>(i)].imbalance;
                descend(split, local, prefixes[static_cast<std::size_t>(i)].odd, partial[static_cast<std::size_t>(i)]);
            } catch (const OverflowError&) {
                overflow = true;
            }
        }
        if (overflow) throw OverflowError("circulation count exceeds the 64-bit range");
        for (const auto& p : partial) accumulate(out, p);
        return out;
    }

private:
    static constexpr std::size_t kSplitDepth = 12;

    struct Prefix {
        std::vector<int> imbalance;
        bool odd = false;
    };

    // Maximum-cardinality-search vertex order; arcs sorted by the position of
    // their later endpoint so vertices are closed off early.
    static std::vector<Arc> processing_order(const Digraph& d) {
        const int n = d.order();
        const Graph& g = d.underlying();
        std::vector<int> position(static_cast<std::size_t>(n), -1);
        std::vector<int> weight(static_cast<std::size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            Vertex pick = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (position[static_cast<std::size_t>(v)] >= 0) continue;
                if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)] ||
                    (weight[static_cast<std::size_t>(v)] == weight[static_cast<std::size_t>(pick)] &&
                     g.degree(v) > g.degree(pick))) {
                    pick = v;
                }
            }
            position[static_cast<std::size_t>(pick)] = step;
            for (Vertex w : g.neighbors(pick)) ++weight[static_cast<std::size_t>(w)];
        }
        std::vector<Arc> arcs = d.arcs();
        auto key = [&position](Arc a) {
            const int p = position[static_cast<std::size_t>(a.tail)];
            const int q = position[static_cast<std::size_t>(a.head)];
            return std::pair{std::max(p, q), std::min(p, q)};
        };
        std::stable_sort(arcs.begin(), arcs.end(), [&key](Arc a, Arc b) { return key(a) < key(b); });
        return arcs;
    }

    bool viable(std::size_t next, const std::vector<int>& imbalance, Arc a) const {
        const auto& rem = remaining_after_[next];
        return std::abs(imbalance[static_cast<std::size_t>(a.tail)]) <= rem[static_cast<std::size_t>(a.tail)] &&
               std::abs(imbalance[static_cast<std::size_t>(a.head)]) <= rem[static_cast<std::size_t>(a.head)];
    }

    template <typename Leaf>
    void branch(std::size_t i, std::vector<int>& imbalance, bool odd, Leaf&& leaf) const {
        const Arc a = arcs_[i];
        // arc left out
        if (viable(i + 1, imbalance, a)) leaf(i + 1, imbalance, odd);
        // arc taken
        ++imbalance[static_cast<std::size_t>(a.tail)];
        --imbalance[static_cast<std::size_t>(a.head)];
        if (viable(i + 1, imbalance, a)) leaf(i + 1, imbalance, !odd);
        --imbalance[static_cast<std::size_t>(a.tail)];
        ++imbalance[static_cast<std::size_t>(a.head)];
    }

    void descend(std::size_t i, std::vector<int>& imbalance, bool odd, CirculationCount& out) const {
        if (i == arcs_.size()) {
            // every residual is zero: viable() forced it once nothing remained
            auto& slot = odd ? out.eo : out.ee;
            slot = checked_add(slot, 1);
            return;
        }
        branch(i, imbalance, odd, [this, &out](std::size_t next, std::vector<int>& imb, bool parity) {
            descend(next, imb, parity, out);
        });
    }

    void collect(std::size_t i, std::size_t stop, std::vector<int>& imbalance, bool odd, std::vector<Prefix>& out) const {
        if (i == stop) {
            out.push_back({imbalance, odd});
            return;
        }
        branch(i, imbalance, odd, [this, stop, &out](std::size_t next, std::vector<int>& imb, bool parity) {
            collect(next, stop, imb, parity, out);
        });
    }

    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> remaining_after_;
    std::vector<int> start_;
    bool feasible_ = true;
};

std::vector<int> zeros(const Digraph& d) { return std::vector<int>(static_cast<std::size_t>(d.order()), 0); }

} // namespace

CirculationCount count_circulations(const Digraph& d) { return ImbalanceCounter(d, zeros(d)).parallel(); }

CirculationCount count_circulations_serial(const Digraph& d) { return ImbalanceCounter(d, zeros(d)).serial(); }

CirculationCount count_with_imbalance(const Digraph& d, std::span<const int> target) {
    return ImbalanceCounter(d, target).parallel();
}

CirculationCount count_with_imbalance_serial(const Digraph& d, std::span<const int> target) {
    return ImbalanceCounter(d, target).serial();
}

std::int64_t diff_restricted(const Digraph& d, std::span<const Vertex> w) {
    std::vector<Vertex> set(w.begin(), w.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (Vertex v : set) {
        if (v < 0 || v >= d.order()) throw InputError("restriction vertex " + std::to_string(v) + " is out of range");
    }
    if (set.size() > 16) throw SizeLimitError("diff_restricted: at most 16 restriction vertices are supported");
    std::int64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << set.size()); ++mask) {
        std::vector<Vertex> removed;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (mask & (1u << i)) removed.push_back(set[i]);
        }
        const std::int64_t term = count_circulations(d.without_vertices(removed)).diff();
        total = checked_add(total, (removed.size() % 2 == 0) ? term : -term);
    }
    return total;
}

bool indegree_feasibility(const Digraph& d, const TokenFn& f) {
    require_tokens_match(d.underlying(), f);
    for (Vertex v = 0; v < d.order(); ++v) {
        if (d.out_degree(v) > f[v] - 1) return false;
    }
    return true;
}

ATCertificate verify_at_certificate(const Digraph& d, const TokenFn& f) {
    ATCertificate cert{d, f, count_circulations(d), indegree_feasibility(d, f), false};
    cert.verdict = cert.budget_ok && cert.count.diff() != 0;
    return cert;
}

std::string to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

class OrientationSearcher {
public:
    OrientationSearcher(const Graph& g, const TokenFn& f, std::uint64_t budget)
        : g_(g), f_(f), budget_(budget), edges_(g.edges()), out_(static_cast<std::size_t>(g.order()), 0) {}

    OrientationSearch run() {
        long capacity = 0;
        for (Vertex v = 0; v < g_.order(); ++v) capacity += std::max(0, f_[v] - 1);
        if (capacity >= static_cast<long>(edges_.size())) descend(0);
        if (result_.status != SearchStatus::found && result_.status != SearchStatus::budget_exceeded) {
            result_.status = SearchStatus::exhausted;
        }
        return std::move(result_);
    }

private:
    bool spend() {
        if (++result_.nodes > budget_) {
            result_.status = SearchStatus::budget_exceeded;
            return false;
        }
        return true;
    }

    // returns true when the search should stop
    bool descend(std::size_t i) {
        if (!spend()) return true;
        if (i == edges_.size()) {
            ++result_.orientations_checked;
            const Digraph d = Digraph::orient(g_, chosen_);
            const auto count = count_circulations_serial(d);
            if (count.diff() != 0) {
                result_.status = SearchStatus::found;
                result_.digraph = d;
                result_.count = count;
                return true;
            }
            return false;
        }
        const Edge e = edges_[i];
        for (const Arc a : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
            auto& out = out_[static_cast<std::size_t>(a.tail)];
            if (out + 1 > f_[a.tail] - 1) continue;
            ++out;
            chosen_.push_back(a);
            const bool stop = descend(i + 1);
            chosen_.pop_back();
            --out;
            if (stop) return true;
        }
        return false;
    }

    const Graph& g_;
    const TokenFn& f_;
    std::uint64_t budget_;
    std::vector<Edge> edges_;
    std::vector<int> out_;
    std::vector<Arc> chosen_;
    OrientationSearch result_;
};

} // namespace

OrientationSearch search_at_orientation(const Graph& g, const TokenFn& f, std::uint64_t budget) {
    require_tokens_match(g, f);
    if (g.size() > kMaxSearchEdges) {
        throw SizeLimitError("at-search: " + std::to_string(g.size()) + " edges exceeds the limit of " +
                             std::to_string(kMaxSearchEdges));
    }
    return OrientationSearcher(g, f, budget).run();
}

Digraph path_square_digraph(int n) {
    if (n < 2) throw InputError("path square needs n >= 2, got " + std::to_string(n));
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) {
        arcs.push_back({i, i + 1});
        if (i + 2 < n) arcs.push_back({i, i + 2});
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return Digraph::from_arcs(n, arcs, labels);
}

WeakMode parse_weak_mode(std::string_view text) {
    if (text == "f1") return WeakMode::f1;
    if (text == "f2") return WeakMode::f2;
    if (text == "g") return WeakMode::g;
    throw InputError("unknown mode '" + std::string(text) + "' (expected f1, f2 or g)");
}

std::string to_string(WeakMode m) {
    switch (m) {
    case WeakMode::f1: return "f1";
    case WeakMode::f2: return "f2";
    case WeakMode::g: return "g";
    }
    return "?";
}

int weak_mode_minimum(WeakMode m) { return m == WeakMode::f1 ? 2 : 4; }

std::int64_t weakly_eulerian_diff(int n, WeakMode mode) {
    if (n < weak_mode_minimum(mode)) {
        throw InputError("mode " + to_string(mode) + " needs n >= " + std::to_string(weak_mode_minimum(mode)) +
                         ", got " + std::to_string(n));
    }
    const Digraph p = path_square_digraph(n);
    std::vector<int> target(static_cast<std::size_t>(n), 0);
    const auto first = std::size_t{0};
    const auto last = static_cast<std::size_t>(n - 1);
    switch (mode) {
    case WeakMode::f1:
        target[first] = 1;
        target[last] = -1;
        break;
    case WeakMode::f2:
        target[first] = 2;
        target[last] = -2;
        break;
    case WeakMode::g:
        target[first] = 1;
        target[first + 1] = 1;
        target[last - 1] = -1;
        target[last] = -1;
        break;
    }
    return count_with_imbalance(p, target).diff();
}

int f1_closed_form(int n) {
    switch (((n % 3) + 3) % 3) {
    case 0: return 0;
    case 1: return 1;
    default: return -1;
    }
}

int g_closed_form(int n) { return -f1_closed_form(n); }

} // namespace sqpaint
