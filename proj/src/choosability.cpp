#include "sqpaint/choosability.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "sqpaint/error.hpp"

namespace sqpaint {

namespace {

bool connected_within(const std::vector<VertexMask>& nbr, VertexMask set) {
    VertexMask seen = set & (~set + 1);
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask m = frontier; m; m &= m - 1) next |= nbr[static_cast<std::size_t>(lowest_vertex(m))];
        next &= set & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == set;
}

/// Search over class multisets on one induced subgraph G[X].
class ClassSearch {
public:
    ClassSearch(const std::vector<VertexMask>& nbr, const TokenFn& f, VertexMask x) : nbr_(nbr), f_(f) {
        for (VertexMask m = x; m; m &= m - 1) order_.push_back(lowest_vertex(m));
        cands_.resize(order_.size());
        for (VertexMask s = x; s; s = (s - 1) & x) {
            if (popcount(s) < 2 || !connected_within(nbr_, s)) continue;
            const Vertex lo = lowest_vertex(s);
            const auto pos = std::find(order_.begin(), order_.end(), lo) - order_.begin();
            cands_[static_cast<std::size_t>(pos)].push_back(s);
        }
        for (auto& c : cands_) std::sort(c.begin(), c.end());
        cover_.assign(nbr_.size(), 0);
    }

    /// Top-level branches: the least class chosen for the first vertex.
    std::size_t branch_count() const { return cands_.empty() ? 0 : cands_[0].size(); }

    /// Runs the branch; stops at the first uncolorable assignment.
    void run_branch(std::size_t first) {
        if (!add(cands_[0][first])) return;
        descend(0, first, need(order_[0]));
        remove(cands_[0][first]);
    }

    std::uint64_t checked() const { return checked_; }
    const std::optional<std::vector<VertexMask>>& witness() const { return witness_; }

private:
    int need(Vertex v) const { return f_[v] - cover_[static_cast<std::size_t>(v)]; }

    bool add(VertexMask s) {
        for (VertexMask m = s; m; m &= m - 1) {
            if (cover_[static_cast<std::size_t>(lowest_vertex(m))] >= f_[lowest_vertex(m)]) return false;
        }
        for (VertexMask m = s; m; m &= m - 1) ++cover_[static_cast<std::size_t>(lowest_vertex(m))];
        classes_.push_back(s);
        return true;
    }

    void remove(VertexMask s) {
        for (VertexMask m = s; m; m &= m - 1) --cover_[static_cast<std::size_t>(lowest_vertex(m))];
        classes_.pop_back();
    }

    void descend(std::size_t i, std::size_t from, int remaining) {
        if (witness_) return;
        if (remaining == 0) {
            if (i + 1 == order_.size()) {
                finish();
                return;
            }
            descend(i + 1, 0, need(order_[i + 1]));
            return;
        }
        const auto& c = cands_[i];
        for (std::size_t k = from; k < c.size() && !witness_; ++k) {
            if (!add(c[k])) continue;
            descend(i, k, remaining - 1);
            remove(c[k]);
        }
    }

    void finish() {
        ++checked_;
        std::vector<VertexMask> used(classes_.size(), 0);
        if (!colorable(0, used)) witness_ = classes_;
    }

    bool colorable(std::size_t i, std::vector<VertexMask>& used) const {
        if (i == order_.size()) return true;
        const Vertex v = order_[i];
        const VertexMask nv = nbr_[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            if (!(classes_[k] & bit(v)) || (used[k] & nv)) continue;
            // identical classes are interchangeable; only try the first free copy
            if (k > 0 && classes_[k] == classes_[k - 1] && used[k] == used[k - 1]) continue;
            used[k] |= bit(v);
            const bool ok = colorable(i + 1, used);
            used[k] &= ~bit(v);
            if (ok) return true;
        }
        return false;
    }

    const std::vector<VertexMask>& nbr_;
    const TokenFn& f_;
    std::vector<Vertex> order_;
    std::vector<std::vector<VertexMask>> cands_;
    std::vector<int> cover_;
    std::vector<VertexMask> classes_;
    std::uint64_t checked_ = 0;
    std::optional<std::vector<VertexMask>> witness_;
};

struct Branch {
    VertexMask x = 0;
    std::size_t first = 0;
};

struct Prepared {
    std::vector<VertexMask> nbr;
    std::vector<Branch> branches;
    std::optional<ListAssignment> immediate;
};

ListAssignment to_lists(const Graph& g, const TokenFn& f, VertexMask x, const std::vector<VertexMask>& classes) {
    ListAssignment lists(static_cast<std::size_t>(g.order()));
    int color = 0;
    for (VertexMask c : classes) {
        ++color;
        for (VertexMask m = c; m; m &= m - 1) lists[static_cast<std::size_t>(lowest_vertex(m))].push_back(color);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (x & bit(v)) continue;
        for (int k = 0; k < f[v]; ++k) lists[static_cast<std::size_t>(v)].push_back(++color);
    }
    return lists;
}

Prepared prepare(const Graph& g, const TokenFn& f) {
    require_tokens_match(g, f);
    if (g.order() > kMaxChoosableVertices) {
        throw SizeLimitError("choosability: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                             std::to_string(kMaxChoosableVertices));
    }
    if (g.order() > 0 && f.max() > kMaxChoosableTokens) {
        throw SizeLimitError("choosability: list size " + std::to_string(f.max()) + " exceeds the limit of " +
                             std::to_string(kMaxChoosableTokens));
    }
    Prepared p;
    for (Vertex v = 0; v < g.order(); ++v) p.nbr.push_back(g.neighbor_mask(v));
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f[v] <= 0) {
            p.immediate = to_lists(g, f, bit(v), {});
            return p;
        }
    }
    const VertexMask all = g.all_vertices_mask();
    for (VertexMask x = 1; x <= all; ++x) {
        bool tight = true;
        for (VertexMask m = x; m; m &= m - 1) {
            const Vertex v = lowest_vertex(m);
            if (f[v] > popcount(p.nbr[static_cast<std::size_t>(v)] & x)) tight = false;
        }
        if (!tight) continue;
        const ClassSearch probe(p.nbr, f, x);
        for (std::size_t k = 0; k < probe.branch_count(); ++k) p.branches.push_back({x, k});
    }
    return p;
}

struct BranchResult {
    std::uint64_t checked = 0;
    std::optional<ListAssignment> witness;
};

BranchResult run(const Graph& g, const TokenFn& f, const Prepared& p, const Branch& b) {
    ClassSearch s(p.nbr, f, b.x);
    s.run_branch(b.first);
    BranchResult r;
    r.checked = s.checked();
    if (s.witness()) r.witness = to_lists(g, f, b.x, *s.witness());
    return r;
}

} // namespace

ChoosabilityResult is_f_choosable_serial(const Graph& g, const TokenFn& f) {
    const Prepared p = prepare(g, f);
    ChoosabilityResult out;
    if (p.immediate) {
        out.choosable = false;
        out.witness = p.immediate;
        return out;
    }
    for (const Branch& b : p.branches) {
        BranchResult r = run(g, f, p, b);
        out.assignments_checked += r.checked;
        if (r.witness) {
            out.choosable = false;
            out.witness = std::move(r.witness);
            break;
        }
    }
    return out;
}

ChoosabilityResult is_f_choosable(const Graph& g, const TokenFn& f) {
    const Prepared p = prepare(g, f);
    ChoosabilityResult out;
    if (p.immediate) {
        out.choosable = false;
        out.witness = p.immediate;
        return out;
    }
    const std::size_t count = p.branches.size();
    std::vector<BranchResult> results(count);
    std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < count; ++i) {
        if (i > first_hit.load(std::memory_order_relaxed)) continue;
        results[i] = run(g, f, p, p.branches[i]);
        if (results[i].witness) {
            std::size_t cur = first_hit.load();
            while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
            }
        }
    }
    // same answer, witness and count as the serial scan: stop at the first hit
    for (std::size_t i = 0; i < count; ++i) {
        out.assignments_checked += results[i].checked;
        if (results[i].witness) {
            out.choosable = false;
            out.witness = std::move(results[i].witness);
            break;
        }
    }
    return out;
}

std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.order()) throw InputError("list assignment size does not match the graph");
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == n) return true;
        for (int c : lists[static_cast<std::size_t>(v)]) {
            bool clash = false;
            for (Vertex u : g.neighbors(v)) {
                if (u < v && color[static_cast<std::size_t>(u)] == c) clash = true;
            }
            if (clash) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return color;
}

} // namespace sqpaint
