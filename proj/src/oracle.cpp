#include "bipcolor/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>

namespace bipcolor {

namespace {

// Flattened view: global ids 0..na-1 are part A, na.. are part B.
struct FlatGraph {
    int na = 0;
    int n = 0;
    std::vector<std::vector<int>> adj;  // global ids

    explicit FlatGraph(const BipartiteGraph& g) {
        na = g.a_size();
        n = na + g.b_size();
        adj.resize(n);
        for (int a = 0; a < g.a_size(); ++a) {
            for (int b : g.adj_a[a]) {
                adj[a].push_back(na + b);
                adj[na + b].push_back(a);
            }
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    }

    Vertex vertex(int id) const {
        return id < na ? Vertex::a(id) : Vertex::b(id - na);
    }
};

// Backtracking L-coloring over the first `limit` vertices of the flat order.
// Most-constrained-vertex first, ties by lowest id; colors tried ascending.
bool color_prefix(const FlatGraph& fg, const std::vector<std::vector<int>>& lists,
                  int limit, std::vector<int>& colors) {
    constexpr int kUncolored = INT_MIN;
    auto available = [&](int v, std::vector<int>& out) {
        out.clear();
        for (int c : lists[v]) {
            bool blocked = false;
            for (int u : fg.adj[v]) {
                if (u < limit && colors[u] != kUncolored && colors[u] == c) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) out.push_back(c);
        }
    };

    std::vector<int> options;
    auto recurse = [&](auto&& self) -> bool {
        int best = -1;
        std::size_t best_count = SIZE_MAX;
        std::vector<int> best_options;
        for (int v = 0; v < limit; ++v) {
            if (colors[v] != kUncolored) continue;
            available(v, options);
            if (options.size() < best_count) {
                best = v;
                best_count = options.size();
                best_options = options;
                if (best_count == 0) break;
            }
        }
        if (best == -1) return true;  // everything colored
        if (best_count == 0) return false;
        for (int c : best_options) {
            colors[best] = c;
            if (self(self)) return true;
            colors[best] = kUncolored;
        }
        return false;
    };
    colors.assign(fg.n, kUncolored);
    return recurse(recurse);
}

ListAssignment assignment_from_flat(const FlatGraph& fg, int k,
                                    const std::vector<std::vector<int>>& lists) {
    std::vector<std::vector<int>> la(lists.begin(), lists.begin() + fg.na);
    std::vector<std::vector<int>> lb(lists.begin() + fg.na, lists.end());
    return make_assignment(k, std::move(la), std::move(lb));
}

// Degeneracy by repeated min-degree removal. Greedy coloring along the
// elimination order leaves every vertex at most `degeneracy` colored
// neighbors, so k >= degeneracy + 1 lists always admit an L-coloring.
int degeneracy(const FlatGraph& fg) {
    std::vector<int> deg(fg.n);
    std::vector<bool> removed(fg.n, false);
    for (int v = 0; v < fg.n; ++v) deg[v] = static_cast<int>(fg.adj[v].size());
    int best = 0;
    for (int round = 0; round < fg.n; ++round) {
        int pick = -1;
        for (int v = 0; v < fg.n; ++v) {
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        }
        best = std::max(best, deg[pick]);
        removed[pick] = true;
        for (int u : fg.adj[pick]) {
            if (!removed[u]) --deg[u];
        }
    }
    return best;
}

// Enumerates canonical lists for one vertex: a subset of the `used` colors
// already seen plus a run of fresh colors used+1.. (fresh names are forced by
// first-occurrence canonicalization). Calls fn(list, fresh_count).
template <typename Fn>
bool for_each_canonical_list(int k, int used, int pool, Fn&& fn) {
    for (int fresh = 0; fresh <= k; ++fresh) {
        const int old = k - fresh;
        if (old > used) continue;
        if (used + fresh > pool) break;
        std::vector<int> pick(old);
        std::iota(pick.begin(), pick.end(), 1);  // first combination
        for (;;) {
            std::vector<int> list(pick);
            for (int f = 1; f <= fresh; ++f) list.push_back(used + f);
            if (!fn(list, fresh)) return false;
            // next combination of `old` values from {1..used}
            int i = old - 1;
            while (i >= 0 && pick[i] == used - (old - 1 - i)) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < old; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

}  // namespace

LColorResult l_colorable(const BipartiteGraph& g, const ListAssignment& lists) {
    FlatGraph fg(g);
    std::vector<std::vector<int>> flat(lists.lists_a);
    flat.insert(flat.end(), lists.lists_b.begin(), lists.lists_b.end());
    std::vector<int> colors;
    LColorResult result;
    result.colorable = color_prefix(fg, flat, fg.n, colors);
    if (result.colorable) {
        auto witness = PartialColoring::empty(g);
        for (int id = 0; id < fg.n; ++id) {
            witness.at(fg.vertex(id)) = colors[id];
        }
        result.witness = std::move(witness);
    }
    return result;
}

int default_pool(const BipartiteGraph& g, int k) {
    return std::max(1, k * g.vertex_count());
}

ChoosableResult choosable(const BipartiteGraph& g, int k, int pool,
                          long long node_budget) {
    FlatGraph fg(g);
    const int n = fg.n;
    ChoosableResult result;
    if (n == 0 || k > degeneracy(fg)) {
        result.choosable = true;
        return result;
    }

    std::vector<std::vector<int>> lists(n);
    std::vector<int> colors;
    long long nodes = 0;
    bool found_counterexample = false;

    // DFS over vertices; prunes a branch as soon as the assigned prefix is
    // already uncolorable (any completion stays uncolorable).
    auto dfs = [&](auto&& self, int v, int used) -> bool {
        return for_each_canonical_list(k, used, pool, [&](std::vector<int> list, int fresh) {
            if (++nodes > node_budget) {
                throw TooLargeToEnumerate("list enumeration exceeded " +
                                          std::to_string(node_budget) + " nodes");
            }
            lists[v] = std::move(list);
            if (!color_prefix(fg, lists, v + 1, colors)) {
                // Counterexample: pad unassigned vertices with fresh disjoint
                // lists when the pool allows, else repeat {1..k}.
                int next = used + fresh;
                for (int u = v + 1; u < n; ++u) {
                    lists[u].resize(k);
                    if (next + k <= pool) {
                        std::iota(lists[u].begin(), lists[u].end(), next + 1);
                        next += k;
                    } else {
                        std::iota(lists[u].begin(), lists[u].end(), 1);
                    }
                }
                result.counterexample = assignment_from_flat(fg, k, lists);
                found_counterexample = true;
                return false;  // stop enumeration
            }
            if (v + 1 == n) return true;  // colorable leaf, keep going
            return self(self, v + 1, used + fresh);
        });
    };
    dfs(dfs, 0, 0);
    result.choosable = !found_counterexample;
    return result;
}

int choosability(const BipartiteGraph& g, std::optional<int> pool,
                 long long node_budget) {
    for (int k = 1;; ++k) {
        const int p = pool.value_or(default_pool(g, k));
        if (choosable(g, k, p, node_budget).choosable) return k;
    }
}

int chromatic_number(const BipartiteGraph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int q = 1;; ++q) {
        std::vector<int> palette(q);
        std::iota(palette.begin(), palette.end(), 1);
        std::vector<std::vector<int>> la(g.a_size(), palette);
        std::vector<std::vector<int>> lb(g.b_size(), palette);
        auto lists = make_assignment(q, std::move(la), std::move(lb));
        if (l_colorable(g, lists).colorable) return q;
    }
}

}  // namespace bipcolor
