#include "bipcolor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "bipcolor/rng.hpp"

namespace bipcolor {

long long BipartiteGraph::edge_count() const {
    long long total = 0;
    for (const auto& nb : adj_a) total += static_cast<long long>(nb.size());
    return total;
}

namespace {

int compute_delta(const BipartiteGraph& g) {
    std::size_t best = 0;
    for (const auto& nb : g.adj_a) best = std::max(best, nb.size());
    for (const auto& nb : g.adj_b) best = std::max(best, nb.size());
    return static_cast<int>(best);
}

}  // namespace

BipartiteGraph build_graph(int a_size, int b_size, const std::vector<Edge>& edges) {
    if (a_size < 0 || b_size < 0) {
        throw IndexOutOfRange("negative part size");
    }
    BipartiteGraph g;
    g.adj_a.resize(a_size);
    g.adj_b.resize(b_size);
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= a_size || b < 0 || b >= b_size) {
            throw IndexOutOfRange("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside parts " + std::to_string(a_size) + "+" +
                                  std::to_string(b_size));
        }
        if (!seen.insert({a, b}).second) {
            throw DuplicateEdge("duplicate edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
        }
        g.adj_a[a].push_back(b);
        g.adj_b[b].push_back(a);
    }
    for (auto& nb : g.adj_a) std::sort(nb.begin(), nb.end());
    for (auto& nb : g.adj_b) std::sort(nb.begin(), nb.end());
    g.delta = compute_delta(g);
    return g;
}

BipartiteGraph gen_regular_bipartite(int n, int delta, std::uint64_t seed,
                                     int max_retries) {
    if (n < 1 || delta < 1 || delta > n) {
        throw InfeasibleDegree("need 1 <= delta <= n, got n=" + std::to_string(n) +
                               " delta=" + std::to_string(delta));
    }
    if (delta == n) {
        // Complete bipartite: the only simple option, no sampling needed.
        std::vector<Edge> all;
        all.reserve(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) all.emplace_back(a, b);
        }
        return build_graph(n, n, all);
    }

    auto eng = rng::make_engine(seed);
    // Edge presence as bitset rows over B for O(1) collision checks.
    std::vector<std::vector<std::uint64_t>> present(
        n, std::vector<std::uint64_t>((n + 63) / 64, 0));
    auto occupied = [&](int a, int b) {
        return (present[a][b / 64] >> (b % 64)) & 1ULL;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * delta);

    // Each matching starts as a uniformly random permutation; rows that would
    // duplicate an existing edge are repaired by random transpositions until
    // the matching is collision-free. Whole-matching rejection would need
    // ~e^m attempts against m prior matchings, so the repair is per row.
    std::vector<int> perm(n);
    std::vector<int> colliding;
    for (int m = 0; m < delta; ++m) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng::uniform_below(eng, i + 1));
            std::swap(perm[i], perm[j]);
        }
        const long long swap_cap = static_cast<long long>(max_retries) * n;
        long long swaps = 0;
        for (;;) {
            colliding.clear();
            for (int i = 0; i < n; ++i) {
                if (occupied(i, perm[i])) colliding.push_back(i);
            }
            if (colliding.empty()) break;
            for (int i : colliding) {
                if (++swaps > swap_cap) {
                    throw RetryExhausted("matching " + std::to_string(m) +
                                         " not collision-free after " +
                                         std::to_string(swap_cap) + " repair swaps");
                }
                int j = static_cast<int>(rng::uniform_below(eng, n));
                std::swap(perm[i], perm[j]);
            }
        }
        for (int i = 0; i < n; ++i) {
            present[i][perm[i] / 64] |= 1ULL << (perm[i] % 64);
            edges.emplace_back(i, perm[i]);
        }
    }
    return build_graph(n, n, edges);
}

int max_degree(const BipartiteGraph& g) { return compute_delta(g); }

void validate_graph(const BipartiteGraph& g) {
    const int na = g.a_size();
    const int nb = g.b_size();
    auto check_side = [&](const std::vector<std::vector<int>>& adj, int other_size,
                          const char* side) {
        for (std::size_t v = 0; v < adj.size(); ++v) {
            const auto& nbrs = adj[v];
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (nbrs[i] < 0 || nbrs[i] >= other_size) {
                    throw NonBipartiteEdge(std::string(side) + std::to_string(v) +
                                           " has neighbor index " + std::to_string(nbrs[i]) +
                                           " outside the opposite part");
                }
                if (i > 0 && nbrs[i] <= nbrs[i - 1]) {
                    throw DuplicateEdge(std::string(side) + std::to_string(v) +
                                        " neighbor list not strictly sorted");
                }
            }
        }
    };
    check_side(g.adj_a, nb, "a");
    check_side(g.adj_b, na, "b");
    // Symmetry: v in N(w) iff w in N(v).
    for (int a = 0; a < na; ++a) {
        for (int b : g.adj_a[a]) {
            if (!std::binary_search(g.adj_b[b].begin(), g.adj_b[b].end(), a)) {
                throw NonBipartiteEdge("asymmetric edge a" + std::to_string(a) + "-b" +
                                       std::to_string(b));
            }
        }
    }
    long long down = 0, up = 0;
    for (const auto& nb_ : g.adj_a) down += static_cast<long long>(nb_.size());
    for (const auto& nb_ : g.adj_b) up += static_cast<long long>(nb_.size());
    if (down != up) {
        throw NonBipartiteEdge("adjacency totals differ between parts");
    }
    if (g.delta != compute_delta(g)) {
        throw IndexOutOfRange("stored delta " + std::to_string(g.delta) +
                              " differs from true maximum degree");
    }
}

std::vector<Edge> edge_list(const BipartiteGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int a = 0; a < g.a_size(); ++a) {
        for (int b : g.adj_a[a]) edges.emplace_back(a, b);
    }
    return edges;
}

void save_graph(const BipartiteGraph& g, std::ostream& out) {
    out << "bipartite " << g.a_size() << ' ' << g.b_size() << ' ' << g.edge_count()
        << '\n';
    for (const auto& [a, b] : edge_list(g)) {
        out << a << ' ' << b << '\n';
    }
}

void save_graph_file(const BipartiteGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open " + path + " for writing");
    save_graph(g, out);
}

BipartiteGraph load_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw IoFailure("line 1: empty graph file");
    }
    std::istringstream header(line);
    std::string tag;
    long long a_size = -1, b_size = -1, edge_count = -1;
    if (!(header >> tag >> a_size >> b_size >> edge_count) || tag != "bipartite" ||
        a_size < 0 || b_size < 0 || edge_count < 0) {
        throw IoFailure("line 1: expected 'bipartite <a_size> <b_size> <edge_count>'");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        long long a = -1, b = -1;
        std::string extra;
        if (!(row >> a >> b) || (row >> extra)) {
            throw IoFailure("line " + std::to_string(line_no) +
                            ": expected 'a_idx b_idx'");
        }
        if (a < 0 || a >= a_size || b < 0 || b >= b_size) {
            throw IoFailure("line " + std::to_string(line_no) + ": edge (" +
                            std::to_string(a) + "," + std::to_string(b) +
                            ") out of range");
        }
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (static_cast<long long>(edges.size()) != edge_count) {
        throw IoFailure("header declares " + std::to_string(edge_count) + " edges, file has " +
                        std::to_string(edges.size()));
    }
    try {
        return build_graph(static_cast<int>(a_size), static_cast<int>(b_size), edges);
    } catch (const DuplicateEdge& e) {
        throw IoFailure(std::string("graph file invalid: ") + e.what());
    }
}

BipartiteGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path);
    return load_graph(in);
}

}  // namespace bipcolor
