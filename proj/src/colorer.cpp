#include "bipcolor/colorer.hpp"

#include <algorithm>
#include <cmath>

#include "bipcolor/rng.hpp"

namespace bipcolor {

namespace {

// Cumulative index distribution for one (profile, k); colors are then drawn
// with a single uniform and a binary search.
std::vector<double> cumulative(const BiasProfile& profile, int k) {
    auto dist = index_distribution(profile, k);
    double run = 0.0;
    for (auto& d : dist) {
        run += d;
        d = run;
    }
    dist.back() = 1.0;  // absorb rounding in the tail
    return dist;
}

int draw_index(const std::vector<double>& cum, rng::Engine& eng) {
    const double u = rng::uniform_double(eng);
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return static_cast<int>(it - cum.begin());  // 0-based
}

// Sorted colors currently on the A-neighbors of w.
void neighbor_colors(const BipartiteGraph& g, const PartialColoring& coloring, int w,
                     std::vector<int>& out) {
    out.clear();
    for (int v : g.adj_b[w]) {
        if (coloring.a[v]) out.push_back(*coloring.a[v]);
    }
    std::sort(out.begin(), out.end());
}

bool is_bad(const BipartiteGraph& g, const ListAssignment& lists,
            const PartialColoring& coloring, int w, std::vector<int>& scratch) {
    neighbor_colors(g, coloring, w, scratch);
    for (int c : lists.lists_b[w]) {
        if (!std::binary_search(scratch.begin(), scratch.end(), c)) return false;
    }
    return true;
}

}  // namespace

PartialColoring random_color_side_a(const BipartiteGraph& g, const ListAssignment& lists,
                                    const BiasProfile& profile, std::uint64_t seed) {
    auto eng = rng::make_engine(seed);
    auto cum = cumulative(profile, lists.k);
    auto coloring = PartialColoring::empty(g);
    for (int v = 0; v < g.a_size(); ++v) {
        coloring.a[v] = lists.lists_a[v][draw_index(cum, eng)];
    }
    return coloring;
}

std::vector<int> bad_vertices(const BipartiteGraph& g, const ListAssignment& lists,
                              const PartialColoring& coloring) {
    for (int v = 0; v < g.a_size(); ++v) {
        if (!coloring.a[v]) throw SideAIncomplete("a" + std::to_string(v) + " uncolored");
    }
    std::vector<int> bad;
    std::vector<int> scratch;
    for (int w = 0; w < g.b_size(); ++w) {
        if (is_bad(g, lists, coloring, w, scratch)) bad.push_back(w);
    }
    return bad;
}

PartialColoring extend_to_b(const BipartiteGraph& g, const ListAssignment& lists,
                            PartialColoring coloring) {
    std::vector<int> scratch;
    for (int w = 0; w < g.b_size(); ++w) {
        neighbor_colors(g, coloring, w, scratch);
        bool placed = false;
        for (int c : lists.lists_b[w]) {
            if (!std::binary_search(scratch.begin(), scratch.end(), c)) {
                coloring.b[w] = c;
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw NoAvailableColor("b" + std::to_string(w) + " has no free list color");
        }
    }
    return coloring;
}

bool lll_condition(long long dependency_degree, double event_prob) {
    return 4.0 * static_cast<double>(dependency_degree) * event_prob <= 1.0;
}

LllInstantiation lll_bad_event_instantiation(int delta) {
    LllInstantiation inst;
    inst.dependency_degree = static_cast<long long>(delta) * delta;
    const double log_d = std::log(static_cast<double>(delta));
    inst.event_prob = std::exp(-log_d * log_d);
    inst.holds = lll_condition(inst.dependency_degree, inst.event_prob);
    return inst;
}

int default_max_rounds(const BipartiteGraph& g) {
    return std::max(1, 100 * g.b_size());
}

ColorRunResult moser_tardos_color(const BipartiteGraph& g, const ListAssignment& lists,
                                  const BiasProfile& profile, int max_rounds,
                                  std::uint64_t seed) {
    ColorRunResult result;
    result.report.seed = seed;
    if (max_rounds < 1) max_rounds = 1;

    auto eng = rng::make_engine(seed);
    auto cum = cumulative(profile, lists.k);
    auto coloring = PartialColoring::empty(g);
    for (int v = 0; v < g.a_size(); ++v) {
        coloring.a[v] = lists.lists_a[v][draw_index(cum, eng)];
    }
    auto bad = bad_vertices(g, lists, coloring);
    result.report.rounds = 1;
    result.report.bad_history.push_back(static_cast<int>(bad.size()));

    std::vector<int> scratch;
    while (!bad.empty() && result.report.rounds < max_rounds) {
        for (int w : bad) {
            // Earlier resamples this round may have already fixed w.
            if (!is_bad(g, lists, coloring, w, scratch)) continue;
            for (int v : g.adj_b[w]) {
                coloring.a[v] = lists.lists_a[v][draw_index(cum, eng)];
            }
            ++result.report.resampled_events;
        }
        bad = bad_vertices(g, lists, coloring);
        ++result.report.rounds;
        result.report.bad_history.push_back(static_cast<int>(bad.size()));
    }

    if (!bad.empty()) {
        result.report.success = false;  // rounds exhausted
        return result;
    }
    auto full = extend_to_b(g, lists, std::move(coloring));
    result.report.success = verify_proper(g, lists, full);
    if (result.report.success) {
        result.coloring = std::move(full);
    }
    return result;
}

bool verify_proper(const BipartiteGraph& g, const ListAssignment& lists,
                   const PartialColoring& coloring) {
    for (int v = 0; v < g.a_size(); ++v) {
        if (!coloring.a[v]) return false;
        if (!index_of(lists, Vertex::a(v), *coloring.a[v])) return false;
    }
    for (int w = 0; w < g.b_size(); ++w) {
        if (!coloring.b[w]) return false;
        if (!index_of(lists, Vertex::b(w), *coloring.b[w])) return false;
    }
    for (int v = 0; v < g.a_size(); ++v) {
        for (int w : g.adj_a[v]) {
            if (*coloring.a[v] == *coloring.b[w]) return false;
        }
    }
    return true;
}

}  // namespace bipcolor
