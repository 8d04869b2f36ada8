#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bipcolor/bias.hpp"
#include "bipcolor/graph.hpp"
#include "bipcolor/lists.hpp"

namespace bipcolor {

// Colors assigned so far; nullopt = uncolored. May cover only one side.
struct PartialColoring {
    std::vector<std::optional<int>> a;
    std::vector<std::optional<int>> b;

    static PartialColoring empty(const BipartiteGraph& g) {
        return {std::vector<std::optional<int>>(g.a_size()),
                std::vector<std::optional<int>>(g.b_size())};
    }

    std::optional<int>& at(Vertex v) {
        return (v.side == Side::a) ? a[v.idx] : b[v.idx];
    }
    const std::optional<int>& at(Vertex v) const {
        return (v.side == Side::a) ? a[v.idx] : b[v.idx];
    }
};

struct RunReport {
    bool success = false;
    int rounds = 0;                 // coloring/resampling rounds performed
    long long resampled_events = 0; // bad events whose variables were resampled
    std::uint64_t seed = 0;
    std::vector<int> bad_history;   // bad-vertex count after each round
};

// Colors every A-vertex independently per the profile; B stays uncolored.
PartialColoring random_color_side_a(const BipartiteGraph& g, const ListAssignment& lists,
                                    const BiasProfile& profile, std::uint64_t seed);

// B-vertices whose entire list is covered by neighbor colors. Requires all of
// A colored (SideAIncomplete otherwise). Returned sorted ascending.
std::vector<int> bad_vertices(const BipartiteGraph& g, const ListAssignment& lists,
                              const PartialColoring& coloring);

// Assigns every B-vertex the least available color from its list. Throws
// NoAvailableColor when some B-vertex has none.
PartialColoring extend_to_b(const BipartiteGraph& g, const ListAssignment& lists,
                            PartialColoring coloring);

// Symmetric local lemma condition 4*D*p <= 1 (boundary inclusive).
bool lll_condition(long long dependency_degree, double event_prob);

// The instantiation the colorer's bad events live under: each event depends
// on fewer than delta^2 others and occurs with probability below
// exp(-log^2 delta) once delta is large enough.
struct LllInstantiation {
    long long dependency_degree = 0;
    double event_prob = 0.0;
    bool holds = false;
};
LllInstantiation lll_bad_event_instantiation(int delta);

struct ColorRunResult {
    std::optional<PartialColoring> coloring;  // present iff report.success
    RunReport report;
};

// Resampling loop: round 1 colors all of A; each later round walks the
// currently bad B-vertices in ascending order, rechecks each lazily, and
// resamples the colors of its A-neighbors. Stops when the bad set is empty
// (extends to B and verifies) or when max_rounds is reached (failure value,
// not an exception). Deterministic per seed.
ColorRunResult moser_tardos_color(const BipartiteGraph& g, const ListAssignment& lists,
                                  const BiasProfile& profile, int max_rounds,
                                  std::uint64_t seed);

// Default round cap: 100 * |B|, at least 1.
int default_max_rounds(const BipartiteGraph& g);

// True iff the coloring is total, on-list, and has no monochromatic edge.
bool verify_proper(const BipartiteGraph& g, const ListAssignment& lists,
                   const PartialColoring& coloring);

}  // namespace bipcolor
