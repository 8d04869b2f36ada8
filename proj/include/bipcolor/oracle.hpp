#pragma once

#include <optional>
#include <vector>

#include "bipcolor/colorer.hpp"
#include "bipcolor/graph.hpp"
#include "bipcolor/lists.hpp"

namespace bipcolor {

// Exact small-instance ground truth. Backtracking and exhaustive list
// enumeration; intended for |V| up to ~30 (advisory, not enforced).

struct LColorResult {
    bool colorable = false;
    std::optional<PartialColoring> witness;  // verifies via verify_proper
};

// Exact L-colorability by backtracking, most-constrained-vertex first.
LColorResult l_colorable(const BipartiteGraph& g, const ListAssignment& lists);

struct ChoosableResult {
    bool choosable = false;
    std::optional<ListAssignment> counterexample;  // present iff not choosable
};

// Default palette size: k * |V| (larger pools cannot change the answer once
// lists can be made pairwise disjoint).
int default_pool(const BipartiteGraph& g, int k);

// True iff every assignment of k-subsets of {1..pool} admits an L-coloring.
// k above the graph's degeneracy is answered by the greedy argument; below
// that, enumeration canonicalizes color names by first occurrence, and the
// node budget guards against blowup (TooLargeToEnumerate).
ChoosableResult choosable(const BipartiteGraph& g, int k, int pool,
                          long long node_budget = 10'000'000);

// Least k with choosable(g, k) true.
int choosability(const BipartiteGraph& g, std::optional<int> pool = std::nullopt,
                 long long node_budget = 10'000'000);

// Exact chromatic number: least q such that the uniform assignment {1..q}
// admits a proper coloring.
int chromatic_number(const BipartiteGraph& g);

}  // namespace bipcolor
