#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bipcolor/graph.hpp"

namespace bipcolor {

// Per-vertex color lists of common size k, each a strictly increasing integer
// sequence, so the 1-based index of a color in a list is unique.
struct ListAssignment {
    int k = 0;
    std::vector<std::vector<int>> lists_a;
    std::vector<std::vector<int>> lists_b;

    std::span<const int> list(Vertex v) const {
        const auto& ls = (v.side == Side::a) ? lists_a : lists_b;
        return ls[static_cast<std::size_t>(v.idx)];
    }
};

// Validates list sizes and strict monotonicity.
ListAssignment make_assignment(int k, std::vector<std::vector<int>> lists_a,
                               std::vector<std::vector<int>> lists_b);

// Per-vertex-of-B weight diagnostics. Ratios are computed from the exact
// integer statistics; alpha is defined 0 when n_prime is empty.
struct WeightStats {
    int w = 0;                                   // b-index
    std::vector<std::pair<int, int>> shared;     // (a-neighbor, ell_{v,w})
    long long big_z = 0;                         // Z(w) = sum of ell
    double z = 0.0;                              // Z(w) / (delta * k)
    double y = 0.0;                              // |n_prime| / delta
    double alpha = 0.0;                          // excess overlap of n_prime
    std::vector<int> n_prime;                    // ell > floor(9k/10)
    std::vector<int> n_dprime;                   // the rest of N(w)
    double ell_bar = 0.0;                        // mean ell over n_dprime
};

// 1-based position of c in L(v), or nullopt when c is off-list.
std::optional<int> index_of(const ListAssignment& lists, Vertex v, int c);

// |L(v) ∩ L(w)| by sorted merge.
int shared_count(const ListAssignment& lists, Vertex v, Vertex w);

// Z(w) = sum over neighbors v of |L(v) ∩ L(w)|. Requires w in part B.
long long weight(const ListAssignment& lists, const BipartiteGraph& g, Vertex w);

WeightStats weight_stats(const ListAssignment& lists, const BipartiteGraph& g, Vertex w);

enum class ListMode {
    independent_uniform,  // each vertex: uniform k-subset of {1..pool}
    planted_overlap,      // shared low-color core of size round(theta*k)
};

// Random list generation. planted_overlap gives every vertex the core
// {1..round(theta*k)} plus random fill from {core+1..pool}, so each edge
// shares ~theta*k colors and the shared colors sit at the lowest indices.
ListAssignment gen_lists(const BipartiteGraph& g, int k, int pool, ListMode mode,
                         std::uint64_t seed, double theta = 0.0);

// Text format: "lists <vertex_count> <k>" header, one line per vertex
// (part A rows first, then part B), space-separated increasing integers.
void save_lists(const ListAssignment& lists, std::ostream& out);
void save_lists_file(const ListAssignment& lists, const std::string& path);
// The loader needs the A/B split, which the graph provides.
ListAssignment load_lists(std::istream& in, int a_size, int b_size);
ListAssignment load_lists_file(const std::string& path, int a_size, int b_size);

// CSV "w,Z,z,y,alpha,ell_bar", one row per B-vertex.
void write_stats_csv(const ListAssignment& lists, const BipartiteGraph& g,
                     std::ostream& out);

}  // namespace bipcolor
