#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bipcolor/errors.hpp"

namespace bipcolor {

enum class Side : std::uint8_t { a, b };

// A vertex is a dense index within its own part.
struct Vertex {
    Side side;
    int idx;

    static Vertex a(int i) { return {Side::a, i}; }
    static Vertex b(int i) { return {Side::b, i}; }

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Simple bipartite graph: edges only between part A and part B, adjacency
// stored per part as strictly sorted neighbor indices in the opposite part.
// Immutable after construction; delta caches the true maximum degree.
struct BipartiteGraph {
    std::vector<std::vector<int>> adj_a;  // a-index -> sorted b-indices
    std::vector<std::vector<int>> adj_b;  // b-index -> sorted a-indices
    int delta = 0;

    int a_size() const { return static_cast<int>(adj_a.size()); }
    int b_size() const { return static_cast<int>(adj_b.size()); }
    int vertex_count() const { return a_size() + b_size(); }

    std::span<const int> neighbors(Vertex v) const {
        const auto& adj = (v.side == Side::a) ? adj_a : adj_b;
        return adj[static_cast<std::size_t>(v.idx)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    long long edge_count() const;
};

using Edge = std::pair<int, int>;  // (a-index, b-index)

// Validates indices and duplicates, sorts adjacency, computes delta.
BipartiteGraph build_graph(int a_size, int b_size, const std::vector<Edge>& edges);

// Delta-regular simple bipartite graph on n+n vertices: superposition of
// delta random perfect matchings (permutation model). A matching that would
// create a parallel edge is resampled, up to a retry cap per matching.
BipartiteGraph gen_regular_bipartite(int n, int delta, std::uint64_t seed,
                                     int max_retries = 1000);

int max_degree(const BipartiteGraph& g);

// Full invariant scan: adjacency symmetry, strict sortedness, index ranges,
// delta correctness. Throws NonBipartiteEdge / DuplicateEdge / IndexOutOfRange.
void validate_graph(const BipartiteGraph& g);

// Edge list in sorted order, for round-trips and comparisons.
std::vector<Edge> edge_list(const BipartiteGraph& g);

// Text format: "bipartite <a_size> <b_size> <edge_count>" header, then one
// "a_idx b_idx" pair per line. Parse errors carry the offending line number.
void save_graph(const BipartiteGraph& g, std::ostream& out);
void save_graph_file(const BipartiteGraph& g, const std::string& path);
BipartiteGraph load_graph(std::istream& in);
BipartiteGraph load_graph_file(const std::string& path);

}  // namespace bipcolor
