#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambda2/errors.hpp"

namespace lambda2 {

/// Simple undirected graph on up to 64 vertices, one adjacency bitset row
/// per vertex. Vertices are 0..n-1. Treat instances as immutable once built
/// and shared; all operations on them are pure.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    std::uint64_t vertex_mask() const;
    std::vector<std::pair<int, int>> edges() const;
    bool is_connected() const;

    void add_edge(int u, int v);

    friend bool operator==(const Graph&, const Graph&);

private:
    int n_;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Integer shortest-path matrix of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n) {}
    int size() const { return n_; }
    int& at(int i, int j) { return d_[static_cast<size_t>(i) * n_ + j]; }
    int at(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    int max_entry() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

// graph6 codec (short form for n <= 62, long form beyond; no ">>graph6<<"
// header). parse rejects malformed length bytes, out-of-range characters.
// nonzero padding bits, and n > 64.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain edge-list text format: "n m\nu v\n..." with 0-based vertices.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// All-pairs shortest paths by BFS; DisconnectedGraph if any pair is
/// unreachable.
DistanceMatrix bfs_distances(const Graph& g);
int diameter(const Graph& g);

Graph complete(int n);
Graph path(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

/// Subgraph induced on the given vertices, relabeled 0..k-1 in the order
/// given.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph induced_subgraph(const Graph& g, std::uint64_t vertex_mask);

/// First injective map (in lexicographic backtracking order, extending
/// partial maps in pattern-vertex order) under which the pattern is an
/// induced subgraph of the host; nullopt if none exists.
std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host);

std::uint64_t universal_vertices(const Graph& g);

std::vector<int> bits_to_vertices(std::uint64_t mask);

// Labeled enumeration helpers. Edge bits are packed in graph6 column order:
// bit k <-> pair (i, j), i < j, k = j(j-1)/2 + i.
Graph graph_from_edge_bits(int n, std::uint64_t bits);
std::uint64_t edge_bits(const Graph& g);
/// Minimum of edge_bits over all vertex relabelings.
std::uint64_t canonical_edge_bits(const Graph& g);
bool is_canonical_labeling(const Graph& g);

/// Calls fn for every labeled simple connected graph on n vertices
/// (2 <= n <= 7), in increasing edge-bits order. With dedup_isomorphs set,
/// only canonically labeled representatives are emitted.
void for_each_connected(int n, bool dedup_isomorphs, const std::function<void(const Graph&)>& fn);
/// Same, restricted to edge-bit masks in [lo, hi): the unit of work for
/// parallel enumeration.
void for_each_connected_in_range(int n, std::uint64_t lo, std::uint64_t hi, bool dedup_isomorphs,
                                 const std::function<void(const Graph&)>& fn);

}  // namespace lambda2
