#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lambda2/graph.hpp"

namespace lambda2 {

struct ChordalityResult {
    bool chordal;
    /// When not chordal: a chordless cycle of length >= 4, in cyclic order.
    std::vector<int> chordless_cycle;
};

/// Maximum-cardinality-search test; on failure extracts a chordless cycle.
ChordalityResult is_chordal(const Graph& g);

/// Maximal cliques of a connected chordal graph as vertex bitmasks, ordered
/// by first appearance along the MCS order. Throws NotChordal.
std::vector<std::uint64_t> maximal_cliques_chordal(const Graph& g);

/// Clique tree: maximal cliques plus spanning-tree edges over them with the
/// induced-subtree property.
struct CliqueTree {
    std::vector<std::uint64_t> cliques;
    std::vector<std::pair<int, int>> tree_edges;
};

/// Maximum-weight spanning tree of the clique intersection graph with
/// deterministic (index-lexicographic) tie-breaking.
CliqueTree build_clique_tree(const Graph& g);
/// Same with randomized tie-breaking among equal-weight edges; used to
/// exercise the invariance of the separator multiset.
CliqueTree build_clique_tree(const Graph& g, std::mt19937_64& rng);

struct MvsEntry {
    std::uint64_t separator;
    int multiplicity;
};

/// Minimal vertex separators with multiplicities, sorted by (size, mask).
/// Sum of multiplicities equals (number of maximal cliques) - 1.
struct MvsMultiset {
    std::vector<MvsEntry> entries;
    int clique_count = 0;

    int total_multiplicity() const;
    int max_separator_size() const;
    bool all_unit_multiplicity() const;
};

MvsMultiset minimal_vertex_separators(const Graph& g);
MvsMultiset separators_of(const CliqueTree& tree);

/// Vertices whose neighborhood is a clique.
std::uint64_t simplicial_vertices(const Graph& g);

struct BlockDecomposition {
    std::vector<std::uint64_t> blocks;
    std::uint64_t cut_vertices = 0;
};

/// Biconnected components and cut vertices of a connected graph.
BlockDecomposition blocks(const Graph& g);

/// Every block induces a clique.
bool is_block_graph(const Graph& g);

/// Degree-sequence split test (Hammer-Simeone).
bool is_split(const Graph& g);
/// Chordal and gem-free.
bool is_ptolemaic(const Graph& g);
/// No induced C4 and no induced P4.
bool is_quasi_threshold(const Graph& g);

/// Four-point inequality d(u,v)d(w,x) <= d(u,w)d(v,x) + d(u,x)d(v,w) over
/// all ordered 4-tuples of distinct vertices.
bool ptolemy_inequality_holds(const Graph& g);

}  // namespace lambda2
