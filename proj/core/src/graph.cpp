#include "lambda2/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace lambda2 {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw Error("vertex index out of range");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw Error("vertex count must be in 1..64");
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw Error("self-loops are not allowed");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

bool Graph::is_connected() const {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == vertex_mask();
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

int DistanceMatrix::max_entry() const {
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

// ---------------------------------------------------------------------------
// graph6

namespace {
constexpr int kG6Offset = 63;

int g6_char(char c) {
    int v = static_cast<unsigned char>(c) - kG6Offset;
    if (v < 0 || v > 63) throw ParseError("graph6: character out of range");
    return v;
}
}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: n too large");
        if (text.size() < 4) throw ParseError("graph6: truncated length field");
        n = (static_cast<long>(g6_char(text[1])) << 12) | (g6_char(text[2]) << 6) | g6_char(text[3]);
        pos = 4;
    } else {
        n = g6_char(text[0]);
        pos = 1;
    }
    if (n < 1) throw ParseError("graph6: need at least one vertex");
    if (n > Graph::kMaxVertices) throw ParseError("graph6: more than 64 vertices");

    const long bits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((bits + 5) / 6);
    if (text.size() - pos != need) throw ParseError("graph6: wrong body length");

    Graph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int word = g6_char(text[pos + k / 6]);
            if ((word >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (long b = bits; b < static_cast<long>(need) * 6; ++b) {
        int word = g6_char(text[pos + b / 6]);
        if ((word >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Offset + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kG6Offset + (n >> 12)));
        out.push_back(static_cast<char>(kG6Offset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Offset + (n & 63)));
    }
    int word = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kG6Offset + word));
                word = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>(kG6Offset + (word << (6 - filled))));
    return out;
}

// ---------------------------------------------------------------------------
// edge-list text format

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("edge list: expected \"n m\" header");
    if (n < 1 || n > Graph::kMaxVertices) throw ParseError("edge list: vertex count out of range");
    if (m < 0) throw ParseError("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        long u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: truncated edge lines");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("edge list: bad edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long extra;
    if (in >> extra) throw ParseError("edge list: trailing tokens");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// distances

DistanceMatrix bfs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix d(n);
    const std::uint64_t full = g.vertex_mask();
    for (int s = 0; s < n; ++s) {
        std::uint64_t seen = 1ull << s, frontier = seen;
        int depth = 0;
        while (frontier) {
            std::uint64_t f = frontier, next = 0;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                d.at(s, v) = depth;
                next |= g.neighbors(v);
            }
            frontier = next & ~seen;
            seen |= frontier;
            ++depth;
        }
        if (seen != full) throw DisconnectedGraph();
    }
    return d;
}

int diameter(const Graph& g) { return bfs_distances(g).max_entry(); }

// ---------------------------------------------------------------------------
// constructions

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    if (na + nb > Graph::kMaxVertices) throw Error("disjoint_union: more than 64 vertices");
    Graph g(na + nb);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    const int na = a.vertex_count();
    for (int u = 0; u < na; ++u)
        for (int v = na; v < g.vertex_count(); ++v) g.add_edge(u, v);
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    if (vertices.empty()) throw Error("induced_subgraph: empty vertex set");
    Graph h(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(g, vertices[i]);
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return h;
}

Graph induced_subgraph(const Graph& g, std::uint64_t vertex_mask) {
    return induced_subgraph(g, bits_to_vertices(vertex_mask & g.vertex_mask()));
}

std::vector<int> bits_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// induced-subgraph embedding

namespace {

struct Embedder {
    const Graph& p;
    const Graph& h;
    std::vector<int> image;
    std::uint64_t used = 0;

    bool extend(int i) {
        if (i == p.vertex_count()) return true;
        std::uint64_t cand = h.vertex_mask() & ~used;
        for (int j = 0; j < i && cand; ++j) {
            if (p.has_edge(i, j))
                cand &= h.neighbors(image[j]);
            else
                cand &= ~h.neighbors(image[j]);
        }
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (h.degree(v) < p.degree(i)) continue;
            image[i] = v;
            used |= 1ull << v;
            if (extend(i + 1)) return true;
            used &= ~(1ull << v);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    Embedder e{pattern, host, std::vector<int>(pattern.vertex_count())};
    if (!e.extend(0)) return std::nullopt;
    return e.image;
}

std::uint64_t universal_vertices(const Graph& g) {
    std::uint64_t out = 0;
    const std::uint64_t full = g.vertex_mask();
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((g.neighbors(v) | (1ull << v)) == full) out |= 1ull << v;
    return out;
}

// ---------------------------------------------------------------------------
// enumeration

Graph graph_from_edge_bits(int n, std::uint64_t bits) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((bits >> k) & 1) g.add_edge(i, j);
    return g;
}

std::uint64_t edge_bits(const Graph& g) {
    std::uint64_t bits = 0;
    int k = 0;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) bits |= 1ull << k;
    return bits;
}

std::uint64_t canonical_edge_bits(const Graph& g) {
    const int n = g.vertex_count();
    std::array<int, Graph::kMaxVertices> perm;
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t bits = 0;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (g.has_edge(perm[i], perm[j])) bits |= 1ull << k;
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

bool is_canonical_labeling(const Graph& g) { return edge_bits(g) == canonical_edge_bits(g); }

void for_each_connected_in_range(int n, std::uint64_t lo, std::uint64_t hi, bool dedup_isomorphs,
                                 const std::function<void(const Graph&)>& fn) {
    if (n < 2 || n > 7) throw Error("for_each_connected: n must be in 2..7");
    const std::uint64_t end = std::min<std::uint64_t>(hi, 1ull << (n * (n - 1) / 2));
    for (std::uint64_t mask = lo; mask < end; ++mask) {
        Graph g = graph_from_edge_bits(n, mask);
        if (!g.is_connected()) continue;
        if (dedup_isomorphs && !is_canonical_labeling(g)) continue;
        fn(g);
    }
}

void for_each_connected(int n, bool dedup_isomorphs, const std::function<void(const Graph&)>& fn) {
    if (n < 2 || n > 7) throw Error("for_each_connected: n must be in 2..7");
    for_each_connected_in_range(n, 0, 1ull << (n * (n - 1) / 2), dedup_isomorphs, fn);
}

}  // namespace lambda2
