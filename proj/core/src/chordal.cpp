#include "lambda2/chordal.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace lambda2 {

namespace {

struct McsResult {
    std::vector<int> order;                 // visit order
    std::vector<std::uint64_t> earlier;     // earlier[v]: neighbors visited before v
    std::vector<int> pos;                   // pos[v]: index in visit order
};

McsResult mcs(const Graph& g) {
    const int n = g.vertex_count();
    McsResult r{std::vector<int>(n), std::vector<std::uint64_t>(n), std::vector<int>(n)};
    std::vector<int> weight(n, 0);
    std::uint64_t visited = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if ((visited >> v) & 1) continue;
            if (best < 0 || weight[v] > weight[best]) best = v;
        }
        r.order[step] = best;
        r.pos[best] = step;
        r.earlier[best] = g.neighbors(best) & visited;
        visited |= 1ull << best;
        std::uint64_t nb = g.neighbors(best) & ~visited;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            ++weight[u];
        }
    }
    return r;
}

bool peo_ok(const Graph& g, const McsResult& m) {
    const int n = g.vertex_count();
    for (int step = 0; step < n; ++step) {
        int v = m.order[step];
        std::uint64_t e = m.earlier[v];
        if (e == 0) continue;
        int u = -1;
        std::uint64_t scan = e;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            if (u < 0 || m.pos[w] > m.pos[u]) u = w;
        }
        if ((e & ~(1ull << u)) & ~g.neighbors(u)) return false;
    }
    return true;
}

// Shortest u..w path inside `allowed` (both endpoints included), or empty.
std::vector<int> bfs_path(const Graph& g, int u, int w, std::uint64_t allowed) {
    std::vector<int> parent(g.vertex_count(), -1);
    std::uint64_t seen = 1ull << u, frontier = seen;
    while (frontier && !((seen >> w) & 1)) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            std::uint64_t fresh = g.neighbors(v) & allowed & ~seen & ~next;
            std::uint64_t scan = fresh;
            while (scan) {
                int x = std::countr_zero(scan);
                scan &= scan - 1;
                parent[x] = v;
            }
            next |= fresh;
        }
        frontier = next;
        seen |= next;
    }
    if (!((seen >> w) & 1)) return {};
    std::vector<int> rpath{w};
    while (rpath.back() != u) rpath.push_back(parent[rpath.back()]);
    std::reverse(rpath.begin(), rpath.end());
    return rpath;
}

std::vector<int> find_chordless_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::uint64_t nb = g.neighbors(v);
        for (int u = 0; u < n; ++u) {
            if (!((nb >> u) & 1)) continue;
            for (int w = u + 1; w < n; ++w) {
                if (!((nb >> w) & 1) || g.has_edge(u, w)) continue;
                // forbid v and all its other neighbors; a shortest u..w path
                // here closes a chordless cycle through v
                std::uint64_t allowed =
                    (g.vertex_mask() & ~(nb | (1ull << v))) | (1ull << u) | (1ull << w);
                auto p = bfs_path(g, u, w, allowed);
                if (!p.empty()) {
                    std::vector<int> cycle{v};
                    cycle.insert(cycle.end(), p.begin(), p.end());
                    return cycle;
                }
            }
        }
    }
    return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
    McsResult m = mcs(g);
    if (peo_ok(g, m)) return {true, {}};
    return {false, find_chordless_cycle(g)};
}

std::vector<std::uint64_t> maximal_cliques_chordal(const Graph& g) {
    McsResult m = mcs(g);
    if (!peo_ok(g, m)) throw NotChordal();
    const int n = g.vertex_count();
    std::vector<std::uint64_t> cand(n);
    for (int step = 0; step < n; ++step) {
        int v = m.order[step];
        cand[step] = m.earlier[v] | (1ull << v);
    }
    std::vector<std::uint64_t> cliques;
    for (int i = 0; i < n; ++i) {
        bool maximal = true;
        for (int j = 0; j < n && maximal; ++j)
            if (j != i && (cand[i] & cand[j]) == cand[i]) maximal = false;
        if (maximal) cliques.push_back(cand[i]);
    }
    return cliques;
}

namespace {

struct KruskalEdge {
    int weight, i, j;
};

CliqueTree clique_tree_from_edges(std::vector<std::uint64_t> cliques, std::vector<KruskalEdge> edges) {
    const int k = static_cast<int>(cliques.size());
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    CliqueTree t{std::move(cliques), {}};
    for (const auto& e : edges) {
        int a = find(e.i), b = find(e.j);
        if (a == b) continue;
        parent[a] = b;
        t.tree_edges.emplace_back(e.i, e.j);
        if (static_cast<int>(t.tree_edges.size()) == k - 1) break;
    }
    return t;
}

std::vector<KruskalEdge> intersection_edges(const std::vector<std::uint64_t>& cliques) {
    std::vector<KruskalEdge> edges;
    const int k = static_cast<int>(cliques.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            edges.push_back({std::popcount(cliques[i] & cliques[j]), i, j});
    return edges;
}

}  // namespace

CliqueTree build_clique_tree(const Graph& g) {
    auto cliques = maximal_cliques_chordal(g);
    auto edges = intersection_edges(cliques);
    std::sort(edges.begin(), edges.end(), [](const KruskalEdge& a, const KruskalEdge& b) {
        return std::tuple(-a.weight, a.i, a.j) < std::tuple(-b.weight, b.i, b.j);
    });
    return clique_tree_from_edges(std::move(cliques), std::move(edges));
}

CliqueTree build_clique_tree(const Graph& g, std::mt19937_64& rng) {
    auto cliques = maximal_cliques_chordal(g);
    auto edges = intersection_edges(cliques);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::stable_sort(edges.begin(), edges.end(),
                     [](const KruskalEdge& a, const KruskalEdge& b) { return a.weight > b.weight; });
    return clique_tree_from_edges(std::move(cliques), std::move(edges));
}

int MvsMultiset::total_multiplicity() const {
    int t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

int MvsMultiset::max_separator_size() const {
    int m = 0;
    for (const auto& e : entries) m = std::max(m, std::popcount(e.separator));
    return m;
}

bool MvsMultiset::all_unit_multiplicity() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const MvsEntry& e) { return e.multiplicity == 1; });
}

MvsMultiset separators_of(const CliqueTree& tree) {
    std::map<std::uint64_t, int> counts;
    for (auto [i, j] : tree.tree_edges) ++counts[tree.cliques[i] & tree.cliques[j]];
    MvsMultiset m;
    m.clique_count = static_cast<int>(tree.cliques.size());
    for (const auto& [mask, mult] : counts) m.entries.push_back({mask, mult});
    std::sort(m.entries.begin(), m.entries.end(), [](const MvsEntry& a, const MvsEntry& b) {
        return std::tuple(std::popcount(a.separator), a.separator) <
               std::tuple(std::popcount(b.separator), b.separator);
    });
    return m;
}

MvsMultiset minimal_vertex_separators(const Graph& g) { return separators_of(build_clique_tree(g)); }

std::uint64_t simplicial_vertices(const Graph& g) {
    std::uint64_t out = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t nb = g.neighbors(v);
        bool simplicial = true;
        std::uint64_t scan = nb;
        while (scan && simplicial) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            if ((nb & ~(1ull << u)) & ~g.neighbors(u)) simplicial = false;
        }
        if (simplicial) out |= 1ull << v;
    }
    return out;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.vertex_count(), 0), low(graph.vertex_count(), 0) {}

    void pop_block(int u, int v) {
        std::uint64_t members = 0;
        std::pair<int, int> e;
        do {
            e = edge_stack.back();
            edge_stack.pop_back();
            members |= (1ull << e.first) | (1ull << e.second);
        } while (e != std::make_pair(u, v));
        out.blocks.push_back(members);
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        std::uint64_t nb = g.neighbors(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (v == parent) continue;
            if (disc[v] == 0) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1) out.cut_vertices |= 1ull << u;
                    pop_block(u, v);
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
    if (g.vertex_count() == 1) return {{1ull}, 0};
    BlockFinder f(g);
    f.dfs(0, -1);
    return std::move(f.out);
}

bool is_block_graph(const Graph& g) {
    for (std::uint64_t b : blocks(g).blocks) {
        std::uint64_t scan = b;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if ((b & ~(1ull << v)) & ~g.neighbors(v)) return false;
        }
    }
    return true;
}

bool is_split(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(deg.rbegin(), deg.rend());
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (deg[i - 1] >= i - 1) m = i;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < m; ++i) lhs += deg[i];
    for (int i = m; i < n; ++i) rhs += deg[i];
    return lhs == rhs;
}

namespace {
const Graph& gem_pattern() {
    static const Graph gem(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    return gem;
}
}  // namespace

bool is_ptolemaic(const Graph& g) {
    if (!is_chordal(g).chordal) return false;
    return !find_induced_embedding(gem_pattern(), g).has_value();
}

bool is_quasi_threshold(const Graph& g) {
    static const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    if (find_induced_embedding(c4, g)) return false;
    return !find_induced_embedding(path(4), g).has_value();
}

bool ptolemy_inequality_holds(const Graph& g) {
    const DistanceMatrix d = bfs_distances(g);
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < n; ++x) {
                    if (u == v || u == w || u == x || v == w || v == x || w == x) continue;
                    long long lhs = static_cast<long long>(d.at(u, v)) * d.at(w, x);
                    long long rhs = static_cast<long long>(d.at(u, w)) * d.at(v, x) +
                                    static_cast<long long>(d.at(u, x)) * d.at(v, w);
                    if (lhs > rhs) return false;
                }
    return true;
}

}  // namespace lambda2
