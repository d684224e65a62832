#include "dsr/graph.hpp"

#include <algorithm>

namespace dsr {

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > kMaxVertices)
        throw std::invalid_argument("disjoint_union: combined order exceeds 64");
    Graph g(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (std::uint64_t m = g1.neighbors(u) & bits_above(u); m; m &= m - 1)
            g.add_edge(u, __builtin_ctzll(m));
    for (int u = 0; u < n2; ++u)
        for (std::uint64_t m = g2.neighbors(u) & bits_above(u); m; m &= m - 1)
            g.add_edge(n1 + u, n1 + __builtin_ctzll(m));
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
    return g;
}

Graph delete_vertices(const Graph& g, VertexSet S, std::vector<int>* old_index) {
    if (S.bits & ~VertexSet::full(g.order()).bits)
        throw std::invalid_argument("delete_vertices: S not a subset of V(g)");
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (!S.test(v)) keep.push_back(v);
    Graph out(static_cast<int>(keep.size()));
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(keep.size()); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
    if (old_index) *old_index = keep;
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: uv not an edge");
    Graph res(g.order());
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) res.add_edge(a, b);
    return res;
}

// Expand the component containing `seed` within `alive` by frontier OR-ing.
static std::uint64_t component_of(const Graph& g, std::uint64_t alive, int seed) {
    std::uint64_t comp = 1ULL << seed;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.neighbors(__builtin_ctzll(m));
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    std::uint64_t all = VertexSet::full(g.order()).bits;
    return component_of(g, all, 0) == all;
}

int min_degree(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("min_degree: empty graph");
    int d = kMaxVertices;
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

std::vector<VertexSet> components(const Graph& g, VertexSet alive) {
    std::vector<VertexSet> out;
    std::uint64_t rest = alive.bits;
    while (rest) {
        int seed = __builtin_ctzll(rest);
        std::uint64_t comp = component_of(g, alive.bits, seed);
        out.push_back(VertexSet(comp));
        rest &= ~comp;
    }
    return out;
}

ComponentCount odd_components(const Graph& g, VertexSet S) {
    std::uint64_t alive = VertexSet::full(g.order()).bits & ~S.bits;
    ComponentCount cc;
    std::uint64_t rest = alive;
    while (rest) {
        int seed = __builtin_ctzll(rest);
        std::uint64_t comp = component_of(g, alive, seed);
        ++cc.total;
        if (__builtin_popcountll(comp) & 1) ++cc.odd;
        rest &= ~comp;
    }
    return cc;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) { da[v] = a.degree(v); db[v] = b.degree(v); }
    {
        std::vector<int> sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (da[v] != db[perm[v]]) ok = false;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace dsr
