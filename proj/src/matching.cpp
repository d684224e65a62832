#include "dsr/matching.hpp"

#include <algorithm>

namespace dsr {

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::uint64_t used = 0;
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) return false;
        if (!g.has_edge(u, v)) return false;
        std::uint64_t pair = (1ULL << u) | (1ULL << v);
        if (used & pair) return false;
        used |= pair;
    }
    return true;
}

namespace {

// Edmonds' blossom algorithm: BFS forest growth from each exposed vertex,
// contracting odd cycles onto their base.
struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom, path_mark;

    explicit Blossom(const Graph& graph)
        : g(graph),
          n(graph.order()),
          match(n, -1),
          parent(n, -1),
          base(n, 0),
          used(n, 0),
          in_blossom(n, 0),
          path_mark(n, 0) {}

    int lca(int a, int b) {
        std::fill(path_mark.begin(), path_mark.end(), 0);
        int v = a;
        for (;;) {
            v = base[v];
            path_mark[v] = 1;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        v = b;
        for (;;) {
            v = base[v];
            if (path_mark[v]) return v;
            v = parent[match[v]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // Returns an exposed vertex ending an augmenting path from root, or -1.
    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
                int to = __builtin_ctzll(m);
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v], next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    void run() {
        // greedy start, then one augmenting search per exposed vertex
        for (int v = 0; v < n; ++v)
            if (match[v] == -1)
                for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
                    int to = __builtin_ctzll(m);
                    if (match[to] == -1) {
                        match[v] = to;
                        match[to] = v;
                        break;
                    }
                }
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) {
                int end = find_path(v);
                if (end != -1) augment(end);
            }
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    Blossom b(g);
    b.run();
    Matching m;
    for (int v = 0; v < b.n; ++v)
        if (b.match[v] > v) m.edges.emplace_back(v, b.match[v]);
    return m;
}

Deficiency berge_tutte(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("berge_tutte: n exceeds enumeration cap 24");
    Deficiency best{-n - 1, VertexSet{}};
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t s = 0; s < total; ++s) {
        VertexSet S(s);
        ComponentCount cc = odd_components(g, S);
        int value = cc.odd - S.count();
        if (value > best.value) best = {value, S};
    }
    return best;
}

Deficiency gallai_edmonds_witness(const Graph& g) {
    const int n = g.order();
    const int alpha = matching_number(g);
    VertexSet D;
    for (int v = 0; v < n; ++v) {
        Graph gv = delete_vertices(g, VertexSet{1ULL << v});
        if (gv.order() == 0 || maximum_matching(gv).size() == alpha) D.add(v);
    }
    std::uint64_t nbrs = 0;
    for (int v : D.to_vector()) nbrs |= g.neighbors(v);
    VertexSet A(nbrs & ~D.bits);
    ComponentCount cc = odd_components(g, A);
    return Deficiency{cc.odd - A.count(), A};
}

bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && matching_number(g) == g.order() / 2;
}

}  // namespace dsr
