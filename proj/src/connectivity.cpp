#include "dsr/connectivity.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

namespace dsr {

namespace {

// Unit-vertex-capacity max flow between u and v in g (u, v non-adjacent).
// Node 2w is w_in, node 2w+1 is w_out; internal arcs w_in->w_out carry
// capacity 1 (source/sink unbounded), edges carry unbounded capacity both
// ways. Flow value never exceeds n, so BFS augmentation suffices.
int vertex_flow(const Graph& g, int u, int v) {
    const int n = g.order();
    const int N = 2 * n;
    const int INF = 1 << 20;
    std::vector<int> cap(static_cast<size_t>(N) * N, 0);
    auto c = [&](int a, int b) -> int& { return cap[static_cast<size_t>(a) * N + b]; };

    for (int w = 0; w < n; ++w) c(2 * w, 2 * w + 1) = (w == u || w == v) ? INF : 1;
    for (auto [a, b] : g.edges()) {
        c(2 * a + 1, 2 * b) = INF;
        c(2 * b + 1, 2 * a) = INF;
    }

    const int src = 2 * u + 1, dst = 2 * v;
    int flow = 0;
    std::vector<int> parent(N);
    for (;;) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[src] = src;
        std::vector<int> q{src};
        for (size_t qi = 0; qi < q.size() && parent[dst] == -1; ++qi) {
            int a = q[qi];
            for (int b = 0; b < N; ++b)
                if (parent[b] == -1 && c(a, b) > 0) {
                    parent[b] = a;
                    q.push_back(b);
                }
        }
        if (parent[dst] == -1) break;
        for (int b = dst; b != src; b = parent[b]) {
            c(parent[b], b) -= 1;
            c(b, parent[b]) += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;

    int best = n - 1;  // complete-graph convention
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) best = std::min(best, vertex_flow(g, u, v));
    return best;
}

int vertex_connectivity_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;

    std::vector<int> pick;
    // All subsets of size sz via lexicographic combinations.
    auto disconnects_some = [&](int sz) {
        pick.assign(sz, 0);
        for (int i = 0; i < sz; ++i) pick[i] = i;
        for (;;) {
            VertexSet S;
            for (int i : pick) S.add(i);
            ComponentCount cc = odd_components(g, S);
            if (cc.total > 1) return true;
            int i = sz - 1;
            while (i >= 0 && pick[i] == n - sz + i) --i;
            if (i < 0) return false;
            ++pick[i];
            for (int j = i + 1; j < sz; ++j) pick[j] = pick[j - 1] + 1;
        }
    };
    for (int sz = 1; sz <= n - 2; ++sz)
        if (disconnects_some(sz)) return sz;
    return n - 1;
}

}  // namespace dsr
