#ifndef DSR_GRAPH_HPP
#define DSR_GRAPH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dsr {

inline constexpr int kMaxVertices = 64;

// Subset of the vertices 0..n-1 of a host graph, as a 64-bit mask.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }

    bool test(int v) const { return (bits >> v) & 1ULL; }
    void add(int v) { bits |= 1ULL << v; }
    void remove(int v) { bits &= ~(1ULL << v); }
    int count() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    // Lowest set bit, -1 when empty.
    int first() const { return bits ? __builtin_ctzll(bits) : -1; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
        return out;
    }

    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

// Bits strictly above position v (safe at v = 63, where << 64 would be UB).
inline std::uint64_t bits_above(int v) { return v >= 63 ? 0ULL : ~0ULL << (v + 1); }

// Undirected simple graph on at most 64 vertices; one adjacency bitset per
// vertex (symmetric, no self-loops). Treated as immutable once built: the
// construction helpers below return fresh values and everything else takes
// const references, so graphs are safe to share across threads.
class Graph {
public:
    Graph() : n_(0) { adj_.fill(0); }
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: order out of range 0..64");
        adj_.fill(0);
    }

    int order() const { return n_; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ULL; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t m = adj_[u] & bits_above(u); m; m &= m - 1)
                out.emplace_back(u, __builtin_ctzll(m));
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
    }

    int n_;
    std::array<std::uint64_t, kMaxVertices> adj_;
};

// -------- construction operators --------

Graph empty_graph(int n);            // n >= 0 isolated vertices
Graph complete(int n);               // K_n, n >= 1
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);  // union plus all cross edges

// Induced subgraph on V(g)\S. old_index (optional) receives, for each new
// vertex, its index in g. The result may be the empty graph.
Graph delete_vertices(const Graph& g, VertexSet S, std::vector<int>* old_index = nullptr);

// Same vertex set with edge uv removed; throws when uv is not an edge.
Graph delete_edge(const Graph& g, int u, int v);

// -------- structural predicates --------

bool is_connected(const Graph& g);   // false for the empty graph
int min_degree(const Graph& g);      // g.order() >= 1

struct ComponentCount {
    int odd = 0;
    int total = 0;
};

// Components of g - S, counting those with an odd number of vertices.
ComponentCount odd_components(const Graph& g, VertexSet S = {});

// Component masks of g restricted to `alive` vertices, lowest-vertex order.
std::vector<VertexSet> components(const Graph& g, VertexSet alive);

// Brute-force isomorphism test over vertex permutations with degree-sequence
// pruning; meant for the desk-scale orders (n <= 8) used by the harness.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace dsr

#endif
