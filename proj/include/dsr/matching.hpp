#ifndef DSR_MATCHING_HPP
#define DSR_MATCHING_HPP

#include <utility>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// Set of pairwise vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

bool is_valid_matching(const Graph& g, const Matching& m);

// Maximum-cardinality matching via augmenting-path search with blossom
// contraction, O(n^3). Deterministic: roots and neighbors scanned in
// ascending vertex order.
Matching maximum_matching(const Graph& g);

inline int matching_number(const Graph& g) { return maximum_matching(g).size(); }

struct Deficiency {
    int value = 0;       // max over S of o(g-S) - |S|
    VertexSet witness;   // smallest maximizing bitmask
};

// Exhaustive deficiency max over all S, n <= 24. alpha = (n - value)/2.
Deficiency berge_tutte(const Graph& g);

// Polynomial-time deficiency witness: D = vertices missed by some maximum
// matching (alpha(g - v) = alpha(g)), A = N(D) \ D; A attains the
// deficiency maximum o(g-A) - |A| = n - 2 alpha. Works at any order, unlike
// the subset enumeration; the witness set may differ from berge_tutte's
// lexicographic choice.
Deficiency gallai_edmonds_witness(const Graph& g);

inline int matching_number_from_deficiency(const Graph& g, const Deficiency& d) {
    return (g.order() - d.value) / 2;
}

bool has_perfect_matching(const Graph& g);

}  // namespace dsr

#endif
