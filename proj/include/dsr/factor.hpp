#ifndef DSR_FACTOR_HPP
#define DSR_FACTOR_HPP

#include <utility>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// Outcome of an odd [1,b]-factor query. When a factor exists the witness is
// a spanning edge set with every degree odd in [1,b] (empty for the
// criterion check, which is not constructive); otherwise `violator` is a
// vertex set S with o(g-S) > b|S|.
struct FactorResult {
    bool exists = false;
    std::vector<std::pair<int, int>> factor;
    VertexSet violator;
};

// Criterion check by subset enumeration (n <= 24, b positive odd):
// a factor exists iff o(g-S) <= b|S| for every S. The returned violator is
// the smallest violating bitmask.
FactorResult amahashi_check(const Graph& g, int b);

// Explicit factor construction by backtracking over vertices in descending
// degree order with degree-parity pruning. Requires n even, b positive odd,
// and desk scale (n <= 12 or |E| <= 30).
FactorResult find_odd_factor(const Graph& g, int b);

// Recomputes the witness against the verdict: violated results must show
// o(g-S) > b|S|; constructive results must be a spanning subgraph with all
// degrees odd in [1,b].
bool validate_factor_result(const Graph& g, int b, const FactorResult& r);

}  // namespace dsr

#endif
