#include "dsr/enumerate.hpp"

namespace dsr {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
            if (mask >> e & 1ULL) g.add_edge(i, j);
    return g;
}

}  // namespace dsr
