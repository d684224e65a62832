#include <doctest.h>

#include "dsr/connectivity.hpp"
#include "dsr/enumerate.hpp"
#include "dsr/families.hpp"

using namespace dsr;

namespace {
Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}
}  // namespace

TEST_CASE("vertex connectivity basics") {
    CHECK(vertex_connectivity(complete(5)) == 4);  // complete-graph convention
    CHECK(vertex_connectivity(complete(2)) == 1);
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(join(complete(1), empty_graph(3))) == 1);
    CHECK(vertex_connectivity(disjoint_union(complete(2), complete(2))) == 0);
    CHECK(vertex_connectivity(complete(1)) == 0);
}

TEST_CASE("family graph connectivity equals the join-block size") {
    CHECK(vertex_connectivity(family_matching(18, 2, 2).graph) == 2);
    CHECK(vertex_connectivity_bruteforce(family_matching(18, 2, 2).graph) == 2);
    CHECK(vertex_connectivity(family_matching(18, 1, 2).graph) == 1);
    CHECK(vertex_connectivity(family_odd_factor(32, 3, 1).graph) == 3);
}

TEST_CASE("max-flow connectivity equals the subset-cut oracle") {
    for (int n : {2, 3, 4, 5}) {
        for_each_labeled(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            CHECK(vertex_connectivity(g) == vertex_connectivity_bruteforce(g));
        });
    }
    // spot checks at n = 6
    std::uint64_t step = edge_mask_count(6) / 97;
    for (std::uint64_t mask = 0; mask < edge_mask_count(6); mask += step) {
        Graph g = graph_from_edge_mask(6, mask);
        if (!is_connected(g)) continue;
        CHECK(vertex_connectivity(g) == vertex_connectivity_bruteforce(g));
    }
}
