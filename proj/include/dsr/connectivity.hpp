#ifndef DSR_CONNECTIVITY_HPP
#define DSR_CONNECTIVITY_HPP

#include "dsr/graph.hpp"

namespace dsr {

// Vertex connectivity kappa(g): minimum over non-adjacent pairs of the
// vertex-capacity max flow (Menger). Complete graphs give n-1, disconnected
// input gives 0.
int vertex_connectivity(const Graph& g);

// Oracle: smallest |S| whose removal disconnects g (or leaves one vertex),
// by subset enumeration in increasing size. Cost grows as C(n, kappa); meant
// for small kappa or n <= 12.
int vertex_connectivity_bruteforce(const Graph& g);

}  // namespace dsr

#endif
