#ifndef DSR_ENUMERATE_HPP
#define DSR_ENUMERATE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dsr/graph.hpp"

namespace dsr {

inline constexpr int kMaxEnumerationOrder = 8;

inline int edge_slots(int n) { return n * (n - 1) / 2; }

inline std::uint64_t edge_mask_count(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("enumerate: order must be 1..8");
    return 1ULL << edge_slots(n);
}

// Bit e of an edge mask is pair (i, j), i < j, in lexicographic order:
// (0,1), (0,2), ..., (0,n-1), (1,2), ...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Every labeled simple graph on n vertices, ascending edge-mask order.
template <class Visit>
void for_each_labeled(int n, Visit&& visit) {
    const std::uint64_t total = edge_mask_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        visit(graph_from_edge_mask(n, mask));
}

// Same stream restricted to graphs passing the filter, each exactly once.
template <class Filter, class Visit>
void for_each_labeled(int n, Filter&& filter, Visit&& visit) {
    const std::uint64_t total = edge_mask_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (filter(g)) visit(g);
    }
}

// ---- mask-range scan kernels ----
//
// The exhaustive checks are all reductions over the edge-mask range
// [0, 2^(n(n-1)/2)). Two implementations share one shape:
//   Acc acc = make();  body(n, mask_lo, mask_hi, acc);  merge in order.
// `body` must scan its range in ascending mask order. The serial kernel is
// the reference; the OpenMP kernel splits the range into contiguous stripes
// and merges per-stripe accumulators in stripe order, so the merged result
// is identical for any thread count.

template <class Acc, class Make, class Body, class Merge>
Acc scan_edge_masks_serial(int n, Make&& make, Body&& body, Merge&& merge) {
    Acc out = make();
    Acc acc = make();
    body(n, std::uint64_t{0}, edge_mask_count(n), acc);
    merge(out, acc);
    return out;
}

template <class Acc, class Make, class Body, class Merge>
Acc scan_edge_masks_parallel(int n, Make&& make, Body&& body, Merge&& merge,
                             int stripes = 0) {
    const std::uint64_t total = edge_mask_count(n);
    if (stripes <= 0) {
#ifdef _OPENMP
        stripes = omp_get_max_threads() * 8;
#else
        stripes = 1;
#endif
    }
    if (static_cast<std::uint64_t>(stripes) > total)
        stripes = static_cast<int>(total);

    std::vector<Acc> parts;
    parts.reserve(stripes);
    for (int i = 0; i < stripes; ++i) parts.push_back(make());

    const std::uint64_t chunk = total / stripes;
    const std::uint64_t rem = total % stripes;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < stripes; ++i) {
        std::uint64_t lo = i * chunk + (static_cast<std::uint64_t>(i) < rem ? i : rem);
        std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
        body(n, lo, hi, parts[i]);
    }

    Acc out = make();
    for (int i = 0; i < stripes; ++i) merge(out, parts[i]);
    return out;
}

template <class Acc, class Make, class Body, class Merge>
Acc scan_edge_masks(int n, Make&& make, Body&& body, Merge&& merge,
                    bool parallel, int stripes = 0) {
    if (parallel)
        return scan_edge_masks_parallel<Acc>(n, make, body, merge, stripes);
    return scan_edge_masks_serial<Acc>(n, make, body, merge);
}

// Count of labeled graphs on n vertices satisfying pred.
template <class Pred>
std::uint64_t count_labeled(int n, Pred&& pred, bool parallel = false) {
    auto make = [] { return std::uint64_t{0}; };
    auto body = [&](int nn, std::uint64_t lo, std::uint64_t hi, std::uint64_t& acc) {
        for (std::uint64_t mask = lo; mask < hi; ++mask)
            if (pred(graph_from_edge_mask(nn, mask))) ++acc;
    };
    auto merge = [](std::uint64_t& out, const std::uint64_t& part) { out += part; };
    return scan_edge_masks<std::uint64_t>(n, make, body, merge, parallel);
}

}  // namespace dsr

#endif
