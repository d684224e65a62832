#include "dsr/matrix.hpp"

#include <cmath>

namespace dsr {

SquareMatrix distance_matrix(const Graph& g) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("distance_matrix: empty graph");
    SquareMatrix d(n);
    for (int src = 0; src < n; ++src) {
        // layered bitset BFS
        std::uint64_t seen = 1ULL << src;
        std::uint64_t frontier = seen;
        int dist = 0;
        while (frontier) {
            ++dist;
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= g.neighbors(__builtin_ctzll(m));
            next &= ~seen;
            for (std::uint64_t m = next; m; m &= m - 1)
                d.at(src, __builtin_ctzll(m)) = dist;
            seen |= next;
            frontier = next;
        }
        if (seen != VertexSet::full(n).bits)
            throw std::invalid_argument("distance_matrix: graph is disconnected");
    }
    return d;
}

double perron_radius(const SquareMatrix& m, double tol, long max_iterations) {
    const int n = m.order();
    if (n == 1) return m.at(0, 0);
    if (tol <= 0) throw std::invalid_argument("perron_radius: tol must be positive");

    std::vector<double> x(n, 1.0), y(n, 0.0);
    double lambda_prev = 0.0;
    for (long it = 0; it < max_iterations; ++it) {
        double xx = 0, xy = 0;
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
            y[i] = s;
            xx += x[i] * x[i];
            xy += x[i] * s;
        }
        double lambda = xy / xx;
        double norm = 0;
        for (int i = 0; i < n; ++i) norm += y[i] * y[i];
        norm = std::sqrt(norm);
        if (norm == 0)
            throw power_iteration_error("perron_radius: zero iterate", x, lambda, 0.0);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (it > 0 && std::fabs(lambda - lambda_prev) < tol * std::fabs(lambda))
            return lambda;
        lambda_prev = lambda;
    }
    double residual = 0;
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
        residual = std::max(residual, std::fabs(s - lambda_prev * x[i]));
    }
    throw power_iteration_error("perron_radius: no convergence within iteration cap",
                                x, lambda_prev, residual);
}

Partition Partition::of(std::vector<VertexSet> cls, int order) {
    std::uint64_t seen = 0;
    for (const VertexSet& c : cls) {
        if (c.empty()) throw std::invalid_argument("Partition: empty class");
        if (c.bits & seen) throw std::invalid_argument("Partition: classes overlap");
        seen |= c.bits;
    }
    if (seen != VertexSet::full(order).bits)
        throw std::invalid_argument("Partition: classes do not cover 0..order-1");
    Partition p;
    p.classes = std::move(cls);
    return p;
}

QuotientResult quotient_matrix(const SquareMatrix& m, const Partition& p) {
    std::uint64_t seen = 0;
    for (const VertexSet& c : p.classes) seen |= c.bits;
    if (p.classes.empty() || seen != VertexSet::full(m.order()).bits)
        throw std::invalid_argument("quotient_matrix: partition does not match matrix order");

    const int t = p.size();
    QuotientResult res{SquareMatrix(t), true};
    for (int bi = 0; bi < t; ++bi) {
        auto rows = p.classes[bi].to_vector();
        for (int bj = 0; bj < t; ++bj) {
            auto cols = p.classes[bj].to_vector();
            double first = 0;
            double total = 0;
            bool first_row = true;
            for (int r : rows) {
                double s = 0;
                for (int c : cols) s += m.at(r, c);
                total += s;
                if (first_row) {
                    first = s;
                    first_row = false;
                } else if (s != first) {
                    // exact comparison: distance-matrix entries are integers
                    res.equitable = false;
                }
            }
            res.q.at(bi, bj) = total / static_cast<double>(rows.size());
        }
    }
    return res;
}

}  // namespace dsr
