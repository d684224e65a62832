// Test-only oracles, independent of the library's numeric paths.
#ifndef DSR_TESTS_ORACLE_HPP
#define DSR_TESTS_ORACLE_HPP

#include <Eigen/Dense>
#include <random>

#include "dsr/enumerate.hpp"
#include "dsr/graph.hpp"
#include "dsr/matrix.hpp"

namespace oracle {

// Largest eigenvalue of a symmetric matrix via Eigen's dense solver.
inline double radius_symmetric(const dsr::SquareMatrix& m) {
    const int n = m.order();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    return solver.eigenvalues().maxCoeff();
}

// Largest real eigenvalue of a general (possibly non-symmetric) matrix.
inline double largest_real_eigenvalue(const dsr::SquareMatrix& m) {
    const int n = m.order();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
    double best = -1e300;
    for (int i = 0; i < n; ++i) {
        auto ev = solver.eigenvalues()[i];
        if (std::abs(ev.imag()) < 1e-9 * (1.0 + std::abs(ev.real())))
            best = std::max(best, ev.real());
    }
    return best;
}

// Deterministic random connected graph on n vertices.
inline dsr::Graph random_connected(std::mt19937_64& rng, int n, double p_scale = 1.0) {
    for (;;) {
        dsr::Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((rng() % 1000) < 1000 * p_scale / 2) g.add_edge(u, v);
        if (dsr::is_connected(g)) return g;
    }
}

}  // namespace oracle

#endif
