#ifndef DSR_MATRIX_HPP
#define DSR_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// Dense real square matrix, row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int order) : n_(order), a_(static_cast<size_t>(order) * order, 0.0) {
        if (order < 1) throw std::invalid_argument("SquareMatrix: order must be >= 1");
    }

    int order() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    double row_sum(int i) const {
        double s = 0;
        for (int j = 0; j < n_; ++j) s += at(i, j);
        return s;
    }
    double max_abs_row_sum() const {
        double best = 0;
        for (int i = 0; i < n_; ++i) {
            double s = 0;
            for (int j = 0; j < n_; ++j) s += at(i, j) < 0 ? -at(i, j) : at(i, j);
            if (s > best) best = s;
        }
        return best;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

// Shortest-path distances via per-vertex BFS. Throws std::invalid_argument
// when g is disconnected (distances undefined).
SquareMatrix distance_matrix(const Graph& g);

struct power_iteration_error : std::runtime_error {
    power_iteration_error(std::string msg, std::vector<double> iterate, double value,
                          double residual)
        : std::runtime_error(std::move(msg)),
          last_iterate(std::move(iterate)),
          last_value(value),
          last_residual(residual) {}
    std::vector<double> last_iterate;
    double last_value = 0;
    double last_residual = 0;
};

inline constexpr double kDefaultPowerTol = 1e-13;
inline constexpr long kDefaultPowerIterationCap = 1'000'000;

// Perron radius of a nonnegative irreducible matrix by power iteration:
// all-ones start vector, convergence when the Rayleigh quotient changes by
// less than tol (relative) between successive iterates. Deterministic.
double perron_radius(const SquareMatrix& m, double tol = kDefaultPowerTol,
                     long max_iterations = kDefaultPowerIterationCap);

// Ordered list of disjoint nonempty vertex classes covering 0..order-1.
struct Partition {
    std::vector<VertexSet> classes;

    static Partition of(std::vector<VertexSet> cls, int order);  // validates
    int size() const { return static_cast<int>(classes.size()); }
};

struct QuotientResult {
    SquareMatrix q;      // q(i,j) = average row sum of block (i,j)
    bool equitable;      // every block has constant row sums (exact compare)
};

QuotientResult quotient_matrix(const SquareMatrix& m, const Partition& p);

}  // namespace dsr

#endif
