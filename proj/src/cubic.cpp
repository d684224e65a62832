#include "dsr/cubic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dsr {

double largest_root(const Cubic& c, double lower, double upper) {
    if (!(lower < upper))
        throw std::invalid_argument("largest_root: empty bracket");

    // The target root is the rightmost one, so walk the grid from the top
    // and take the first cell whose left end is nonpositive.
    constexpr int kGrid = 4096;
    const double step = (upper - lower) / kGrid;
    double lo = lower, hi = upper;
    bool bracketed = false;
    if (c.eval(upper) < 0)
        throw std::runtime_error("largest_root: f(upper) < 0, bracket too small");
    for (int i = kGrid - 1; i >= 0; --i) {
        double a = lower + i * step;
        if (c.eval(a) <= 0) {
            lo = a;
            hi = lower + (i + 1) * step;
            bracketed = true;
            break;
        }
    }
    if (!bracketed)
        throw std::runtime_error("largest_root: no sign change in [" +
                                 std::to_string(lower) + ", " +
                                 std::to_string(upper) + "]");

    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::fabs(hi)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (c.eval(mid) <= 0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 20; ++it) {
        double f = c.eval(x);
        double df = c.deriv(x);
        if (df == 0) break;
        double nx = x - f / df;
        if (nx < lo || nx > hi) break;  // keep the bisection bracket
        bool done = std::fabs(nx - x) < 1e-14 * std::max(1.0, std::fabs(nx));
        x = nx;
        if (done) break;
    }
    return x;
}

}  // namespace dsr
