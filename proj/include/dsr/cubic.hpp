#ifndef DSR_CUBIC_HPP
#define DSR_CUBIC_HPP

#include "dsr/rational.hpp"

namespace dsr {

// Monic degree-3 polynomial x^3 + c2 x^2 + c1 x + c0 with exact rational
// coefficients.
struct Cubic {
    Rational c3{1};
    Rational c2;
    Rational c1;
    Rational c0;

    Cubic() = default;
    Cubic(Rational q2, Rational q1, Rational q0) : c2(q2), c1(q1), c0(q0) {}

    Rational eval(const Rational& x) const {
        return ((x + c2) * x + c1) * x + c0;
    }
    double eval(double x) const {
        return ((x + c2.to_double()) * x + c1.to_double()) * x + c0.to_double();
    }
    double deriv(double x) const {
        return (3.0 * x + 2.0 * c2.to_double()) * x + c1.to_double();
    }

    friend bool operator==(const Cubic& a, const Cubic& b) {
        return a.c3 == b.c3 && a.c2 == b.c2 && a.c1 == b.c1 && a.c0 == b.c0;
    }
    friend bool operator!=(const Cubic& a, const Cubic& b) { return !(a == b); }
};

// Largest real root of c in [lower, upper]. Brackets the rightmost sign
// change on a fixed grid, bisects, then polishes with Newton steps to
// absolute tolerance 1e-10. Throws std::runtime_error when no sign change
// exists in the bracket.
double largest_root(const Cubic& c, double lower, double upper);

}  // namespace dsr

#endif
