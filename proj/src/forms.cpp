#include "dsr/forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsr {

Cubic charpoly3(const RationalMatrix3& M) {
    // det(xI - M) = x^3 - tr x^2 + (sum of principal 2x2 minors) x - det
    const auto& a = M.m;
    Rational tr = a[0][0] + a[1][1] + a[2][2];
    Rational minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) +
                      (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
                      (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
    Rational det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    return Cubic(-tr, minors, -det);
}

// ---- quotient matrices ----

RationalMatrix3 matching_quotient_exact(const Rational& n, const Rational& s, const Rational& k) {
    RationalMatrix3 M;
    Rational one{1}, two{2};
    Rational big = n + one - two * s - k;   // clique class size
    Rational ind = s + k - one;             // independent class size
    M.m = {{{s - one, big, ind},
            {s, big - one, two * ind},
            {s, two * big, two * (ind - one)}}};
    return M;
}

RationalMatrix3 oddfactor_quotient_exact(const Rational& n, const Rational& s, const Rational& b) {
    RationalMatrix3 M;
    Rational one{1}, two{2};
    Rational big = n - (b + one) * s - one;
    Rational ind = b * s + one;
    M.m = {{{s - one, big, ind},
            {s, big - one, two * ind},
            {s, two * big, two * (ind - one)}}};
    return M;
}

RationalMatrix3 case32_quotient_exact(const Rational& n, const Rational& s, const Rational& b,
                                      const Rational& delta) {
    RationalMatrix3 M;
    Rational one{1}, two{2};
    Rational p = delta + one - s;          // small-clique order
    Rational cliques = (b * s + one) * p;  // total size of the small cliques
    Rational big = n - s - cliques;
    M.m = {{{s - one, big, cliques},
            {s, big - one, two * cliques},
            {s, two * big, two * b * s * p + (delta - s)}}};
    return M;
}

namespace {
SquareMatrix to_square(const RationalMatrix3& M) {
    SquareMatrix q(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q.at(i, j) = M.at(i, j).to_double();
    return q;
}
}  // namespace

SquareMatrix matching_quotient(int n, int s, int k) {
    FamilyParams::matching(n, s, k);
    return to_square(matching_quotient_exact(n, s, k));
}

SquareMatrix oddfactor_quotient(int n, int s, int b) {
    FamilyParams::odd_factor(n, s, b);
    return to_square(oddfactor_quotient_exact(n, s, b));
}

SquareMatrix case31_quotient(int n, int b, int delta) {
    FamilyParams::case31(n, b, delta);
    return to_square(case32_quotient_exact(n, 1, b, delta));
}

SquareMatrix case32_quotient(int n, int s, int b, int delta) {
    FamilyParams::case32(n, s, b, delta);
    return to_square(case32_quotient_exact(n, s, b, delta));
}

// ---- characteristic cubics ----

Cubic matching_charpoly(int n, int s, int k) {
    FamilyParams::matching(n, s, k);
    return charpoly3(matching_quotient_exact(n, s, k));
}

Cubic oddfactor_charpoly(int n, int s, int b) {
    FamilyParams::odd_factor(n, s, b);
    return charpoly3(oddfactor_quotient_exact(n, s, b));
}

Cubic case31_charpoly(int n, int b, int delta) {
    FamilyParams::case31(n, b, delta);
    return charpoly3(case32_quotient_exact(n, 1, b, delta));
}

Cubic case32_charpoly(int n, int s, int b, int delta) {
    FamilyParams::case32(n, s, b, delta);
    return charpoly3(case32_quotient_exact(n, s, b, delta));
}

// ---- closed-form coefficient tables ----

Cubic matching_charpoly_closed_form(int nn, int ss, int kk) {
    Rational n{nn}, s{ss}, k{kk};
    Rational c2 = -s - n - k + 5;
    Rational c1 = 5 * s * s + (-2 * n + 7 * k - 8) * s - 2 * k * n - n + 2 * k * k - 5 * k + 8;
    Rational c0 = -2 * s * s * s + (n - 3 * k + 8) * s * s +
                  (k * n - 3 * n - k * k + 9 * k - 8) * s - 2 * k * n + 2 * k * k - 4 * k + 4;
    return Cubic(c2, c1, c0);
}

Cubic oddfactor_charpoly_closed_form(int nn, int ss, int bb) {
    Rational n{nn}, s{ss}, b{bb};
    Rational c2 = -b * s - n + 3;
    Rational c1 = 2 * b * b * s * s + 3 * b * s * s - 2 * b * n * s + 3 * b * s + 3 * s -
                  5 * n + 6;
    Rational c0 = -(b * b + b) * s * s * s + (b * n + 2 * b * b + b - 1) * s * s +
                  (n - 2 * b * n + 4 * b + 2) * s + 4 - 4 * n;
    return Cubic(c2, c1, c0);
}

Cubic case31_charpoly_closed_form(int nn, int bb, int dd) {
    Rational n{nn}, b{bb}, d{dd};
    Rational c2 = Rational{3} - b * d - n;
    Rational c1 = 3 + 3 * d + b * d + 3 * d * d + 5 * b * d * d + 2 * b * b * d * d -
                  2 * n - 3 * d * n - 2 * b * d * n;
    Rational c0 = (b * b + 3 * b + 2) * d * d + (-b * n - 2 * n + b + 2) * d - n + 1;
    return Cubic(c2, c1, c0);
}

Cubic case32_charpoly_closed_form(int nn, int ss, int bb, int dd) {
    Rational n{nn}, s{ss}, b{bb}, d{dd};
    Rational s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s, d2 = d * d;
    Rational c2 = Rational{3} - n - b * s - b * d * s + b * s2;
    Rational c1 = 2 * b * b * s4 + (2 * b - 4 * b * b - 4 * b * b * d) * s3 +
                  (-5 * b + 2 * b * b - 7 * b * d + 4 * b * b * d + 2 * b * b * d2 + 2 * b * n) * s2 +
                  (-3 + 3 * b - 3 * d + 8 * b * d + 5 * b * d2 + 3 * n - 2 * b * n - 2 * b * d * n) * s -
                  3 * d * n - 5 * n + 3 * d2 + 6 * d + 6;
    Rational c0 = -b * b * s5 + (-b + 4 * b * b + 2 * b * b * d) * s4 +
                  (5 * b - 5 * b * b + 3 * b * d - 6 * b * b * d - b * b * d2 - b * n) * s3 +
                  (1 - 8 * b + 2 * b * b + d - 11 * b * d + 4 * b * b * d - 2 * b * d2 +
                   2 * b * b * d2 - n + 3 * b * n + b * d * n) * s2 +
                  (-4 + 4 * b - 5 * d + 9 * b * d - d2 + 5 * b * d2 + 4 * n - 2 * b * n +
                   d * n - 2 * b * d * n) * s -
                  3 * d * n - 4 * n + 3 * d2 + 6 * d + 4;
    return Cubic(c2, c1, c0);
}

// ---- FamilyParams dispatch ----

SquareMatrix family_quotient(const FamilyParams& p) {
    switch (p.variant) {
        case FamilyVariant::matching: return matching_quotient(p.n, p.s, p.k);
        case FamilyVariant::odd_factor: return oddfactor_quotient(p.n, p.s, p.b);
        case FamilyVariant::case31: return case31_quotient(p.n, p.b, p.delta);
        case FamilyVariant::case32: return case32_quotient(p.n, p.s, p.b, p.delta);
    }
    throw std::logic_error("family_quotient: bad variant");
}

Cubic family_charpoly(const FamilyParams& p) {
    switch (p.variant) {
        case FamilyVariant::matching: return matching_charpoly(p.n, p.s, p.k);
        case FamilyVariant::odd_factor: return oddfactor_charpoly(p.n, p.s, p.b);
        case FamilyVariant::case31: return case31_charpoly(p.n, p.b, p.delta);
        case FamilyVariant::case32: return case32_charpoly(p.n, p.s, p.b, p.delta);
    }
    throw std::logic_error("family_charpoly: bad variant");
}

Cubic family_charpoly_closed_form(const FamilyParams& p) {
    switch (p.variant) {
        case FamilyVariant::matching: return matching_charpoly_closed_form(p.n, p.s, p.k);
        case FamilyVariant::odd_factor: return oddfactor_charpoly_closed_form(p.n, p.s, p.b);
        case FamilyVariant::case31: return case31_charpoly_closed_form(p.n, p.b, p.delta);
        case FamilyVariant::case32: return case32_charpoly_closed_form(p.n, p.s, p.b, p.delta);
    }
    throw std::logic_error("family_charpoly_closed_form: bad variant");
}

double family_mu(const FamilyParams& p) {
    SquareMatrix q = family_quotient(p);
    Cubic f = family_charpoly(p);
    return largest_root(f, p.n - 1, 1.0 + q.max_abs_row_sum());
}

// ---- proof functions ----

namespace {

struct QuadraticR {
    Rational a2, a1, a0;
    Rational eval(const Rational& x) const { return (a2 * x + a1) * x + a0; }
    Rational deriv(const Rational& x) const { return 2 * a2 * x + a1; }
};

QuadraticR cubic_difference_quotient(const Cubic& f, const Cubic& g, const Rational& denom) {
    if (denom.is_zero())
        throw std::invalid_argument("proof function: coincident family parameters");
    return {(f.c2 - g.c2) / denom, (f.c1 - g.c1) / denom, (f.c0 - g.c0) / denom};
}

// p(x) for the matching comparison: (f_s - f_t) / (t - s), quadratic in x.
QuadraticR matching_difference(const Rational& n, const Rational& k, const Rational& t,
                               const Rational& s) {
    Cubic fs = charpoly3(matching_quotient_exact(n, s, k));
    Cubic ft = charpoly3(matching_quotient_exact(n, t, k));
    return cubic_difference_quotient(fs, ft, t - s);
}

// c(x): (f_s - f_delta) / (delta - s) for the odd-factor family.
QuadraticR oddfactor_difference(const Rational& n, const Rational& b, const Rational& delta,
                                const Rational& s) {
    Cubic fs = charpoly3(oddfactor_quotient_exact(n, s, b));
    Cubic fd = charpoly3(oddfactor_quotient_exact(n, delta, b));
    return cubic_difference_quotient(fs, fd, delta - s);
}

// H(x): (f_delta - f_s) / (delta - s), f_s from the small-clique family.
QuadraticR case3_difference(const Rational& n, const Rational& b, const Rational& delta,
                            const Rational& s) {
    Cubic fs = charpoly3(case32_quotient_exact(n, s, b, delta));
    Cubic fd = charpoly3(oddfactor_quotient_exact(n, delta, b));
    return cubic_difference_quotient(fd, fs, delta - s);
}

// g(s) = H'(n-1) for one s value.
Rational g_of_s(const Rational& n, const Rational& b, const Rational& delta, const Rational& s) {
    return case3_difference(n, b, delta, s).deriv(n - 1);
}

// Dense polynomial over rationals, ascending powers; just enough for the
// reconstruction of g as a cubic in s.
using PolyR = std::vector<Rational>;

PolyR poly_mul(const PolyR& a, const PolyR& b) {
    PolyR out(a.size() + b.size() - 1, Rational{0});
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Newton interpolation through (xs[i], ys[i]).
PolyR poly_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const size_t m = xs.size();
    std::vector<Rational> dd = ys;  // divided differences, in place
    for (size_t j = 1; j < m; ++j)
        for (size_t i = m - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    PolyR out{dd[m - 1]};
    for (size_t j = m - 1; j-- > 0;) {
        out = poly_mul(out, PolyR{-xs[j], Rational{1}});
        out[0] += dd[j];
    }
    return out;
}

Rational poly_eval(const PolyR& p, const Rational& x) {
    Rational acc{0};
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

PolyR poly_deriv(const PolyR& p) {
    PolyR out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational{static_cast<long long>(i)});
    if (out.empty()) out.push_back(Rational{0});
    return out;
}

void need(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(std::string("proof function: missing/invalid ") + what);
}

}  // namespace

Rational proof_function_exact(ProofFunction f, const ProofParams& pp, const Rational& arg) {
    const Rational n{pp.n}, k{pp.k}, t{pp.t}, s{pp.s}, b{pp.b}, d{pp.delta};
    switch (f) {
        case ProofFunction::p:
            need(pp.n > 0 && pp.k > 0 && pp.t > 0 && pp.s > 0, "n,k,t,s");
            return matching_difference(n, k, t, s).eval(arg);
        case ProofFunction::v:
            need(pp.n > 0 && pp.k > 0 && pp.t > 0, "n,k,t");
            return matching_difference(n, k, t, arg).eval(n - 1);
        case ProofFunction::c:
            need(pp.n > 0 && pp.b > 0 && pp.delta > 0 && pp.s > 0, "n,b,delta,s");
            return oddfactor_difference(n, b, d, s).eval(arg);
        case ProofFunction::h:
            need(pp.n > 0 && pp.b > 0 && pp.delta > 0, "n,b,delta");
            return oddfactor_difference(n, b, d, arg).eval(n - 1);
        case ProofFunction::l: {
            need(pp.delta > 0, "delta");
            const Rational& bb = arg;
            return Rational{3, 2} * bb * d * d - (bb + 5) / 2 * d - bb / 8 - 3;
        }
        case ProofFunction::m: {
            need(pp.b > 0 && pp.delta > 1, "b,delta");
            // (f_delta - f_1)(n-1) / (delta - 1), everything at n := arg
            Cubic fd = charpoly3(oddfactor_quotient_exact(arg, d, b));
            Cubic f1 = charpoly3(case32_quotient_exact(arg, 1, b, d));
            QuadraticR diff = cubic_difference_quotient(fd, f1, d - 1);
            return diff.eval(arg - 1);
        }
        case ProofFunction::q:
            need(pp.b > 0 && pp.delta > 0 && pp.s > 0, "b,delta,s");
            return case3_difference(arg, b, d, s).eval(arg - 1);
        case ProofFunction::H:
            need(pp.n > 0 && pp.b > 0 && pp.delta > 0 && pp.s > 0, "n,b,delta,s");
            return case3_difference(n, b, d, s).eval(arg);
        case ProofFunction::Hprime:
            need(pp.n > 0 && pp.b > 0 && pp.delta > 0 && pp.s > 0, "n,b,delta,s");
            return case3_difference(n, b, d, s).deriv(arg);
        case ProofFunction::g:
            need(pp.n > 0 && pp.b > 0 && pp.delta > 0, "n,b,delta");
            return g_of_s(n, b, d, arg);
        case ProofFunction::v_b: {
            need(pp.delta > 0, "delta");
            // v(b) = 3 g'(shat) at n = 2 b delta^2; g is rebuilt as a cubic
            // in s from four sample points (all distinct from delta).
            const Rational& bb = arg;
            Rational n0 = 2 * bb * d * d;
            std::vector<Rational> xs{Rational{0}, Rational{1, 2}, Rational{1}, Rational{2}};
            std::vector<Rational> ys;
            ys.reserve(xs.size());
            for (const Rational& si : xs) ys.push_back(g_of_s(n0, bb, d, si));
            PolyR gpoly = poly_interpolate(xs, ys);
            Rational shat = d / 3 + Rational{2, 3} - Rational{1} / (3 * bb);
            return Rational{3} * poly_eval(poly_deriv(gpoly), shat);
        }
    }
    throw std::logic_error("proof_function_exact: bad tag");
}

double proof_function(ProofFunction f, const ProofParams& params, double arg) {
    double r = std::round(arg);
    if (r == arg && std::fabs(arg) < 1e15)
        return proof_function_exact(f, params, Rational{static_cast<long long>(r)}).to_double();
    // non-integer argument: exact dyadic conversion
    int exp = 0;
    double mant = std::frexp(arg, &exp);
    long long num = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational x{num};
    while (exp > 0) { x = x * 2; --exp; }
    while (exp < 0) { x = x / 2; ++exp; }
    return proof_function_exact(f, params, x).to_double();
}

ProofFunction proof_function_from_name(const std::string& name) {
    if (name == "p") return ProofFunction::p;
    if (name == "v") return ProofFunction::v;
    if (name == "c") return ProofFunction::c;
    if (name == "h") return ProofFunction::h;
    if (name == "l") return ProofFunction::l;
    if (name == "m") return ProofFunction::m;
    if (name == "q") return ProofFunction::q;
    if (name == "H") return ProofFunction::H;
    if (name == "Hprime") return ProofFunction::Hprime;
    if (name == "g") return ProofFunction::g;
    if (name == "v_b") return ProofFunction::v_b;
    throw std::invalid_argument("unknown proof function tag: " + name);
}

}  // namespace dsr
