#ifndef DSR_FORMS_HPP
#define DSR_FORMS_HPP

#include <array>

#include "dsr/cubic.hpp"
#include "dsr/families.hpp"
#include "dsr/matrix.hpp"
#include "dsr/rational.hpp"

namespace dsr {

struct RationalMatrix3 {
    std::array<std::array<Rational, 3>, 3> m{};
    Rational& at(int i, int j) { return m[i][j]; }
    const Rational& at(int i, int j) const { return m[i][j]; }
};

// det(xI - M) expanded exactly.
Cubic charpoly3(const RationalMatrix3& M);

// ---- 3x3 equitable quotient matrices of the family distance matrices ----
// Entries are exact integers for valid parameter tuples; the *_exact
// variants keep every parameter rational so the proof-function assembly can
// evaluate the same matrices at fractional s.

SquareMatrix matching_quotient(int n, int s, int k);
SquareMatrix oddfactor_quotient(int n, int s, int b);
SquareMatrix case31_quotient(int n, int b, int delta);
SquareMatrix case32_quotient(int n, int s, int b, int delta);

RationalMatrix3 matching_quotient_exact(const Rational& n, const Rational& s, const Rational& k);
RationalMatrix3 oddfactor_quotient_exact(const Rational& n, const Rational& s, const Rational& b);
RationalMatrix3 case32_quotient_exact(const Rational& n, const Rational& s, const Rational& b,
                                      const Rational& delta);

// ---- characteristic cubics from the exact determinant expansion ----
Cubic matching_charpoly(int n, int s, int k);
Cubic oddfactor_charpoly(int n, int s, int b);
Cubic case31_charpoly(int n, int b, int delta);
Cubic case32_charpoly(int n, int s, int b, int delta);

// Hand-derived closed-form coefficient tables for the same cubics. The
// determinant expansion is asserted against these; a disagreement would mean
// a transcription defect and is reported, never patched over.
Cubic matching_charpoly_closed_form(int n, int s, int k);
Cubic oddfactor_charpoly_closed_form(int n, int s, int b);
Cubic case31_charpoly_closed_form(int n, int b, int delta);
Cubic case32_charpoly_closed_form(int n, int s, int b, int delta);

// Convenience dispatch over FamilyParams.
SquareMatrix family_quotient(const FamilyParams& p);
Cubic family_charpoly(const FamilyParams& p);
Cubic family_charpoly_closed_form(const FamilyParams& p);

// Largest root of the family cubic, bracketed by [n-1, 1 + max row sum of
// the quotient]. Equals the distance spectral radius of the family graph.
double family_mu(const FamilyParams& p);

// ---- auxiliary inequality functions used by the comparison proofs ----
//
// Evaluation argument per tag (remaining symbols come from params):
//   p  : arg = x          (n, k, t, s; s != t)
//   v  : arg = s          (n, k, t)            = p(n-1) as a function of s
//   c  : arg = x          (n, b, delta, s; s != delta)
//   h  : arg = s          (n, b, delta)        = c(n-1) as a function of s
//   l  : arg = b          (delta)
//   m  : arg = n          (b, delta)
//   q  : arg = n          (b, delta, s)        = H(n-1) as a function of n
//   H  : arg = x          (n, b, delta, s; s != delta)
//   Hprime : arg = x      (same as H)
//   g  : arg = s          (n, b, delta)        = H'(n-1) as a function of s
//   v_b: arg = b          (delta)
//
// Coefficients are assembled from the exact difference of the two relevant
// characteristic cubics (l and v_b, which come from scaling steps rather
// than a cubic difference, are assembled from their defining arithmetic;
// v_b is rebuilt by polynomial reconstruction of g).
enum class ProofFunction { p, v, c, h, l, m, q, H, Hprime, g, v_b };

struct ProofParams {
    int n = 0, k = 0, t = 0, s = 0, b = 0, delta = 0;
};

Rational proof_function_exact(ProofFunction f, const ProofParams& params, const Rational& arg);
double proof_function(ProofFunction f, const ProofParams& params, double arg);

ProofFunction proof_function_from_name(const std::string& name);  // throws on unknown tag

}  // namespace dsr

#endif
