#include <doctest.h>

#include <cmath>
#include <random>

#include "dsr/cubic.hpp"
#include "dsr/forms.hpp"
#include "dsr/matrix.hpp"
#include "dsr/rational.hpp"
#include "oracle.hpp"

using namespace dsr;

TEST_CASE("rational arithmetic") {
    Rational a{6, 4};
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK((Rational{1, 3} + Rational{1, 6}) == Rational{1, 2});
    CHECK((Rational{2, 3} * Rational{9, 4}) == Rational{3, 2});
    CHECK((Rational{1} / Rational{-2}).num() == -1);
    CHECK((Rational{1} / Rational{-2}).den() == 2);
    CHECK(Rational{7}.is_integer());
    CHECK(Rational{-5, 10}.str() == "-1/2");
    CHECK(Rational{3, 2} > Rational{4, 3});
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational{1} / Rational{0}, std::domain_error);
    Rational huge{INT64_MAX / 2, 1};
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("quotient matrices match the displayed entries") {
    auto entries = [](const SquareMatrix& m) {
        std::vector<double> v;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) v.push_back(m.at(i, j));
        return v;
    };
    CHECK(entries(matching_quotient(9, 1, 2)) ==
          std::vector<double>{0, 6, 2, 1, 5, 4, 1, 12, 2});
    CHECK(entries(matching_quotient(6, 2, 2)) ==
          std::vector<double>{1, 1, 3, 2, 0, 6, 2, 2, 4});
    CHECK(entries(oddfactor_quotient(32, 3, 1)) ==
          std::vector<double>{2, 25, 4, 3, 24, 8, 3, 50, 6});
    CHECK(entries(case31_quotient(32, 1, 3)) ==
          std::vector<double>{0, 25, 6, 1, 24, 12, 1, 50, 8});
    CHECK(entries(case32_quotient(40, 2, 1, 3)) ==
          std::vector<double>{1, 32, 6, 2, 31, 12, 2, 64, 9});
}

TEST_CASE("determinant expansion equals the closed forms") {
    std::mt19937_64 rng(17);
    auto sample = [&](int variant) {
        // mirror of the harness sampler, kept local for independence
        for (;;) {
            switch (variant) {
                case 0: {
                    int k = 2 + int(rng() % 7);
                    int half = 1 + int(rng() % 25);
                    int n = k + 2 * half;
                    if (n > 60) continue;
                    return FamilyParams::matching(n, 1 + int(rng() % half), k);
                }
                case 1: {
                    int b = int(rng() % 2) ? 3 : 1;
                    int n = 8 + 2 * int(rng() % 27);
                    int smax = (n - 2) / (b + 1);
                    if (smax < 1) continue;
                    return FamilyParams::odd_factor(n, 1 + int(rng() % smax), b);
                }
                case 2: {
                    int b = int(rng() % 2) ? 3 : 1;
                    int d = 3 + int(rng() % 4);
                    int n = 2 * (1 + d * (b + 1) + 2 * d) + 2 * int(rng() % 8);
                    if (n > 64) continue;
                    return FamilyParams::case31(n, b, d);
                }
                default: {
                    int b = int(rng() % 2) ? 3 : 1;
                    int d = 4 + int(rng() % 3);
                    int s = 2 + int(rng() % (d - 2));
                    int p = d + 1 - s;
                    int n = s + p * (b * s + 1) + 2 * p;
                    n += n % 2;
                    n += 2 * int(rng() % 8);
                    if (n > 64) continue;
                    return FamilyParams::case32(n, s, b, d);
                }
            }
        }
    };
    for (int variant = 0; variant < 4; ++variant)
        for (int i = 0; i < 100; ++i) {
            FamilyParams p = sample(variant);
            CHECK(family_charpoly(p) == family_charpoly_closed_form(p));
        }
    // x^2 coefficient spot checks
    CHECK(matching_charpoly(18, 1, 2).c2 == Rational{-1 - 18 - 2 + 5});
    CHECK(oddfactor_charpoly(32, 3, 1).c2 == Rational{-1 * 3 - 32 + 3});
    CHECK(case31_charpoly(32, 1, 3).c2 == Rational{3 - 1 * 3 - 32});
    CHECK(case32_charpoly(40, 2, 1, 3).c2 == Rational{3 - 40 - 2 - 6 + 4});
}

TEST_CASE("coefficient differences divide by the parameter gap") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        int k = 2 + int(rng() % 5);
        int n = k + 2 * (3 + int(rng() % 20));
        int s = 2 + int(rng() % ((n - k) / 2 - 1));
        int t = 1 + int(rng() % (s - 1 > 0 ? s - 1 : 1));
        if (t >= s) continue;
        Cubic fs = matching_charpoly(n, s, k);
        Cubic ft = matching_charpoly(n, t, k);
        for (Rational diff : {fs.c2 - ft.c2, fs.c1 - ft.c1, fs.c0 - ft.c0}) {
            CHECK(diff.is_integer());
            CHECK(diff.num() % (t - s) == 0);
        }
    }
}

TEST_CASE("cubic roots against the family graphs") {
    // largest_root(charpoly) = full-matrix radius = dense-solver radius
    FamilyParams p = FamilyParams::matching(18, 1, 2);
    double root = family_mu(p);
    SquareMatrix d = distance_matrix(family_matching(18, 1, 2).graph);
    CHECK(std::fabs(root - perron_radius(d)) <= 1e-8 * root);
    CHECK(std::fabs(root - oracle::radius_symmetric(d)) <= 1e-8 * root);
    CHECK(std::fabs(Cubic(matching_charpoly(18, 1, 2)).eval(oracle::radius_symmetric(d))) <
          1e-6);
    CHECK(root > 17.0);

    FamilyParams q = FamilyParams::odd_factor(32, 3, 1);
    SquareMatrix dq = distance_matrix(family_odd_factor(32, 3, 1).graph);
    CHECK(std::fabs(family_mu(q) - oracle::radius_symmetric(dq)) <= 1e-8 * family_mu(q));
    CHECK(std::fabs(oddfactor_charpoly(32, 3, 1).eval(oracle::radius_symmetric(dq))) < 1e-6);

    FamilyParams c31 = FamilyParams::case31(32, 1, 3);
    SquareMatrix dc = distance_matrix(family_case3(32, 1, 1, 3).graph);
    CHECK(std::fabs(case31_charpoly(32, 1, 3).eval(oracle::radius_symmetric(dc))) < 1e-6);
    CHECK(std::fabs(family_mu(c31) - oracle::radius_symmetric(dc)) <= 1e-8 * family_mu(c31));

    // quotient cubics also agree with the general dense solver on the 3x3
    CHECK(std::fabs(family_mu(p) - oracle::largest_real_eigenvalue(matching_quotient(18, 1, 2))) <
          1e-8 * family_mu(p));
}

TEST_CASE("largest_root bracketing") {
    // equitable 3-class partition of D(K_4): radius must be 3
    RationalMatrix3 m;
    m.m = {{{Rational{1}, Rational{1}, Rational{1}},
            {Rational{2}, Rational{0}, Rational{1}},
            {Rational{2}, Rational{1}, Rational{0}}}};
    Cubic f = charpoly3(m);
    CHECK(std::fabs(largest_root(f, 2.0, 10.0) - 3.0) < 1e-10);

    // no root above lower: (x-1)^3
    Cubic none(Rational{-3}, Rational{3}, Rational{-1});
    CHECK_THROWS_AS(largest_root(none, 2.0, 10.0), std::runtime_error);
}

TEST_CASE("proof function evaluations") {
    // sign consistency: f_s - f_t = (t - s) p, so (s - t) p has the opposite sign
    {
        ProofParams pp;
        pp.n = 18; pp.k = 2; pp.t = 1; pp.s = 2;
        Rational x{17};
        Cubic fs = matching_charpoly(18, 2, 2);
        Cubic ft = matching_charpoly(18, 1, 2);
        Rational diff = fs.eval(x) - ft.eval(x);
        Rational pval = proof_function_exact(ProofFunction::p, pp, x);
        Rational st = Rational{pp.s} - Rational{pp.t};
        CHECK(diff.sign() == -(st * pval).sign());
        CHECK((diff + st * pval).is_zero());
    }

    // g(2) > 0 at (n, b, delta) = (32, 1, 3), with the closed-form value
    {
        ProofParams pp;
        pp.n = 32; pp.b = 1; pp.delta = 3;
        Rational g2 = proof_function_exact(ProofFunction::g, pp, Rational{2});
        CHECK(g2 > Rational{0});
        long long n = 32, b = 1, d = 3;
        long long closed = (3 + 4 * b) * n + 4 * (2 * b - 4 * b * b - 2 * b * b * d) +
                           (2 * b * b - 7 * b - 3) * d + 20 * b * b - 9 * b - 3;
        CHECK(g2 == Rational{closed});
    }

    // H(n-1) > 0 at (n, b, delta, s) = (40, 1, 4, 2)
    {
        ProofParams pp;
        pp.n = 40; pp.b = 1; pp.delta = 4; pp.s = 2;
        CHECK(proof_function_exact(ProofFunction::H, pp, Rational{39}) > Rational{0});
        // q(n) is H(n-1) viewed as a function of n
        CHECK(proof_function_exact(ProofFunction::q, pp, Rational{40}) ==
              proof_function_exact(ProofFunction::H, pp, Rational{39}));
        // Hprime matches a symmetric finite difference of H exactly (H is quadratic)
        Rational h1 = proof_function_exact(ProofFunction::H, pp, Rational{41});
        Rational h0 = proof_function_exact(ProofFunction::H, pp, Rational{39});
        CHECK(proof_function_exact(ProofFunction::Hprime, pp, Rational{40}) ==
              (h1 - h0) / Rational{2});
    }

    // h(s) = c(n-1); v(s) = p(n-1); both as functions of their own argument
    {
        ProofParams pc;
        pc.n = 32; pc.b = 1; pc.delta = 3; pc.s = 5;
        Rational c_at = proof_function_exact(ProofFunction::c, pc, Rational{31});
        ProofParams ph;
        ph.n = 32; ph.b = 1; ph.delta = 3;
        CHECK(proof_function_exact(ProofFunction::h, ph, Rational{5}) == c_at);

        ProofParams pv;
        pv.n = 18; pv.k = 2; pv.t = 1;
        ProofParams ppx;
        ppx.n = 18; ppx.k = 2; ppx.t = 1; ppx.s = 3;
        CHECK(proof_function_exact(ProofFunction::v, pv, Rational{3}) ==
              proof_function_exact(ProofFunction::p, ppx, Rational{17}));
        // v decreases over s in [t+1, (n-k)/2] at theorem scale
        Rational prev = proof_function_exact(ProofFunction::v, pv, Rational{2});
        for (int s = 3; s <= 8; ++s) {
            Rational cur = proof_function_exact(ProofFunction::v, pv, Rational{s});
            CHECK(cur < prev);
            prev = cur;
        }
    }

    // m(n) closed value at (b, delta) = (1, 3), n = 32
    {
        ProofParams pp;
        pp.b = 1; pp.delta = 3;
        // 3n^2 - (b d + 3 d + 3) n - b^2 d^2 - b d^2 - b d
        CHECK(proof_function_exact(ProofFunction::m, pp, Rational{32}) ==
              Rational{3 * 1024 - 15 * 32 - 9 - 9 - 3});
    }

    // l(b) and v_b(b) scaling helpers
    {
        ProofParams pp;
        pp.delta = 3;
        CHECK(proof_function_exact(ProofFunction::l, pp, Rational{1}) == Rational{11, 8});
        CHECK(proof_function_exact(ProofFunction::v_b, pp, Rational{1}) == Rational{124});
        // against the direct polynomial for a few (b, delta)
        for (long long b : {1, 3, 5})
            for (long long d : {3, 4, 6}) {
                ProofParams pd;
                pd.delta = static_cast<int>(d);
                Rational direct{22 * b * b * d * d - 2 - 13 * b - 11 * b * d - 2 * b * b -
                                8 * b * b * d};
                CHECK(proof_function_exact(ProofFunction::v_b, pd, Rational{b}) == direct);
            }
    }

    CHECK(proof_function_from_name("Hprime") == ProofFunction::Hprime);
    CHECK_THROWS_AS(proof_function_from_name("nosuch"), std::invalid_argument);
    ProofParams bad;
    CHECK_THROWS_AS(proof_function_exact(ProofFunction::p, bad, Rational{1}),
                    std::invalid_argument);
    ProofParams same;
    same.n = 18; same.k = 2; same.t = 2; same.s = 2;
    CHECK_THROWS_AS(proof_function_exact(ProofFunction::p, same, Rational{17}),
                    std::invalid_argument);
}
