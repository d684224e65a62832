#include "dsr/families.hpp"

#include <string>

namespace dsr {

namespace {
[[noreturn]] void reject(const std::string& what) {
    throw std::invalid_argument("family parameters: " + what);
}

VertexSet span(int lo, int hi) {  // vertices lo..hi-1
    VertexSet v;
    for (int i = lo; i < hi; ++i) v.add(i);
    return v;
}
}  // namespace

FamilyParams FamilyParams::matching(int n, int s, int k) {
    FamilyParams p{FamilyVariant::matching, n, s, k, 0, 0};
    p.validate();
    return p;
}

FamilyParams FamilyParams::odd_factor(int n, int s, int b) {
    FamilyParams p{FamilyVariant::odd_factor, n, s, 0, b, 0};
    p.validate();
    return p;
}

FamilyParams FamilyParams::case31(int n, int b, int delta) {
    FamilyParams p{FamilyVariant::case31, n, 1, 0, b, delta};
    p.validate();
    return p;
}

FamilyParams FamilyParams::case32(int n, int s, int b, int delta) {
    FamilyParams p{FamilyVariant::case32, n, s, 0, b, delta};
    p.validate();
    return p;
}

void FamilyParams::validate() const {
    switch (variant) {
        case FamilyVariant::matching:
            // n = k (mod 2) is a hypothesis of the matching statements, not
            // of the construction; the harness enforces it where the
            // certificate alpha = (n-k)/2 must be integral.
            if (k < 2 || k > n - 2) reject("need 2 <= k <= n-2");
            if (s < 1 || 2 * s > n - k) reject("need 1 <= s <= (n-k)/2");
            break;
        case FamilyVariant::odd_factor:
            if (b < 1 || b % 2 == 0) reject("need b odd >= 1");
            if (n % 2 != 0) reject("need n even");
            if (s < 1) reject("need s >= 1");
            if (n - (b + 1) * s - 1 < 1) reject("need n-(b+1)s-1 >= 1");
            break;
        case FamilyVariant::case31:
        case FamilyVariant::case32: {
            if (b < 1 || b % 2 == 0) reject("need b odd >= 1");
            if (n % 2 != 0) reject("need n even");
            if (delta < 3) reject("need delta >= 3");
            if (s < 1 || s >= delta) reject("need 1 <= s < delta");
            if (variant == FamilyVariant::case31 && s != 1) reject("case31 has s = 1");
            if (variant == FamilyVariant::case32 && s < 2) reject("case32 needs s >= 2");
            int p = delta + 1 - s;
            int big = n - s - p * (b * s + 1);
            if (big < 2 * p) reject("need n-s-(delta+1-s)(bs+1) >= 2(delta+1-s)");
            break;
        }
    }
}

Graph join_of_cliques(int s, const std::vector<int>& parts) {
    if (s < 0) throw std::invalid_argument("join_of_cliques: s < 0");
    Graph inner(0);
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("join_of_cliques: part < 1");
        inner = disjoint_union(inner, complete(p));
    }
    if (s == 0) return inner;
    return join(complete(s), inner);
}

FamilyGraph family_matching(int n, int s, int k) {
    FamilyParams::matching(n, s, k);
    const int big = n + 1 - 2 * s - k;
    const int indep = s + k - 1;
    FamilyGraph fg;
    fg.graph = join(complete(s), disjoint_union(complete(big), empty_graph(indep)));
    fg.join_block = span(0, s);
    fg.clique_block = span(s, s + big);
    fg.rest_block = span(s + big, n);
    return fg;
}

FamilyGraph family_odd_factor(int n, int s, int b) {
    FamilyParams::odd_factor(n, s, b);
    const int big = n - (b + 1) * s - 1;
    const int indep = b * s + 1;
    FamilyGraph fg;
    fg.graph = join(complete(s), disjoint_union(complete(big), empty_graph(indep)));
    fg.join_block = span(0, s);
    fg.clique_block = span(s, s + big);
    fg.rest_block = span(s + big, n);
    return fg;
}

FamilyGraph family_case3(int n, int s, int b, int delta) {
    if (s == 1)
        FamilyParams::case31(n, b, delta);
    else
        FamilyParams::case32(n, s, b, delta);
    const int p = delta + 1 - s;
    const int count = b * s + 1;
    const int big = n - s - p * count;
    Graph inner = complete(big);
    for (int i = 0; i < count; ++i) inner = disjoint_union(inner, complete(p));
    FamilyGraph fg;
    fg.graph = join(complete(s), inner);
    fg.join_block = span(0, s);
    fg.clique_block = span(s, s + big);
    fg.rest_block = span(s + big, n);
    return fg;
}

}  // namespace dsr
