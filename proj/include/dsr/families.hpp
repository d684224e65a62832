#ifndef DSR_FAMILIES_HPP
#define DSR_FAMILIES_HPP

#include "dsr/graph.hpp"
#include "dsr/matrix.hpp"

namespace dsr {

enum class FamilyVariant { matching, odd_factor, case31, case32 };

// Parameter tuple of one extremal family. Unused fields stay 0.
struct FamilyParams {
    FamilyVariant variant = FamilyVariant::matching;
    int n = 0, s = 0, k = 0, b = 0, delta = 0;

    static FamilyParams matching(int n, int s, int k);
    static FamilyParams odd_factor(int n, int s, int b);
    static FamilyParams case31(int n, int b, int delta);          // s = 1
    static FamilyParams case32(int n, int s, int b, int delta);   // 2 <= s <= delta-1

    void validate() const;  // throws std::invalid_argument with the violated constraint
};

// A family graph together with its 3-class vertex partition: join clique,
// big clique, rest (independent vertices or the small cliques).
struct FamilyGraph {
    Graph graph;
    VertexSet join_block;
    VertexSet clique_block;
    VertexSet rest_block;

    Partition partition() const {
        return Partition::of({join_block, clique_block, rest_block}, graph.order());
    }
};

// Joined cliques K_s v (K_{p1} + ... + K_{pc}); parts must be positive.
Graph join_of_cliques(int s, const std::vector<int>& parts);

FamilyGraph family_matching(int n, int s, int k);      // K_s v (K_{n+1-2s-k} + (s+k-1)K_1)
FamilyGraph family_odd_factor(int n, int s, int b);    // K_s v (K_{n-(b+1)s-1} + (bs+1)K_1)
// K_s v (K_{n-s-(delta+1-s)(bs+1)} + (bs+1)K_{delta+1-s}); the (bs+1) small
// cliques are collapsed into one partition class.
FamilyGraph family_case3(int n, int s, int b, int delta);

}  // namespace dsr

#endif
