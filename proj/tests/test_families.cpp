#include <doctest.h>

#include <random>

#include "dsr/families.hpp"
#include "dsr/matching.hpp"

using namespace dsr;

TEST_CASE("matching family block structure") {
    FamilyGraph fg = family_matching(9, 1, 2);
    CHECK(fg.graph.order() == 9);
    CHECK(fg.join_block.count() == 1);
    CHECK(fg.clique_block.count() == 6);
    CHECK(fg.rest_block.count() == 2);

    FamilyGraph f6 = family_matching(6, 2, 2);  // K_2 v empty(4)
    CHECK(f6.clique_block.count() == 1);
    CHECK(f6.rest_block.count() == 3);
    CHECK(min_degree(f6.graph) == 2);

    CHECK_THROWS_AS(family_matching(6, 3, 2), std::invalid_argument);   // s > (n-k)/2
    CHECK_THROWS_AS(family_matching(6, 1, 5), std::invalid_argument);   // k > n-2
    CHECK_THROWS_AS(family_matching(6, 1, 1), std::invalid_argument);   // k < 2
}

TEST_CASE("odd-factor family block structure") {
    FamilyGraph fg = family_odd_factor(32, 3, 1);
    CHECK(fg.join_block.count() == 3);
    CHECK(fg.clique_block.count() == 25);
    CHECK(fg.rest_block.count() == 4);
    CHECK(min_degree(fg.graph) == 3);

    FamilyGraph f3 = family_odd_factor(32, 3, 3);
    CHECK(f3.clique_block.count() == 19);
    CHECK(f3.rest_block.count() == 10);

    CHECK_THROWS_AS(family_odd_factor(32, 3, 2), std::invalid_argument);  // b even
    CHECK_THROWS_AS(family_odd_factor(31, 3, 1), std::invalid_argument);  // n odd
    CHECK_THROWS_AS(family_odd_factor(8, 4, 1), std::invalid_argument);   // big clique empty
}

TEST_CASE("small-clique family block structure") {
    FamilyGraph fg = family_case3(32, 1, 1, 3);  // K_1 v (K_25 + 2K_3)
    CHECK(fg.join_block.count() == 1);
    CHECK(fg.clique_block.count() == 25);
    CHECK(fg.rest_block.count() == 6);
    CHECK(fg.graph.order() == 32);

    FamilyGraph f2 = family_case3(32, 2, 1, 3);  // K_2 v (K_24 + 3K_2)
    CHECK(f2.clique_block.count() == 24);
    CHECK(f2.rest_block.count() == 6);

    // vertex count telescopes for every valid tuple
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int b = (rng() % 2) ? 3 : 1;
        int d = 3 + int(rng() % 4);
        int s = 1 + int(rng() % (d - 1));
        int p = d + 1 - s;
        int n = s + p * (b * s + 1) + 2 * p + 2 * int(rng() % 10);
        n += n % 2;
        FamilyGraph f = family_case3(n, s, b, d);
        CHECK(f.graph.order() == n);
        CHECK(f.join_block.count() + f.clique_block.count() + f.rest_block.count() == n);
        CHECK(min_degree(f.graph) == d);
    }

    CHECK_THROWS_AS(family_case3(32, 3, 1, 3), std::invalid_argument);  // s >= delta
    CHECK_THROWS_AS(family_case3(12, 1, 1, 3), std::invalid_argument);  // big clique too small
}

TEST_CASE("matching family matching numbers") {
    // alpha equals (n-k)/2 exactly for parity-matched tuples
    Matching m = maximum_matching(family_matching(18, 1, 2).graph);
    CHECK(m.size() == 8);
    CHECK(!has_perfect_matching(family_matching(18, 1, 2).graph));
    // the deficiency witness agrees
    Deficiency d = berge_tutte(family_matching(18, 2, 2).graph);
    CHECK(d.value == 2);
    CHECK((18 - d.value) / 2 == maximum_matching(family_matching(18, 2, 2).graph).size());
}

TEST_CASE("join of cliques") {
    CHECK(join_of_cliques(0, {4}) == complete(4));
    CHECK(join_of_cliques(2, {2}) == complete(4));
    Graph g = join_of_cliques(1, {3, 1, 1});  // the (6,2,1) matching family graph
    CHECK(g == family_matching(6, 1, 2).graph);
    CHECK_THROWS_AS(join_of_cliques(1, {0, 2}), std::invalid_argument);
}
