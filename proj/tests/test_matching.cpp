#include <doctest.h>

#include "dsr/connectivity.hpp"
#include "dsr/enumerate.hpp"
#include "dsr/families.hpp"
#include "dsr/matching.hpp"

using namespace dsr;

TEST_CASE("matching numbers of small graphs") {
    CHECK(matching_number(complete(4)) == 2);
    CHECK(matching_number(join(complete(1), empty_graph(3))) == 1);  // star
    CHECK(matching_number(complete(1)) == 0);
    CHECK(matching_number(empty_graph(5)) == 0);
    CHECK(has_perfect_matching(complete(4)));
    CHECK(!has_perfect_matching(complete(5)));  // odd order
    CHECK(!has_perfect_matching(family_matching(18, 1, 2).graph));
}

TEST_CASE("blossom result is a valid matching") {
    for_each_labeled(5, [](const Graph& g) {
        Matching m = maximum_matching(g);
        CHECK(is_valid_matching(g, m));
    });
    Matching bogus;
    bogus.edges = {{0, 1}, {1, 2}};
    CHECK(!is_valid_matching(complete(3), bogus));
    bogus.edges = {{0, 1}};
    CHECK(!is_valid_matching(empty_graph(2), bogus));
}

TEST_CASE("deficiency formula on small graphs") {
    Deficiency d = berge_tutte(join(complete(1), empty_graph(3)));  // K_{1,3}, center = 0
    CHECK(d.value == 2);
    CHECK(d.witness.bits == 0b0001);  // smallest maximizing bitmask

    d = berge_tutte(complete(6));
    CHECK(d.value == 0);
    CHECK(matching_number_from_deficiency(complete(6), d) == 3);

    d = berge_tutte(family_matching(18, 2, 2).graph);
    CHECK(d.value == 2);

    CHECK_THROWS_AS(berge_tutte(complete(25)), std::invalid_argument);
}

TEST_CASE("blossom equals the deficiency formula exhaustively (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled(n, [&](const Graph& g) {
            if (!is_connected(g)) return;
            Deficiency d = berge_tutte(g);
            CHECK(maximum_matching(g).size() == (n - d.value) / 2);
        });
    }
}

TEST_CASE("polynomial-time witness attains the deficiency maximum") {
    for (int n = 1; n <= 5; ++n) {
        for_each_labeled(n, [&](const Graph& g) {
            if (!is_connected(g)) return;
            Deficiency exact = berge_tutte(g);
            Deficiency ge = gallai_edmonds_witness(g);
            CHECK(ge.value == exact.value);
            ComponentCount cc = odd_components(g, ge.witness);
            CHECK(cc.odd - ge.witness.count() == exact.value);
        });
    }
    // the 32-vertex extremal family, beyond the enumeration cap
    FamilyGraph fg = family_odd_factor(32, 3, 1);
    Deficiency ge = gallai_edmonds_witness(fg.graph);
    CHECK(ge.value == 2);
    CHECK(ge.witness == fg.join_block);
}

TEST_CASE("connectivity bound for deficient graphs (n <= 6)") {
    for (int n = 2; n <= 6; ++n) {
        for_each_labeled(n, [&](const Graph& g) {
            if (!is_connected(g)) return;
            int alpha = matching_number(g);
            if (alpha >= n / 2) return;
            CHECK(vertex_connectivity(g) <= alpha);
        });
    }
}
