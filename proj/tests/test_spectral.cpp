#include <doctest.h>

#include <cmath>
#include <random>

#include "dsr/enumerate.hpp"
#include "dsr/families.hpp"
#include "dsr/forms.hpp"
#include "dsr/matrix.hpp"
#include "oracle.hpp"

using namespace dsr;

namespace {
Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}
}  // namespace

TEST_CASE("distance matrices") {
    SquareMatrix d = distance_matrix(complete(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d.at(i, j) == (i == j ? 0.0 : 1.0));

    d = distance_matrix(path(3));
    CHECK(d.at(0, 2) == 2.0);
    CHECK(d.at(2, 0) == 2.0);
    CHECK(d.at(0, 1) == 1.0);

    CHECK_THROWS_AS(distance_matrix(disjoint_union(complete(1), complete(1))),
                    std::invalid_argument);

    // family distance entries are 1 within/into the join, 2 across the rest
    FamilyGraph fg = family_matching(9, 1, 2);
    SquareMatrix df = distance_matrix(fg.graph);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            if (i == j) continue;
            bool far = !fg.graph.has_edge(i, j);
            CHECK(df.at(i, j) == (far ? 2.0 : 1.0));
        }
}

TEST_CASE("perron radius of complete graphs") {
    for (int n = 2; n <= 12; ++n)
        CHECK(std::fabs(perron_radius(distance_matrix(complete(n))) - (n - 1)) < 1e-10);
}

TEST_CASE("perron radius of the 3-path is 1+sqrt(3)") {
    double mu = perron_radius(distance_matrix(path(3)));
    CHECK(std::fabs(mu - 2.7320508075688772) < 1e-9);
    CHECK(std::fabs(mu - oracle::radius_symmetric(distance_matrix(path(3)))) < 1e-10);
}

TEST_CASE("power iteration agrees with the dense eigensolver oracle") {
    std::mt19937_64 rng(20240915);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 29);
        Graph g = oracle::random_connected(rng, n);
        SquareMatrix d = distance_matrix(g);
        double mu = perron_radius(d);
        double ref = oracle::radius_symmetric(d);
        CHECK(std::fabs(mu - ref) <= 1e-8 * ref);
    }
}

TEST_CASE("power iteration is deterministic") {
    SquareMatrix d = distance_matrix(family_matching(18, 1, 2).graph);
    double a = perron_radius(d);
    double b = perron_radius(d);
    CHECK(a == b);
}

TEST_CASE("power iteration error paths") {
    SquareMatrix d = distance_matrix(complete(5));
    CHECK_THROWS_AS(perron_radius(d, -1.0), std::invalid_argument);
    try {
        perron_radius(distance_matrix(path(7)), 1e-13, 2);
        FAIL("expected power_iteration_error");
    } catch (const power_iteration_error& e) {
        CHECK(e.last_iterate.size() == 7);
        CHECK(e.last_value > 0);
    }
}

TEST_CASE("radius floor: mu >= n-1 with equality only for complete graphs") {
    auto check_floor = [](const Graph& g) {
        if (!is_connected(g)) return;
        int n = g.order();
        double mu = perron_radius(distance_matrix(g));
        CHECK(mu >= n - 1 - 1e-9);
        if (g.edge_count() < n * (n - 1) / 2)
            CHECK(mu > n - 1 + 1e-7);
        else
            CHECK(std::fabs(mu - (n - 1)) < 1e-10);
    };
    for (int n : {2, 3, 4, 5, 6})
        for_each_labeled(n, check_floor);
    // n = 7: deterministic sample of the mask range
    const std::uint64_t total = edge_mask_count(7);
    for (std::uint64_t mask = 0; mask < total; mask += 257)
        check_floor(graph_from_edge_mask(7, mask));
    check_floor(complete(7));
}

TEST_CASE("edge deletion raises the radius (random spot checks)") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + int(rng() % 5);
        Graph g = oracle::random_connected(rng, n);
        auto edges = g.edges();
        auto [u, v] = edges[rng() % edges.size()];
        Graph ge = delete_edge(g, u, v);
        if (!is_connected(ge)) continue;
        CHECK(perron_radius(distance_matrix(ge)) > perron_radius(distance_matrix(g)) + 1e-9);
    }
}

TEST_CASE("quotient matrices and equitability") {
    SquareMatrix d = distance_matrix(complete(4));
    Partition p = Partition::of({VertexSet{0b0011}, VertexSet{0b1100}}, 4);
    QuotientResult qr = quotient_matrix(d, p);
    CHECK(qr.equitable);
    CHECK(qr.q.at(0, 0) == 1.0);
    CHECK(qr.q.at(0, 1) == 2.0);
    CHECK(qr.q.at(1, 0) == 2.0);
    CHECK(qr.q.at(1, 1) == 1.0);

    FamilyGraph fg = family_matching(9, 1, 2);
    QuotientResult fam = quotient_matrix(distance_matrix(fg.graph), fg.partition());
    CHECK(fam.equitable);
    SquareMatrix expected = matching_quotient(9, 1, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fam.q.at(i, j) == expected.at(i, j));
    // rho(quotient) = rho(full) for the equitable family partition
    CHECK(std::fabs(perron_radius(fam.q) - perron_radius(distance_matrix(fg.graph))) <=
          1e-8 * perron_radius(fam.q));

    // the collapsed 3-class partition of the small-clique family is equitable
    FamilyGraph c3 = family_case3(40, 2, 1, 3);
    QuotientResult qc3 = quotient_matrix(distance_matrix(c3.graph), c3.partition());
    CHECK(qc3.equitable);
    SquareMatrix pexp = case32_quotient(40, 2, 1, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(qc3.q.at(i, j) == pexp.at(i, j));

    SquareMatrix dp4 = distance_matrix(path(4));
    QuotientResult ends = quotient_matrix(dp4, Partition::of({VertexSet{0b1001}, VertexSet{0b0110}}, 4));
    CHECK(ends.equitable);
    QuotientResult lop = quotient_matrix(dp4, Partition::of({VertexSet{0b0001}, VertexSet{0b1110}}, 4));
    CHECK(!lop.equitable);

    CHECK_THROWS_AS(Partition::of({VertexSet{0b01}, VertexSet{0b01}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition::of({VertexSet{0b01}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition::of({VertexSet{0b01}, VertexSet{}}, 1), std::invalid_argument);
}
