#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "nestgen/graph.hpp"

using namespace nestgen;

TEST_CASE("build accepts K4") {
    Multigraph g = fixtures::k4();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.degree(1) == 3);
}

TEST_CASE("build accepts parallel edges") {
    Multigraph g = fixtures::digon();
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("build rejects dangling endpoint naming the offender") {
    CHECK_THROWS_WITH_AS(Multigraph::build({1, 2}, {{1, 1, 9}}),
                         doctest::Contains("9"), input_error);
}

TEST_CASE("build rejects duplicate edge id") {
    CHECK_THROWS_WITH_AS(Multigraph::build({1, 2, 3}, {{1, 1, 2}, {1, 2, 3}}),
                         doctest::Contains("1"), input_error);
}

TEST_CASE("build rejects duplicate vertex id") {
    CHECK_THROWS_AS(Multigraph::build({1, 1}, {}), input_error);
}

TEST_CASE("loops contribute two to the degree") {
    Multigraph g = fixtures::triangle_with_loop();
    CHECK(g.degree(1) == 4);
    CHECK(g.incident(1).size() == 3);  // loop listed once
}

TEST_CASE("edgeset_sum is symmetric difference") {
    Multigraph g = fixtures::k4();
    EdgeSet a = make_edgeset(g, {1, 2});
    EdgeSet b = make_edgeset(g, {2, 3});
    CHECK(edgeset_sum(a, b) == make_edgeset(g, {1, 3}));
    CHECK(edgeset_sum(a, a).empty());
}

TEST_CASE("sum of two K4 facial triangles is the complementary 4-cycle") {
    Multigraph g = fixtures::k4();
    // edges: 1=12 2=13 3=14 4=23 5=24 6=34
    EdgeSet t123 = make_edgeset(g, {1, 4, 2});
    EdgeSet t134 = make_edgeset(g, {2, 6, 3});
    EdgeSet quad = edgeset_sum(t123, t134);
    CHECK(quad == make_edgeset(g, {1, 4, 6, 3}));
    CHECK(is_circuit(g, quad));
}

TEST_CASE("edgeset_sum rejects mismatched hosts") {
    Multigraph g = fixtures::k4(), h = fixtures::c4();
    CHECK_THROWS_AS(edgeset_sum(make_edgeset(g, {1}), make_edgeset(h, {2})), input_error);
}

TEST_CASE("GF(2) axioms on random triples") {
    Multigraph g = fixtures::cube();
    std::mt19937_64 rng(7);
    auto random_set = [&] {
        std::set<EdgeId> ids;
        for (const EdgeRec& e : g.edges())
            if (rng() & 1) ids.insert(e.id);
        return make_edgeset(g, ids);
    };
    EdgeSet zero = make_edgeset(g, std::set<EdgeId>{});
    for (int t = 0; t < 50; ++t) {
        EdgeSet a = random_set(), b = random_set(), c = random_set();
        CHECK(edgeset_sum(edgeset_sum(a, b), c) == edgeset_sum(a, edgeset_sum(b, c)));
        CHECK(edgeset_sum(a, b) == edgeset_sum(b, a));
        CHECK(edgeset_sum(a, a) == zero);
        CHECK(edgeset_sum(a, zero) == a);
    }
}

TEST_CASE("is_circuit") {
    Multigraph g = fixtures::k4();
    CHECK(is_circuit(g, make_edgeset(g, {1, 4, 2})));
    CHECK_FALSE(is_circuit(g, make_edgeset(g, {1, 6})));       // degrees 1, disconnected
    CHECK_FALSE(is_circuit(g, make_edgeset(g, std::set<EdgeId>{})));

    // two vertex-disjoint triangles as one edge set: 2-regular but disconnected
    Multigraph h = fixtures::from_pairs(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK_FALSE(is_circuit(h, make_edgeset(h, {1, 2, 3, 4, 5, 6})));
    CHECK(is_circuit(h, make_edgeset(h, {1, 2, 3})));
}

TEST_CASE("a loop alone is a circuit, a digon is a circuit") {
    Multigraph g = fixtures::triangle_with_loop();
    CHECK(is_circuit(g, make_edgeset(g, {4})));
    Multigraph d = fixtures::digon();
    CHECK(is_circuit(d, make_edgeset(d, {1, 2})));
}

TEST_CASE("components") {
    CHECK(components(fixtures::k4()).size() == 1);
    Multigraph two = fixtures::from_pairs(8, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                                              {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
    auto cc = components(two);
    REQUIRE(cc.size() == 2);
    CHECK(cc[0].size() == 4);
    CHECK(cc[1].size() == 4);
    CHECK(components(Multigraph::build({}, {})).empty());
}

TEST_CASE("cycle_space_dimension") {
    CHECK(cycle_space_dimension(fixtures::k4()) == 3);
    CHECK(cycle_space_dimension(fixtures::star4paths()) == 3);
    CHECK(cycle_space_dimension(fixtures::digon()) == 1);
    CHECK(cycle_space_dimension(fixtures::forest()) == 0);
}

TEST_CASE("make_cycle derives a vertex order") {
    Multigraph g = fixtures::k4();
    Cycle c = make_cycle(g, make_edgeset(g, {1, 4, 2}));
    CHECK(c.length() == 3);
    CHECK(c.vertex_order.size() == 3);
    CHECK(std::set<VertexId>(c.vertex_order.begin(), c.vertex_order.end()) ==
          std::set<VertexId>{1, 2, 3});
    CHECK_THROWS_AS(make_cycle(g, make_edgeset(g, {1, 6})), input_error);

    Multigraph t = fixtures::triangle_with_loop();
    Cycle loop = make_cycle(t, make_edgeset(t, {4}));
    CHECK(loop.length() == 1);
    CHECK(loop.vertex_order == std::vector<VertexId>{1});
}

TEST_CASE("make_cut") {
    Multigraph g = fixtures::k4();
    Cut star = make_cut(g, {1});
    CHECK(star.edges == make_edgeset(g, {1, 2, 3}));
    CHECK(star.side_y == std::set<VertexId>{2, 3, 4});
    CHECK_THROWS_AS(make_cut(g, {}), input_error);
    CHECK_THROWS_AS(make_cut(g, {1, 2, 3, 4}), input_error);
}

TEST_CASE("is_circuit implies all incident degrees are two") {
    Multigraph g = fixtures::prism();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::set<EdgeId> ids;
        for (const EdgeRec& e : g.edges())
            if (rng() & 1) ids.insert(e.id);
        EdgeSet f = make_edgeset(g, ids);
        if (!is_circuit(g, f)) continue;
        for (VertexId v : incident_vertices(g, f)) {
            int deg = 0;
            for (EdgeId e : f.ids) {
                const EdgeRec& r = g.edge(e);
                if (r.u == v) ++deg;
                if (r.v == v) ++deg;
            }
            CHECK(deg == 2);
        }
    }
}
