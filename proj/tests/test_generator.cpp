#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "nestgen/generator.hpp"
#include "nestgen/nestedness.hpp"
#include "nestgen/oracle.hpp"

using namespace nestgen;

namespace {

std::vector<EdgeSet> edge_sets(const GeneratingSet& d) {
    std::vector<EdgeSet> v;
    for (const Cycle& c : d.cycles) v.push_back(c.edges);
    return v;
}

std::multiset<int> lengths(const GeneratingSet& d) {
    std::multiset<int> ls;
    for (const Cycle& c : d.cycles) ls.insert(c.length());
    return ls;
}

} // namespace

TEST_CASE("generate_3connected on K4, cube, prism") {
    GeneratingSet k = generate_3connected(fixtures::k4());
    CHECK(k.cycles.size() == 4);
    CHECK(gf2_rank(k.host, edge_sets(k)) == 3);

    GeneratingSet c = generate_3connected(fixtures::cube());
    CHECK(c.cycles.size() == 6);
    CHECK(lengths(c) == std::multiset<int>{4, 4, 4, 4, 4, 4});
    CHECK(gf2_rank(c.host, edge_sets(c)) == 5);

    GeneratingSet p = generate_3connected(fixtures::prism());
    CHECK(lengths(p) == std::multiset<int>{3, 3, 4, 4, 4});
    CHECK(gf2_rank(p.host, edge_sets(p)) == 4);
}

TEST_CASE("generate_3connected rejects low connectivity with a separator witness") {
    CHECK_THROWS_AS(generate_3connected(fixtures::c4()), input_error);
    CHECK_THROWS_WITH_AS(generate_3connected(fixtures::theta()), doctest::Contains("separator"),
                         input_error);
    CHECK_THROWS_AS(generate_3connected(fixtures::k5()), nonplanar_error);
}

TEST_CASE("dual route equivalence") {
    CHECK(dual_route_equivalence(fixtures::k4()));
    CHECK(dual_route_equivalence(fixtures::cube()));
    CHECK(dual_route_equivalence(fixtures::dodecahedron()));
}

TEST_CASE("filtrate") {
    GeneratingSet k = generate_3connected(fixtures::k4());
    CHECK(filtrate(k, 3).size() == 4);
    GeneratingSet c = generate_3connected(fixtures::cube());
    CHECK(filtrate(c, 3).empty());
    GeneratingSet p = generate_3connected(fixtures::prism());
    CHECK(filtrate(p, 3).size() == 2);
    // monotone in n
    for (int n = 1; n < 5; ++n) CHECK(filtrate(p, n).size() <= filtrate(p, n + 1).size());
}

TEST_CASE("graded_check") {
    GeneratingSet p = generate_3connected(fixtures::prism());
    CHECK(graded_check(fixtures::prism(), p, 3).holds);
    GeneratingSet k = generate_3connected(fixtures::k4());
    CHECK(graded_check(fixtures::k4(), k, 4).holds);
    GeneratingSet c = generate_3connected(fixtures::cube());
    CHECK(graded_check(fixtures::cube(), c, 3).holds);  // vacuous
}

TEST_CASE("generate_2connected on the two-hub four-path graph") {
    FullResult fr = generate_2connected(fixtures::star4paths());
    REQUIRE(fr.added_edges.size() == 1);
    CHECK((fr.added_edges[0].u == 1 && fr.added_edges[0].v == 2));
    CHECK(fr.g_prime.edge_count() == 9);
    REQUIRE(fr.gens.cycles.size() == 4);
    for (const Cycle& c : fr.gens.cycles) {
        CHECK(c.length() == 3);
        CHECK(c.edges.contains(fr.added_edges[0].id));
    }
    CHECK(gf2_rank(fr.g_prime, edge_sets(fr.gens)) == 4);
    CHECK(cycle_space_dimension(fr.g_prime) == 4);
    CHECK(family_nested(fr.g_prime, fr.gens.rotation, fr.gens.cycles).ok());
}

TEST_CASE("generate_2connected on theta and C4") {
    FullResult th = generate_2connected(fixtures::theta());
    CHECK(th.added_edges.size() == 1);
    CHECK(th.gens.cycles.size() == 3);
    CHECK(gf2_rank(th.g_prime, edge_sets(th.gens)) == 3);

    FullResult c4 = generate_2connected(fixtures::c4());
    CHECK(c4.added_edges.empty());
    REQUIRE(c4.gens.cycles.size() == 1);
    CHECK(c4.gens.cycles[0].length() == 4);
}

TEST_CASE("generate_2connected rejects non-2-connected input") {
    CHECK_THROWS_AS(generate_2connected(fixtures::bowtie()), input_error);
}

TEST_CASE("digons of a parallel class are generated") {
    // triangle with one edge tripled: bond part contributes all 3 digons
    Multigraph g = Multigraph::build({1, 2, 3}, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2},
                                                 {4, 2, 3}, {5, 1, 3}});
    FullResult fr = generate_2connected(g);
    int digons = 0;
    for (size_t i = 0; i < fr.gens.cycles.size(); ++i)
        if (fr.gens.provenance[i].kind == GenKind::Digon) ++digons;
    CHECK(digons == 3);
    CHECK(gf2_rank(fr.g_prime, edge_sets(fr.gens)) == cycle_space_dimension(fr.g_prime));
    CHECK(family_nested(fr.g_prime, fr.gens.rotation, fr.gens.cycles).ok());
    CHECK(orbit_closed(edge_sets(fr.gens), automorphism_group(fr.g_prime)));
}

TEST_CASE("generate_full on the bowtie") {
    FullResult fr = generate_full(fixtures::bowtie());
    CHECK(fr.added_edges.empty());
    REQUIRE(fr.gens.cycles.size() == 2);
    CHECK(gf2_rank(fr.g_prime, edge_sets(fr.gens)) == 2);
    CHECK(family_nested(fr.g_prime, fr.gens.rotation, fr.gens.cycles).ok());
}

TEST_CASE("generate_full on a forest is empty") {
    FullResult fr = generate_full(fixtures::forest());
    CHECK(fr.gens.cycles.empty());
    CHECK(fr.added_edges.empty());
    CHECK(fr.g_prime.edge_count() == fixtures::forest().edge_count());
}

TEST_CASE("generate_full emits loops and skips bridges") {
    FullResult tr = generate_full(fixtures::triangle_with_loop());
    REQUIRE(tr.gens.cycles.size() == 2);
    CHECK(gf2_rank(tr.g_prime, edge_sets(tr.gens)) == 2);

    FullResult lb = generate_full(fixtures::loops_and_bridges());
    int loops = 0;
    for (const auto& p : lb.gens.provenance)
        if (p.kind == GenKind::Loop) ++loops;
    CHECK(loops == 2);
    CHECK(gf2_rank(lb.g_prime, edge_sets(lb.gens)) ==
          cycle_space_dimension(fixtures::loops_and_bridges()));
}

TEST_CASE("strict mode refuses extensions") {
    CHECK_THROWS_AS(generate_full(fixtures::theta(), true), input_error);
    CHECK_NOTHROW(generate_full(fixtures::k4(), true));
    CHECK_NOTHROW(generate_full(fixtures::diamond(), true));
}

TEST_CASE("generate_full rejects nonplanar input up front") {
    CHECK_THROWS_AS(generate_full(fixtures::k5()), nonplanar_error);
}

TEST_CASE("express_cycle") {
    FullResult k = generate_full(fixtures::k4());
    Cycle quad = make_cycle(k.g_prime, make_edgeset(k.g_prime, {1, 4, 6, 3}));
    auto combo = express_cycle(k.gens, quad);
    REQUIRE(combo.has_value());
    CHECK(combo->size() == 2);

    auto self = express_cycle(k.gens, k.gens.cycles[0]);
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<int>{0});
}

TEST_CASE("express_cycle in the extended two-hub graph cancels the added edge") {
    FullResult fr = generate_full(fixtures::star4paths());
    // cycle through paths p1 and p2 (edges 1,2,3,4)
    Cycle c = make_cycle(fr.g_prime, make_edgeset(fr.g_prime, {1, 2, 3, 4}));
    auto combo = express_cycle(fr.gens, c);
    REQUIRE(combo.has_value());
    REQUIRE(combo->size() == 2);
    EdgeSet sum = make_edgeset(fr.g_prime, std::set<EdgeId>{});
    for (int i : *combo) sum = edgeset_sum(sum, fr.gens.cycles[static_cast<size_t>(i)].edges);
    CHECK(sum == c.edges);
}

TEST_CASE("split_at_adhesion replays the inductive proof step") {
    FullResult fr = generate_full(fixtures::star4paths());
    EdgeId xy = fr.added_edges.at(0).id;
    Cycle c = make_cycle(fr.g_prime, make_edgeset(fr.g_prime, {1, 2, 5, 6}));  // p1 + p3
    auto [c1, c2] = split_at_adhesion(fr.g_prime, c, 1, 2, xy);
    CHECK(c1.length() == 3);
    CHECK(c2.length() == 3);
    CHECK(edgeset_sum(c1.edges, c2.edges) == c.edges);
    CHECK(c1.edges.contains(xy));
    CHECK(c2.edges.contains(xy));

    Cycle tri = make_cycle(fr.g_prime, make_edgeset(fr.g_prime, {1, 2, xy}));
    CHECK_THROWS_AS(split_at_adhesion(fr.g_prime, tri, 3, 2, xy), input_error);
}

TEST_CASE("every generator is a circuit of its host") {
    for (auto& [name, g] : fixtures::two_connected_fixtures()) {
        CAPTURE(name);
        FullResult fr = generate_full(g);
        for (const Cycle& c : fr.gens.cycles) CHECK(is_circuit(fr.g_prime, c.edges));
        CHECK(fr.gens.cycles.size() == fr.gens.provenance.size());
    }
}

TEST_CASE("aut-invariance of full pipeline outputs") {
    for (Multigraph g : {fixtures::star4paths(), fixtures::theta(), fixtures::diamond()}) {
        FullResult fr = generate_full(g);
        CHECK(orbit_closed(edge_sets(fr.gens), automorphism_group(fr.g_prime)));
    }
}
