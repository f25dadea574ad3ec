#include "doctest.h"

#include "fixtures.hpp"
#include "nestgen/embedding.hpp"

using namespace nestgen;

TEST_CASE("planar_embed K4 has four faces") {
    Multigraph g = fixtures::k4();
    RotationSystem rot = planar_embed(g);
    CHECK(genus0_certificate(g, rot));
    CHECK(trace_faces(g, rot).size() == 4);
}

TEST_CASE("planar_embed rejects K5") {
    CHECK_THROWS_AS(planar_embed(fixtures::k5()), nonplanar_error);
}

TEST_CASE("planar_embed rejects K33") {
    Multigraph k33 = fixtures::from_pairs(
        6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
    CHECK_THROWS_AS(planar_embed(k33), nonplanar_error);
}

TEST_CASE("cube has six quadrilateral faces") {
    Multigraph g = fixtures::cube();
    RotationSystem rot = planar_embed(g);
    auto faces = trace_faces(g, rot);
    REQUIRE(faces.size() == 6);
    for (const Face& f : faces) CHECK(f.boundary.size() == 4);
}

TEST_CASE("digon has two faces with the same boundary") {
    Multigraph g = fixtures::digon();
    RotationSystem rot = planar_embed(g);
    auto faces = trace_faces(g, rot);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].boundary == make_edgeset(g, {1, 2}));
    CHECK(faces[1].boundary == make_edgeset(g, {1, 2}));
}

TEST_CASE("single edge has one face visiting both darts") {
    Multigraph g = fixtures::single_edge();
    RotationSystem rot = planar_embed(g);
    auto faces = trace_faces(g, rot);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].orbit.size() == 2);
    CHECK(faces[0].boundary == make_edgeset(g, {1}));
}

TEST_CASE("loops and parallel edges embed with genus 0") {
    for (Multigraph g : {fixtures::theta(), fixtures::digon(), fixtures::triangle_with_loop(),
                         fixtures::loops_and_bridges()}) {
        RotationSystem rot = planar_embed(g);
        CHECK(genus0_certificate(g, rot));
    }
}

TEST_CASE("every edge is covered exactly twice over all face orbits") {
    for (Multigraph g : {fixtures::k4(), fixtures::prism(), fixtures::theta(),
                         fixtures::triangle_with_loop(), fixtures::star4paths()}) {
        RotationSystem rot = planar_embed(g);
        std::map<EdgeId, int> coverage;
        for (const Face& f : trace_faces(g, rot))
            for (Dart d : f.orbit) coverage[g.edges()[d / 2].id]++;
        for (const EdgeRec& e : g.edges()) CHECK(coverage[e.id] == 2);
    }
}

TEST_CASE("planar_embed is deterministic") {
    Multigraph g = fixtures::dodecahedron();
    CHECK(planar_embed(g).order() == planar_embed(g).order());
}

TEST_CASE("face_boundary_cycles on 2-connected hosts") {
    auto faces = face_boundary_cycles(fixtures::k4(), planar_embed(fixtures::k4()));
    REQUIRE(faces.size() == 4);
    for (const Cycle& c : faces) CHECK(c.length() == 3);

    auto cfaces = face_boundary_cycles(fixtures::cube(), planar_embed(fixtures::cube()));
    REQUIRE(cfaces.size() == 6);
    for (const Cycle& c : cfaces) CHECK(c.length() == 4);
}

TEST_CASE("face_boundary_cycles rejects the bowtie") {
    Multigraph g = fixtures::bowtie();
    CHECK_THROWS_AS(face_boundary_cycles(g, planar_embed(g)), not_two_connected_error);
}

TEST_CASE("rotation system validation") {
    Multigraph g = fixtures::k4();
    auto order = planar_embed(g).order();
    order[0].pop_back();  // drop a dart
    CHECK_THROWS_AS(RotationSystem::build(g, order), input_error);
}

TEST_CASE("vertex_side basics on K4") {
    Multigraph g = fixtures::k4();
    RotationSystem rot = planar_embed(g);
    Cycle c = make_cycle(g, make_edgeset(g, {1, 4, 2}));  // triangle 1-2-3
    CHECK(vertex_side(g, rot, c, 1) == Side::OnCycle);
    CHECK(vertex_side(g, rot, c, 2) == Side::OnCycle);
    CHECK(vertex_side(g, rot, c, 3) == Side::OnCycle);
    CHECK(vertex_side(g, rot, c, 4) != Side::OnCycle);
}

TEST_CASE("cube: the four vertices off a facial cycle share a side") {
    Multigraph g = fixtures::cube();
    RotationSystem rot = planar_embed(g);
    SideOracle so(g, rot);
    for (const Cycle& c : face_boundary_cycles(g, rot)) {
        std::set<VertexId> on(c.vertex_order.begin(), c.vertex_order.end());
        std::set<Side> sides;
        for (VertexId v : g.vertices())
            if (!on.count(v)) sides.insert(so.vertex_side(c, v));
        CHECK(sides.size() == 1);
    }
}

TEST_CASE("no edge joins the two strict sides of a cycle") {
    for (Multigraph g : {fixtures::k4(), fixtures::prism(), fixtures::cube()}) {
        RotationSystem rot = planar_embed(g);
        SideOracle so(g, rot);
        for (const Cycle& c : face_boundary_cycles(g, rot)) {
            for (const EdgeRec& e : g.edges()) {
                if (c.edges.contains(e.id)) continue;
                Side su = so.vertex_side(c, e.u), sv = so.vertex_side(c, e.v);
                if (su == Side::OnCycle || sv == Side::OnCycle) continue;
                CHECK(su == sv);
            }
        }
    }
}

TEST_CASE("side labels are stable across queries") {
    Multigraph g = fixtures::prism();
    RotationSystem rot = planar_embed(g);
    SideOracle so(g, rot);
    Cycle c = face_boundary_cycles(g, rot).front();
    for (VertexId v : g.vertices()) CHECK(so.vertex_side(c, v) == so.vertex_side(c, v));
}
