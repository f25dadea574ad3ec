#include "nestgen/embedding.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

namespace nestgen {

RotationSystem RotationSystem::build(const Multigraph& g, std::vector<std::vector<Dart>> order) {
    if (static_cast<int>(order.size()) != g.vertex_count())
        throw input_error("rotation system must list every vertex");
    RotationSystem rs;
    rs.host_key_ = g.key();
    rs.pos_.assign(2 * g.edge_count(), {-1, -1});
    for (int vi = 0; vi < static_cast<int>(order.size()); ++vi) {
        for (int p = 0; p < static_cast<int>(order[vi].size()); ++p) {
            Dart d = order[vi][p];
            if (d < 0 || d >= 2 * g.edge_count())
                throw input_error("rotation system contains an unknown dart");
            if (rs.pos_[d].first != -1)
                throw input_error("dart appears twice in rotation system");
            const EdgeRec& e = g.edges()[d / 2];
            VertexId at = (d % 2 == 0) ? e.u : e.v;
            if (g.vertex_index(at) != vi)
                throw input_error("dart listed at the wrong vertex");
            rs.pos_[d] = {vi, p};
        }
    }
    for (int d = 0; d < 2 * g.edge_count(); ++d)
        if (rs.pos_[d].first == -1) throw input_error("rotation system misses a dart");
    rs.order_ = std::move(order);
    return rs;
}

VertexId RotationSystem::dart_vertex(const Multigraph& g, Dart d) const {
    const EdgeRec& e = g.edges()[d / 2];
    return (d % 2 == 0) ? e.u : e.v;
}

Dart RotationSystem::next_around_vertex(Dart d) const {
    auto [vi, p] = pos_[d];
    const auto& cyc = order_[vi];
    return cyc[(p + 1) % cyc.size()];
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

struct Segment {
    int a, b;          // subdivided-graph vertex indices
    int orig_edge;     // index into g.edges()
    Dart dart_at_a;    // valid when a is an original vertex, else -1
    Dart dart_at_b;
};

} // namespace

RotationSystem planar_embed(const Multigraph& g) {
    const int n = g.vertex_count();
    // Subdivide loops twice and every parallel edge once so the planarity
    // test sees a simple graph; suppress the subdivision vertices afterwards.
    std::vector<Segment> segs;
    int next_vertex = n;
    std::set<std::pair<VertexId, VertexId>> seen_pairs;
    for (int i = 0; i < g.edge_count(); ++i) {
        const EdgeRec& e = g.edges()[i];
        int ui = g.vertex_index(e.u), vi = g.vertex_index(e.v);
        if (e.u == e.v) {
            int s1 = next_vertex++, s2 = next_vertex++;
            segs.push_back({ui, s1, i, 2 * i, -1});
            segs.push_back({s1, s2, i, -1, -1});
            segs.push_back({s2, ui, i, -1, 2 * i + 1});
            continue;
        }
        auto pr = std::minmax(e.u, e.v);
        std::pair<VertexId, VertexId> key{pr.first, pr.second};
        if (seen_pairs.insert(key).second) {
            segs.push_back({ui, vi, i, 2 * i, 2 * i + 1});
        } else {
            int s = next_vertex++;
            segs.push_back({ui, s, i, 2 * i, -1});
            segs.push_back({s, vi, i, -1, 2 * i + 1});
        }
    }

    BoostGraph bg(next_vertex);
    for (int si = 0; si < static_cast<int>(segs.size()); ++si)
        boost::add_edge(segs[si].a, segs[si].b, si, bg);

    using Embedding = std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
    Embedding embedding(next_vertex);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) throw nonplanar_error("graph admits no planar embedding");

    auto eidx = boost::get(boost::edge_index, bg);
    std::vector<std::vector<Dart>> order(n);
    for (int vi = 0; vi < n; ++vi) {
        for (auto ed : embedding[vi]) {
            const Segment& s = segs[eidx[ed]];
            Dart d = (s.a == vi && s.dart_at_a != -1) ? s.dart_at_a
                     : (s.b == vi && s.dart_at_b != -1) ? s.dart_at_b
                                                        : -1;
            if (d == -1) throw invariant_error("embedding segment lost its dart");
            order[vi].push_back(d);
        }
    }
    RotationSystem rot = RotationSystem::build(g, std::move(order));
    if (!genus0_certificate(g, rot))
        throw invariant_error("planar embedding failed the genus-0 certificate");
    return rot;
}

std::vector<Face> trace_faces(const Multigraph& g, const RotationSystem& rot) {
    std::vector<Face> faces;
    int nd = 2 * g.edge_count();
    std::vector<char> visited(nd, 0);
    for (Dart d0 = 0; d0 < nd; ++d0) {
        if (visited[d0]) continue;
        Face f;
        f.boundary.host_key = g.key();
        Dart d = d0;
        do {
            visited[d] = 1;
            f.orbit.push_back(d);
            f.boundary.ids.insert(g.edges()[d / 2].id);
            d = rot.face_next(d);
        } while (d != d0);
        faces.push_back(std::move(f));
    }
    return faces;
}

bool genus0_certificate(const Multigraph& g, const RotationSystem& rot) {
    auto comps = components(g);
    std::map<VertexId, int> comp_of;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (VertexId v : comps[ci]) comp_of[v] = ci;
    std::vector<int> nverts(comps.size(), 0), nedges(comps.size(), 0), nfaces(comps.size(), 0);
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        nverts[ci] = static_cast<int>(comps[ci].size());
    for (const EdgeRec& e : g.edges()) nedges[comp_of[e.u]] += 1;
    for (const Face& f : trace_faces(g, rot))
        nfaces[comp_of.at(rot.dart_vertex(g, f.orbit.front()))] += 1;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        int f = nedges[ci] == 0 ? 1 : nfaces[ci];
        if (nverts[ci] - nedges[ci] + f != 2) return false;
    }
    return true;
}

std::vector<Cycle> face_boundary_cycles(const Multigraph& g, const RotationSystem& rot) {
    std::vector<Cycle> cycles;
    for (const Face& f : trace_faces(g, rot)) {
        std::set<EdgeId> edge_seen;
        std::set<VertexId> vert_seen;
        Cycle c;
        c.edges = f.boundary;
        for (Dart d : f.orbit) {
            EdgeId e = g.edges()[d / 2].id;
            VertexId v = rot.dart_vertex(g, d);
            if (g.edge(e).u != g.edge(e).v && !edge_seen.insert(e).second)
                throw not_two_connected_error("face orbit repeats edge " + std::to_string(e));
            if (c.edges.size() > 1 && !vert_seen.insert(v).second)
                throw not_two_connected_error("face orbit repeats vertex " + std::to_string(v));
            c.vertex_order.push_back(v);
        }
        if (c.edges.size() == 1) {
            // loop face
            c.vertex_order = {g.edge(*c.edges.ids.begin()).u};
        }
        if (!is_circuit(g, c.edges))
            throw not_two_connected_error("face boundary is not a circuit");
        cycles.push_back(std::move(c));
    }
    return cycles;
}

struct SideOracle::Impl {
    const Multigraph* g;
    const RotationSystem* rot;
    std::vector<Face> faces;
    std::map<EdgeId, std::pair<int, int>> edge_faces;  // edge -> the two face ids
    std::map<VertexId, int> face_at_vertex;
    std::map<VertexId, int> comp_of_vertex;
    std::vector<int> comp_of_face;
    // component labelling of the dual split along a cycle, cached per cycle
    mutable std::map<std::set<EdgeId>, std::vector<int>> split_cache;

    const std::vector<int>& split(const Cycle& c) const {
        auto it = split_cache.find(c.edges.ids);
        if (it != split_cache.end()) return it->second;
        int pc = comp_of_vertex.at(c.vertex_order.front());
        std::vector<int> label(faces.size(), -1);
        int next = 0;
        for (int f0 = 0; f0 < static_cast<int>(faces.size()); ++f0) {
            if (comp_of_face[f0] != pc || label[f0] != -1) continue;
            int lab = next++;
            std::queue<int> q;
            q.push(f0);
            label[f0] = lab;
            while (!q.empty()) {
                int f = q.front();
                q.pop();
                for (Dart d : faces[f].orbit) {
                    EdgeId e = g->edges()[d / 2].id;
                    if (c.edges.contains(e)) continue;
                    auto [fa, fb] = edge_faces.at(e);
                    int other = (fa == f) ? fb : fa;
                    if (label[other] == -1) {
                        label[other] = lab;
                        q.push(other);
                    }
                }
            }
        }
        if (next != 2)
            throw invariant_error("dual split along a circuit yielded " + std::to_string(next) +
                                  " components instead of 2");
        return split_cache.emplace(c.edges.ids, std::move(label)).first->second;
    }
};

SideOracle::SideOracle(const Multigraph& g, const RotationSystem& rot) : impl_(new Impl) {
    impl_->g = &g;
    impl_->rot = &rot;
    impl_->faces = trace_faces(g, rot);
    auto comps = components(g);
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (VertexId v : comps[ci]) impl_->comp_of_vertex[v] = ci;
    impl_->comp_of_face.assign(impl_->faces.size(), -1);
    for (int fi = 0; fi < static_cast<int>(impl_->faces.size()); ++fi) {
        for (Dart d : impl_->faces[fi].orbit) {
            EdgeId e = g.edges()[d / 2].id;
            auto it = impl_->edge_faces.find(e);
            if (it == impl_->edge_faces.end())
                impl_->edge_faces[e] = {fi, fi};
            else if (it->second.first == it->second.second || it->second.first != fi)
                it->second.second = fi;
            VertexId v = rot.dart_vertex(g, d);
            impl_->face_at_vertex.emplace(v, fi);
        }
        impl_->comp_of_face[fi] =
            impl_->comp_of_vertex.at(rot.dart_vertex(g, impl_->faces[fi].orbit.front()));
    }
}

SideOracle::~SideOracle() = default;
SideOracle::SideOracle(SideOracle&&) noexcept = default;

const Multigraph& SideOracle::graph() const { return *impl_->g; }
const RotationSystem& SideOracle::rotation() const { return *impl_->rot; }

Side SideOracle::vertex_side(const Cycle& c, VertexId v) const {
    std::set<VertexId> on = incident_vertices(*impl_->g, c.edges);
    if (on.count(v)) return Side::OnCycle;
    auto itc = impl_->comp_of_vertex.find(v);
    if (itc == impl_->comp_of_vertex.end()) throw input_error("unknown vertex in side query");
    if (itc->second != impl_->comp_of_vertex.at(c.vertex_order.front()))
        throw input_error("vertex and cycle lie in different components");
    auto itf = impl_->face_at_vertex.find(v);
    if (itf == impl_->face_at_vertex.end())
        throw input_error("isolated vertex has no incident face");
    const std::vector<int>& label = impl_->split(c);
    return label[itf->second] == 0 ? Side::A : Side::B;
}

Side vertex_side(const Multigraph& g, const RotationSystem& rot, const Cycle& c, VertexId v) {
    SideOracle so(g, rot);
    return so.vertex_side(c, v);
}

} // namespace nestgen
