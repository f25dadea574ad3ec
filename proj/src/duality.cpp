#include "nestgen/duality.hpp"

#include <algorithm>
#include <queue>

namespace nestgen {

DualPair build_dual(const Multigraph& g, const RotationSystem& rot) {
    if (components(g).size() != 1) throw input_error("dual construction requires a connected graph");
    DualPair dp;
    dp.primal = g;
    dp.primal_rotation = rot;
    dp.faces = trace_faces(g, rot);
    std::map<EdgeId, std::vector<int>> at_faces;
    for (int fi = 0; fi < static_cast<int>(dp.faces.size()); ++fi)
        for (Dart d : dp.faces[fi].orbit) at_faces[g.edges()[d / 2].id].push_back(fi);
    std::vector<VertexId> dverts;
    for (int fi = 0; fi < static_cast<int>(dp.faces.size()); ++fi) dverts.push_back(fi);
    std::vector<EdgeRec> dedges;
    for (const EdgeRec& e : g.edges()) {
        const auto& fs = at_faces.at(e.id);
        if (fs.size() != 2) throw invariant_error("edge does not appear on exactly two face slots");
        dedges.push_back({e.id, fs[0], fs[1]});  // equal slots -> dual loop
    }
    dp.dual = Multigraph::build(std::move(dverts), std::move(dedges));
    // degree of each dual vertex = face orbit length
    for (int fi = 0; fi < static_cast<int>(dp.faces.size()); ++fi)
        if (dp.dual.degree(fi) != static_cast<int>(dp.faces[fi].orbit.size()))
            throw invariant_error("dual degree does not match face orbit length");
    return dp;
}

EdgeSet image_of(const DualPair& dp, const EdgeSet& f, Direction dir) {
    const Multigraph& src = (dir == Direction::PrimalToDual) ? dp.primal : dp.dual;
    const Multigraph& dst = (dir == Direction::PrimalToDual) ? dp.dual : dp.primal;
    if (f.host_key != src.key()) throw input_error("edge set is not over the expected side of the dual pair");
    EdgeSet r{dst.key(), {}};
    for (EdgeId e : f.ids) {
        if (!dst.has_edge(e)) throw invariant_error("dual edge bijection lost an edge");
        r.ids.insert(e);
    }
    return r;
}

std::optional<Cut> tight_cut_bipartition(const Multigraph& g, const EdgeSet& b) {
    // components of G - B, over all vertices
    std::map<VertexId, int> comp;
    int nc = 0;
    for (VertexId s : g.vertices()) {
        if (comp.count(s)) continue;
        int c = nc++;
        std::queue<VertexId> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                if (b.contains(e)) continue;
                const EdgeRec& r = g.edge(e);
                VertexId w = (r.u == v) ? r.v : r.u;
                if (!comp.count(w)) {
                    comp[w] = c;
                    q.push(w);
                }
            }
        }
    }
    if (nc != 2) return std::nullopt;
    std::set<VertexId> x;
    for (auto& [v, c] : comp)
        if (c == 0) x.insert(v);
    Cut cut = make_cut(g, x);
    if (cut.edges.ids != b.ids) return std::nullopt;  // extra interior edges in b
    return cut;
}

bool is_tight_cut(const Multigraph& g, const EdgeSet& b) {
    return tight_cut_bipartition(g, b).has_value();
}

bool check_condition2(const DualPair& dp, const EdgeSet& f) {
    bool circuit = is_circuit(dp.primal, f);
    EdgeSet img = image_of(dp, f, Direction::PrimalToDual);
    bool tight = !img.empty() && is_tight_cut(dp.dual, img);
    return circuit == tight;
}

DualityReport verify_duality_exhaustive(const DualPair& dp, int edge_budget) {
    int m = dp.primal.edge_count();
    if (m > edge_budget)
        throw budget_error("exhaustive duality check refused: " + std::to_string(m) +
                           " edges exceed budget " + std::to_string(edge_budget));
    DualityReport rep;
    const auto& edges = dp.primal.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        EdgeSet f{dp.primal.key(), {}};
        for (int i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) f.ids.insert(edges[i].id);
        ++rep.subsets_checked;
        bool circuit = is_circuit(dp.primal, f);
        EdgeSet img = image_of(dp, f, Direction::PrimalToDual);
        bool tight = !img.empty() && is_tight_cut(dp.dual, img);
        if (circuit) ++rep.circuits;
        if (tight) ++rep.tight_cuts;
        if (circuit != tight) rep.violations.push_back(f);
    }
    return rep;
}

} // namespace nestgen
