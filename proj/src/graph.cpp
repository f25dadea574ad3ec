#include "nestgen/graph.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <sstream>

namespace nestgen {

namespace {
std::atomic<std::uint64_t> g_next_key{1};
}

Multigraph Multigraph::build(std::vector<VertexId> vertices, std::vector<EdgeRec> edges) {
    Multigraph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (vertices[i] == vertices[i + 1]) {
            std::ostringstream os;
            os << "duplicate vertex identifier " << vertices[i];
            throw input_error(os.str());
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
    g.vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i)
        g.vindex_[g.vertices_[i]] = static_cast<int>(i);
    g.incidence_.resize(g.vertices_.size());
    g.degree_.assign(g.vertices_.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeRec& e = edges[i];
        if (i > 0 && edges[i - 1].id == e.id) {
            std::ostringstream os;
            os << "duplicate edge identifier " << e.id;
            throw input_error(os.str());
        }
        for (VertexId w : {e.u, e.v}) {
            if (!g.vindex_.count(w)) {
                std::ostringstream os;
                os << "dangling endpoint: edge " << e.id << " refers to undeclared vertex " << w;
                throw input_error(os.str());
            }
        }
        g.eindex_[e.id] = static_cast<int>(i);
        int ui = g.vindex_[e.u], vi = g.vindex_[e.v];
        g.incidence_[ui].push_back(e.id);
        if (vi != ui) g.incidence_[vi].push_back(e.id);
        g.degree_[ui] += (ui == vi) ? 2 : 1;
        if (vi != ui) g.degree_[vi] += 1;
    }
    g.edges_ = std::move(edges);
    g.key_ = g_next_key.fetch_add(1);
    return g;
}

const EdgeRec& Multigraph::edge(EdgeId e) const {
    auto it = eindex_.find(e);
    if (it == eindex_.end()) throw input_error("unknown edge identifier " + std::to_string(e));
    return edges_[it->second];
}

int Multigraph::vertex_index(VertexId v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw input_error("unknown vertex identifier " + std::to_string(v));
    return it->second;
}

int Multigraph::edge_index(EdgeId e) const {
    auto it = eindex_.find(e);
    if (it == eindex_.end()) throw input_error("unknown edge identifier " + std::to_string(e));
    return it->second;
}

const std::vector<EdgeId>& Multigraph::incident(VertexId v) const {
    return incidence_[vertex_index(v)];
}

int Multigraph::degree(VertexId v) const { return degree_[vertex_index(v)]; }

EdgeSet make_edgeset(const Multigraph& g, const std::set<EdgeId>& ids) {
    for (EdgeId e : ids)
        if (!g.has_edge(e))
            throw input_error("edge set member " + std::to_string(e) + " not in host graph");
    return EdgeSet{g.key(), ids};
}

EdgeSet make_edgeset(const Multigraph& g, std::initializer_list<EdgeId> ids) {
    return make_edgeset(g, std::set<EdgeId>(ids));
}

EdgeSet edgeset_sum(const EdgeSet& a, const EdgeSet& b) {
    if (a.host_key != b.host_key)
        throw input_error("edge set sum across different host graphs");
    EdgeSet r{a.host_key, {}};
    std::set_symmetric_difference(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(),
                                  std::inserter(r.ids, r.ids.begin()));
    return r;
}

std::set<VertexId> incident_vertices(const Multigraph& g, const EdgeSet& f) {
    std::set<VertexId> w;
    for (EdgeId e : f.ids) {
        const EdgeRec& r = g.edge(e);
        w.insert(r.u);
        w.insert(r.v);
    }
    return w;
}

namespace {
void check_host(const Multigraph& g, const EdgeSet& f) {
    if (f.host_key != g.key() && !f.ids.empty()) {
        // Tolerate key mismatch only when all members resolve in g; edge sets
        // are routinely transported between a graph and its extension.
        for (EdgeId e : f.ids)
            if (!g.has_edge(e)) throw input_error("edge set does not belong to this host graph");
    }
}
} // namespace

bool is_circuit(const Multigraph& g, const EdgeSet& f) {
    check_host(g, f);
    if (f.empty()) return false;
    std::map<VertexId, int> deg;
    for (EdgeId e : f.ids) {
        const EdgeRec& r = g.edge(e);
        deg[r.u] += (r.u == r.v) ? 2 : 1;
        if (r.u != r.v) deg[r.v] += 1;
    }
    for (auto& [v, d] : deg)
        if (d != 2) return false;
    // connectivity of the incident subgraph
    std::map<VertexId, std::vector<EdgeId>> adj;
    for (EdgeId e : f.ids) {
        const EdgeRec& r = g.edge(e);
        adj[r.u].push_back(e);
        if (r.v != r.u) adj[r.v].push_back(e);
    }
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(deg.begin()->first);
    seen.insert(deg.begin()->first);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : adj[v]) {
            const EdgeRec& r = g.edge(e);
            VertexId w = (r.u == v) ? r.v : r.u;
            if (seen.insert(w).second) q.push(w);
        }
    }
    return seen.size() == deg.size();
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (EdgeId e : g.incident(v)) {
                const EdgeRec& r = g.edge(e);
                VertexId w = (r.u == v) ? r.v : r.u;
                if (seen.insert(w).second) q.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int cycle_space_dimension(const Multigraph& g) {
    return g.edge_count() - g.vertex_count() + static_cast<int>(components(g).size());
}

Cycle make_cycle(const Multigraph& g, const EdgeSet& f) {
    if (!is_circuit(g, f)) throw input_error("edge set is not a circuit");
    Cycle c;
    c.edges = f;
    // Walk the circuit starting from its smallest incident vertex.
    std::set<VertexId> verts = incident_vertices(g, f);
    VertexId start = *verts.begin();
    if (f.size() == 1) {  // loop
        c.vertex_order = {start};
        return c;
    }
    std::set<EdgeId> used;
    VertexId cur = start;
    while (true) {
        c.vertex_order.push_back(cur);
        EdgeId next = -1;
        for (EdgeId e : g.incident(cur)) {
            if (!f.contains(e) || used.count(e)) continue;
            next = e;
            break;
        }
        if (next == -1) break;
        used.insert(next);
        const EdgeRec& r = g.edge(next);
        cur = (r.u == cur) ? r.v : r.u;
        if (cur == start) break;
    }
    if (used.size() != f.ids.size() || c.vertex_order.size() != verts.size())
        throw invariant_error("circuit walk did not close");
    return c;
}

Cut make_cut(const Multigraph& g, const std::set<VertexId>& x) {
    Cut c;
    for (VertexId v : x)
        if (!g.has_vertex(v)) throw input_error("cut side contains unknown vertex");
    c.side_x = x;
    for (VertexId v : g.vertices())
        if (!x.count(v)) c.side_y.insert(v);
    if (c.side_x.empty() || c.side_y.empty())
        throw input_error("cut sides must both be nonempty");
    c.edges.host_key = g.key();
    for (const EdgeRec& e : g.edges()) {
        bool uin = x.count(e.u) != 0, vin = x.count(e.v) != 0;
        if (uin != vin) c.edges.ids.insert(e.id);
    }
    return c;
}

} // namespace nestgen
