#ifndef NESTGEN_GRAPH_HPP
#define NESTGEN_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <vector>

#include "nestgen/errors.hpp"

namespace nestgen {

using VertexId = int;
using EdgeId = int;

// One edge of a multigraph. Endpoints may coincide (loop); several edges may
// share the same endpoint pair (parallel edges). Identity is the id.
struct EdgeRec {
    EdgeId id;
    VertexId u, v;
};

// Finite multigraph. Immutable after build(); copies share the host key so
// edge sets taken from one copy are valid on another.
class Multigraph {
public:
    Multigraph() = default;

    static Multigraph build(std::vector<VertexId> vertices, std::vector<EdgeRec> edges);

    std::uint64_t key() const { return key_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const { return vindex_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return eindex_.count(e) != 0; }

    const EdgeRec& edge(EdgeId e) const;
    int vertex_index(VertexId v) const;
    int edge_index(EdgeId e) const;

    // Incident edge ids (a loop appears once here but counts 2 to degree).
    const std::vector<EdgeId>& incident(VertexId v) const;
    int degree(VertexId v) const;

private:
    std::uint64_t key_ = 0;
    std::vector<VertexId> vertices_;     // sorted
    std::vector<EdgeRec> edges_;         // sorted by id
    std::map<VertexId, int> vindex_;
    std::map<EdgeId, int> eindex_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<int> degree_;
};

// GF(2) vector over the edge identifiers of one host graph.
struct EdgeSet {
    std::uint64_t host_key = 0;
    std::set<EdgeId> ids;

    bool empty() const { return ids.empty(); }
    int size() const { return static_cast<int>(ids.size()); }
    bool contains(EdgeId e) const { return ids.count(e) != 0; }
    auto operator<=>(const EdgeSet&) const = default;
};

EdgeSet make_edgeset(const Multigraph& g, const std::set<EdgeId>& ids);
EdgeSet make_edgeset(const Multigraph& g, std::initializer_list<EdgeId> ids);

// Symmetric difference. Hosts must match.
EdgeSet edgeset_sum(const EdgeSet& a, const EdgeSet& b);

// Vertices incident to at least one edge of f.
std::set<VertexId> incident_vertices(const Multigraph& g, const EdgeSet& f);

// True iff f is nonempty, its incident subgraph is connected, and every
// incident vertex has degree exactly 2 within f (a loop contributes 2).
bool is_circuit(const Multigraph& g, const EdgeSet& f);

std::vector<std::vector<VertexId>> components(const Multigraph& g);

// m - n + c (cyclomatic number).
int cycle_space_dimension(const Multigraph& g);

// A circuit together with the cyclic vertex order realizing it.
// Length 1 = loop, length 2 = digon.
struct Cycle {
    EdgeSet edges;
    std::vector<VertexId> vertex_order;

    int length() const { return edges.size(); }
};

// Derives the vertex order from a circuit edge set; rejects non-circuits.
Cycle make_cycle(const Multigraph& g, const EdgeSet& f);

// Edge cut induced by a vertex bipartition {X, Y}.
struct Cut {
    std::set<VertexId> side_x, side_y;
    EdgeSet edges;
};

Cut make_cut(const Multigraph& g, const std::set<VertexId>& x);

} // namespace nestgen

#endif
