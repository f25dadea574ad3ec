#ifndef NESTGEN_EMBEDDING_HPP
#define NESTGEN_EMBEDDING_HPP

#include <memory>
#include <vector>

#include "nestgen/graph.hpp"

namespace nestgen {

// Half-edge: dart = 2 * edge_index + end. The two darts of an edge are
// reversals of each other; both darts of a loop sit at its single vertex.
using Dart = int;

inline Dart dart_reverse(Dart d) { return d ^ 1; }

class RotationSystem {
public:
    RotationSystem() = default;

    // order[vertex_index] lists the darts at that vertex in cyclic order.
    static RotationSystem build(const Multigraph& g, std::vector<std::vector<Dart>> order);

    std::uint64_t host_key() const { return host_key_; }
    const std::vector<std::vector<Dart>>& order() const { return order_; }

    VertexId dart_vertex(const Multigraph& g, Dart d) const;
    Dart next_around_vertex(Dart d) const;

    // Successor in the face-tracing permutation: rotation successor of the
    // reversal.
    Dart face_next(Dart d) const { return next_around_vertex(dart_reverse(d)); }

private:
    std::uint64_t host_key_ = 0;
    std::vector<std::vector<Dart>> order_;
    std::vector<std::pair<int, int>> pos_;  // dart -> (vertex_index, position)
};

struct Face {
    std::vector<Dart> orbit;
    EdgeSet boundary;
};

// Genus-0 rotation system for g, deterministic for identical inputs.
// Disconnected hosts are embedded component by component. Throws
// nonplanar_error when no such rotation system exists.
RotationSystem planar_embed(const Multigraph& g);

std::vector<Face> trace_faces(const Multigraph& g, const RotationSystem& rot);

// n - m + f == 2 on every connected component (isolated vertices count one
// face each).
bool genus0_certificate(const Multigraph& g, const RotationSystem& rot);

// Requires every face orbit to visit each vertex and edge at most once.
std::vector<Cycle> face_boundary_cycles(const Multigraph& g, const RotationSystem& rot);

enum class Side { OnCycle, A, B };

// Answers which side of an embedded cycle a vertex lies on, by splitting the
// geometric dual along the cycle's dual edges. Build once per (g, rot) and
// reuse across queries.
class SideOracle {
public:
    SideOracle(const Multigraph& g, const RotationSystem& rot);
    ~SideOracle();
    SideOracle(SideOracle&&) noexcept;

    Side vertex_side(const Cycle& c, VertexId v) const;

    const Multigraph& graph() const;
    const RotationSystem& rotation() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Side vertex_side(const Multigraph& g, const RotationSystem& rot, const Cycle& c, VertexId v);

} // namespace nestgen

#endif
