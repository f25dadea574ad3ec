#ifndef NESTGEN_DUALITY_HPP
#define NESTGEN_DUALITY_HPP

#include <optional>
#include <vector>

#include "nestgen/embedding.hpp"
#include "nestgen/graph.hpp"

namespace nestgen {

// Geometric dual of an embedded connected graph. Dual vertices are face
// indices 0..f-1; each dual edge keeps the id of its primal edge, so the
// edge bijection * is identity on identifiers.
struct DualPair {
    Multigraph primal;
    RotationSystem primal_rotation;
    std::vector<Face> faces;
    Multigraph dual;
};

DualPair build_dual(const Multigraph& g, const RotationSystem& rot);

enum class Direction { PrimalToDual, DualToPrimal };

EdgeSet image_of(const DualPair& dp, const EdgeSet& f, Direction dir);

// True iff deleting b (keeping vertices) leaves exactly two components and b
// is the full edge boundary between them.
bool is_tight_cut(const Multigraph& g, const EdgeSet& b);

// The bipartition realizing a tight cut, or nullopt when b is not tight.
std::optional<Cut> tight_cut_bipartition(const Multigraph& g, const EdgeSet& b);

// Condition relating circuits of the primal to tight nonempty cuts of the
// dual, evaluated for one edge set.
bool check_condition2(const DualPair& dp, const EdgeSet& f);

struct DualityReport {
    long long subsets_checked = 0;
    int circuits = 0;
    int tight_cuts = 0;
    std::vector<EdgeSet> violations;

    bool ok() const { return violations.empty(); }
};

// Enumerates every edge subset of the primal and reports violations of the
// circuit <-> tight-cut correspondence. Refuses beyond the edge budget.
DualityReport verify_duality_exhaustive(const DualPair& dp, int edge_budget = 16);

} // namespace nestgen

#endif
