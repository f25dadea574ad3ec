#ifndef NESTGEN_ORACLE_HPP
#define NESTGEN_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "nestgen/embedding.hpp"
#include "nestgen/graph.hpp"

namespace nestgen {

struct OracleBudget {
    long long max_nodes = 1 << 20;      // search tree nodes for enumerations
    int max_auto_vertices = 12;         // brute-force automorphism limit
    long long max_group_order = 1 << 20;
    long long max_rotation_systems = 1 << 20;
};

// A multigraph automorphism: vertex permutation plus a compatible edge
// bijection. Elements differing only on a parallel class are distinct.
struct Automorphism {
    std::map<VertexId, VertexId> vmap;
    std::map<EdgeId, EdgeId> emap;

    auto operator<=>(const Automorphism&) const = default;
};

struct AutomorphismGroup {
    std::vector<Automorphism> elements;

    int order() const { return static_cast<int>(elements.size()); }
};

AutomorphismGroup automorphism_group(const Multigraph& g, const OracleBudget& budget = {});

// All circuits of g, each once, optionally length-bounded. Throws
// budget_error instead of sampling.
std::vector<EdgeSet> enumerate_circuits(const Multigraph& g,
                                        std::optional<int> max_length = std::nullopt,
                                        const OracleBudget& budget = {});

int gf2_rank(const Multigraph& g, const std::vector<EdgeSet>& vectors);

// Certificate subset (indices into vectors) whose sum equals target, or
// nullopt when target is outside the span.
std::optional<std::vector<int>> in_span(const Multigraph& g, const std::vector<EdgeSet>& vectors,
                                        const EdgeSet& target);

// Is the family, as a set of edge sets, mapped onto itself by every element?
bool orbit_closed(const std::vector<EdgeSet>& family, const AutomorphismGroup& aut);

// True iff every automorphism maps the set of face-boundary edge sets of the
// embedding onto itself.
bool facial_invariance_check(const Multigraph& g, const RotationSystem& rot,
                             const AutomorphismGroup& autos);

// Pipeline output reduced to a label-independent signature: added edges as
// endpoint pairs and generators as sets of edge tokens. A token is either
// (false, id, 0) for an input edge or (true, u, v) for an added edge.
struct EdgeToken {
    bool added = false;
    int a = 0, b = 0;
    auto operator<=>(const EdgeToken&) const = default;
};

struct PipelineSignature {
    std::set<std::pair<VertexId, VertexId>> added;
    std::set<std::set<EdgeToken>> generators;
    bool operator==(const PipelineSignature&) const = default;
};

using PipelineFn = std::function<PipelineSignature(const Multigraph&)>;

struct CanonicityResult {
    bool ok = true;
    int failing_trial = -1;
    std::map<VertexId, VertexId> failing_relabeling;
};

// Runs the pipeline on `trials` random relabelings of g and compares the
// outputs through the relabeling maps.
CanonicityResult canonicity_probe(const Multigraph& g, const PipelineFn& pipeline, int trials,
                                  std::uint64_t seed = 1);

struct AuditCrossing {
    int rotation_index = 0;
    EdgeSet first, second;  // a crossing pair from a spanning orbit union
};

struct AuditResult {
    bool possible = false;
    int planar_rotations = 0;
    int total_rotations = 0;
    int orbit_count = 0;
    // when possible: one witness family and the rotation it is nested in
    std::vector<EdgeSet> family;
    std::optional<RotationSystem> rotation;
    // when impossible: one crossing witness per planar rotation system
    std::vector<AuditCrossing> witnesses;
};

// Enumerates all rotation systems of g, keeps the genus-0 ones, and searches
// the unions of circuit orbits under Aut(g) for a family that is nested in
// the embedding and spans the cycle space.
AuditResult counterexample_audit(const Multigraph& g, const OracleBudget& budget = {});

} // namespace nestgen

#endif
