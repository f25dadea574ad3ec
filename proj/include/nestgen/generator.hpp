#ifndef NESTGEN_GENERATOR_HPP
#define NESTGEN_GENERATOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nestgen/decomposition.hpp"
#include "nestgen/embedding.hpp"
#include "nestgen/graph.hpp"
#include "nestgen/oracle.hpp"

namespace nestgen {

enum class GenKind { FaceBoundary, PartCycle, Digon, Loop };

std::string to_string(GenKind k);

struct Provenance {
    int block = 0;
    int part = 0;
    GenKind kind = GenKind::FaceBoundary;
};

// A family of cycles of `host` (possibly an extension of the input graph)
// with provenance, plus the rotation system used for nestedness checks.
struct GeneratingSet {
    Multigraph host;
    RotationSystem rotation;
    std::vector<Cycle> cycles;
    std::vector<Provenance> provenance;
};

// Face boundaries of the embedding of a 3-connected planar graph.
GeneratingSet generate_3connected(const Multigraph& g);

// Do the preimages of the dual's vertex stars equal the face-boundary set?
bool dual_route_equivalence(const Multigraph& g);

// Subfamily of length at most n.
std::vector<Cycle> filtrate(const GeneratingSet& d, int n);

struct GradedResult {
    bool holds = true;
    std::optional<EdgeSet> counterexample;
};

// Does filtrate(d, n) generate every circuit of length at most n?
GradedResult graded_check(const Multigraph& g, const GeneratingSet& d, int n,
                          const OracleBudget& budget = {});

struct FullResult {
    Multigraph g_prime;
    std::vector<EdgeRec> added_edges;
    GeneratingSet gens;
    BlockDecomposition blocks;
    // tutte decompositions of the 2-connected blocks: (block index, td)
    std::vector<std::pair<int, TreeDecomposition>> block_tds;
};

// Decomposition-and-completion pipeline for one 2-connected graph.
FullResult generate_2connected(const Multigraph& b);

// Block-by-block pipeline for an arbitrary finite planar multigraph. With
// strict set, inputs that would require adhesion extension are refused.
FullResult generate_full(const Multigraph& g, bool strict = false);

// Subset of d.cycles (indices) whose sum is c, round-trip verified.
std::optional<std::vector<int>> express_cycle(const GeneratingSet& d, const Cycle& c);

// Splits c at an adhesion pair {x, y} through the edge e_xy: the two returned
// cycles are the x-y arcs of c each closed with e_xy, and they sum to c.
std::pair<Cycle, Cycle> split_at_adhesion(const Multigraph& g, const Cycle& c, VertexId x,
                                          VertexId y, EdgeId e_xy);

// Label-independent signatures for canonicity probing.
PipelineSignature full_pipeline_signature(const Multigraph& g);
PipelineSignature faces_pipeline_signature(const Multigraph& g);

} // namespace nestgen

#endif
