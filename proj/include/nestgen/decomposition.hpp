#ifndef NESTGEN_DECOMPOSITION_HPP
#define NESTGEN_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestgen/graph.hpp"

namespace nestgen {

struct BlockDecomposition {
    enum class BlockKind { Loop, Bridge, TwoConnected };
    struct Block {
        Multigraph graph;
        BlockKind kind;
    };
    std::vector<Block> blocks;
    std::vector<VertexId> cut_vertices;
    // block-cut tree: (block index, cut vertex) incidences
    std::vector<std::pair<int, VertexId>> tree_edges;
};

// Blocks are the maximal 2-connected subgraphs plus bridges plus loops;
// every edge lands in exactly one block.
BlockDecomposition block_decomposition(const Multigraph& g);

enum class PartKind { CyclePart, ThreeConnectedPart, BondPart, EdgePart };

std::string to_string(PartKind k);

struct TreeDecomposition {
    struct Node {
        std::vector<VertexId> bag;        // sorted
        PartKind kind;
        std::vector<EdgeId> real_edges;   // host edges assigned to this part
    };
    struct TreeEdge {
        int a, b;                          // node indices
        std::pair<VertexId, VertexId> adhesion;  // sorted pair
    };
    std::vector<Node> nodes;
    std::vector<TreeEdge> tree_edges;

    std::vector<std::pair<VertexId, VertexId>> adhesion_pairs_at(int node) const;
};

// Unique triconnected-component decomposition of a 2-connected multigraph,
// computed by repeated splitting at separation pairs followed by merging of
// adjacent same-kind components. A single edge and a digon are accepted as
// degenerate one-node cases. Rejects inputs that are not 2-connected, naming
// a separating vertex.
TreeDecomposition tutte_decomposition(const Multigraph& b);

struct Torso {
    Multigraph graph;
    std::set<EdgeId> virtual_ids;
};

// Bag-induced host edges plus one marked virtual edge per incident tree
// edge. Virtual edges duplicating a host edge inside the bag are still
// present but identifiable through virtual_ids.
Torso torso(const Multigraph& g, const TreeDecomposition& td, int node);

struct TdCheck {
    bool ok = true;
    std::string violation;  // empty when ok
};

// Verifies (T1), (T2), (T3), tree-ness, and the adhesion = bag-intersection
// property; reports the first violation with witnesses.
TdCheck check_td_axioms(const Multigraph& g, const TreeDecomposition& td);

struct Completion {
    Multigraph g_prime;
    std::vector<EdgeRec> added;
};

// Adds one edge per adhesion set that has no host edge yet; verifies the
// result is planar and that td remains valid for it.
Completion complete_adhesions(const Multigraph& g, const TreeDecomposition& td);
Completion complete_adhesions(const Multigraph& g, const TreeDecomposition& td, EdgeId first_new_id);

// Brute-force vertex connectivity probes.
bool is_connected(const Multigraph& g);
std::optional<std::vector<VertexId>> separator_of_size_at_most(const Multigraph& g, int k);
bool is_two_connected(const Multigraph& g);   // digon and single edge count as 2-connected
bool is_three_connected(const Multigraph& g); // requires >= 4 vertices

} // namespace nestgen

#endif
