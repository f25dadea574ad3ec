#include "nestgen/generator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nestgen/duality.hpp"
#include "nestgen/nestedness.hpp"

namespace nestgen {

std::string to_string(GenKind k) {
    switch (k) {
        case GenKind::FaceBoundary: return "face_boundary";
        case GenKind::PartCycle: return "part_cycle";
        case GenKind::Digon: return "digon";
        case GenKind::Loop: return "loop";
    }
    return "?";
}

GeneratingSet generate_3connected(const Multigraph& g) {
    if (!is_three_connected(g)) {
        std::ostringstream os;
        os << "graph is not 3-connected";
        if (auto sep = separator_of_size_at_most(g, 2)) {
            os << ": separator {";
            for (std::size_t i = 0; i < sep->size(); ++i) os << (i ? "," : "") << (*sep)[i];
            os << "}";
        }
        throw input_error(os.str());
    }
    GeneratingSet gs;
    gs.host = g;
    gs.rotation = planar_embed(g);
    gs.cycles = face_boundary_cycles(g, gs.rotation);
    gs.provenance.assign(gs.cycles.size(), Provenance{0, 0, GenKind::FaceBoundary});
    int expected = 2 - g.vertex_count() + g.edge_count();
    if (static_cast<int>(gs.cycles.size()) != expected)
        throw invariant_error("face count disagrees with the Euler formula");
    return gs;
}

bool dual_route_equivalence(const Multigraph& g) {
    RotationSystem rot = planar_embed(g);
    DualPair dp = build_dual(g, rot);
    std::set<std::set<EdgeId>> face_sets;
    for (const Face& f : dp.faces) face_sets.insert(f.boundary.ids);
    std::set<std::set<EdgeId>> star_sets;
    std::vector<Cut> star_cuts;
    for (VertexId f : dp.dual.vertices()) {
        EdgeSet star{dp.dual.key(), {}};
        for (EdgeId e : dp.dual.incident(f)) {
            const EdgeRec& r = dp.dual.edge(e);
            if (r.u != r.v) star.ids.insert(e);
        }
        auto cut = tight_cut_bipartition(dp.dual, star);
        if (!cut) return false;  // a vertex star must be a tight cut
        star_cuts.push_back(*cut);
        star_sets.insert(star.ids);  // dual edge ids equal primal edge ids
    }
    for (std::size_t i = 0; i < star_cuts.size(); ++i)
        for (std::size_t j = i + 1; j < star_cuts.size(); ++j)
            if (!cuts_nested(star_cuts[i], star_cuts[j])) return false;
    return face_sets == star_sets;
}

std::vector<Cycle> filtrate(const GeneratingSet& d, int n) {
    std::vector<Cycle> out;
    for (const Cycle& c : d.cycles)
        if (c.length() <= n) out.push_back(c);
    return out;
}

GradedResult graded_check(const Multigraph& g, const GeneratingSet& d, int n,
                          const OracleBudget& budget) {
    GradedResult res;
    std::vector<EdgeSet> fam;
    for (const Cycle& c : filtrate(d, n)) fam.push_back(c.edges);
    for (const EdgeSet& circuit : enumerate_circuits(g, n, budget)) {
        if (!in_span(g, fam, circuit)) {
            res.holds = false;
            res.counterexample = circuit;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// the 4.2/4.3 pipeline

namespace {

// expands slot lists (one candidate edge chosen per slot) into edge sets
void expand_slots(const std::vector<std::vector<EdgeId>>& slots, std::size_t at,
                  std::set<EdgeId>& current, std::vector<std::set<EdgeId>>& out) {
    if (at == slots.size()) {
        out.push_back(current);
        return;
    }
    for (EdgeId e : slots[at]) {
        current.insert(e);
        expand_slots(slots, at + 1, current, out);
        current.erase(e);
    }
}

struct RawGenerator {
    std::set<EdgeId> edges;
    Provenance prov;
};

// Generators of one 2-connected block, as edge-id sets over the completed
// block. Fresh edge ids are taken from next_id.
void generate_block(const Multigraph& block, int block_index, EdgeId& next_id,
                    std::vector<EdgeRec>& added_out, std::vector<RawGenerator>& gens_out,
                    TreeDecomposition& td_out) {
    TreeDecomposition td = tutte_decomposition(block);
    Completion comp = complete_adhesions(block, td, next_id);
    next_id += static_cast<EdgeId>(comp.added.size());
    for (const EdgeRec& e : comp.added) added_out.push_back(e);
    const Multigraph& bp = comp.g_prime;

    // all real edges of the completed block between an unordered vertex pair
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundle;
    for (const EdgeRec& e : bp.edges()) {
        auto pr = std::minmax(e.u, e.v);
        bundle[{pr.first, pr.second}].push_back(e.id);
    }

    for (int t = 0; t < static_cast<int>(td.nodes.size()); ++t) {
        const auto& node = td.nodes[t];
        auto pairs = td.adhesion_pairs_at(t);
        switch (node.kind) {
            case PartKind::EdgePart:
                break;
            case PartKind::BondPart: {
                auto pr = std::minmax(node.bag[0], node.bag[1]);
                const auto& cls = bundle.at({pr.first, pr.second});
                for (std::size_t i = 0; i < cls.size(); ++i)
                    for (std::size_t j = i + 1; j < cls.size(); ++j)
                        gens_out.push_back({{cls[i], cls[j]}, {block_index, t, GenKind::Digon}});
                break;
            }
            case PartKind::CyclePart: {
                if (node.bag.size() == 2) {  // sole-node digon
                    gens_out.push_back({{node.real_edges.begin(), node.real_edges.end()},
                                        {block_index, t, GenKind::PartCycle}});
                    break;
                }
                std::vector<std::vector<EdgeId>> slots;
                for (EdgeId e : node.real_edges) slots.push_back({e});
                for (auto [x, y] : pairs) slots.push_back(bundle.at(std::minmax(x, y)));
                std::vector<std::set<EdgeId>> expanded;
                std::set<EdgeId> cur;
                expand_slots(slots, 0, cur, expanded);
                for (auto& es : expanded)
                    gens_out.push_back({std::move(es), {block_index, t, GenKind::PartCycle}});
                break;
            }
            case PartKind::ThreeConnectedPart: {
                // faces of the torso, with each virtual edge re-expanded over
                // the real edges of its adhesion pair
                std::vector<EdgeRec> tedges;
                std::map<EdgeId, std::pair<VertexId, VertexId>> virt;
                for (EdgeId e : node.real_edges) tedges.push_back(bp.edge(e));
                EdgeId vnext = -1;
                for (auto [x, y] : pairs) {
                    tedges.push_back({vnext, x, y});
                    virt[vnext] = std::minmax(x, y);
                    --vnext;
                }
                Multigraph torso_graph = Multigraph::build(node.bag, std::move(tedges));
                RotationSystem trot = planar_embed(torso_graph);
                for (const Cycle& face : face_boundary_cycles(torso_graph, trot)) {
                    std::vector<std::vector<EdgeId>> slots;
                    for (EdgeId e : face.edges.ids) {
                        auto it = virt.find(e);
                        if (it == virt.end())
                            slots.push_back({e});
                        else
                            slots.push_back(bundle.at(it->second));
                    }
                    std::vector<std::set<EdgeId>> expanded;
                    std::set<EdgeId> cur;
                    expand_slots(slots, 0, cur, expanded);
                    for (auto& es : expanded)
                        gens_out.push_back({std::move(es), {block_index, t, GenKind::FaceBoundary}});
                }
                break;
            }
        }
    }
    td_out = std::move(td);
}

} // namespace

FullResult generate_full(const Multigraph& g, bool strict) {
    planar_embed(g);  // fail fast on nonplanar input
    FullResult res;
    res.blocks = block_decomposition(g);

    EdgeId next_id = 0;
    for (const EdgeRec& e : g.edges()) next_id = std::max(next_id, e.id);
    ++next_id;

    std::vector<RawGenerator> raw;
    for (int bi = 0; bi < static_cast<int>(res.blocks.blocks.size()); ++bi) {
        const auto& blk = res.blocks.blocks[bi];
        switch (blk.kind) {
            case BlockDecomposition::BlockKind::Loop:
                raw.push_back({{blk.graph.edges().front().id}, {bi, 0, GenKind::Loop}});
                break;
            case BlockDecomposition::BlockKind::Bridge:
                break;
            case BlockDecomposition::BlockKind::TwoConnected: {
                TreeDecomposition td;
                generate_block(blk.graph, bi, next_id, res.added_edges, raw, td);
                res.block_tds.push_back({bi, std::move(td)});
                break;
            }
        }
    }
    if (strict && !res.added_edges.empty())
        throw input_error("strict mode: input requires adhesion extension (" +
                          std::to_string(res.added_edges.size()) + " missing adhesion edges)");

    std::vector<EdgeRec> edges = g.edges();
    for (const EdgeRec& e : res.added_edges) edges.push_back(e);
    res.g_prime = Multigraph::build(g.vertices(), std::move(edges));

    res.gens.host = res.g_prime;
    res.gens.rotation = planar_embed(res.g_prime);
    for (const RawGenerator& rg : raw) {
        EdgeSet es = make_edgeset(res.g_prime, rg.edges);
        if (!is_circuit(res.g_prime, es))
            throw invariant_error("generated edge set is not a circuit");
        res.gens.cycles.push_back(make_cycle(res.g_prime, es));
        res.gens.provenance.push_back(rg.prov);
    }
    return res;
}

FullResult generate_2connected(const Multigraph& b) {
    if (!is_two_connected(b)) throw input_error("generate_2connected requires a 2-connected graph");
    return generate_full(b);
}

std::optional<std::vector<int>> express_cycle(const GeneratingSet& d, const Cycle& c) {
    std::vector<EdgeSet> vecs;
    for (const Cycle& gc : d.cycles) vecs.push_back(gc.edges);
    auto cert = in_span(d.host, vecs, c.edges);
    if (!cert) return std::nullopt;
    EdgeSet sum{d.host.key(), {}};
    for (int i : *cert) sum = edgeset_sum(sum, vecs[i]);
    if (sum.ids != c.edges.ids) throw invariant_error("span certificate failed its round trip");
    return cert;
}

std::pair<Cycle, Cycle> split_at_adhesion(const Multigraph& g, const Cycle& c, VertexId x,
                                          VertexId y, EdgeId e_xy) {
    std::set<VertexId> on = incident_vertices(g, c.edges);
    if (!on.count(x) || !on.count(y))
        throw input_error("adhesion vertices must both lie on the cycle");
    const EdgeRec& e = g.edge(e_xy);
    auto want = std::minmax(x, y);
    if (std::minmax(e.u, e.v) != want) throw input_error("edge does not join the adhesion pair");
    if (c.edges.contains(e_xy)) throw input_error("splitting edge already lies on the cycle");

    // walk one arc of the circuit from x to y
    std::set<EdgeId> arc1;
    VertexId cur = x;
    EdgeId via = -1;
    while (cur != y) {
        EdgeId step = -1;
        for (EdgeId eid : g.incident(cur)) {
            if (!c.edges.contains(eid) || eid == via || arc1.count(eid)) continue;
            step = eid;
            break;
        }
        if (step == -1) throw invariant_error("circuit walk stalled");
        arc1.insert(step);
        const EdgeRec& r = g.edge(step);
        cur = (r.u == cur) ? r.v : r.u;
        via = step;
    }
    std::set<EdgeId> arc2;
    for (EdgeId eid : c.edges.ids)
        if (!arc1.count(eid)) arc2.insert(eid);
    arc1.insert(e_xy);
    arc2.insert(e_xy);
    Cycle c1 = make_cycle(g, make_edgeset(g, arc1));
    Cycle c2 = make_cycle(g, make_edgeset(g, arc2));
    if (edgeset_sum(c1.edges, c2.edges).ids != c.edges.ids)
        throw invariant_error("adhesion split does not sum back to the cycle");
    return {c1, c2};
}

// ---------------------------------------------------------------------------
// signatures for canonicity probing

namespace {
PipelineSignature signature_of(const FullResult& fr) {
    PipelineSignature sig;
    std::map<EdgeId, std::pair<VertexId, VertexId>> added;
    for (const EdgeRec& e : fr.added_edges) {
        auto pr = std::minmax(e.u, e.v);
        added[e.id] = {pr.first, pr.second};
        sig.added.insert({pr.first, pr.second});
    }
    for (const Cycle& c : fr.gens.cycles) {
        std::set<EdgeToken> toks;
        for (EdgeId e : c.edges.ids) {
            auto it = added.find(e);
            if (it == added.end())
                toks.insert({false, e, 0});
            else
                toks.insert({true, it->second.first, it->second.second});
        }
        sig.generators.insert(std::move(toks));
    }
    return sig;
}
} // namespace

PipelineSignature full_pipeline_signature(const Multigraph& g) {
    return signature_of(generate_full(g));
}

PipelineSignature faces_pipeline_signature(const Multigraph& g) {
    GeneratingSet gs = generate_3connected(g);
    PipelineSignature sig;
    for (const Cycle& c : gs.cycles) {
        std::set<EdgeToken> toks;
        for (EdgeId e : c.edges.ids) toks.insert({false, e, 0});
        sig.generators.insert(std::move(toks));
    }
    return sig;
}

} // namespace nestgen
