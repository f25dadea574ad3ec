#include "nestgen/decomposition.hpp"

#include "nestgen/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

namespace nestgen {

// ---------------------------------------------------------------------------
// blocks

BlockDecomposition block_decomposition(const Multigraph& g) {
    BlockDecomposition bd;
    std::set<VertexId> cutset;

    // Loops are their own blocks and stay out of the DFS.
    for (const EdgeRec& e : g.edges()) {
        if (e.u != e.v) continue;
        Multigraph lg = Multigraph::build({e.u}, {e});
        bd.blocks.push_back({std::move(lg), BlockDecomposition::BlockKind::Loop});
    }

    std::map<VertexId, int> disc, low;
    int timer = 0;
    std::vector<EdgeId> estack;
    std::vector<std::vector<EdgeId>> block_edges;

    std::function<void(VertexId, EdgeId)> dfs = [&](VertexId u, EdgeId via) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (EdgeId eid : g.incident(u)) {
            const EdgeRec& e = g.edge(eid);
            if (e.u == e.v) continue;
            if (eid == via) continue;
            VertexId w = (e.u == u) ? e.v : e.u;
            if (!disc.count(w)) {
                ++children;
                estack.push_back(eid);
                dfs(w, eid);
                low[u] = std::min(low[u], low[w]);
                if ((via == -1 && children > 1) || (via != -1 && low[w] >= disc[u])) cutset.insert(u);
                if (low[w] >= disc[u]) {
                    // pop one block
                    std::vector<EdgeId> blk;
                    while (true) {
                        EdgeId top = estack.back();
                        estack.pop_back();
                        blk.push_back(top);
                        if (top == eid) break;
                    }
                    block_edges.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) {
                estack.push_back(eid);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };

    for (VertexId s : g.vertices())
        if (!disc.count(s)) dfs(s, -1);

    for (auto& blk : block_edges) {
        std::set<VertexId> verts;
        std::vector<EdgeRec> edges;
        for (EdgeId eid : blk) {
            const EdgeRec& e = g.edge(eid);
            verts.insert(e.u);
            verts.insert(e.v);
            edges.push_back(e);
        }
        auto kind = (edges.size() == 1) ? BlockDecomposition::BlockKind::Bridge
                                        : BlockDecomposition::BlockKind::TwoConnected;
        Multigraph bg =
            Multigraph::build(std::vector<VertexId>(verts.begin(), verts.end()), std::move(edges));
        bd.blocks.push_back({std::move(bg), kind});
    }

    bd.cut_vertices.assign(cutset.begin(), cutset.end());
    for (int bi = 0; bi < static_cast<int>(bd.blocks.size()); ++bi)
        for (VertexId v : bd.blocks[bi].graph.vertices())
            if (cutset.count(v)) bd.tree_edges.push_back({bi, v});
    return bd;
}

// ---------------------------------------------------------------------------
// connectivity probes

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

std::optional<std::vector<VertexId>> separator_of_size_at_most(const Multigraph& g, int k) {
    auto try_removal = [&](const std::vector<VertexId>& rem) {
        std::set<VertexId> gone(rem.begin(), rem.end());
        std::vector<VertexId> verts;
        for (VertexId v : g.vertices())
            if (!gone.count(v)) verts.push_back(v);
        if (verts.size() < 2) return false;
        std::vector<EdgeRec> edges;
        for (const EdgeRec& e : g.edges())
            if (!gone.count(e.u) && !gone.count(e.v)) edges.push_back(e);
        Multigraph h = Multigraph::build(verts, edges);
        return components(h).size() > 1;
    };
    const auto& vs = g.vertices();
    if (k >= 0 && try_removal({})) return std::vector<VertexId>{};
    if (k >= 1)
        for (VertexId a : vs)
            if (try_removal({a})) return std::vector<VertexId>{a};
    if (k >= 2)
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (try_removal({vs[i], vs[j]})) return std::vector<VertexId>{vs[i], vs[j]};
    return std::nullopt;
}

bool is_two_connected(const Multigraph& g) {
    if (!is_connected(g) || g.vertex_count() == 0) return false;
    for (const EdgeRec& e : g.edges())
        if (e.u == e.v) return false;
    if (g.vertex_count() == 1) return g.edge_count() == 0;
    if (g.vertex_count() == 2) return g.edge_count() >= 1;
    return !separator_of_size_at_most(g, 1).has_value();
}

bool is_three_connected(const Multigraph& g) {
    if (g.vertex_count() < 4 || !is_connected(g)) return false;
    for (const EdgeRec& e : g.edges())
        if (e.u == e.v) return false;
    return !separator_of_size_at_most(g, 2).has_value();
}

// ---------------------------------------------------------------------------
// Tutte decomposition

std::string to_string(PartKind k) {
    switch (k) {
        case PartKind::CyclePart: return "cycle";
        case PartKind::ThreeConnectedPart: return "three_connected";
        case PartKind::BondPart: return "bond";
        case PartKind::EdgePart: return "edge";
    }
    return "?";
}

std::vector<std::pair<VertexId, VertexId>> TreeDecomposition::adhesion_pairs_at(int node) const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const TreeEdge& te : tree_edges)
        if (te.a == node || te.b == node) out.push_back(te.adhesion);
    return out;
}

namespace {

struct Comp {
    std::vector<EdgeRec> edges;  // negative ids are virtual

    std::vector<VertexId> verts() const {
        std::set<VertexId> s;
        for (const EdgeRec& e : edges) {
            s.insert(e.u);
            s.insert(e.v);
        }
        return {s.begin(), s.end()};
    }
};

enum class CompKind { P, S, R };

CompKind comp_kind(const Comp& c) {
    auto vs = c.verts();
    if (vs.size() == 2) return CompKind::P;
    std::map<VertexId, int> deg;
    for (const EdgeRec& e : c.edges) {
        deg[e.u]++;
        deg[e.v]++;
    }
    for (auto& [v, d] : deg)
        if (d != 2) return CompKind::R;
    return CompKind::S;
}

// Looks for a separation pair of H together with a separation class that can
// be split off (class and complement both of size >= 2).
struct SplitPlan {
    VertexId a, b;
    std::vector<int> cls;  // indices into H.edges
};

std::optional<SplitPlan> find_split(const Comp& h) {
    auto vs = h.verts();
    if (vs.size() <= 2) return std::nullopt;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            VertexId a = vs[i], b = vs[j];
            // components of H - {a, b}
            std::map<VertexId, int> comp;
            int nc = 0;
            std::map<VertexId, std::vector<int>> adj;
            for (int ei = 0; ei < static_cast<int>(h.edges.size()); ++ei) {
                const EdgeRec& e = h.edges[ei];
                if (e.u != a && e.u != b) adj[e.u].push_back(ei);
                if (e.v != a && e.v != b) adj[e.v].push_back(ei);
            }
            for (VertexId s : vs) {
                if (s == a || s == b || comp.count(s)) continue;
                int c = nc++;
                std::queue<VertexId> q;
                q.push(s);
                comp[s] = c;
                while (!q.empty()) {
                    VertexId v = q.front();
                    q.pop();
                    for (int ei : adj[v]) {
                        const EdgeRec& e = h.edges[ei];
                        VertexId w = (e.u == v) ? e.v : e.u;
                        if (w == a || w == b || comp.count(w)) continue;
                        comp[w] = c;
                        q.push(w);
                    }
                }
            }
            std::map<int, std::vector<int>> classes;  // key -> edge indices
            int direct_key = -1;
            for (int ei = 0; ei < static_cast<int>(h.edges.size()); ++ei) {
                const EdgeRec& e = h.edges[ei];
                bool ua = (e.u == a || e.u == b), va = (e.v == a || e.v == b);
                if (ua && va)
                    classes[direct_key--].push_back(ei);  // each direct a-b edge on its own
                else
                    classes[comp.at(ua ? e.v : e.u)].push_back(ei);
            }
            if (classes.size() < 2) continue;
            for (auto& [key, cls] : classes) {
                int rest = static_cast<int>(h.edges.size()) - static_cast<int>(cls.size());
                if (static_cast<int>(cls.size()) >= 2 && rest >= 2)
                    return SplitPlan{a, b, cls};
            }
        }
    }
    return std::nullopt;
}

} // namespace

TreeDecomposition tutte_decomposition(const Multigraph& b) {
    for (const EdgeRec& e : b.edges())
        if (e.u == e.v)
            throw input_error("tutte decomposition rejects loops (edge " + std::to_string(e.id) + ")");
    if (!is_connected(b)) throw input_error("tutte decomposition requires a connected graph");
    if (b.vertex_count() >= 3) {
        if (auto sep = separator_of_size_at_most(b, 1)) {
            std::ostringstream os;
            os << "graph is not 2-connected";
            if (!sep->empty()) os << ": separating vertex " << sep->front();
            throw not_two_connected_error(os.str());
        }
    }
    if (b.edge_count() == 0) throw input_error("tutte decomposition requires at least one edge");

    // repeated splitting
    std::vector<Comp> done;
    std::vector<Comp> work{Comp{b.edges()}};
    int next_virtual = -1;
    std::map<EdgeId, std::pair<VertexId, VertexId>> virtual_pair;
    while (!work.empty()) {
        Comp h = std::move(work.back());
        work.pop_back();
        auto plan = find_split(h);
        if (!plan) {
            done.push_back(std::move(h));
            continue;
        }
        EdgeId vid = next_virtual--;
        virtual_pair[vid] = std::minmax(plan->a, plan->b);
        std::set<int> in_class(plan->cls.begin(), plan->cls.end());
        Comp g1, g2;
        for (int ei = 0; ei < static_cast<int>(h.edges.size()); ++ei)
            (in_class.count(ei) ? g1 : g2).edges.push_back(h.edges[ei]);
        g1.edges.push_back({vid, plan->a, plan->b});
        g2.edges.push_back({vid, plan->a, plan->b});
        work.push_back(std::move(g1));
        work.push_back(std::move(g2));
    }

    // merge adjacent same-kind components (P-P and S-S) back together
    bool merged = true;
    while (merged) {
        merged = false;
        std::map<EdgeId, std::vector<int>> holders;
        for (int ci = 0; ci < static_cast<int>(done.size()); ++ci)
            for (const EdgeRec& e : done[ci].edges)
                if (e.id < 0) holders[e.id].push_back(ci);
        for (auto& [vid, hs] : holders) {
            if (hs.size() != 2) throw invariant_error("virtual edge not shared by exactly two parts");
            CompKind ka = comp_kind(done[hs[0]]), kb = comp_kind(done[hs[1]]);
            if (ka != kb || ka == CompKind::R) continue;
            Comp m;
            for (int ci : hs)
                for (const EdgeRec& e : done[ci].edges)
                    if (e.id != vid) m.edges.push_back(e);
            std::vector<Comp> next;
            for (int ci = 0; ci < static_cast<int>(done.size()); ++ci)
                if (ci != hs[0] && ci != hs[1]) next.push_back(std::move(done[ci]));
            next.push_back(std::move(m));
            done = std::move(next);
            merged = true;
            break;
        }
    }

    TreeDecomposition td;
    for (const Comp& c : done) {
        TreeDecomposition::Node node;
        node.bag = c.verts();
        int total = static_cast<int>(c.edges.size());
        for (const EdgeRec& e : c.edges)
            if (e.id >= 0) node.real_edges.push_back(e.id);
        std::sort(node.real_edges.begin(), node.real_edges.end());
        if (node.bag.size() == 2) {
            node.kind = total >= 3   ? PartKind::BondPart
                        : total == 2 ? PartKind::CyclePart
                                     : PartKind::EdgePart;
        } else {
            node.kind = comp_kind(c) == CompKind::S ? PartKind::CyclePart
                                                    : PartKind::ThreeConnectedPart;
        }
        td.nodes.push_back(std::move(node));
    }
    std::map<EdgeId, std::vector<int>> holders;
    for (int ci = 0; ci < static_cast<int>(done.size()); ++ci)
        for (const EdgeRec& e : done[ci].edges)
            if (e.id < 0) holders[e.id].push_back(ci);
    for (auto& [vid, hs] : holders)
        td.tree_edges.push_back({hs[0], hs[1], virtual_pair.at(vid)});
    return td;
}

Torso torso(const Multigraph& g, const TreeDecomposition& td, int node) {
    const auto& bag = td.nodes[node].bag;
    std::set<VertexId> in_bag(bag.begin(), bag.end());
    std::vector<EdgeRec> edges;
    EdgeId next_id = 0;
    for (const EdgeRec& e : g.edges()) next_id = std::max(next_id, e.id);
    ++next_id;
    for (const EdgeRec& e : g.edges())
        if (in_bag.count(e.u) && in_bag.count(e.v)) edges.push_back(e);
    Torso t;
    for (auto [x, y] : td.adhesion_pairs_at(node)) {
        edges.push_back({next_id, x, y});
        t.virtual_ids.insert(next_id);
        ++next_id;
    }
    t.graph = Multigraph::build(bag, std::move(edges));
    return t;
}

TdCheck check_td_axioms(const Multigraph& g, const TreeDecomposition& td) {
    TdCheck res;
    auto fail = [&](const std::string& msg) {
        res.ok = false;
        res.violation = msg;
        return res;
    };
    int n = static_cast<int>(td.nodes.size());
    if (n == 0) return fail("tree decomposition has no nodes");
    if (static_cast<int>(td.tree_edges.size()) != n - 1)
        return fail("tree has wrong edge count for a tree");
    // connectivity of the tree + paths via BFS parents
    std::vector<std::vector<int>> tadj(n);
    for (const auto& te : td.tree_edges) {
        if (te.a < 0 || te.a >= n || te.b < 0 || te.b >= n) return fail("tree edge out of range");
        tadj[te.a].push_back(te.b);
        tadj[te.b].push_back(te.a);
    }
    std::vector<int> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        for (int w : tadj[t])
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    for (int t = 0; t < n; ++t)
        if (!seen[t]) return fail("tree is disconnected");

    // (T1)
    std::set<VertexId> covered;
    for (const auto& node : td.nodes) covered.insert(node.bag.begin(), node.bag.end());
    for (VertexId v : g.vertices())
        if (!covered.count(v)) return fail("(T1) vertex " + std::to_string(v) + " in no bag");
    // (T2)
    for (const EdgeRec& e : g.edges()) {
        bool found = false;
        for (const auto& node : td.nodes) {
            std::set<VertexId> bs(node.bag.begin(), node.bag.end());
            if (bs.count(e.u) && bs.count(e.v)) {
                found = true;
                break;
            }
        }
        if (!found) return fail("(T2) edge " + std::to_string(e.id) + " fits in no bag");
    }
    // (T3) over all node pairs, via the unique tree path
    auto path_between = [&](int s, int t) {
        std::vector<int> par(n, -1), vis(n, 0);
        std::queue<int> bq;
        bq.push(s);
        vis[s] = 1;
        while (!bq.empty()) {
            int x = bq.front();
            bq.pop();
            for (int w : tadj[x])
                if (!vis[w]) {
                    vis[w] = 1;
                    par[w] = x;
                    bq.push(w);
                }
        }
        std::vector<int> path;
        for (int x = t; x != -1; x = par[x]) path.push_back(x);
        return path;
    };
    for (int t1 = 0; t1 < n; ++t1) {
        std::set<VertexId> b1(td.nodes[t1].bag.begin(), td.nodes[t1].bag.end());
        for (int t3 = t1 + 1; t3 < n; ++t3) {
            std::set<VertexId> b3(td.nodes[t3].bag.begin(), td.nodes[t3].bag.end());
            std::vector<VertexId> inter;
            for (VertexId v : b1)
                if (b3.count(v)) inter.push_back(v);
            if (inter.empty()) continue;
            for (int t2 : path_between(t1, t3)) {
                if (t2 == t1 || t2 == t3) continue;
                std::set<VertexId> b2(td.nodes[t2].bag.begin(), td.nodes[t2].bag.end());
                for (VertexId v : inter)
                    if (!b2.count(v))
                        return fail("(T3) vertex " + std::to_string(v) + " missing from bag on the " +
                                    std::to_string(t1) + "-" + std::to_string(t3) + " path at node " +
                                    std::to_string(t2));
            }
        }
    }
    // adhesion sets equal endpoint bag intersections
    for (const auto& te : td.tree_edges) {
        std::set<VertexId> ba(td.nodes[te.a].bag.begin(), td.nodes[te.a].bag.end());
        std::set<VertexId> inter;
        for (VertexId v : td.nodes[te.b].bag)
            if (ba.count(v)) inter.insert(v);
        std::set<VertexId> decl{te.adhesion.first, te.adhesion.second};
        if (inter != decl) return fail("adhesion set does not match bag intersection");
    }
    return res;
}

Completion complete_adhesions(const Multigraph& g, const TreeDecomposition& td, EdgeId first_new_id) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& te : td.tree_edges) pairs.insert(te.adhesion);
    std::set<std::pair<VertexId, VertexId>> present;
    for (const EdgeRec& e : g.edges()) {
        auto pr = std::minmax(e.u, e.v);
        present.insert({pr.first, pr.second});
    }
    Completion comp;
    std::vector<EdgeRec> edges = g.edges();
    EdgeId next = first_new_id;
    for (auto [x, y] : pairs) {
        if (present.count({x, y})) continue;
        EdgeRec e{next++, x, y};
        edges.push_back(e);
        comp.added.push_back(e);
    }
    comp.g_prime = Multigraph::build(g.vertices(), std::move(edges));
    try {
        planar_embed(comp.g_prime);
    } catch (const nonplanar_error&) {
        throw invariant_error("adhesion completion destroyed planarity");
    }
    auto chk = check_td_axioms(comp.g_prime, td);
    if (!chk.ok)
        throw invariant_error("completed graph breaks its tree decomposition: " + chk.violation);
    return comp;
}

Completion complete_adhesions(const Multigraph& g, const TreeDecomposition& td) {
    EdgeId next = 0;
    for (const EdgeRec& e : g.edges()) next = std::max(next, e.id);
    return complete_adhesions(g, td, next + 1);
}

} // namespace nestgen
