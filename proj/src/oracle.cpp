#include "nestgen/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "nestgen/nestedness.hpp"

namespace nestgen {

// ---------------------------------------------------------------------------
// circuit enumeration

namespace {

struct CircuitSearch {
    const Multigraph& g;
    std::optional<int> max_length;
    long long budget;
    long long nodes = 0;
    std::vector<EdgeSet> out;

    int anchor = 0;
    VertexId target = 0;
    std::set<VertexId> visited;
    std::set<EdgeId> path;

    void tick() {
        if (++nodes > budget)
            throw budget_error("circuit enumeration exceeded its node budget");
    }

    void extend(VertexId cur) {
        tick();
        for (EdgeId eid : g.incident(cur)) {
            int idx = g.edge_index(eid);
            if (idx <= anchor) continue;
            const EdgeRec& e = g.edge(eid);
            if (e.u == e.v) continue;  // a loop is only ever a circuit by itself
            if (path.count(eid)) continue;
            VertexId w = (e.u == cur) ? e.v : e.u;
            if (max_length && static_cast<int>(path.size()) + 2 > *max_length && w != target)
                continue;
            if (w == target) {
                if (max_length && static_cast<int>(path.size()) + 2 > *max_length) continue;
                EdgeSet f{g.key(), path};
                f.ids.insert(g.edges()[anchor].id);
                f.ids.insert(eid);
                out.push_back(std::move(f));
                continue;
            }
            if (visited.count(w)) continue;
            visited.insert(w);
            path.insert(eid);
            extend(w);
            path.erase(eid);
            visited.erase(w);
        }
    }
};

} // namespace

std::vector<EdgeSet> enumerate_circuits(const Multigraph& g, std::optional<int> max_length,
                                        const OracleBudget& budget) {
    CircuitSearch s{g, max_length, budget.max_nodes};
    for (int i = 0; i < g.edge_count(); ++i) {
        const EdgeRec& e = g.edges()[i];
        if (e.u == e.v) {
            if (!max_length || *max_length >= 1) s.out.push_back(make_edgeset(g, {e.id}));
            continue;
        }
        s.anchor = i;
        s.target = e.u;
        s.visited = {e.u, e.v};
        s.path.clear();
        s.extend(e.v);
    }
    return s.out;
}

// ---------------------------------------------------------------------------
// automorphisms

namespace {

struct AutoSearch {
    const Multigraph& g;
    const OracleBudget& budget;
    long long nodes = 0;
    std::vector<VertexId> verts;              // fixed mapping order
    std::map<VertexId, VertexId> vmap;
    std::set<VertexId> used;
    std::vector<std::map<VertexId, VertexId>> vmaps;

    int mult(VertexId a, VertexId b) const {
        int c = 0;
        for (EdgeId e : g.incident(a)) {
            const EdgeRec& r = g.edge(e);
            if (r.u == r.v) continue;
            VertexId w = (r.u == a) ? r.v : r.u;
            if (w == b) ++c;
        }
        return c;
    }

    int loops(VertexId a) const {
        int c = 0;
        for (EdgeId e : g.incident(a)) {
            const EdgeRec& r = g.edge(e);
            if (r.u == r.v) ++c;
        }
        return c;
    }

    void rec(std::size_t k) {
        if (++nodes > budget.max_nodes)
            throw budget_error("automorphism search exceeded its node budget");
        if (k == verts.size()) {
            vmaps.push_back(vmap);
            return;
        }
        VertexId s = verts[k];
        for (VertexId t : g.vertices()) {
            if (used.count(t)) continue;
            if (g.degree(s) != g.degree(t) || loops(s) != loops(t)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                if (mult(s, verts[j]) != mult(t, vmap[verts[j]])) ok = false;
            if (!ok) continue;
            vmap[s] = t;
            used.insert(t);
            rec(k + 1);
            used.erase(t);
            vmap.erase(s);
        }
    }
};

// All bijections between parallel classes, expanded into full edge maps.
void expand_edge_maps(const Multigraph& g, const std::map<VertexId, VertexId>& vmap,
                      std::vector<Automorphism>& out, long long max_total) {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> cls;
    for (const EdgeRec& e : g.edges()) {
        auto pr = std::minmax(e.u, e.v);
        cls[{pr.first, pr.second}].push_back(e.id);
    }
    std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> pairs;
    for (auto& [key, src] : cls) {
        auto pr = std::minmax(vmap.at(key.first), vmap.at(key.second));
        auto it = cls.find({pr.first, pr.second});
        if (it == cls.end() || it->second.size() != src.size())
            throw invariant_error("vertex automorphism has no compatible edge bijection");
        pairs.push_back({src, it->second});
    }
    // odometer over permutations of each target class
    std::vector<std::vector<int>> perms(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        perms[i].resize(pairs[i].first.size());
        std::iota(perms[i].begin(), perms[i].end(), 0);
    }
    while (true) {
        Automorphism a;
        a.vmap = vmap;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs[i].first.size(); ++j)
                a.emap[pairs[i].first[j]] = pairs[i].second[perms[i][j]];
        out.push_back(std::move(a));
        if (static_cast<long long>(out.size()) > max_total)
            throw budget_error("automorphism group exceeds the configured order budget");
        std::size_t i = 0;
        while (i < perms.size() && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
        if (i == perms.size()) break;
    }
}

} // namespace

AutomorphismGroup automorphism_group(const Multigraph& g, const OracleBudget& budget) {
    if (g.vertex_count() > budget.max_auto_vertices)
        throw budget_error("automorphism search refused: " + std::to_string(g.vertex_count()) +
                           " vertices exceed limit " + std::to_string(budget.max_auto_vertices));
    AutoSearch s{g, budget};
    s.verts = g.vertices();
    std::stable_sort(s.verts.begin(), s.verts.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    s.rec(0);
    AutomorphismGroup grp;
    for (const auto& vm : s.vmaps) expand_edge_maps(g, vm, grp.elements, budget.max_group_order);
    std::sort(grp.elements.begin(), grp.elements.end());
    return grp;
}

// ---------------------------------------------------------------------------
// GF(2) linear algebra

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Multigraph& g, const EdgeSet& s) {
    Bits b((g.edge_count() + 63) / 64, 0);
    for (EdgeId e : s.ids) {
        int i = g.edge_index(e);
        b[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return b;
}

int lowest_bit(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w]) return static_cast<int>(w * 64 + std::countr_zero(b[w]));
    return -1;
}

void xor_into(Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

struct Gf2Basis {
    std::map<int, std::pair<Bits, std::set<int>>> rows;  // pivot -> (row, combo)

    // Reduces v; returns the certificate combo when v reduces to zero.
    std::optional<std::set<int>> reduce(Bits v, std::set<int> combo) {
        while (true) {
            int p = lowest_bit(v);
            if (p == -1) return combo;
            auto it = rows.find(p);
            if (it == rows.end()) {
                rows.emplace(p, std::make_pair(std::move(v), combo));
                return std::nullopt;
            }
            xor_into(v, it->second.first);
            std::set<int> nc;
            std::set_symmetric_difference(combo.begin(), combo.end(), it->second.second.begin(),
                                          it->second.second.end(), std::inserter(nc, nc.begin()));
            combo = std::move(nc);
        }
    }
};

} // namespace

int gf2_rank(const Multigraph& g, const std::vector<EdgeSet>& vectors) {
    Gf2Basis basis;
    for (int i = 0; i < static_cast<int>(vectors.size()); ++i)
        basis.reduce(to_bits(g, vectors[i]), {i});
    return static_cast<int>(basis.rows.size());
}

std::optional<std::vector<int>> in_span(const Multigraph& g, const std::vector<EdgeSet>& vectors,
                                        const EdgeSet& target) {
    Gf2Basis basis;
    for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
        auto zero = basis.reduce(to_bits(g, vectors[i]), {i});
        (void)zero;
    }
    // Reduce the target against the fixed basis without inserting it.
    Bits v = to_bits(g, target);
    std::set<int> combo;
    while (true) {
        int p = lowest_bit(v);
        if (p == -1) break;
        auto it = basis.rows.find(p);
        if (it == basis.rows.end()) return std::nullopt;
        xor_into(v, it->second.first);
        std::set<int> nc;
        std::set_symmetric_difference(combo.begin(), combo.end(), it->second.second.begin(),
                                      it->second.second.end(), std::inserter(nc, nc.begin()));
        combo = std::move(nc);
    }
    return std::vector<int>(combo.begin(), combo.end());
}

// ---------------------------------------------------------------------------
// orbit closure and facial invariance

namespace {
std::set<EdgeId> map_ids(const std::set<EdgeId>& ids, const std::map<EdgeId, EdgeId>& emap) {
    std::set<EdgeId> r;
    for (EdgeId e : ids) r.insert(emap.at(e));
    return r;
}
} // namespace

bool orbit_closed(const std::vector<EdgeSet>& family, const AutomorphismGroup& aut) {
    std::set<std::set<EdgeId>> fam;
    for (const EdgeSet& f : family) fam.insert(f.ids);
    for (const Automorphism& a : aut.elements)
        for (const auto& ids : fam)
            if (!fam.count(map_ids(ids, a.emap))) return false;
    return true;
}

bool facial_invariance_check(const Multigraph& g, const RotationSystem& rot,
                             const AutomorphismGroup& autos) {
    std::vector<EdgeSet> faces;
    for (const Face& f : trace_faces(g, rot)) faces.push_back(f.boundary);
    return orbit_closed(faces, autos);
}

// ---------------------------------------------------------------------------
// canonicity probe

CanonicityResult canonicity_probe(const Multigraph& g, const PipelineFn& pipeline, int trials,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PipelineSignature base = pipeline(g);
    CanonicityResult res;
    for (int t = 0; t < trials; ++t) {
        std::vector<VertexId> vlabels(g.vertex_count());
        std::iota(vlabels.begin(), vlabels.end(), 1);
        std::shuffle(vlabels.begin(), vlabels.end(), rng);
        std::vector<EdgeId> elabels(g.edge_count());
        std::iota(elabels.begin(), elabels.end(), 1);
        std::shuffle(elabels.begin(), elabels.end(), rng);

        std::map<VertexId, VertexId> vmap;
        for (int i = 0; i < g.vertex_count(); ++i) vmap[g.vertices()[i]] = vlabels[i];
        std::map<EdgeId, EdgeId> emap;
        for (int i = 0; i < g.edge_count(); ++i) emap[g.edges()[i].id] = elabels[i];

        std::vector<EdgeRec> edges;
        for (const EdgeRec& e : g.edges()) edges.push_back({emap[e.id], vmap[e.u], vmap[e.v]});
        Multigraph h = Multigraph::build(vlabels, std::move(edges));
        PipelineSignature got = pipeline(h);

        PipelineSignature expect;
        for (auto [u, v] : base.added) {
            auto pr = std::minmax(vmap[u], vmap[v]);
            expect.added.insert({pr.first, pr.second});
        }
        for (const auto& gen : base.generators) {
            std::set<EdgeToken> mapped;
            for (const EdgeToken& tok : gen) {
                if (tok.added) {
                    auto pr = std::minmax(vmap[tok.a], vmap[tok.b]);
                    mapped.insert({true, pr.first, pr.second});
                } else {
                    mapped.insert({false, emap[tok.a], 0});
                }
            }
            expect.generators.insert(std::move(mapped));
        }
        if (!(got == expect)) {
            res.ok = false;
            res.failing_trial = t;
            res.failing_relabeling = vmap;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// counterexample audit

namespace {

// Groups circuits into orbits under the automorphism group's edge maps.
std::vector<std::vector<int>> circuit_orbits(const std::vector<EdgeSet>& circuits,
                                             const AutomorphismGroup& aut) {
    std::map<std::set<EdgeId>, int> index;
    for (int i = 0; i < static_cast<int>(circuits.size()); ++i) index[circuits[i].ids] = i;
    std::vector<int> orbit_of(circuits.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < static_cast<int>(circuits.size()); ++i) {
        if (orbit_of[i] != -1) continue;
        int oid = static_cast<int>(orbits.size());
        orbits.push_back({});
        std::vector<int> stack{i};
        orbit_of[i] = oid;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            orbits[oid].push_back(c);
            for (const Automorphism& a : aut.elements) {
                auto img = map_ids(circuits[c].ids, a.emap);
                auto it = index.find(img);
                if (it == index.end())
                    throw invariant_error("automorphism image of a circuit is not a circuit");
                if (orbit_of[it->second] == -1) {
                    orbit_of[it->second] = oid;
                    stack.push_back(it->second);
                }
            }
        }
    }
    return orbits;
}

} // namespace

AuditResult counterexample_audit(const Multigraph& g, const OracleBudget& budget) {
    AuditResult res;
    auto circuits = enumerate_circuits(g, std::nullopt, budget);
    int dim = cycle_space_dimension(g);
    AutomorphismGroup aut = automorphism_group(g, budget);
    auto orbits = circuit_orbits(circuits, aut);
    res.orbit_count = static_cast<int>(orbits.size());

    std::vector<Cycle> cycles;
    for (const EdgeSet& c : circuits) cycles.push_back(make_cycle(g, c));

    // per-vertex cyclic orders, first dart pinned
    std::vector<std::vector<Dart>> base(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const EdgeRec& e = g.edges()[i];
        base[g.vertex_index(e.u)].push_back(2 * i);
        base[g.vertex_index(e.v)].push_back(2 * i + 1);
    }
    long long total = 1;
    for (const auto& darts : base) {
        long long f = 1;
        for (int k = 2; k < static_cast<int>(darts.size()); ++k) f *= k;
        total *= f;
        if (total > budget.max_rotation_systems)
            throw budget_error("rotation system enumeration exceeds budget");
    }
    res.total_rotations = static_cast<int>(total);

    // odometer over tail permutations
    std::vector<std::vector<int>> tails(base.size());
    for (std::size_t v = 0; v < base.size(); ++v) {
        tails[v].resize(base[v].size() > 1 ? base[v].size() - 1 : 0);
        std::iota(tails[v].begin(), tails[v].end(), 1);
    }
    int rot_index = 0;
    while (true) {
        std::vector<std::vector<Dart>> order(base.size());
        for (std::size_t v = 0; v < base.size(); ++v) {
            if (!base[v].empty()) {
                order[v].push_back(base[v][0]);
                for (int t : tails[v]) order[v].push_back(base[v][t]);
            }
        }
        RotationSystem rot = RotationSystem::build(g, std::move(order));
        if (genus0_certificate(g, rot)) {
            ++res.planar_rotations;
            SideOracle so(g, rot);
            // subsets of orbits, smallest first
            int k = static_cast<int>(orbits.size());
            std::vector<int> masks;
            for (int m = 1; m < (1 << k); ++m) masks.push_back(m);
            std::sort(masks.begin(), masks.end(),
                      [](int a, int b) { return std::popcount(unsigned(a)) < std::popcount(unsigned(b)); });
            bool found = false;
            std::optional<AuditCrossing> witness;
            for (int m : masks) {
                std::vector<int> members;
                for (int o = 0; o < k; ++o)
                    if (m & (1 << o))
                        for (int c : orbits[o]) members.push_back(c);
                std::vector<EdgeSet> fam;
                for (int c : members) fam.push_back(circuits[c]);
                if (gf2_rank(g, fam) != dim) continue;
                std::vector<Cycle> famc;
                for (int c : members) famc.push_back(cycles[c]);
                NestReport nr = family_nested(so, famc);
                if (nr.ok()) {
                    res.possible = true;
                    res.family = fam;
                    res.rotation = rot;
                    found = true;
                    break;
                }
                if (!witness) {
                    auto [i, j] = *nr.first_violation;
                    witness = AuditCrossing{rot_index, fam[i], fam[j]};
                }
            }
            if (found) return res;
            if (witness) res.witnesses.push_back(*witness);
        }
        ++rot_index;
        std::size_t v = 0;
        while (v < tails.size() && !std::next_permutation(tails[v].begin(), tails[v].end())) ++v;
        if (v == tails.size()) break;
    }
    return res;
}

} // namespace nestgen
