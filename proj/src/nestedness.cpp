#include "nestgen/nestedness.hpp"

#include <algorithm>

namespace nestgen {

namespace {
bool disjoint(const std::set<VertexId>& a, const std::set<VertexId>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (VertexId v : small)
        if (large.count(v)) return false;
    return true;
}
} // namespace

bool cuts_nested(const Cut& b1, const Cut& b2) {
    return disjoint(b1.side_x, b2.side_x) || disjoint(b1.side_x, b2.side_y) ||
           disjoint(b1.side_y, b2.side_x) || disjoint(b1.side_y, b2.side_y);
}

bool crosses_one_way(const SideOracle& so, const Cycle& c, const Cycle& d) {
    bool saw_a = false, saw_b = false;
    std::set<VertexId> dverts = incident_vertices(so.graph(), d.edges);
    for (VertexId v : dverts) {
        Side s = so.vertex_side(c, v);
        if (s == Side::A) saw_a = true;
        if (s == Side::B) saw_b = true;
        if (saw_a && saw_b) return true;
    }
    return false;
}

namespace {
bool same_component(const SideOracle& so, const Cycle& c, const Cycle& d) {
    auto comps = components(so.graph());
    VertexId cv = c.vertex_order.front(), dv = d.vertex_order.front();
    for (const auto& comp : comps) {
        bool has_c = std::binary_search(comp.begin(), comp.end(), cv);
        bool has_d = std::binary_search(comp.begin(), comp.end(), dv);
        if (has_c || has_d) return has_c && has_d;
    }
    return false;
}
} // namespace

bool cycles_nested(const SideOracle& so, const Cycle& c, const Cycle& d) {
    // Cycles in different components never cross.
    if (!same_component(so, c, d)) return true;
    return !crosses_one_way(so, c, d) && !crosses_one_way(so, d, c);
}

bool cycles_nested(const Multigraph& g, const RotationSystem& rot, const Cycle& c, const Cycle& d) {
    SideOracle so(g, rot);
    return cycles_nested(so, c, d);
}

NestReport family_nested(const SideOracle& so, const std::vector<Cycle>& family) {
    NestReport rep;
    for (int i = 0; i < static_cast<int>(family.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(family.size()); ++j)
            if (!cycles_nested(so, family[i], family[j])) {
                rep.first_violation = {i, j};
                return rep;
            }
    return rep;
}

NestReport family_nested(const Multigraph& g, const RotationSystem& rot,
                         const std::vector<Cycle>& family) {
    SideOracle so(g, rot);
    return family_nested(so, family);
}

Prop32Result prop32_transfer(const DualPair& dp, const SideOracle& so, const Cycle& c1,
                             const Cycle& c2) {
    Prop32Result r;
    EdgeSet b1 = image_of(dp, c1.edges, Direction::PrimalToDual);
    EdgeSet b2 = image_of(dp, c2.edges, Direction::PrimalToDual);
    auto cut1 = tight_cut_bipartition(dp.dual, b1);
    auto cut2 = tight_cut_bipartition(dp.dual, b2);
    if (!cut1 || !cut2)
        throw invariant_error("dual image of a circuit is not a tight cut");
    r.cuts_nested_value = cuts_nested(*cut1, *cut2);
    r.cycles_nested_value = cycles_nested(so, c1, c2);
    return r;
}

} // namespace nestgen
