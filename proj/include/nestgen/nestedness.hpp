#ifndef NESTGEN_NESTEDNESS_HPP
#define NESTGEN_NESTEDNESS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nestgen/duality.hpp"
#include "nestgen/embedding.hpp"
#include "nestgen/graph.hpp"

namespace nestgen {

// Two cuts are nested iff some corner intersection of their sides is empty.
bool cuts_nested(const Cut& b1, const Cut& b2);

// Two embedded cycles are nested iff neither has vertices strictly on both
// sides of the other. Checked in both directions; shared vertices count as
// OnCycle, never as side witnesses.
bool cycles_nested(const SideOracle& so, const Cycle& c, const Cycle& d);
bool cycles_nested(const Multigraph& g, const RotationSystem& rot, const Cycle& c, const Cycle& d);

// One-directional predicate: does some vertex of d lie strictly on side A of
// c and another strictly on side B? Exposed so tests can probe symmetry.
bool crosses_one_way(const SideOracle& so, const Cycle& c, const Cycle& d);

struct NestReport {
    std::optional<std::pair<int, int>> first_violation;  // indices into the family
    bool ok() const { return !first_violation.has_value(); }
};

NestReport family_nested(const Multigraph& g, const RotationSystem& rot,
                         const std::vector<Cycle>& family);
NestReport family_nested(const SideOracle& so, const std::vector<Cycle>& family);

struct Prop32Result {
    bool cuts_nested_value = false;
    bool cycles_nested_value = false;
    bool implication() const { return !cuts_nested_value || cycles_nested_value; }
};

// Evaluates "nested dual cuts imply nested cycles" for one cycle pair of the
// primal. The dual cuts' bipartitions are recovered from the split dual;
// a non-tight image is a fatal invariant violation.
Prop32Result prop32_transfer(const DualPair& dp, const SideOracle& so, const Cycle& c1,
                             const Cycle& c2);

} // namespace nestgen

#endif
