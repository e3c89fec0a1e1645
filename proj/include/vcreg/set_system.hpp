#pragma once

#include <vector>

#include "vcreg/bitset.hpp"
#include "vcreg/graph.hpp"

namespace vcreg {

// Finite family of VertexSets over a common ground set.  Duplicates are
// permitted; operations that collapse them record the fact.
struct SetSystem {
    std::int64_t universe = 0;
    std::vector<VertexSet> family;
    bool deduplicated = false;

    void check_invariants() const;  // all members share the universe
};

// F = {N(v) : v} for graphs; for k-uniform H one member per unordered
// (k-1)-subset of distinct vertices, empty neighborhoods included.
SetSystem neighborhood_system(const Graph& g);
SetSystem neighborhood_system(const Hypergraph& h, std::int64_t family_budget = 2'000'000);

// Collapse duplicate family members (kept order = first occurrence).
SetSystem dedup(const SetSystem& s);

// F* = {{A in F : v in A} : v in V}; duplicates collapse before dualizing
// since they would distort the dual's ground set.
SetSystem dual_system(const SetSystem& s);

// Collapse duplicate members and merge ground elements with identical
// membership columns, keeping one representative per class.  Shattering is
// invariant under both reductions, so VC-dimension is preserved.
SetSystem atom_reduce(const SetSystem& s, std::vector<std::int64_t>* reps = nullptr);

}  // namespace vcreg
