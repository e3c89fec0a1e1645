#pragma once

#include <optional>
#include <vector>

#include "vcreg/rational.hpp"
#include "vcreg/set_system.hpp"

namespace vcreg {

// true iff every one of the 2^|T| traces T ∩ A is realized by some A in the
// family.  Refuses |T| > 30 (trace enumeration bound).
bool is_shattered(const SetSystem& s, const VertexSet& t);

struct VcResult {
    int dimension = 0;
    bool cap_reached = false;            // a shattered cap-set exists; >= cap+1 not ruled out
    std::vector<std::int64_t> witness;   // lexicographically least shattered set of max size
};

// Exact largest d <= cap with a shattered d-set.  Levelwise ascent with
// Apriori-style pruning: shattering is hereditary downward, so candidates at
// size d are built only from shattered (d-1)-sets.
VcResult vc_dimension(const SetSystem& s, int cap = 12);

struct ShatterProfile {
    int z_max = 0;
    std::vector<Int> values;                         // pi_F(z), z = 0..z_max
    std::vector<std::vector<std::int64_t>> witness;  // one argmax z-set per z
};

// pi_F(z): exact maximum over z-subsets, with the lexicographically least
// witness.  Throws if C(universe, z) exceeds the subset budget.
Int primal_shatter_value(const SetSystem& s, int z, std::int64_t budget = 5'000'000,
                         std::vector<std::int64_t>* witness = nullptr);

ShatterProfile shatter_profile(const SetSystem& s, int z_max,
                               std::int64_t budget = 5'000'000);

// sum_{i=0..d} C(z, i)
Int sauer_bound(int d, int z);

}  // namespace vcreg
