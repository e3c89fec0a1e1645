#pragma once

#include <string>
#include <vector>

#include "vcreg/cograph.hpp"
#include "vcreg/graph.hpp"
#include "vcreg/rational.hpp"
#include "vcreg/regularity.hpp"

namespace vcreg {

struct EsResult {
    VertexSet set;
    bool clique = false;  // otherwise an independent set
};

// Majority-side stepping: pick the least unprocessed vertex, keep the larger
// of neighbors / non-neighbors, repeat; the majority-labelled picks form a
// clique or an independent set of size >= ceil(log2(n)/2).
EsResult erdos_szekeres_set(const Graph& g);

struct ExtractParams {
    Rat c{1, 8};          // schedule constant
    Rat delta_exp{1, 2};  // exponent parameter in (log n)^{1-delta}
    int n0 = 64;          // base-case threshold
    int greedy_limit = 512;  // largest n for the greedy cograph extension
};

struct ExtractLevel {
    int n = 0;
    std::string branch;  // direct_win | base_brute | base_greedy | base_es | recurse
    Rat epsilon;
    int K = 0;
    int packing_size = 0;
    int R_size = 0;
    int skeleton_size = 0;
    std::vector<std::int64_t> survivor_counts;
    bool regularity_ran = false;
    Rat fraction;
    Int bad_pairs{-1};
    Rat bad_pair_bound;
    std::int64_t result_size = 0;
};

struct ExtractResult {
    VertexSet set;  // induces a cograph; re-verified before returning
    std::vector<ExtractLevel> trace;
};

ExtractResult extract_cograph(const Graph& g, const ExtractParams& params = {});

// epsilon = (1/32) e^{-3c (log n)^{1-delta}}, rounded to a dyadic rational
Rat schedule_epsilon(std::int64_t n, const Rat& c, const Rat& delta_exp);

struct RtParams {
    int p = 3;
    Rat eps;                // density slack in the precondition
    Rat delta_sup{3, 10};   // supersaturation parameter; regularity runs at delta/4
};

struct RtResult {
    bool refused = false;
    std::string reason;
    VertexSet independent;  // verified by direct pair enumeration
    int K = 0;
    Rat delta1;
    int rounds = 0;
    std::vector<int> clique_parts;  // surviving K_p among the parts
    bool delta_escalated = false;
    Rat packing_delta;
};

// Density-based edge deletion, surviving K_p among parts, then iterated
// survivor filtering / common-neighborhood restriction.  Refusals (density
// precondition unmet, no surviving K_p) are results, not errors.
RtResult rt_independent_set(const Graph& g, const RtParams& params);

}  // namespace vcreg
