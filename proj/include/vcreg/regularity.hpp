#pragma once

#include <optional>
#include <vector>

#include "vcreg/graph.hpp"
#include "vcreg/kernels.hpp"
#include "vcreg/partition.hpp"
#include "vcreg/rational.hpp"

namespace vcreg {

// delta = eps^2 / (4 k^2) * C(n, k-1); comparisons against it stay rational.
// Requires eps in (0, 1/4), the regularity theorem's hypothesis.
Rat separation_delta(std::int64_t n, int k, const Rat& eps);

struct PackingResult {
    Rat delta;
    std::vector<int> centers;  // admission order = index order
};

// Greedy maximal delta-separated set of vertex stars, scanning in index
// order: v joins iff |N(v) (tri) N(s)| >= delta for every current center s.
PackingResult greedy_packing(const StarView& sv, const Rat& delta);

// v goes to the least-index center with |N(v) (tri) N(s_i)| < delta.
// Maximality of the packing guarantees every vertex is assignable.
Partition voronoi_partition(const StarView& sv, const PackingResult& packing);

struct RefinedPartition {
    Partition part;
    std::vector<std::uint8_t> pure;  // part fully inside one source part
};

// Exactly K parts of sizes floor(n/K) / ceil(n/K), the +-1 imbalance on the
// last parts.  Source parts are laid out in index order and cut contiguously,
// so at most |Q|-1 parts are mixed.
RefinedPartition equitable_refinement(const Partition& q, int K);

struct RegularityReport {
    int K = 0;
    int k = 2;
    Rat epsilon;
    Int tuple_count;      // C(K, k) unordered k-tuples of distinct parts
    Int non_homogeneous;  // exact count
    Rat fraction;         // non_homogeneous / tuple_count (0 when no tuples)
    std::vector<std::vector<int>> witnesses;  // sorted part tuples, capped
    bool witnesses_truncated = false;
    Int mixed_tuples{-1};  // tuples touching a mixed part; -1 if purity unknown
    // density data (always kept for k = 2; used by downstream extractors)
    std::vector<std::int64_t> part_sizes;
    std::vector<std::int64_t> pair_counts;  // k = 2 only: K*K, entry (i<j)
};

// Exhaustive verifier: exact density of every k-tuple of distinct parts via
// one pass over the edge set, classification in exact rationals.
RegularityReport homogeneity_report(const Graph& g, const Partition& p, const Rat& eps,
                                    const std::vector<std::uint8_t>* pure = nullptr,
                                    std::size_t witness_cap = 1000);
RegularityReport homogeneity_report(const Hypergraph& h, const Partition& p,
                                    const Rat& eps,
                                    const std::vector<std::uint8_t>* pure = nullptr,
                                    std::size_t witness_cap = 1000);

struct UltraStrongResult {
    Rat epsilon;
    Rat delta;
    PackingResult packing;
    RefinedPartition refined;
    RegularityReport report;
};

// The whole pipeline: delta -> greedy packing -> Voronoi -> equitable
// refinement with K = ceil(8 k |S| / eps) -> independent verification.
// Refuses (rather than clamps) when K would exceed n.
UltraStrongResult ultra_strong_partition(const Graph& g, const Rat& eps);
UltraStrongResult ultra_strong_partition(const Hypergraph& h, const Rat& eps);

// Ordered pairs (e, e') of transversal k-tuples sharing k-1 vertices with
// e an edge and e' a non-edge.  Parts must be disjoint and equal-sized.
Int count_flip_pairs(const Graph& g, const VertexSet& a, const VertexSet& b);
Int count_flip_pairs(const Hypergraph& h, const std::vector<VertexSet>& parts);

}  // namespace vcreg
