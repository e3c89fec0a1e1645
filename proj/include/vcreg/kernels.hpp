#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "vcreg/bitset.hpp"
#include "vcreg/graph.hpp"
#include "vcreg/partition.hpp"
#include "vcreg/rational.hpp"

// Data-parallel inner loops of the partitioner, with a serial reference
// implementation kept for testing.  Both sides are deterministic: every
// kernel computes a pure function of its inputs, so the OpenMP variants are
// bit-identical to the serial ones regardless of thread count.

namespace vcreg {

void set_jobs(int jobs);  // 0 = library default
int current_jobs();

// Per-vertex neighborhoods over ranked (k-1)-subsets; for k = 2 this borrows
// the adjacency rows.
struct StarView {
    int n = 0;
    int k = 2;
    std::int64_t ground = 0;  // C(n, k-1)
    const std::vector<VertexSet>* stars = nullptr;
    std::vector<std::int64_t> sizes;
    std::vector<VertexSet> storage;  // owned when built from a hypergraph

    const VertexSet& star(int v) const { return (*stars)[v]; }
};

StarView star_view(const Graph& g);
StarView star_view(const Hypergraph& h);

// integer distance >= rational threshold, overflow-safe
struct RatThreshold {
    Int num, den;
    explicit RatThreshold(const Rat& r) : num(numerator(r)), den(denominator(r)) {}
    bool le(std::int64_t dist) const { return num <= Int(dist) * den; }   // r <= dist
    bool gt(std::int64_t dist) const { return num > Int(dist) * den; }    // dist < r
};

namespace serial {

bool separated_from_all(const StarView& sv, const std::vector<int>& centers, int v,
                        const RatThreshold& delta);
std::vector<int> voronoi_assign(const StarView& sv, const std::vector<int>& centers,
                                const RatThreshold& delta);
std::vector<std::int64_t> pair_cross_counts(const Graph& g,
                                            const std::vector<int>& part_of, int K);
std::map<std::vector<int>, std::int64_t> tuple_cross_counts(
    const Hypergraph& h, const std::vector<int>& part_of);
Int flip_pairs(const Graph& g, const VertexSet& a, const VertexSet& b);
Int flip_pairs(const Hypergraph& h, const std::vector<VertexSet>& parts);
std::vector<VertexSet> bad_pair_rows(const Graph& g, const Partition& p,
                                     const std::vector<std::uint8_t>& pair_class);
std::vector<std::int64_t> masked_degrees(const std::vector<VertexSet>& rows,
                                         const VertexSet& mask);

}  // namespace serial

namespace par {

bool separated_from_all(const StarView& sv, const std::vector<int>& centers, int v,
                        const RatThreshold& delta);
std::vector<int> voronoi_assign(const StarView& sv, const std::vector<int>& centers,
                                const RatThreshold& delta);
std::vector<std::int64_t> pair_cross_counts(const Graph& g,
                                            const std::vector<int>& part_of, int K);
std::map<std::vector<int>, std::int64_t> tuple_cross_counts(
    const Hypergraph& h, const std::vector<int>& part_of);
Int flip_pairs(const Graph& g, const VertexSet& a, const VertexSet& b);
Int flip_pairs(const Hypergraph& h, const std::vector<VertexSet>& parts);
std::vector<VertexSet> bad_pair_rows(const Graph& g, const Partition& p,
                                     const std::vector<std::uint8_t>& pair_class);
std::vector<std::int64_t> masked_degrees(const std::vector<VertexSet>& rows,
                                         const VertexSet& mask);

}  // namespace par

// pair classification codes used by bad_pair_rows
enum : std::uint8_t { kPairSparse = 0, kPairDense = 1, kPairNonHomog = 2 };

std::int64_t star_distance(const StarView& sv, int u, int v);

}  // namespace vcreg
