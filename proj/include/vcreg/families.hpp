#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcreg/cograph.hpp"
#include "vcreg/graph.hpp"

namespace vcreg {

// Deterministic structured graph families.  Vertices are laid out in
// contiguous class blocks; classes of a blow-up share identical
// neighborhoods, which keeps greedy packings small at desk scale.

// Threshold graph from a creation sequence of `blocks` rounds, each a run of
// isolated additions followed by one dominating vertex.
Graph threshold_blocks(int n, int blocks);

// Threshold graph with a seeded random creation sequence.
Graph threshold_random(int n, std::uint64_t seed);

// Disjoint union of `cliques` near-equal cliques.
Graph clique_union(int n, int cliques);

// Complete r-partite graph with near-equal classes.
Graph complete_multipartite(int n, int r);

// Blow-up of the point-line incidence of a triangle (3 points, 3 lines):
// bipartite, 6 classes.
Graph incidence_blowup(int n);

// Balanced cograph: recursive halving with labels alternating join/union.
Graph balanced_cograph(int n);

// Random cotree over n leaves (labels alternate; child counts seeded).
Cotree random_cotree(int n, std::uint64_t seed);

// Complete p-partite graph with each cross edge deleted with probability
// del_permille/1000 (noise never adds edges, so clique number stays p).
Graph multipartite_noisy(int n, int p, int del_permille, std::uint64_t seed);

// 3-uniform blow-up: classes c0..c-1, edge {u,v,w} iff the class triple
// (with repetition, sorted) is in a fixed pattern.
Hypergraph triadic_blowup(int n, int classes, std::uint64_t pattern_seed);

// name-based lookup used by the sweep: family(name, n, seed)
Graph make_family(const std::string& name, int n, std::uint64_t seed);
std::vector<std::string> family_names();

}  // namespace vcreg
