#pragma once

#include <array>
#include <optional>
#include <vector>

#include "vcreg/graph.hpp"

namespace vcreg {

// Canonical union/join decomposition tree of a cograph.  Adjacent internal
// nodes never share a label and every internal node has >= 2 children.
struct Cotree {
    enum class Label { Leaf, Union, Join };
    struct Node {
        Label label = Label::Leaf;
        int vertex = -1;  // leaves only
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;
    int n = 0;
};

struct CographCheck {
    bool ok = false;
    std::optional<Cotree> tree;           // present iff ok
    std::array<int, 4> p4{-1, -1, -1, -1};  // induced path a-b-c-d iff !ok
};

// Recursive complementation-connectivity decomposition: a graph on >= 2
// vertices is a cograph iff it or its complement is disconnected and all
// components / co-components are cographs.  On refusal the witness is an
// induced 4-vertex path, found by greedy minimalization.
CographCheck is_cograph(const Graph& g);

// Decision only, over an induced vertex subset; no tree, no witness.
bool is_cograph_mask(const Graph& g, const VertexSet& mask);

// Graph represented by a cotree (vertices = leaf labels).
Graph cotree_graph(const Cotree& t);

struct CliqueStable {
    VertexSet clique;
    VertexSet stable;
};

// Maximum clique and maximum independent set by tree DP:
// JOIN adds cliques and maxes stables, UNION the other way round.
CliqueStable cotree_clique_stable(const Cotree& t, int n);

// Exact maximum clique / independent set by branch and bound (internal use
// has no size guard; brute_force_extremes enforces the desk-scale budgets).
int max_clique_exact(const Graph& g, VertexSet* witness = nullptr);
int max_independent_set_exact(const Graph& g, VertexSet* witness = nullptr);

// Largest vertex set inducing a cograph, by subset enumeration.
VertexSet max_induced_cograph_exact(const Graph& g);

struct Extremes {
    int clique = 0;
    int stable = 0;
    int cograph = -1;  // -1 when n > 14 (subset enumeration budget)
    VertexSet clique_set, stable_set, cograph_set;
};

// Oracle for the acceptance tests: n <= 20 (cliques / independent sets),
// induced-cograph part only computed for n <= 14.
Extremes brute_force_extremes(const Graph& g);

// components of g (or of its complement) restricted to mask
std::vector<VertexSet> components(const Graph& g, const VertexSet& mask,
                                  bool in_complement);

}  // namespace vcreg
