#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vcreg/bitset.hpp"
#include "vcreg/rational.hpp"

namespace vcreg {

// Simple undirected graph, adjacency stored as one VertexSet per vertex.
// Invariants: symmetric adjacency, no self-loops.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;
    explicit Graph(int nv) : n(nv), adj(nv, VertexSet(nv)) {}

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    std::int64_t degree(int v) const { return adj[v].count(); }
    std::int64_t edge_count() const;

    Graph complement() const;
    Graph induced(const VertexSet& verts) const;  // vertices renumbered in order

    void check_invariants() const;  // throws Error on violation
};

// k-uniform hypergraph; edges kept as sorted k-tuples in one flat array,
// lexicographically ordered and deduplicated.
struct Hypergraph {
    int k = 2;
    int n = 0;
    std::vector<int> flat;  // m*k vertex indices

    Hypergraph() = default;
    Hypergraph(int uniformity, int nv) : k(uniformity), n(nv) {}

    // the memoized neighborhoods are a cache, never transferred
    Hypergraph(const Hypergraph& o) : k(o.k), n(o.n), flat(o.flat) {}
    Hypergraph(Hypergraph&& o) noexcept : k(o.k), n(o.n), flat(std::move(o.flat)) {}
    Hypergraph& operator=(const Hypergraph& o) {
        k = o.k;
        n = o.n;
        flat = o.flat;
        memo_.clear();
        return *this;
    }
    Hypergraph& operator=(Hypergraph&& o) noexcept {
        k = o.k;
        n = o.n;
        flat = std::move(o.flat);
        memo_.clear();
        return *this;
    }

    std::int64_t edge_count() const { return k ? std::int64_t(flat.size()) / k : 0; }
    const int* edge(std::int64_t i) const { return flat.data() + i * k; }

    // edges must be added via this builder, then finalize() sorts + dedups
    void add_edge_unchecked(const std::vector<int>& e) {
        flat.insert(flat.end(), e.begin(), e.end());
    }
    std::int64_t finalize();  // returns number of duplicates collapsed

    bool has_edge(const std::vector<int>& sorted_tuple) const;

    static Hypergraph from_graph(const Graph& g);
    Graph to_graph() const;  // requires k == 2

    // N(t) for a (k-1)-tuple of distinct vertices; memoized per queried tuple
    VertexSet tuple_neighborhood(const std::vector<int>& t) const;

    void check_invariants() const;

private:
    mutable std::unordered_map<std::uint64_t, VertexSet> memo_;
    mutable std::mutex memo_mutex_;
};

Graph parse_graph(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text, int k);

std::string format_graph(const Graph& g);
std::string format_graph(const Hypergraph& h);

Graph load_graph_file(const std::string& path);
Hypergraph load_hypergraph_file(const std::string& path, int k);

// |A (triangle) B|; throws on universe mismatch
std::int64_t symmetric_difference_size(const VertexSet& a, const VertexSet& b);

// Density across k pairwise disjoint nonempty parts: |E(V_1,...,V_k)| / prod |V_i|.
// Exact rational; the numerator counts edges with exactly one vertex per part.
Rat density(const Hypergraph& h, const std::vector<VertexSet>& parts);
Rat density(const Graph& g, const VertexSet& a, const VertexSet& b);

std::int64_t cross_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b);
std::int64_t cross_edge_count(const Hypergraph& h, const std::vector<VertexSet>& parts);

// density < eps or density > 1-eps, strict, in exact rationals
bool is_epsilon_homogeneous(const Hypergraph& h, const std::vector<VertexSet>& parts,
                            const Rat& eps);
bool is_epsilon_homogeneous(const Graph& g, const VertexSet& a, const VertexSet& b,
                            const Rat& eps);

}  // namespace vcreg
