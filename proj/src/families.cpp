#include "vcreg/families.hpp"

#include <algorithm>
#include <random>

#include "vcreg/errors.hpp"

namespace vcreg {

Graph threshold_blocks(int n, int blocks) {
    if (blocks < 1 || blocks > n) throw Error("bad block count");
    // creation order = vertex order; edge (u,v), u<v, iff v was dominating
    std::vector<char> dominating(n, 0);
    int per = n / blocks;
    for (int b = 0; b < blocks; ++b) {
        int end = (b + 1 == blocks) ? n - 1 : (b + 1) * per - 1;
        dominating[end] = 1;
    }
    Graph g(n);
    for (int v = 0; v < n; ++v)
        if (dominating[v])
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

Graph threshold_random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        if (rng() & 1)
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

Graph clique_union(int n, int cliques) {
    if (cliques < 1 || cliques > n) throw Error("bad clique count");
    Graph g(n);
    int per = n / cliques, extra = n % cliques;
    int start = 0;
    for (int c = 0; c < cliques; ++c) {
        int size = per + (c < extra ? 1 : 0);
        for (int i = start; i < start + size; ++i)
            for (int j = i + 1; j < start + size; ++j) g.add_edge(i, j);
        start += size;
    }
    return g;
}

Graph complete_multipartite(int n, int r) {
    if (r < 1 || r > n) throw Error("bad class count");
    std::vector<int> cls(n);
    int per = n / r, extra = n % r;
    int start = 0;
    for (int c = 0; c < r; ++c) {
        int size = per + (c < extra ? 1 : 0);
        for (int i = start; i < start + size; ++i) cls[i] = c;
        start += size;
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v]) g.add_edge(u, v);
    return g;
}

Graph incidence_blowup(int n) {
    // triangle incidence: point i lies on lines i and (i+2) mod 3
    const int classes = 6;
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = v % classes;
    auto incident = [](int point, int line) {
        return line == point || line == (point + 2) % 3;
    };
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int cu = cls[u], cv = cls[v];
            if (cu / 3 == cv / 3) continue;  // same side
            int point = cu < 3 ? cu : cv;
            int line = cu < 3 ? cv - 3 : cu - 3;
            if (incident(point, line)) g.add_edge(u, v);
        }
    return g;
}

namespace {

void balanced_rec(Graph& g, int lo, int hi, bool join) {
    if (hi - lo <= 1) return;
    int mid = (lo + hi) / 2;
    if (join)
        for (int u = lo; u < mid; ++u)
            for (int v = mid; v < hi; ++v) g.add_edge(u, v);
    balanced_rec(g, lo, mid, !join);
    balanced_rec(g, mid, hi, !join);
}

}  // namespace

Graph balanced_cograph(int n) {
    Graph g(n);
    balanced_rec(g, 0, n, true);
    return g;
}

namespace {

int cotree_rec(Cotree& t, int lo, int hi, bool join, std::mt19937_64& rng) {
    if (hi - lo == 1) {
        t.nodes.push_back({Cotree::Label::Leaf, lo, {}});
        return int(t.nodes.size()) - 1;
    }
    int span = hi - lo;
    int max_children = std::min(span, 4);
    std::uniform_int_distribution<int> pick(2, max_children);
    int children = pick(rng);
    // random split points
    std::vector<int> cuts{lo, hi};
    std::uniform_int_distribution<int> inner(lo + 1, hi - 1);
    while (int(cuts.size()) < children + 1) {
        int c = inner(rng);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> ids;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        ids.push_back(cotree_rec(t, cuts[i], cuts[i + 1], !join, rng));
    t.nodes.push_back({join ? Cotree::Label::Join : Cotree::Label::Union, -1, ids});
    return int(t.nodes.size()) - 1;
}

}  // namespace

Cotree random_cotree(int n, std::uint64_t seed) {
    if (n < 1) throw Error("cotree needs at least one leaf");
    std::mt19937_64 rng(seed);
    Cotree t;
    t.n = n;
    bool join = rng() & 1;
    t.root = cotree_rec(t, 0, n, join, rng);
    return t;
}

Graph multipartite_noisy(int n, int p, int del_permille, std::uint64_t seed) {
    Graph g = complete_multipartite(n, p);
    if (del_permille <= 0) return g;
    std::mt19937_64 rng(seed);
    std::uint64_t thr =
        (std::uint64_t)((__uint128_t(del_permille) << 64) / 1000);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) && rng() < thr) {
                g.adj[u].reset(v);
                g.adj[v].reset(u);
            }
    return g;
}

Hypergraph triadic_blowup(int n, int classes, std::uint64_t pattern_seed) {
    if (classes < 2) throw Error("need at least two classes");
    std::mt19937_64 rng(pattern_seed);
    // pattern over sorted class triples with repetition
    std::vector<std::vector<int>> chosen;
    for (int a = 0; a < classes; ++a)
        for (int b = a; b < classes; ++b)
            for (int c = b; c < classes; ++c)
                if (rng() & 1) chosen.push_back({a, b, c});
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = v % classes;
    Hypergraph h(3, n);
    std::vector<int> key(3);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                key = {cls[u], cls[v], cls[w]};
                std::sort(key.begin(), key.end());
                if (std::find(chosen.begin(), chosen.end(), key) != chosen.end())
                    h.add_edge_unchecked({u, v, w});
            }
    h.finalize();
    return h;
}

Graph make_family(const std::string& name, int n, std::uint64_t seed) {
    if (name == "threshold8") return threshold_blocks(n, 8);
    if (name == "threshold4") return threshold_blocks(n, 4);
    if (name == "threshold3") return threshold_blocks(n, 3);
    if (name == "cliques8") return clique_union(n, 8);
    if (name == "cliques16") return clique_union(n, 16);
    if (name == "multipartite5") return complete_multipartite(n, 5);
    if (name == "incidence") return incidence_blowup(n);
    if (name == "balanced_cograph") return balanced_cograph(n);
    if (name == "threshold_random") return threshold_random(n, seed);
    throw Error("unknown family: " + name);
}

std::vector<std::string> family_names() {
    return {"threshold8",    "threshold4", "threshold3",       "cliques8",
            "cliques16",     "multipartite5", "incidence",     "balanced_cograph",
            "threshold_random"};
}

}  // namespace vcreg
