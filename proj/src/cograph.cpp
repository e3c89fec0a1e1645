#include "vcreg/cograph.hpp"

#include <algorithm>

#include "vcreg/errors.hpp"

namespace vcreg {

std::vector<VertexSet> components(const Graph& g, const VertexSet& mask,
                                  bool in_complement) {
    std::vector<VertexSet> out;
    VertexSet unvisited = mask;
    std::vector<std::int64_t> queue;
    for (std::int64_t seed = unvisited.first(); seed >= 0; seed = unvisited.first()) {
        VertexSet comp(g.n);
        comp.set(seed);
        unvisited.reset(seed);
        queue.assign(1, seed);
        while (!queue.empty()) {
            std::int64_t v = queue.back();
            queue.pop_back();
            VertexSet reach = unvisited;
            if (in_complement)
                reach.and_not(g.adj[v]);
            else
                reach &= g.adj[v];
            comp |= reach;
            unvisited.and_not(reach);
            reach.for_each([&](std::int64_t u) { queue.push_back(u); });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// returns node id, or -1 with *fail set to the offending connected,
// co-connected subset
int decompose(const Graph& g, const VertexSet& mask, Cotree* tree, VertexSet* fail) {
    std::int64_t sz = mask.count();
    if (sz == 1) {
        if (!tree) return 0;
        tree->nodes.push_back({Cotree::Label::Leaf, int(mask.first()), {}});
        return int(tree->nodes.size()) - 1;
    }
    auto comps = components(g, mask, false);
    bool join = false;
    if (comps.size() == 1) {
        comps = components(g, mask, true);
        join = true;
        if (comps.size() == 1) {
            if (fail) *fail = mask;
            return -1;
        }
    }
    std::vector<int> children;
    children.reserve(comps.size());
    for (const auto& c : comps) {
        int id = decompose(g, c, tree, fail);
        if (id < 0) return -1;
        children.push_back(id);
    }
    if (!tree) return 0;
    tree->nodes.push_back(
        {join ? Cotree::Label::Join : Cotree::Label::Union, -1, std::move(children)});
    return int(tree->nodes.size()) - 1;
}

std::array<int, 4> order_p4(const Graph& g, const VertexSet& mask) {
    auto ids = mask.members_int();
    // endpoints have degree 1 inside the path
    std::array<int, 4> deg{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && g.has_edge(ids[i], ids[j])) ++deg[i];
    int a = -1;
    for (int i = 0; i < 4; ++i)
        if (deg[i] == 1 && a < 0) a = i;
    int b = -1;
    for (int j = 0; j < 4; ++j)
        if (j != a && g.has_edge(ids[a], ids[j])) b = j;
    int c = -1;
    for (int j = 0; j < 4; ++j)
        if (j != a && j != b && g.has_edge(ids[b], ids[j])) c = j;
    int d = 6 - a - b - c;
    return {ids[a], ids[b], ids[c], ids[d]};
}

}  // namespace

bool is_cograph_mask(const Graph& g, const VertexSet& mask) {
    if (mask.empty()) return true;
    return decompose(g, mask, nullptr, nullptr) >= 0;
}

CographCheck is_cograph(const Graph& g) {
    CographCheck res;
    if (g.n == 0) {
        res.ok = true;
        res.tree = Cotree{};
        return res;
    }
    Cotree tree;
    tree.n = g.n;
    VertexSet fail(g.n);
    int root = decompose(g, VertexSet::full(g.n), &tree, &fail);
    if (root >= 0) {
        tree.root = root;
        res.ok = true;
        res.tree = std::move(tree);
        return res;
    }
    // Greedy minimalization: after one pass, deleting any remaining vertex
    // leaves a cograph, and a vertex-minimal non-cograph is exactly a P4.
    VertexSet witness = fail;
    auto ids = witness.members();
    for (auto v : ids) {
        witness.reset(v);
        if (is_cograph_mask(g, witness)) witness.set(v);
    }
    if (witness.count() != 4) throw Error("internal: minimal non-cograph is not a P4");
    res.p4 = order_p4(g, witness);
    return res;
}

Graph cotree_graph(const Cotree& t) {
    Graph g(t.n);
    // leaves under each node
    std::vector<VertexSet> leaves(t.nodes.size(), VertexSet(t.n));
    // nodes were appended children-first, so a forward pass sees children done
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        if (node.label == Cotree::Label::Leaf) {
            leaves[i].set(node.vertex);
            continue;
        }
        for (int c : node.children) leaves[i] |= leaves[c];
        if (node.label == Cotree::Label::Join) {
            for (std::size_t a = 0; a < node.children.size(); ++a)
                for (std::size_t b = a + 1; b < node.children.size(); ++b) {
                    leaves[node.children[a]].for_each([&](std::int64_t u) {
                        leaves[node.children[b]].for_each(
                            [&](std::int64_t v) { g.add_edge(int(u), int(v)); });
                    });
                }
        }
    }
    return g;
}

CliqueStable cotree_clique_stable(const Cotree& t, int n) {
    std::vector<CliqueStable> dp(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        if (node.label == Cotree::Label::Leaf) {
            dp[i].clique = VertexSet(n);
            dp[i].clique.set(node.vertex);
            dp[i].stable = dp[i].clique;
            continue;
        }
        CliqueStable acc{VertexSet(n), VertexSet(n)};
        if (node.label == Cotree::Label::Join) {
            for (int c : node.children) {
                acc.clique |= dp[c].clique;  // cliques concatenate across a join
                if (dp[c].stable.count() > acc.stable.count()) acc.stable = dp[c].stable;
            }
        } else {
            for (int c : node.children) {
                acc.stable |= dp[c].stable;  // stables concatenate across a union
                if (dp[c].clique.count() > acc.clique.count()) acc.clique = dp[c].clique;
            }
        }
        dp[i] = std::move(acc);
    }
    if (t.root < 0) return {VertexSet(n), VertexSet(n)};
    return dp[t.root];
}

namespace {

void clique_rec(const Graph& g, VertexSet& cur, const VertexSet& cand,
                std::int64_t cur_size, std::int64_t& best, VertexSet* best_set) {
    if (cur_size + cand.count() <= best) return;
    if (cand.empty()) {
        best = cur_size;
        if (best_set) *best_set = cur;
        return;
    }
    VertexSet rest = cand;
    for (std::int64_t v = rest.first(); v >= 0; v = rest.first()) {
        if (cur_size + rest.count() <= best) return;
        rest.reset(v);
        cur.set(v);
        VertexSet next = rest;
        next &= g.adj[v];
        clique_rec(g, cur, next, cur_size + 1, best, best_set);
        cur.reset(v);
    }
}

}  // namespace

int max_clique_exact(const Graph& g, VertexSet* witness) {
    std::int64_t best = 0;
    VertexSet cur(g.n);
    if (witness) *witness = VertexSet(g.n);
    clique_rec(g, cur, VertexSet::full(g.n), 0, best, witness);
    return int(best);
}

int max_independent_set_exact(const Graph& g, VertexSet* witness) {
    return max_clique_exact(g.complement(), witness);
}

VertexSet max_induced_cograph_exact(const Graph& g) {
    if (g.n > 14) throw Error("induced-cograph enumeration limited to n <= 14");
    if (g.n == 0) return VertexSet(0);
    for (int size = g.n; size >= 1; --size) {
        // lexicographically first subset of each size wins
        std::vector<int> c(size);
        for (int i = 0; i < size; ++i) c[i] = i;
        while (true) {
            VertexSet mask(g.n);
            for (int v : c) mask.set(v);
            if (is_cograph_mask(g, mask)) return mask;
            int i = size - 1;
            while (i >= 0 && c[i] == g.n - size + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return VertexSet(g.n);  // unreachable: singletons are cographs
}

Extremes brute_force_extremes(const Graph& g) {
    if (g.n > 20) throw Error("brute-force extremes limited to n <= 20");
    Extremes e;
    e.clique = max_clique_exact(g, &e.clique_set);
    e.stable = max_independent_set_exact(g, &e.stable_set);
    if (g.n <= 14) {
        e.cograph_set = max_induced_cograph_exact(g);
        e.cograph = int(e.cograph_set.count());
    }
    return e;
}

}  // namespace vcreg
