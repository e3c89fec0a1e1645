#include <doctest.h>

#include <random>

#include "vcreg/errors.hpp"
#include "vcreg/graph.hpp"
#include "vcreg/families.hpp"

using namespace vcreg;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// brute-force cross count over the full product, independent of the
// bitset/edge-scan routes
std::int64_t cross_oracle(const Hypergraph& h, const std::vector<VertexSet>& parts) {
    std::vector<std::vector<int>> mem;
    for (const auto& p : parts) mem.push_back(p.members_int());
    std::vector<std::size_t> idx(parts.size(), 0);
    std::int64_t count = 0;
    while (true) {
        std::vector<int> tuple;
        for (std::size_t i = 0; i < idx.size(); ++i) tuple.push_back(mem[i][idx[i]]);
        std::sort(tuple.begin(), tuple.end());
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            distinct &= tuple[i] != tuple[i + 1];
        if (distinct && h.has_edge(tuple)) ++count;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == mem[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return count;
}

}  // namespace

TEST_CASE("parse_graph basics") {
    Graph g = parse_graph("n=3\n0 1\n1 2\n");
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));

    Graph empty = parse_graph("n=2\n");
    CHECK(empty.n == 2);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(parse_graph("n=3\n0 0\n"), Error);
    CHECK_THROWS_AS(parse_graph("n=3\n0 5\n"), Error);
    CHECK_THROWS_AS(parse_graph("0 1\n"), Error);

    // duplicates collapse silently
    Graph dup = parse_graph("n=3\n0 1\n1 0\n0 1\n");
    CHECK(dup.edge_count() == 1);

    // comments and blank lines
    Graph c = parse_graph("# header comment\nn=4\n0 1 # tail\n\n2 3\n");
    CHECK(c.edge_count() == 2);
}

TEST_CASE("graph invariants after parsing") {
    for (auto text : {"n=5\n0 1\n1 2\n2 3\n3 4\n4 0\n", "n=1\n", "n=6\n0 5\n1 4\n"}) {
        Graph g = parse_graph(text);
        CHECK_NOTHROW(g.check_invariants());
    }
}

TEST_CASE("parse_hypergraph") {
    Hypergraph h = parse_hypergraph("n=4\n0 1 2\n0 1 3\n", 3);
    CHECK(h.edge_count() == 2);
    CHECK(h.has_edge({0, 1, 2}));
    CHECK(!h.has_edge({1, 2, 3}));
    CHECK_THROWS_AS(parse_hypergraph("n=4\n0 1 1\n", 3), Error);
    CHECK_THROWS_AS(parse_hypergraph("n=4\n0 1\n", 3), Error);

    // k=2 reduction agrees with the graph parser
    Hypergraph h2 = parse_hypergraph("n=3\n0 1\n1 2\n", 2);
    Graph g = parse_graph("n=3\n0 1\n1 2\n");
    CHECK(h2.to_graph().edge_count() == g.edge_count());
    CHECK(Hypergraph::from_graph(g).edge_count() == 2);
}

TEST_CASE("tuple_neighborhood") {
    Hypergraph h = parse_hypergraph("n=4\n0 1 2\n0 1 3\n", 3);
    VertexSet n01 = h.tuple_neighborhood({0, 1});
    CHECK(n01.count() == 2);
    CHECK(n01.test(2));
    CHECK(n01.test(3));
    CHECK(h.tuple_neighborhood({2, 3}).empty());
    CHECK_THROWS_AS(h.tuple_neighborhood({1, 1}), Error);

    Graph c5 = cycle(5);
    Hypergraph hc5 = Hypergraph::from_graph(c5);
    VertexSet n0 = hc5.tuple_neighborhood({0});
    CHECK(n0.test(1));
    CHECK(n0.test(4));
    CHECK(n0.count() == 2);
    // no member of the tuple appears in the result
    CHECK(!n0.test(0));
}

TEST_CASE("density examples") {
    // K_{3,3} across its two sides
    Graph kb = complete_multipartite(6, 2);
    VertexSet a(6), b(6);
    for (int i = 0; i < 3; ++i) a.set(i);
    for (int i = 3; i < 6; ++i) b.set(i);
    CHECK(density(kb, a, b) == Rat(1));

    Graph empty(6);
    CHECK(density(empty, a, b) == Rat(0));

    // C4 = 0-1-2-3-0, parts {0,2} vs {1,3}: all four cross pairs are edges
    Graph c4 = cycle(4);
    VertexSet evens(4), odds(4);
    evens.set(0);
    evens.set(2);
    odds.set(1);
    odds.set(3);
    CHECK(density(c4, evens, odds) == Rat(1));

    // parts {0,1},{2,3}: cross edges 1-2 and 3-0 only
    VertexSet lo(4), hi(4);
    lo.set(0);
    lo.set(1);
    hi.set(2);
    hi.set(3);
    CHECK(density(c4, lo, hi) == Rat(1, 2));
    CHECK(!is_epsilon_homogeneous(c4, lo, hi, Rat(1, 5)));
    CHECK(is_epsilon_homogeneous(c4, evens, odds, Rat(1, 5)));

    // strictness at the boundary: density exactly eps is not homogeneous
    Graph one(4);
    one.add_edge(0, 2);
    CHECK(density(one, lo, hi) == Rat(1, 4));
    CHECK(!is_epsilon_homogeneous(one, lo, hi, Rat(1, 4)));

    VertexSet overlap(4);
    overlap.set(0);
    overlap.set(2);
    CHECK_THROWS_AS(density(c4, lo, overlap), Error);
}

TEST_CASE("density times part sizes equals brute-force cross count") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 6 + int(rng() % 6);
        int k = 2 + int(rng() % 2);
        Hypergraph h(k, n);
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        for (int e = 0; e < n; ++e) {
            std::shuffle(verts.begin(), verts.end(), rng);
            h.add_edge_unchecked(std::vector<int>(verts.begin(), verts.begin() + k));
        }
        h.finalize();
        // k disjoint nonempty parts
        std::shuffle(verts.begin(), verts.end(), rng);
        std::vector<VertexSet> parts(k, VertexSet(n));
        for (int i = 0; i < n; ++i) parts[i % k].set(verts[i]);
        Rat d = density(h, parts);
        Int prod = 1;
        for (const auto& p : parts) prod *= p.count();
        CHECK(Rat(Int(cross_oracle(h, parts)), prod) == d);
    }
}

TEST_CASE("symmetric difference") {
    VertexSet a(6), b(6);
    a.set(1);
    a.set(2);
    a.set(3);
    b.set(3);
    b.set(4);
    CHECK(symmetric_difference_size(a, a) == 0);
    CHECK(symmetric_difference_size(a, b) == 3);
    VertexSet c(7);
    CHECK_THROWS_AS(symmetric_difference_size(a, c), Error);

    // adjacent vertices of a complete graph: N(u) (tri) N(v) = {u, v}
    Graph k5 = complete_multipartite(5, 5);
    CHECK(symmetric_difference_size(k5.adj[0], k5.adj[1]) == 2);
}

TEST_CASE("symmetric difference triangle inequality") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        int u = 1 + int(rng() % 40);
        VertexSet a(u), b(u), c(u);
        for (int i = 0; i < u; ++i) {
            if (rng() & 1) a.set(i);
            if (rng() & 1) b.set(i);
            if (rng() & 1) c.set(i);
        }
        CHECK(symmetric_difference_size(a, c) <=
              symmetric_difference_size(a, b) + symmetric_difference_size(b, c));
    }
}

TEST_CASE("graph file round trip") {
    Graph g = threshold_blocks(24, 4);
    Graph h = parse_graph(format_graph(g));
    CHECK(h.n == g.n);
    for (int v = 0; v < g.n; ++v) CHECK(h.adj[v] == g.adj[v]);
}
