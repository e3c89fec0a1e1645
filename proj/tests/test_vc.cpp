#include <doctest.h>

#include <random>

#include "vcreg/errors.hpp"
#include "vcreg/families.hpp"
#include "vcreg/set_system.hpp"
#include "vcreg/vc.hpp"

using namespace vcreg;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) { return complete_multipartite(n, n); }

SetSystem random_system(std::mt19937_64& rng, int universe, int members) {
    SetSystem s;
    s.universe = universe;
    for (int i = 0; i < members; ++i) {
        VertexSet a(universe);
        for (int v = 0; v < universe; ++v)
            if (rng() & 1) a.set(v);
        s.family.push_back(a);
    }
    return s;
}

VertexSet make_set(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
}

}  // namespace

TEST_CASE("neighborhood systems") {
    SetSystem e3 = neighborhood_system(Graph(3));
    CHECK(e3.family.size() == 3);
    for (const auto& a : e3.family) CHECK(a.empty());

    SetSystem c5 = neighborhood_system(cycle(5));
    CHECK(c5.family.size() == 5);
    for (const auto& a : c5.family) CHECK(a.count() == 2);

    // 3-uniform with edges {0,1,2}, {0,1,3}: every pair indexes a member
    Hypergraph h = parse_hypergraph("n=4\n0 1 2\n0 1 3\n", 3);
    SetSystem sys = neighborhood_system(h);
    CHECK(sys.family.size() == 6);  // C(4,2)
    // colex pair ranks: (0,1)=0 (0,2)=1 (1,2)=2 (0,3)=3 (1,3)=4 (2,3)=5
    CHECK(sys.family[0] == make_set(4, {2, 3}));
    CHECK(sys.family[1] == make_set(4, {1}));
    CHECK(sys.family[2] == make_set(4, {0}));
    CHECK(sys.family[3] == make_set(4, {1}));
    CHECK(sys.family[4] == make_set(4, {0}));
    CHECK(sys.family[5].empty());
}

TEST_CASE("dual system") {
    SetSystem s;
    s.universe = 2;
    s.family = {make_set(2, {0}), make_set(2, {1})};
    SetSystem d = dual_system(s);
    CHECK(d.universe == 2);
    REQUIRE(d.family.size() == 2);
    CHECK(d.family[0] == make_set(2, {0}));
    CHECK(d.family[1] == make_set(2, {1}));

    SetSystem single;
    single.universe = 3;
    single.family = {make_set(3, {0, 2})};
    SetSystem ds = dual_system(single);
    CHECK(ds.universe == 1);
    CHECK(ds.family.size() == 3);
    for (const auto& a : ds.family) CHECK((a.empty() || a.count() == 1));
}

TEST_CASE("dual of dual") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        SetSystem s = random_system(rng, 2 + int(rng() % 9), 1 + int(rng() % 9));
        // (F*)* equals F after collapsing duplicate members and merging
        // ground elements with identical membership columns
        SetSystem dd = dual_system(dual_system(s));
        SetSystem reduced = atom_reduce(s);
        REQUIRE(dd.family.size() == reduced.family.size());
        for (std::size_t i = 0; i < dd.family.size(); ++i)
            CHECK(dd.family[i] == reduced.family[i]);
    }
}

TEST_CASE("graph neighborhood system is self-dual by adjacency symmetry") {
    std::mt19937_64 rng(17);
    int tested = 0;
    while (tested < 25) {
        int n = 4 + int(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        SetSystem sys = neighborhood_system(g);
        if (dedup(sys).family.size() != sys.family.size()) continue;  // need distinct rows
        SetSystem dual = dual_system(sys);
        REQUIRE(dual.family.size() == std::size_t(n));
        // transpose of a symmetric membership matrix: member v of the dual is
        // exactly N(v) read as row indices
        for (int v = 0; v < n; ++v) CHECK(dual.family[v] == g.adj[v]);
        ++tested;
    }
}

TEST_CASE("is_shattered") {
    SetSystem c5 = neighborhood_system(cycle(5));
    CHECK(is_shattered(c5, VertexSet(5)));  // empty set, nonempty family
    CHECK(is_shattered(c5, make_set(5, {0, 2})));
    CHECK(!is_shattered(c5, make_set(5, {0, 1, 2})));

    SetSystem empty_family;
    empty_family.universe = 4;
    CHECK(!is_shattered(empty_family, VertexSet(4)));
}

TEST_CASE("vc_dimension") {
    CHECK(vc_dimension(neighborhood_system(Graph(4))).dimension == 0);
    for (int n : {3, 5, 8}) {
        CAPTURE(n);
        CHECK(vc_dimension(neighborhood_system(complete(n))).dimension == 1);
    }
    VcResult c5 = vc_dimension(neighborhood_system(cycle(5)));
    CHECK(c5.dimension == 2);
    CHECK(!c5.cap_reached);
    CHECK(c5.witness == std::vector<std::int64_t>{0, 2});  // lexicographically least

    // cap semantics
    VcResult capped = vc_dimension(neighborhood_system(cycle(5)), 1);
    CHECK(capped.dimension == 1);
    CHECK(capped.cap_reached);
}

TEST_CASE("primal shatter values on C5") {
    SetSystem c5 = neighborhood_system(cycle(5));
    CHECK(primal_shatter_value(c5, 0) == 1);
    CHECK(primal_shatter_value(c5, 1) == 2);
    std::vector<std::int64_t> w;
    CHECK(primal_shatter_value(c5, 2, 5'000'000, &w) == 4);
    CHECK(w == std::vector<std::int64_t>{0, 2});
    CHECK_THROWS_AS(primal_shatter_value(c5, 2, 1), Error);  // budget
}

TEST_CASE("sauer_bound") {
    CHECK(sauer_bound(2, 5) == 16);
    CHECK(sauer_bound(0, 7) == 1);
    for (int z = 0; z <= 6; ++z) CHECK(sauer_bound(6, z) == Int(1) << z);
    CHECK(sauer_bound(9, 4) == 16);  // z <= d: full binomial sum
}

TEST_CASE("sauer conformance on random systems") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 30; ++iter) {
        SetSystem s = random_system(rng, 6 + int(rng() % 5), 2 + int(rng() % 10));
        int d = vc_dimension(s, 10).dimension;
        ShatterProfile prof = shatter_profile(s, 5);
        for (int z = 0; z <= 5; ++z) {
            CAPTURE(iter);
            CAPTURE(z);
            CHECK(prof.values[z] <= sauer_bound(d, z));
        }
        // profile values are nondecreasing and capped by 2^z
        for (int z = 1; z <= 5; ++z) {
            CHECK(prof.values[z] >= prof.values[z - 1]);
            CHECK(prof.values[z] <= Int(1) << z);
        }
    }
}

TEST_CASE("dual VC bound 2^d + 1") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 25; ++iter) {
        SetSystem s = random_system(rng, 4 + int(rng() % 9), 2 + int(rng() % 10));
        int d = vc_dimension(s, 10).dimension;
        int dd = vc_dimension(dual_system(s), 10).dimension;
        CHECK(dd <= (1 << d) + 1);
    }
}

TEST_CASE("shattering is hereditary downward") {
    std::mt19937_64 rng(31);
    int found = 0;
    while (found < 15) {
        SetSystem s = random_system(rng, 8, 12);
        VcResult res = vc_dimension(s, 6);
        if (res.dimension < 2) continue;
        ++found;
        VertexSet t(8);
        for (auto v : res.witness) t.set(v);
        REQUIRE(is_shattered(s, t));
        // drop each element in turn
        for (auto v : res.witness) {
            VertexSet sub = t;
            sub.reset(v);
            CHECK(is_shattered(s, sub));
        }
    }
}

TEST_CASE("atom reduction preserves VC-dimension") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 40; ++iter) {
        SetSystem s = random_system(rng, 3 + int(rng() % 8), 1 + int(rng() % 8));
        SetSystem r = atom_reduce(s);
        CHECK(vc_dimension(r, 10).dimension == vc_dimension(s, 10).dimension);
    }
    // blow-up families reduce to their base structure
    Graph blown = complete_multipartite(60, 4);
    SetSystem sys = neighborhood_system(blown);
    SetSystem r = atom_reduce(sys);
    CHECK(r.universe == 4);
    CHECK(vc_dimension(r, 10).dimension ==
          vc_dimension(neighborhood_system(complete_multipartite(8, 4)), 10).dimension);
}

TEST_CASE("is_shattered refuses oversized trace sets") {
    SetSystem s;
    s.universe = 40;
    s.family = {VertexSet::full(40)};
    CHECK_THROWS_AS(is_shattered(s, VertexSet::full(40)), Error);
}
