#include <doctest.h>

#include <functional>
#include <random>

#include "vcreg/errors.hpp"
#include "vcreg/families.hpp"
#include "vcreg/randgen.hpp"
#include "vcreg/regularity.hpp"

using namespace vcreg;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) { return complete_multipartite(n, n); }

Partition one_part(int n) {
    Partition p(n, 1);
    std::fill(p.part_of.begin(), p.part_of.end(), 0);
    return p;
}

}  // namespace

TEST_CASE("separation_delta") {
    CHECK(separation_delta(100, 2, Rat(1, 5)) == Rat(1, 4));
    CHECK(separation_delta(10, 3, Rat(1, 5)) == Rat(1, 20));
    CHECK_THROWS_AS(separation_delta(100, 2, Rat(1, 4)), Error);
    CHECK_THROWS_AS(separation_delta(100, 2, Rat(0)), Error);
    CHECK_THROWS_AS(separation_delta(100, 2, Rat(3, 10)), Error);
}

TEST_CASE("greedy_packing basics") {
    // empty graph: all neighborhoods identical
    Graph e8(8);
    StarView sv = star_view(e8);
    PackingResult p = greedy_packing(sv, Rat(1));
    CHECK(p.centers == std::vector<int>{0});

    // K_{m,m}: one center per side
    Graph kb = complete_multipartite(10, 2);
    StarView svb = star_view(kb);
    PackingResult pb = greedy_packing(svb, Rat(1));
    CHECK(pb.centers == std::vector<int>{0, 5});

    // delta above twice the max degree: a single center
    Graph c = cycle(12);
    StarView svc = star_view(c);
    PackingResult pc = greedy_packing(svc, Rat(5));
    CHECK(pc.centers == std::vector<int>{0});
}

TEST_CASE("packing invariants: separation and maximality") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 10 + int(rng() % 30);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        StarView sv = star_view(g);
        Rat delta(1 + int(rng() % 6));
        PackingResult p = greedy_packing(sv, delta);
        for (std::size_t i = 0; i < p.centers.size(); ++i)
            for (std::size_t j = i + 1; j < p.centers.size(); ++j)
                CHECK(Rat(star_distance(sv, p.centers[i], p.centers[j])) >= delta);
        for (int v = 0; v < n; ++v) {
            bool covered = false;
            for (int c : p.centers)
                covered = covered || Rat(star_distance(sv, v, c)) < delta;
            CHECK(covered);
        }
        // Voronoi parts have diameter < 2 delta
        Partition q = voronoi_partition(sv, p);
        auto parts = q.parts();
        for (const auto& part : parts) {
            auto mem = part.members_int();
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j)
                    CHECK(Rat(star_distance(sv, mem[i], mem[j])) < 2 * delta);
        }
    }
}

TEST_CASE("voronoi_partition shapes") {
    Graph kb = complete_multipartite(10, 2);
    StarView sv = star_view(kb);
    Partition p = voronoi_partition(sv, greedy_packing(sv, Rat(1)));
    CHECK(p.K == 2);
    for (int v = 0; v < 10; ++v) CHECK(p.part_of[v] == (v < 5 ? 0 : 1));

    // single center: one part
    Graph e6(6);
    StarView empty_sv = star_view(e6);
    Partition single = voronoi_partition(empty_sv, greedy_packing(empty_sv, Rat(1)));
    CHECK(single.K == 1);

    // all neighborhoods pairwise distinct at delta = 1: identity partition
    Graph kn = complete(7);
    StarView svn = star_view(kn);
    Partition ident = voronoi_partition(svn, greedy_packing(svn, Rat(1)));
    CHECK(ident.K == 7);
    for (int v = 0; v < 7; ++v) CHECK(ident.part_of[v] == v);
}

TEST_CASE("equitable_refinement") {
    RefinedPartition r = equitable_refinement(one_part(10), 5);
    CHECK(r.part.K == 5);
    CHECK(r.part.equitable());
    for (auto b : r.pure) CHECK(b == 1);

    // two source parts of sizes 7 and 3
    Partition q(10, 2);
    for (int v = 0; v < 10; ++v) q.part_of[v] = v < 7 ? 0 : 1;
    RefinedPartition r2 = equitable_refinement(q, 5);
    CHECK(r2.part.K == 5);
    CHECK(r2.part.equitable());
    int pure_from_first = 0;
    auto parts = r2.part.parts();
    for (int i = 0; i < 5; ++i) {
        bool in_first = true;
        parts[i].for_each([&](std::int64_t v) { in_first &= v < 7; });
        if (r2.pure[i] && in_first) ++pure_from_first;
    }
    CHECK(pure_from_first >= 3);

    // K = n: singletons, all pure
    RefinedPartition r3 = equitable_refinement(q, 10);
    CHECK(r3.part.K == 10);
    for (auto b : r3.pure) CHECK(b == 1);

    CHECK_THROWS_AS(equitable_refinement(one_part(4), 5), Error);
}

TEST_CASE("equitable_refinement mixed-part bound") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 10 + int(rng() % 50);
        int src = 1 + int(rng() % 6);
        Partition q(n, src);
        for (int v = 0; v < n; ++v) q.part_of[v] = int(rng() % src);
        // drop empty source parts by renumbering
        std::vector<int> remap(src, -1);
        int used = 0;
        for (int v = 0; v < n; ++v) {
            if (remap[q.part_of[v]] < 0) remap[q.part_of[v]] = used++;
            q.part_of[v] = remap[q.part_of[v]];
        }
        q.K = used;
        int K = 1 + int(rng() % n);
        RefinedPartition r = equitable_refinement(q, K);
        CHECK(r.part.K == K);
        CHECK(r.part.equitable());
        std::int64_t mixed_vertices = 0;
        auto sizes = r.part.part_sizes();
        for (int i = 0; i < K; ++i)
            if (!r.pure[i]) mixed_vertices += sizes[i];
        std::int64_t ceil_nk = (n + K - 1) / K;
        CHECK(mixed_vertices <= std::int64_t(q.K) * ceil_nk);
    }
}

TEST_CASE("homogeneity_report") {
    // complete graph: every pair density 1
    Graph kn = complete(12);
    RefinedPartition r = equitable_refinement(one_part(12), 4);
    RegularityReport rep = homogeneity_report(kn, r.part, Rat(1, 10), &r.pure);
    CHECK(rep.fraction == Rat(0));
    CHECK(rep.tuple_count == 6);
    CHECK(rep.mixed_tuples == 0);

    // C4 with parts {0,1},{2,3}: single tuple of density 1/2
    Graph c4 = cycle(4);
    Partition p(4, 2);
    p.part_of = {0, 0, 1, 1};
    RegularityReport rc4 = homogeneity_report(c4, p, Rat(1, 5));
    CHECK(rc4.tuple_count == 1);
    CHECK(rc4.non_homogeneous == 1);
    CHECK(rc4.fraction == Rat(1));
    REQUIRE(rc4.witnesses.size() == 1);
    // witness re-verifies via the core predicate
    auto parts = p.parts();
    CHECK(!is_epsilon_homogeneous(c4, parts[rc4.witnesses[0][0]],
                                  parts[rc4.witnesses[0][1]], Rat(1, 5)));

    // K < k: no tuples, fraction 0
    Hypergraph h3 = parse_hypergraph("n=6\n0 1 2\n3 4 5\n", 3);
    Partition p2(6, 2);
    p2.part_of = {0, 0, 0, 1, 1, 1};
    RegularityReport r3 = homogeneity_report(h3, p2, Rat(1, 10));
    CHECK(r3.tuple_count == 0);
    CHECK(r3.fraction == Rat(0));
}

TEST_CASE("flip pair counting") {
    // complete bipartite between the parts: no non-edge e'
    Graph kb = complete_multipartite(8, 2);
    VertexSet a(8), b(8);
    for (int i = 0; i < 4; ++i) a.set(i);
    for (int i = 4; i < 8; ++i) b.set(i);
    CHECK(count_flip_pairs(kb, a, b) == 0);

    // single edge ac in a 2+2 instance: exactly the pairs (ac,ad), (ac,bc)
    Graph g(4);
    g.add_edge(0, 2);
    VertexSet w1(4), w2(4);
    w1.set(0);
    w1.set(1);
    w2.set(2);
    w2.set(3);
    CHECK(count_flip_pairs(g, w1, w2) == 2);

    // empty between parts
    Graph e(4);
    CHECK(count_flip_pairs(e, w1, w2) == 0);

    // unequal sizes rejected
    VertexSet w3(4);
    w3.set(3);
    CHECK_THROWS_AS(count_flip_pairs(g, w1, w3), Error);
}

TEST_CASE("flip pair lemma on random instances") {
    std::mt19937_64 rng(47);
    const Rat epss[] = {Rat(1, 10), Rat(1, 5), Rat(1, 4) - Rat(1, 100)};
    for (int k : {2, 3}) {
        for (int iter = 0; iter < 60; ++iter) {
            int m = 2 + int(rng() % 7);
            int n = k * m;
            Hypergraph h(k, n);
            std::vector<VertexSet> parts(k, VertexSet(n));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < m; ++j) parts[i].set(i * m + j);
            // random transversal edges
            std::vector<int> tuple(k);
            std::function<void(int)> gen = [&](int pos) {
                if (pos == k) {
                    if (rng() & 1) h.add_edge_unchecked(tuple);
                    return;
                }
                for (int j = 0; j < m; ++j) {
                    tuple[pos] = pos * m + j;
                    gen(pos + 1);
                }
            };
            gen(0);
            h.finalize();
            Int count = count_flip_pairs(h, parts);
            for (const Rat& eps : epss) {
                if (is_epsilon_homogeneous(h, parts, eps)) continue;
                Rat bound = eps * (1 - eps);
                for (int i = 0; i < k + 1; ++i) bound *= m;
                CAPTURE(k);
                CAPTURE(m);
                CHECK(Rat(count) >= bound);
            }
        }
    }
}

TEST_CASE("ultra_strong_partition on the complete graph") {
    // n large enough that delta = eps^2 n / 16 exceeds the distance 2
    UltraStrongResult usp = ultra_strong_partition(complete(1000), Rat(1, 5));
    CHECK(usp.packing.centers.size() == 1);
    CHECK(usp.report.K == 80);
    CHECK(usp.report.fraction == Rat(0));
    CHECK(usp.refined.part.equitable());

    UltraStrongResult empty = ultra_strong_partition(Graph(1000), Rat(1, 5));
    CHECK(empty.report.K == 80);
    CHECK(empty.report.fraction == Rat(0));
}

TEST_CASE("ultra_strong_partition refusals") {
    CHECK_THROWS_AS(ultra_strong_partition(complete(5), Rat(1, 5)), Refusal);
    // dense random graph: every vertex is its own center at this scale, so
    // the literal K = 8k|S|/eps exceeds n and the pipeline refuses loudly
    Graph gnp = sample_gnp(500, Rat(1, 2), 99);
    CHECK_THROWS_AS(ultra_strong_partition(gnp, Rat(1, 5)), Refusal);
    CHECK_THROWS_AS(ultra_strong_partition(complete(100), Rat(1, 3)), Error);
}

TEST_CASE("ultra_strong_partition end-to-end on a structured family") {
    Graph g = threshold_blocks(1200, 3);
    UltraStrongResult usp = ultra_strong_partition(g, Rat(1, 5));
    CHECK(usp.report.K >= 40);  // 8/eps
    CHECK(usp.report.K <= 1200);
    CHECK(usp.report.fraction < Rat(1, 5));
    CHECK(usp.refined.part.equitable());
    // report tuples re-verify against the core predicate
    auto parts = usp.refined.part.parts();
    for (const auto& w : usp.report.witnesses)
        CHECK(!is_epsilon_homogeneous(g, parts[w[0]], parts[w[1]], Rat(1, 5)));
}

TEST_CASE("ultra_strong_partition on a 3-uniform blow-up") {
    Hypergraph h = triadic_blowup(210, 2, 5);
    UltraStrongResult usp = ultra_strong_partition(h, Rat(6, 25));
    CHECK(usp.report.K >= 100);  // 8k/eps = 100
    CHECK(usp.report.fraction < Rat(6, 25));
}

TEST_CASE("pipeline determinism across thread counts") {
    Graph g = threshold_blocks(600, 3);
    set_jobs(1);
    UltraStrongResult a = ultra_strong_partition(g, Rat(1, 5));
    set_jobs(8);
    UltraStrongResult b = ultra_strong_partition(g, Rat(1, 5));
    set_jobs(0);
    CHECK(a.refined.part.part_of == b.refined.part.part_of);
    CHECK(a.packing.centers == b.packing.centers);
    CHECK(a.report.fraction == b.report.fraction);
    CHECK(a.report.witnesses == b.report.witnesses);
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 30 + int(rng() % 40);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        StarView sv = star_view(g);
        Rat delta(2);
        RatThreshold thr(delta);
        PackingResult p = greedy_packing(sv, delta);
        CHECK(serial::voronoi_assign(sv, p.centers, thr) ==
              par::voronoi_assign(sv, p.centers, thr));
        Partition q = voronoi_partition(sv, p);
        RefinedPartition r = equitable_refinement(q, std::max(2, n / 6));
        CHECK(serial::pair_cross_counts(g, r.part.part_of, r.part.K) ==
              par::pair_cross_counts(g, r.part.part_of, r.part.K));
        std::vector<std::uint8_t> cls(std::size_t(r.part.K) * r.part.K, kPairSparse);
        auto rows_s = serial::bad_pair_rows(g, r.part, cls);
        auto rows_p = par::bad_pair_rows(g, r.part, cls);
        REQUIRE(rows_s.size() == rows_p.size());
        for (std::size_t i = 0; i < rows_s.size(); ++i) CHECK(rows_s[i] == rows_p[i]);
        VertexSet mask(n);
        for (int v = 0; v < n; v += 2) mask.set(v);
        CHECK(serial::masked_degrees(rows_s, mask) == par::masked_degrees(rows_p, mask));
        VertexSet a(n), b(n);
        for (int v = 0; v < 8; ++v) a.set(v);
        for (int v = 8; v < 16; ++v) b.set(v);
        CHECK(serial::flip_pairs(g, a, b) == par::flip_pairs(g, a, b));
    }
    // hypergraph tuple counts
    Hypergraph h = triadic_blowup(60, 3, 7);
    Partition p(60, 6);
    for (int v = 0; v < 60; ++v) p.part_of[v] = v % 6;
    CHECK(serial::tuple_cross_counts(h, p.part_of) ==
          par::tuple_cross_counts(h, p.part_of));
}
