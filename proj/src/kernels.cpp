#include "vcreg/kernels.hpp"

#include <algorithm>

#include "vcreg/errors.hpp"

#ifdef VCREG_HAVE_OPENMP
#include <omp.h>
#endif

namespace vcreg {

namespace {
int g_jobs = 0;
}

void set_jobs(int jobs) {
    g_jobs = jobs < 0 ? 0 : jobs;
#ifdef VCREG_HAVE_OPENMP
    if (g_jobs > 0) omp_set_num_threads(g_jobs);
#endif
}

int current_jobs() {
#ifdef VCREG_HAVE_OPENMP
    return g_jobs > 0 ? g_jobs : omp_get_max_threads();
#else
    return 1;
#endif
}

StarView star_view(const Graph& g) {
    StarView sv;
    sv.n = g.n;
    sv.k = 2;
    sv.ground = g.n;
    sv.stars = &g.adj;
    sv.sizes.resize(g.n);
    for (int v = 0; v < g.n; ++v) sv.sizes[v] = g.adj[v].count();
    return sv;
}

StarView star_view(const Hypergraph& h) {
    StarView sv;
    sv.n = h.n;
    sv.k = h.k;
    Int ground = binomial(h.n, h.k - 1);
    if (ground > Int(200'000'000))
        throw Error("star system ground set C(n,k-1) too large to materialize");
    sv.ground = ground.convert_to<std::int64_t>();

    // colex rank of the (k-1)-subset obtained by dropping position `skip`
    std::vector<std::vector<std::int64_t>> binom(h.k);
    for (int j = 1; j < h.k; ++j) {
        binom[j].resize(h.n + 1);
        for (int x = 0; x <= h.n; ++x)
            binom[j][x] = binomial(x, j).convert_to<std::int64_t>();
    }
    sv.storage.assign(h.n, VertexSet(sv.ground));
    for (std::int64_t e = 0; e < h.edge_count(); ++e) {
        const int* t = h.edge(e);
        for (int skip = 0; skip < h.k; ++skip) {
            std::int64_t r = 0;
            int pos = 1;
            for (int i = 0; i < h.k; ++i) {
                if (i == skip) continue;
                r += binom[pos][t[i]];
                ++pos;
            }
            sv.storage[t[skip]].set(r);
        }
    }
    sv.stars = &sv.storage;
    sv.sizes.resize(h.n);
    for (int v = 0; v < h.n; ++v) sv.sizes[v] = sv.storage[v].count();
    return sv;
}

std::int64_t star_distance(const StarView& sv, int u, int v) {
    // |N(u) (triangle) N(v)| = |N(u)| + |N(v)| - 2 |N(u) cap N(v)|
    return sv.sizes[u] + sv.sizes[v] - 2 * sv.star(u).intersection_count(sv.star(v));
}

// ---------------------------------------------------------------- serial --

namespace serial {

bool separated_from_all(const StarView& sv, const std::vector<int>& centers, int v,
                        const RatThreshold& delta) {
    for (int c : centers)
        if (delta.gt(star_distance(sv, v, c))) return false;
    return true;
}

std::vector<int> voronoi_assign(const StarView& sv, const std::vector<int>& centers,
                                const RatThreshold& delta) {
    std::vector<int> part(sv.n, -1);
    for (int v = 0; v < sv.n; ++v) {
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (delta.gt(star_distance(sv, v, centers[i]))) {
                part[v] = int(i);
                break;
            }
        }
    }
    return part;
}

std::vector<std::int64_t> pair_cross_counts(const Graph& g,
                                            const std::vector<int>& part_of, int K) {
    std::vector<std::int64_t> counts(std::size_t(K) * K, 0);
    for (int v = 0; v < g.n; ++v) {
        int pv = part_of[v];
        g.adj[v].for_each([&](std::int64_t u) {
            if (u > v) {
                int pu = part_of[u];
                if (pu != pv) counts[std::size_t(std::min(pv, pu)) * K + std::max(pv, pu)]++;
            }
        });
    }
    return counts;
}

std::map<std::vector<int>, std::int64_t> tuple_cross_counts(
    const Hypergraph& h, const std::vector<int>& part_of) {
    std::map<std::vector<int>, std::int64_t> counts;
    std::vector<int> key(h.k);
    for (std::int64_t e = 0; e < h.edge_count(); ++e) {
        const int* t = h.edge(e);
        for (int i = 0; i < h.k; ++i) key[i] = part_of[t[i]];
        std::sort(key.begin(), key.end());
        bool distinct = true;
        for (int i = 0; i + 1 < h.k; ++i) distinct &= key[i] != key[i + 1];
        if (distinct) counts[key]++;
    }
    return counts;
}

Int flip_pairs(const Graph& g, const VertexSet& a, const VertexSet& b) {
    // ordered pairs (e, e') with e an edge, e' a non-edge, sharing one endpoint
    Int total = 0;
    std::int64_t bs = b.count(), as = a.count();
    a.for_each([&](std::int64_t u) {
        std::int64_t d = g.adj[u].intersection_count(b);
        total += Int(d) * Int(bs - d);
    });
    b.for_each([&](std::int64_t u) {
        std::int64_t d = g.adj[u].intersection_count(a);
        total += Int(d) * Int(as - d);
    });
    return total;
}

Int flip_pairs(const Hypergraph& h, const std::vector<VertexSet>& parts) {
    int k = h.k;
    Int total = 0;
    std::vector<int> owner(k), probe;
    for (std::int64_t ei = 0; ei < h.edge_count(); ++ei) {
        const int* e = h.edge(ei);
        bool transversal = true;
        std::vector<int> hit(k, 0);
        for (int j = 0; j < k && transversal; ++j) {
            int o = -1;
            for (int t = 0; t < k; ++t)
                if (parts[t].test(e[j])) {
                    o = t;
                    break;
                }
            if (o < 0 || hit[o]++ > 0)
                transversal = false;
            else
                owner[j] = o;
        }
        if (!transversal) continue;
        for (int j = 0; j < k; ++j) {
            // replace e[j] by another vertex of the same part
            std::int64_t non_edges = 0;
            probe.assign(e, e + k);
            parts[owner[j]].for_each([&](std::int64_t b2) {
                if (int(b2) == e[j]) return;
                probe[j] = int(b2);
                std::vector<int> sorted(probe);
                std::sort(sorted.begin(), sorted.end());
                if (!h.has_edge(sorted)) ++non_edges;
            });
            probe[j] = e[j];
            total += non_edges;
        }
    }
    return total;
}

std::vector<VertexSet> bad_pair_rows(const Graph& g, const Partition& p,
                                     const std::vector<std::uint8_t>& pair_class) {
    auto parts = p.parts();
    std::vector<VertexSet> rows(g.n, VertexSet(g.n));
    for (int v = 0; v < g.n; ++v) {
        int pv = p.part_of[v];
        VertexSet& row = rows[v];
        row |= parts[pv];
        row.reset(v);
        for (int j = 0; j < p.K; ++j) {
            if (j == pv) continue;
            switch (pair_class[std::size_t(std::min(pv, j)) * p.K + std::max(pv, j)]) {
                case kPairNonHomog:
                    row |= parts[j];
                    break;
                case kPairSparse: {
                    VertexSet t = g.adj[v];
                    t &= parts[j];
                    row |= t;
                    break;
                }
                case kPairDense: {
                    VertexSet t = parts[j];
                    t.and_not(g.adj[v]);
                    row |= t;
                    break;
                }
            }
        }
    }
    return rows;
}

std::vector<std::int64_t> masked_degrees(const std::vector<VertexSet>& rows,
                                         const VertexSet& mask) {
    std::vector<std::int64_t> deg(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v)
        deg[v] = rows[v].intersection_count(mask);
    return deg;
}

}  // namespace serial

// ------------------------------------------------------------------ omp --

namespace par {

bool separated_from_all(const StarView& sv, const std::vector<int>& centers, int v,
                        const RatThreshold& delta) {
    std::int64_t nc = std::int64_t(centers.size());
    if (nc < 64) return serial::separated_from_all(sv, centers, v, delta);
    bool ok = true;
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(&& : ok)
#endif
    for (std::int64_t i = 0; i < nc; ++i)
        ok = ok && !delta.gt(star_distance(sv, v, centers[i]));
    return ok;
}

std::vector<int> voronoi_assign(const StarView& sv, const std::vector<int>& centers,
                                const RatThreshold& delta) {
    std::vector<int> part(sv.n, -1);
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (int v = 0; v < sv.n; ++v) {
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (delta.gt(star_distance(sv, v, centers[i]))) {
                part[v] = int(i);
                break;
            }
        }
    }
    return part;
}

std::vector<std::int64_t> pair_cross_counts(const Graph& g,
                                            const std::vector<int>& part_of, int K) {
    std::vector<std::int64_t> counts(std::size_t(K) * K, 0);
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel
    {
        std::vector<std::int64_t> local(counts.size(), 0);
#pragma omp for schedule(static) nowait
        for (int v = 0; v < g.n; ++v) {
            int pv = part_of[v];
            g.adj[v].for_each([&](std::int64_t u) {
                if (u > v) {
                    int pu = part_of[u];
                    if (pu != pv)
                        local[std::size_t(std::min(pv, pu)) * K + std::max(pv, pu)]++;
                }
            });
        }
#pragma omp critical
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
    }
    return counts;
#else
    return serial::pair_cross_counts(g, part_of, K);
#endif
}

std::map<std::vector<int>, std::int64_t> tuple_cross_counts(
    const Hypergraph& h, const std::vector<int>& part_of) {
#ifdef VCREG_HAVE_OPENMP
    std::map<std::vector<int>, std::int64_t> counts;
    std::int64_t m = h.edge_count();
#pragma omp parallel
    {
        std::map<std::vector<int>, std::int64_t> local;
        std::vector<int> key(h.k);
#pragma omp for schedule(static) nowait
        for (std::int64_t e = 0; e < m; ++e) {
            const int* t = h.edge(e);
            for (int i = 0; i < h.k; ++i) key[i] = part_of[t[i]];
            std::sort(key.begin(), key.end());
            bool distinct = true;
            for (int i = 0; i + 1 < h.k; ++i) distinct &= key[i] != key[i + 1];
            if (distinct) local[key]++;
        }
#pragma omp critical
        for (auto& [k2, c] : local) counts[k2] += c;
    }
    return counts;
#else
    return serial::tuple_cross_counts(h, part_of);
#endif
}

Int flip_pairs(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::vector<std::int64_t> av = a.members(), bv = b.members();
    std::int64_t as = std::int64_t(av.size()), bs = std::int64_t(bv.size());
    std::int64_t total = 0;  // bounded by 2 m^3, fits easily for bitset-scale parts
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : total)
#endif
    for (std::int64_t i = 0; i < as; ++i) {
        std::int64_t d = g.adj[av[i]].intersection_count(b);
        total += d * (bs - d);
    }
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : total)
#endif
    for (std::int64_t i = 0; i < bs; ++i) {
        std::int64_t d = g.adj[bv[i]].intersection_count(a);
        total += d * (as - d);
    }
    return Int(total);
}

Int flip_pairs(const Hypergraph& h, const std::vector<VertexSet>& parts) {
    return serial::flip_pairs(h, parts);  // desk-scale input; one code path
}

std::vector<VertexSet> bad_pair_rows(const Graph& g, const Partition& p,
                                     const std::vector<std::uint8_t>& pair_class) {
    auto parts = p.parts();
    std::vector<VertexSet> rows(g.n, VertexSet(g.n));
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 32)
#endif
    for (int v = 0; v < g.n; ++v) {
        int pv = p.part_of[v];
        VertexSet& row = rows[v];
        row |= parts[pv];
        row.reset(v);
        for (int j = 0; j < p.K; ++j) {
            if (j == pv) continue;
            switch (pair_class[std::size_t(std::min(pv, j)) * p.K + std::max(pv, j)]) {
                case kPairNonHomog:
                    row |= parts[j];
                    break;
                case kPairSparse: {
                    VertexSet t = g.adj[v];
                    t &= parts[j];
                    row |= t;
                    break;
                }
                case kPairDense: {
                    VertexSet t = parts[j];
                    t.and_not(g.adj[v]);
                    row |= t;
                    break;
                }
            }
        }
    }
    return rows;
}

std::vector<std::int64_t> masked_degrees(const std::vector<VertexSet>& rows,
                                         const VertexSet& mask) {
    std::vector<std::int64_t> deg(rows.size());
    std::int64_t n = std::int64_t(rows.size());
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t v = 0; v < n; ++v) deg[v] = rows[v].intersection_count(mask);
    return deg;
}

}  // namespace par

}  // namespace vcreg
