#include "vcreg/regularity.hpp"

#include <algorithm>

#include "vcreg/errors.hpp"

namespace vcreg {

Rat separation_delta(std::int64_t n, int k, const Rat& eps) {
    if (k < 2) throw Error("uniformity must be >= 2");
    if (!(eps > 0 && eps < Rat(1, 4)))
        throw Error("epsilon must lie in (0, 1/4), got " + rational_str(eps));
    return eps * eps / (4 * k * k) * Rat(binomial(n, k - 1));
}

PackingResult greedy_packing(const StarView& sv, const Rat& delta) {
    if (!(delta > 0)) throw Error("delta must be positive");
    PackingResult out;
    out.delta = delta;
    RatThreshold thr(delta);
    for (int v = 0; v < sv.n; ++v)
        if (par::separated_from_all(sv, out.centers, v, thr)) out.centers.push_back(v);
    return out;
}

Partition voronoi_partition(const StarView& sv, const PackingResult& packing) {
    RatThreshold thr(packing.delta);
    std::vector<int> assign = par::voronoi_assign(sv, packing.centers, thr);
    Partition p(sv.n, int(packing.centers.size()));
    for (int v = 0; v < sv.n; ++v) {
        if (assign[v] < 0)
            throw Error("unassignable vertex " + std::to_string(v) +
                        ": packing is not maximal");
        p.part_of[v] = assign[v];
    }
    return p;
}

RefinedPartition equitable_refinement(const Partition& q, int K) {
    if (K <= 0) throw Error("part count must be positive");
    if (K > q.n) throw Error("cannot split " + std::to_string(q.n) + " vertices into " +
                             std::to_string(K) + " nonempty parts");
    std::int64_t n = q.n;
    std::int64_t qs = n / K, r = n % K;

    RefinedPartition out;
    out.part = Partition(q.n, K);
    out.pure.assign(K, 1);

    std::vector<std::vector<int>> members(q.K);
    for (int v = 0; v < q.n; ++v) members[q.part_of[v]].push_back(v);

    int part = 0;
    std::int64_t target = qs + (part >= K - r ? 1 : 0);
    std::int64_t filled = 0;
    int part_source = -1;
    for (int src = 0; src < q.K; ++src) {
        for (int v : members[src]) {
            out.part.part_of[v] = part;
            if (part_source < 0) part_source = src;
            if (part_source != src) out.pure[part] = 0;
            if (++filled == target) {
                ++part;
                filled = 0;
                part_source = -1;
                target = qs + (part >= K - r ? 1 : 0);
            }
        }
    }
    return out;
}

namespace {

struct EpsBounds {
    // density < eps  <=>  num * eb < ea * den
    // density > 1-eps  <=>  num * eb > (eb - ea) * den
    Int ea, eb;
    bool small;  // both parts of eps fit an int64: 128-bit fast path applies
    std::int64_t ea64 = 0, eb64 = 0;
    explicit EpsBounds(const Rat& eps) : ea(numerator(eps)), eb(denominator(eps)) {
        small = ea < Int(std::int64_t(1) << 62) && eb < Int(std::int64_t(1) << 62);
        if (small) {
            ea64 = ea.convert_to<std::int64_t>();
            eb64 = eb.convert_to<std::int64_t>();
        }
    }
    bool homogeneous64(std::int64_t num, std::int64_t den) const {
        __int128 lhs = __int128(num) * eb64;
        return lhs < __int128(ea64) * den || lhs > __int128(eb64 - ea64) * den;
    }
    bool homogeneous(const Int& num, const Int& den) const {
        if (small && num < Int(std::int64_t(1) << 62) && den < Int(std::int64_t(1) << 62))
            return homogeneous64(num.convert_to<std::int64_t>(),
                                 den.convert_to<std::int64_t>());
        return num * eb < ea * den || num * eb > (eb - ea) * den;
    }
};

Int mixed_tuple_count(int K, int k, const std::vector<std::uint8_t>& pure) {
    std::int64_t pure_parts = 0;
    for (auto b : pure) pure_parts += b ? 1 : 0;
    return binomial(K, k) - binomial(pure_parts, k);
}

}  // namespace

RegularityReport homogeneity_report(const Graph& g, const Partition& p, const Rat& eps,
                                    const std::vector<std::uint8_t>* pure,
                                    std::size_t witness_cap) {
    if (!(eps > 0 && eps < 1)) throw Error("epsilon must lie in (0,1)");
    if (p.n != g.n) throw Error("partition does not match graph");
    RegularityReport rep;
    rep.K = p.K;
    rep.k = 2;
    rep.epsilon = eps;
    rep.tuple_count = binomial(p.K, 2);
    rep.part_sizes = p.part_sizes();
    for (auto s : rep.part_sizes)
        if (s == 0) throw Error("empty part in partition");
    rep.pair_counts = par::pair_cross_counts(g, p.part_of, p.K);

    EpsBounds eb(eps);
    Int bad = 0;
    for (int i = 0; i < p.K; ++i)
        for (int j = i + 1; j < p.K; ++j) {
            std::int64_t num = rep.pair_counts[std::size_t(i) * p.K + j];
            std::int64_t den = rep.part_sizes[i] * rep.part_sizes[j];
            bool homog = eb.small ? eb.homogeneous64(num, den)
                                  : eb.homogeneous(Int(num), Int(den));
            if (!homog) {
                ++bad;
                if (rep.witnesses.size() < witness_cap)
                    rep.witnesses.push_back({i, j});
                else
                    rep.witnesses_truncated = true;
            }
        }
    rep.non_homogeneous = bad;
    rep.fraction = rep.tuple_count == 0 ? Rat(0) : Rat(bad, rep.tuple_count);
    if (pure) rep.mixed_tuples = mixed_tuple_count(p.K, 2, *pure);
    return rep;
}

RegularityReport homogeneity_report(const Hypergraph& h, const Partition& p,
                                    const Rat& eps,
                                    const std::vector<std::uint8_t>* pure,
                                    std::size_t witness_cap) {
    if (h.k == 2) return homogeneity_report(h.to_graph(), p, eps, pure, witness_cap);
    if (!(eps > 0 && eps < 1)) throw Error("epsilon must lie in (0,1)");
    if (p.n != h.n) throw Error("partition does not match hypergraph");
    RegularityReport rep;
    rep.K = p.K;
    rep.k = h.k;
    rep.epsilon = eps;
    rep.tuple_count = binomial(p.K, h.k);
    rep.part_sizes = p.part_sizes();
    for (auto s : rep.part_sizes)
        if (s == 0) throw Error("empty part in partition");

    if (p.K < h.k) {  // no k-tuple of distinct parts; fraction vacuously 0
        rep.non_homogeneous = 0;
        rep.fraction = 0;
        if (pure) rep.mixed_tuples = 0;
        return rep;
    }

    auto counts = par::tuple_cross_counts(h, p.part_of);
    EpsBounds eb(eps);
    Int bad = 0;
    // tuples with zero cross edges have density 0 < eps: homogeneous
    for (auto& [tuple, cnt] : counts) {
        Int den = 1;
        for (int part : tuple) den *= rep.part_sizes[part];
        if (!eb.homogeneous(Int(cnt), den)) {
            ++bad;
            if (rep.witnesses.size() < witness_cap)
                rep.witnesses.push_back(tuple);
            else
                rep.witnesses_truncated = true;
        }
    }
    rep.non_homogeneous = bad;
    rep.fraction = rep.tuple_count == 0 ? Rat(0) : Rat(bad, rep.tuple_count);
    if (pure) rep.mixed_tuples = mixed_tuple_count(p.K, h.k, *pure);
    return rep;
}

namespace {

UltraStrongResult run_pipeline(const StarView& sv, const Rat& eps,
                               const Graph* g, const Hypergraph* h) {
    if (!(eps > 0 && eps < Rat(1, 4)))
        throw Error("epsilon must lie in (0, 1/4), got " + rational_str(eps));
    std::int64_t n = sv.n;
    int k = sv.k;
    // ceil(8k/eps) with eps = a/b
    Int min_k = (8 * k * denominator(eps) + numerator(eps) - 1) / numerator(eps);
    if (Int(n) < min_k)
        throw Refusal("instance too small for target K: need n >= " + min_k.str() +
                      " = ceil(8k/eps), have n = " + std::to_string(n));

    UltraStrongResult res;
    res.epsilon = eps;
    res.delta = separation_delta(n, k, eps);
    res.packing = greedy_packing(sv, res.delta);

    Int s = Int(std::int64_t(res.packing.centers.size()));
    Int k_target = (8 * k * s * denominator(eps) + numerator(eps) - 1) / numerator(eps);
    if (k_target > n)
        throw Refusal("instance too small for target K: K = ceil(8k|S|/eps) = " +
                      k_target.str() + " exceeds n = " + std::to_string(n) +
                      " (|S| = " + s.str() + ")");
    int K = k_target.convert_to<int>();

    Partition q = voronoi_partition(sv, res.packing);
    res.refined = equitable_refinement(q, K);
    if (g)
        res.report = homogeneity_report(*g, res.refined.part, eps, &res.refined.pure);
    else
        res.report = homogeneity_report(*h, res.refined.part, eps, &res.refined.pure);
    return res;
}

}  // namespace

UltraStrongResult ultra_strong_partition(const Graph& g, const Rat& eps) {
    StarView sv = star_view(g);
    return run_pipeline(sv, eps, &g, nullptr);
}

UltraStrongResult ultra_strong_partition(const Hypergraph& h, const Rat& eps) {
    if (h.k == 2) return ultra_strong_partition(h.to_graph(), eps);
    StarView sv = star_view(h);
    return run_pipeline(sv, eps, nullptr, &h);
}

namespace {

void check_flip_parts(std::int64_t n, int k, const std::vector<VertexSet>& parts) {
    if (int(parts.size()) != k) throw Error("expected k parts");
    std::int64_t m = parts.empty() ? 0 : parts[0].count();
    for (int i = 0; i < k; ++i) {
        if (parts[i].universe_size() != n) throw Error("part universe mismatch");
        if (parts[i].count() != m) throw Error("flip-pair parts must have equal size");
        if (m == 0) throw Error("empty part");
        for (int j = i + 1; j < k; ++j)
            if (parts[i].intersects(parts[j])) throw Error("overlapping parts");
    }
}

}  // namespace

Int count_flip_pairs(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_flip_parts(g.n, 2, {a, b});
    return par::flip_pairs(g, a, b);
}

Int count_flip_pairs(const Hypergraph& h, const std::vector<VertexSet>& parts) {
    if (h.k == 2) return count_flip_pairs(h.to_graph(), parts[0], parts[1]);
    check_flip_parts(h.n, h.k, parts);
    return par::flip_pairs(h, parts);
}

}  // namespace vcreg
