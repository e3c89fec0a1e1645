#include "vcreg/extract.hpp"

#include <algorithm>
#include <cmath>

#include "vcreg/errors.hpp"

namespace vcreg {

EsResult erdos_szekeres_set(const Graph& g) {
    VertexSet pool = VertexSet::full(g.n);
    std::vector<std::int64_t> seq;
    std::vector<char> join_type;
    while (pool.any()) {
        std::int64_t v = pool.first();
        pool.reset(v);
        VertexSet nb = pool;
        nb &= g.adj[v];
        VertexSet nnb = pool;
        nnb.and_not(g.adj[v]);
        bool take_nb = nb.count() >= nnb.count();
        pool = take_nb ? nb : nnb;
        seq.push_back(v);
        join_type.push_back(take_nb ? 1 : 0);
    }
    std::int64_t joins = std::count(join_type.begin(), join_type.end(), char(1));
    std::int64_t unions = std::int64_t(seq.size()) - joins;
    EsResult res;
    res.clique = joins >= unions;
    res.set = VertexSet(g.n);
    for (std::size_t i = 0; i < seq.size(); ++i)
        if ((join_type[i] == 1) == res.clique) res.set.set(seq[i]);
    return res;
}

Rat schedule_epsilon(std::int64_t n, const Rat& c, const Rat& delta_exp) {
    if (n < 2) return Rat(1, 32);
    double logn = std::log(double(n));
    double expo = std::pow(logn, 1.0 - rat_to_double(delta_exp));
    double eps = (1.0 / 32.0) * std::exp(-3.0 * rat_to_double(c) * expo);
    Rat r = rat_from_double_dyadic(eps, 30);
    if (r <= 0) r = Rat(1, std::int64_t(1) << 30);
    if (r >= Rat(1, 4)) r = Rat(1, 4) - Rat(1, std::int64_t(1) << 30);
    return r;
}

namespace {

// greedy extension of a seed cograph: add vertices in index order while the
// induced subgraph stays a cograph
VertexSet greedy_cograph_extend(const Graph& g, VertexSet seed) {
    for (int v = 0; v < g.n; ++v) {
        if (seed.test(v)) continue;
        seed.set(v);
        if (!is_cograph_mask(g, seed)) seed.reset(v);
    }
    return seed;
}

struct Ctx {
    const ExtractParams* params;
    std::vector<ExtractLevel>* trace;
    int depth = 0;
};

VertexSet extract_rec(const Graph& g, Ctx ctx);

// the regularity-guided branch; returns empty optional when the partition
// refuses at this scale
std::optional<VertexSet> try_regular_branch(const Graph& g, Ctx ctx,
                                            ExtractLevel& lvl) {
    Rat eps = schedule_epsilon(g.n, ctx.params->c, ctx.params->delta_exp);
    lvl.epsilon = eps;
    UltraStrongResult usp;
    try {
        usp = ultra_strong_partition(g, eps);
    } catch (const Refusal&) {
        return std::nullopt;
    }
    lvl.regularity_ran = true;
    lvl.K = usp.report.K;
    lvl.packing_size = int(usp.packing.centers.size());
    lvl.fraction = usp.report.fraction;

    const Partition& part = usp.refined.part;
    int K = part.K;
    const auto& sizes = usp.report.part_sizes;

    // classify part pairs: sparse (< eps), dense (> 1-eps), or neither
    std::vector<std::uint8_t> cls(std::size_t(K) * K, kPairNonHomog);
    std::int64_t ea = numerator(eps).convert_to<std::int64_t>();
    std::int64_t ebb = denominator(eps).convert_to<std::int64_t>();
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            __int128 lhs =
                __int128(usp.report.pair_counts[std::size_t(i) * K + j]) * ebb;
            __int128 den = __int128(sizes[i]) * sizes[j];
            std::uint8_t c = kPairNonHomog;
            if (lhs < ea * den)
                c = kPairSparse;
            else if (lhs > (ebb - ea) * den)
                c = kPairDense;
            cls[std::size_t(i) * K + j] = c;
        }

    auto rows = par::bad_pair_rows(g, part, cls);
    Int bad_pairs = 0;
    for (const auto& r : rows) bad_pairs += r.count();
    bad_pairs /= 2;
    lvl.bad_pairs = bad_pairs;
    lvl.bad_pair_bound = 2 * eps * Rat(binomial(g.n, 2));
    if (usp.report.fraction <= eps && Rat(bad_pairs) > lvl.bad_pair_bound)
        throw Error("bad-pair count exceeds 2 eps C(n,2) although the partition "
                    "verified; internal invariant violated");

    // Turan step: greedy min-degree independent core of the bad-pair graph
    Int r_target_i = (4 * numerator(eps) + denominator(eps) - 1) / (4 * numerator(eps));
    std::int64_t r_target =
        std::min<std::int64_t>(r_target_i.convert_to<std::int64_t>(), g.n - 1);
    VertexSet alive = VertexSet::full(g.n);
    std::vector<std::int64_t> core;
    while (alive.any() && std::int64_t(core.size()) < r_target) {
        auto deg = par::masked_degrees(rows, alive);
        std::int64_t best = -1, best_deg = 0;
        alive.for_each([&](std::int64_t v) {
            if (best < 0 || deg[v] < best_deg) {
                best = v;
                best_deg = deg[v];
            }
        });
        core.push_back(best);
        alive.and_not(rows[best]);
        alive.reset(best);
    }
    lvl.R_size = int(core.size());
    if (core.size() < 2) return std::nullopt;

    // skeleton cograph inside the core
    VertexSet core_set(g.n);
    for (auto v : core) core_set.set(v);
    Graph core_graph = g.induced(core_set);
    Ctx sub{ctx.params, ctx.trace, ctx.depth + 1};
    VertexSet skel_local = extract_rec(core_graph, sub);
    std::vector<std::int64_t> core_ids = core_set.members();
    std::vector<std::int64_t> skeleton;
    skel_local.for_each([&](std::int64_t i) { skeleton.push_back(core_ids[i]); });
    lvl.skeleton_size = int(skeleton.size());

    // process skeleton parts in ascending part index
    std::sort(skeleton.begin(), skeleton.end(), [&](std::int64_t a, std::int64_t b) {
        return part.part_of[a] < part.part_of[b];
    });
    std::int64_t t = std::int64_t(skeleton.size());
    auto parts = part.parts();
    std::vector<VertexSet> live;
    live.reserve(skeleton.size());
    for (auto u : skeleton) live.push_back(parts[part.part_of[u]]);

    VertexSet result(g.n);
    // threshold: d_b(u) < 8 t eps n / K, exact comparison
    Int thr_num = 8 * t * numerator(eps) * g.n;
    Int thr_den = denominator(eps) * K;
    for (std::size_t i = 0; i < live.size(); ++i) {
        VertexSet later(g.n);
        for (std::size_t j = i + 1; j < live.size(); ++j) later |= live[j];
        VertexSet survivors(g.n);
        if (i + 1 == live.size()) {
            survivors = live[i];
        } else {
            auto deg = par::masked_degrees(rows, later);
            live[i].for_each([&](std::int64_t u) {
                if (Int(deg[u]) * thr_den < thr_num) survivors.set(u);
            });
        }
        lvl.survivor_counts.push_back(survivors.count());
        if (survivors.empty()) continue;
        Graph sub_graph = g.induced(survivors);
        VertexSet got_local = extract_rec(sub_graph, sub);
        std::vector<std::int64_t> ids = survivors.members();
        VertexSet got(g.n);
        got_local.for_each([&](std::int64_t x) { got.set(ids[x]); });
        result |= got;
        // drop later vertices in a bad pair with the chosen set
        VertexSet bad_of_got(g.n);
        got.for_each([&](std::int64_t u) { bad_of_got |= rows[u]; });
        for (std::size_t j = i + 1; j < live.size(); ++j) live[j].and_not(bad_of_got);
    }
    if (result.empty()) return std::nullopt;
    if (!is_cograph_mask(g, result))
        throw Error("extracted union does not induce a cograph; refusing to return "
                    "an unverified set");
    return result;
}

VertexSet extract_rec(const Graph& g, Ctx ctx) {
    if (ctx.depth > 64) throw Error("extraction recursion too deep");
    ExtractLevel lvl;
    lvl.n = g.n;
    if (g.n == 0) {
        lvl.branch = "direct_win";
        ctx.trace->push_back(lvl);
        return VertexSet(0);
    }
    if (is_cograph_mask(g, VertexSet::full(g.n))) {
        lvl.branch = "direct_win";
        lvl.result_size = g.n;
        ctx.trace->push_back(lvl);
        return VertexSet::full(g.n);
    }
    if (g.n <= 14) {
        lvl.branch = "base_brute";
        VertexSet best = max_induced_cograph_exact(g);
        lvl.result_size = best.count();
        ctx.trace->push_back(lvl);
        return best;
    }

    EsResult es = erdos_szekeres_set(g);
    VertexSet best = es.set;
    lvl.branch = "base_es";
    if (g.n <= ctx.params->greedy_limit) {
        VertexSet ext = greedy_cograph_extend(g, es.set);
        if (ext.count() > best.count()) {
            best = ext;
            lvl.branch = "base_greedy";
        }
    }

    if (g.n > ctx.params->n0) {
        auto reg = try_regular_branch(g, ctx, lvl);
        if (reg && reg->count() > best.count()) {
            best = *reg;
            lvl.branch = "recurse";
        }
    }
    lvl.result_size = best.count();
    ctx.trace->push_back(lvl);
    return best;
}

}  // namespace

ExtractResult extract_cograph(const Graph& g, const ExtractParams& params) {
    if (g.n == 0) throw Error("extract_cograph requires a nonempty graph");
    ExtractResult res;
    Ctx ctx{&params, &res.trace, 0};
    res.set = extract_rec(g, ctx);
    if (!is_cograph_mask(g, res.set))
        throw Error("extraction result failed final cograph verification");
    return res;
}

namespace {

// deterministic search for a p-clique in a graph given by bitset rows,
// preferring lexicographically least vertex sets
bool find_clique_of_size(const std::vector<VertexSet>& rows, int K, int p,
                         const VertexSet& allowed, std::vector<int>& out) {
    struct Rec {
        const std::vector<VertexSet>& rows;
        int p;
        std::vector<int>& out;
        bool go(VertexSet cand, int depth) {
            if (depth == p) return true;
            if (cand.count() < p - depth) return false;
            for (std::int64_t v = cand.first(); v >= 0; v = cand.next(v)) {
                out.push_back(int(v));
                VertexSet next = cand;
                next &= rows[v];
                if (go(next, depth + 1)) return true;
                out.pop_back();
            }
            return false;
        }
    };
    out.clear();
    Rec rec{rows, p, out};
    (void)K;
    return rec.go(allowed, 0);
}

}  // namespace

RtResult rt_independent_set(const Graph& g, const RtParams& params) {
    if (params.p < 3) throw Error("p must be >= 3");
    if (!(params.eps > 0)) throw Error("eps must be positive");
    if (!(params.delta_sup > 0 && params.delta_sup < 1))
        throw Error("delta_sup must lie in (0,1)");
    RtResult res;
    res.delta1 = params.delta_sup / 4;

    // density precondition: |E| > 1/2 (1 - 1/(p-1) + eps) n^2
    Rat threshold = Rat(1, 2) * (1 - Rat(1, params.p - 1) + params.eps) *
                    Rat(Int(g.n) * Int(g.n));
    if (!(Rat(Int(g.edge_count())) > threshold)) {
        res.refused = true;
        res.reason = "density precondition unmet: |E| = " +
                     std::to_string(g.edge_count()) + " <= " + rational_str(threshold);
        return res;
    }

    Rat eps_reg = res.delta1;
    if (!(eps_reg < Rat(1, 4))) {
        res.refused = true;
        res.reason = "delta_sup/4 must be < 1/4 for the partition step";
        return res;
    }

    // packing; escalate delta when the literal K = 8k|S|/eps would exceed n
    StarView sv = star_view(g);
    Rat delta = separation_delta(g.n, 2, eps_reg);
    Int min_k = (16 * denominator(eps_reg) + numerator(eps_reg) - 1) / numerator(eps_reg);
    if (Int(g.n) < min_k) {
        res.refused = true;
        res.reason = "instance too small: need n >= " + min_k.str();
        return res;
    }
    PackingResult packing;
    int K = 0;
    while (true) {
        packing = greedy_packing(sv, delta);
        Int kt = (16 * Int(std::int64_t(packing.centers.size())) * denominator(eps_reg) +
                  numerator(eps_reg) - 1) /
                 numerator(eps_reg);
        if (kt <= g.n) {
            K = kt.convert_to<int>();
            break;
        }
        delta *= 2;
        res.delta_escalated = true;
        if (delta > Rat(g.n)) {
            res.refused = true;
            res.reason = "packing radius exhausted without a feasible part count";
            return res;
        }
    }
    res.packing_delta = delta;
    res.K = K;

    RefinedPartition refined = equitable_refinement(voronoi_partition(sv, packing), K);
    RegularityReport rep = homogeneity_report(g, refined.part, eps_reg, &refined.pure);

    // part-density graph: parts adjacent iff density >= 1 - delta1
    std::vector<VertexSet> dense_rows(K, VertexSet(K));
    std::int64_t da = numerator(res.delta1).convert_to<std::int64_t>();
    std::int64_t db = denominator(res.delta1).convert_to<std::int64_t>();
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            __int128 lhs = __int128(rep.pair_counts[std::size_t(i) * K + j]) * db;
            __int128 den = __int128(rep.part_sizes[i]) * rep.part_sizes[j];
            if (lhs >= (db - da) * den) {
                dense_rows[i].set(j);
                dense_rows[j].set(i);
            }
        }
    VertexSet pure_parts(K), all_parts = VertexSet::full(K);
    for (int i = 0; i < K; ++i)
        if (refined.pure[i]) pure_parts.set(i);
    std::vector<int> clique;
    // prefer parts untouched by refinement mixing; any surviving K_p is valid
    if (!find_clique_of_size(dense_rows, K, params.p, pure_parts, clique) &&
        !find_clique_of_size(dense_rows, K, params.p, all_parts, clique)) {
        res.refused = true;
        res.reason = "no surviving K_p among the parts (delta_sup too large for "
                     "this instance)";
        return res;
    }
    res.clique_parts = clique;

    auto parts = refined.part.parts();
    std::vector<VertexSet> live;
    for (int id : clique) live.push_back(parts[id]);

    Rat delta_j = res.delta1;
    for (int round = 1; !live.empty(); ++round) {
        res.rounds = round;
        if (round > params.p) {
            res.refused = true;
            res.reason = "clique budget exhausted without an independent survivor set";
            return res;
        }
        // survivors of the first part: dense to every later part
        VertexSet survivors(g.n);
        Int ta = numerator(delta_j), tb = denominator(delta_j);
        live[0].for_each([&](std::int64_t v) {
            for (std::size_t l = 1; l < live.size(); ++l) {
                Int need = (tb - 4 * ta * params.p) * Int(live[l].count());
                if (Int(g.adj[v].intersection_count(live[l])) * tb < need) return;
            }
            survivors.set(v);
        });
        if (survivors.empty()) {
            res.refused = true;
            res.reason = "survivor set empty at round " + std::to_string(round);
            return res;
        }
        // first edge inside the survivor set, if any
        std::int64_t eu = -1, ev = -1;
        for (std::int64_t v = survivors.first(); v >= 0 && eu < 0;
             v = survivors.next(v)) {
            VertexSet t = g.adj[v];
            t &= survivors;
            std::int64_t w = t.next(v);
            if (w >= 0) {
                eu = v;
                ev = w;
            }
        }
        if (eu < 0) {
            // independent; verify by direct enumeration of internal pairs
            auto ids = survivors.members_int();
            for (std::size_t a = 0; a < ids.size(); ++a)
                for (std::size_t b = a + 1; b < ids.size(); ++b)
                    if (g.has_edge(ids[a], ids[b]))
                        throw Error("independence verification failed");
            res.independent = survivors;
            return res;
        }
        // restrict later parts to common neighbors of the edge, drop the first
        std::vector<VertexSet> next;
        for (std::size_t l = 1; l < live.size(); ++l) {
            VertexSet t = live[l];
            t &= g.adj[eu];
            t &= g.adj[ev];
            if (t.any()) next.push_back(std::move(t));
        }
        if (next.empty()) {
            res.refused = true;
            res.reason = "common neighborhoods emptied at round " + std::to_string(round);
            return res;
        }
        live = std::move(next);
        delta_j = delta_j * (1 + 16 * params.p);
    }
    res.refused = true;
    res.reason = "no parts remained";
    return res;
}

}  // namespace vcreg
