#include "vcreg/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vcreg/cograph.hpp"
#include "vcreg/errors.hpp"
#include "vcreg/set_system.hpp"
#include "vcreg/vc.hpp"

namespace vcreg {

namespace {

std::uint64_t rational_threshold(const Rat& p) {
    // floor(p * 2^64); p in [0,1)
    Int t = (numerator(p) << 64) / denominator(p);
    return t.convert_to<std::uint64_t>();
}

}  // namespace

Graph sample_gnp_threshold(int n, std::uint64_t threshold, std::uint64_t seed) {
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) g.add_edge(u, v);
    return g;
}

Graph sample_gnp(int n, const Rat& p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw Error("edge probability must lie in [0,1]");
    if (p == 1) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        // draws are still consumed uniformly in other branches; completeness
        // needs no randomness
        return g;
    }
    return sample_gnp_threshold(n, rational_threshold(p), seed);
}

namespace {

// log( -log(1 - e^{log_v}) ): for tiny v, -log(1-v) = v (1 + v/2 + ...)
long double log_neg_log1m(long double log_v) {
    if (log_v < -40.0L) return log_v;
    long double v = std::exp(log_v);
    if (v >= 1.0L) throw Error("probability reached 1 in log(1-v) term");
    return std::log(-std::log1p(-v));
}

// count * log(1 - v) with both count and v given in log space
long double one_minus_pow_log(long double log_count, long double log_v) {
    if (!std::isfinite(log_count)) {
        // count == 0 (log -inf): the factor is an empty product
        return 0.0L;
    }
    return -std::exp(log_count + log_neg_log1m(log_v));
}

long double log_binomial_ld(long double n, long double k) {
    if (k < 0 || k > n) return -std::numeric_limits<long double>::infinity();
    return std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L);
}

void require_prob(long double log_v, const char* name) {
    if (!std::isfinite(log_v) || log_v >= 0)
        throw Error(std::string("parameter ") + name +
                    " is not a probability in (0,1); log = " + std::to_string(double(log_v)));
}

}  // namespace

LllInstance lll_instance(long long n, int s, int d, const LllConstants& c) {
    if (s < 3) throw Error("s must be >= 3");
    if (!(d > s + 2)) throw Error("the system requires d > s + 2");
    if (n < 2) throw Error("n must be >= 2");
    LllInstance inst;
    inst.n = n;
    inst.s = s;
    inst.d = d;
    long double logn = std::log((long double)n);
    long double expo = 2.0L / (s + 1);
    inst.log_p = std::log((long double)c.c_p) - expo * logn;
    long double t_raw = (long double)c.c1 * std::exp(expo * logn) * logn;
    if (t_raw >= (long double)n) {
        inst.t = n;
        inst.t_capped = true;
    } else {
        inst.t = (long long)t_raw;
    }
    if (inst.t < 2) throw Error("t too small; increase c1 or n");
    long double cs2 = (long double)s * (s - 1) / 2;
    inst.log_x = std::log((long double)c.c2) - 2.0L * cs2 / (s + 1) * logn;
    inst.log_y = -(long double)c.c3 * std::exp(expo * logn) * logn * logn;
    long double zexp = std::ldexp(1.0L, d) - expo * d * std::ldexp(1.0L, d - 1);
    inst.log_z = std::log((long double)c.c4) + zexp * logn;
    require_prob(inst.log_p, "p");
    require_prob(inst.log_x, "x");
    require_prob(inst.log_y, "y");
    require_prob(inst.log_z, "z");
    return inst;
}

LllInstance lll_instance_direct(long long n, int s, int d, long long t, long double p,
                                long double x, long double y, long double z) {
    if (s < 3) throw Error("s must be >= 3");
    if (!(d > s + 2)) throw Error("the system requires d > s + 2");
    LllInstance inst;
    inst.n = n;
    inst.s = s;
    inst.d = d;
    inst.t = std::min<long long>(t, n);
    inst.t_capped = t > n;
    inst.log_p = std::log(p);
    inst.log_x = std::log(x);
    inst.log_y = std::log(y);
    inst.log_z = std::log(z);
    require_prob(inst.log_p, "p");
    require_prob(inst.log_x, "x");
    require_prob(inst.log_y, "y");
    require_prob(inst.log_z, "z");
    return inst;
}

LllVerdict lll_feasibility(const LllInstance& inst) {
    long double n = inst.n, t = inst.t;
    long double logn = std::log(n);
    int s = inst.s, d = inst.d;

    // dependency-set sizes, in log space
    long double log_cnt = log_binomial_ld(n, t);  // C(n,t) many B_T events
    auto dep_a = [&](long double base2) { return 2 * std::log(base2) + (s - 2) * logn; };
    auto dep_c = [&](long double base2) { return 2 * std::log(base2) + (d - 2) * logn; };

    auto product_terms = [&](long double base) {
        // (1-x)^{base^2 n^{s-2}} (1-y)^{C(n,t)} (1-z)^{base^2 n^{d-2}}
        return one_minus_pow_log(dep_a(base), inst.log_x) +
               one_minus_pow_log(log_cnt, inst.log_y) +
               one_minus_pow_log(dep_c(base), inst.log_z);
    };

    LllVerdict v;
    v.t_capped = inst.t_capped;

    // (1)  p^{C(s,2)} <= x * (...)
    long double cs2 = (long double)s * (s - 1) / 2;
    v.ineq[0].lhs_log = cs2 * inst.log_p;
    v.ineq[0].rhs_log = inst.log_x + product_terms((long double)s);

    // (2)  (1-p)^{C(t,2)} <= y * (...)
    long double log_ct2 = std::log(t) + std::log((t - 1) / 2.0L);
    v.ineq[1].lhs_log = one_minus_pow_log(log_ct2, inst.log_p);
    v.ineq[1].rhs_log = inst.log_y + product_terms(t);

    // (3)  n^{2^d} p^{d 2^{d-1}} <= z * (...)
    v.ineq[2].lhs_log =
        std::ldexp(1.0L, d) * logn + d * std::ldexp(1.0L, d - 1) * inst.log_p;
    v.ineq[2].rhs_log = inst.log_z + product_terms((long double)d);

    v.all_hold = true;
    for (auto& iq : v.ineq) {
        if (!std::isfinite(iq.lhs_log) || !std::isfinite(iq.rhs_log))
            throw Error("nonfinite intermediate in inequality evaluation");
        iq.margin = iq.rhs_log - iq.lhs_log;
        iq.holds = iq.lhs_log <= iq.rhs_log;
        v.all_hold = v.all_hold && iq.holds;
    }
    return v;
}

LllGridResult lll_grid_search(long long n, int s, int d) {
    const double cps[] = {0.05, 0.1, 0.2, 0.5};
    const double c1s[] = {1e3, 3e3, 1e4, 3e4};
    const double c2s[] = {0.001, 0.01, 0.1, 1.0};
    const double c3ratio[] = {1.0 / 20, 1.0 / 15, 1.0 / 11};  // keeps c1 > 10 c3
    const double c4s[] = {1.0, 10.0};
    LllGridResult res;
    for (double cp : cps)
        for (double c1 : c1s)
            for (double c2 : c2s)
                for (double r3 : c3ratio)
                    for (double c4 : c4s) {
                        LllConstants c{cp, c1, c2, c1 * r3, c4};
                        try {
                            LllVerdict v = lll_feasibility(lll_instance(n, s, d, c));
                            if (v.all_hold) {
                                res.found = true;
                                res.constants = c;
                                res.verdict = v;
                                return res;
                            }
                        } catch (const Error&) {
                            continue;  // parameters outside (0,1); skip cell
                        }
                    }
    return res;
}

namespace {

// lexicographically first K_s, by ascending-vertex recursive search
bool find_ks(const Graph& g, int s, std::vector<int>& out) {
    struct Rec {
        const Graph& g;
        int s;
        std::vector<int>& out;
        bool go(const VertexSet& cand, int depth) {
            if (depth == s) return true;
            if (cand.count() < s - depth) return false;
            for (std::int64_t v = cand.first(); v >= 0; v = cand.next(v)) {
                out.push_back(int(v));
                VertexSet next = cand;
                next &= g.adj[v];
                if (go(next, depth + 1)) return true;
                out.pop_back();
            }
            return false;
        }
    };
    out.clear();
    Rec rec{g, s, out};
    return rec.go(VertexSet::full(g.n), 0);
}

// independent exhaustive verification: every s-subset checked directly
bool has_ks_exhaustive(const Graph& g, int s) {
    std::vector<int> c(s);
    for (int i = 0; i < s; ++i) c[i] = i;
    if (s > g.n) return false;
    while (true) {
        bool complete = true;
        for (int i = 0; i < s && complete; ++i)
            for (int j = i + 1; j < s && complete; ++j)
                complete = g.has_edge(c[i], c[j]);
        if (complete) return true;
        int i = s - 1;
        while (i >= 0 && c[i] == g.n - s + i) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
}

int greedy_independent_size(const Graph& g) {
    VertexSet alive = VertexSet::full(g.n);
    int size = 0;
    while (alive.any()) {
        std::int64_t best = -1, best_deg = 0;
        alive.for_each([&](std::int64_t v) {
            std::int64_t dd = g.adj[v].intersection_count(alive);
            if (best < 0 || dd < best_deg) {
                best = v;
                best_deg = dd;
            }
        });
        ++size;
        alive.and_not(g.adj[best]);
        alive.reset(best);
    }
    return size;
}

}  // namespace

KsFreeResult ks_free_bounded_vc(int n, int s, int d, std::uint64_t seed, int max_tries) {
    if (s < 3) throw Error("s must be >= 3");
    if (n < 2) throw Error("n must be >= 2");
    if (max_tries <= 0) throw Error("max_tries exhausted before sampling");
    if (binomial(n, s) > 2'000'000)
        throw Error("n too large for the exhaustive K_s verification budget");

    long double p = std::exp(-2.0L / (s + 1) * std::log((long double)n));
    std::uint64_t threshold =
        (std::uint64_t)std::floor(p * std::ldexp(1.0L, 64));

    for (int tries = 1; tries <= max_tries; ++tries) {
        std::uint64_t try_seed = seed ^ (0x9E3779B97F4A7C15ULL * std::uint64_t(tries));
        Graph g = sample_gnp_threshold(n, threshold, try_seed);
        std::int64_t repaired = 0;
        std::vector<int> ks;
        while (find_ks(g, s, ks)) {
            // delete the edge between the two largest vertices of the clique
            int u = ks[s - 2], v = ks[s - 1];
            g.adj[u].reset(v);
            g.adj[v].reset(u);
            ++repaired;
        }
        if (has_ks_exhaustive(g, s))
            throw Error("internal: repaired sample still contains a K_s");
        VcResult vc = vc_dimension(neighborhood_system(g), std::min(d + 1, 30));
        if (vc.dimension > d) continue;
        KsFreeResult res;
        res.g = std::move(g);
        res.tries = tries;
        res.repaired_edges = repaired;
        res.vc_dim = vc.dimension;
        res.p_threshold = threshold;
        if (n <= 20) {
            res.alpha = max_independent_set_exact(res.g);
            res.alpha_method = "exact";
        } else {
            res.alpha = greedy_independent_size(res.g);
            res.alpha_method = "greedy";
        }
        return res;
    }
    throw Error("max_tries = " + std::to_string(max_tries) +
                " exhausted without an accepted sample (parameters outside the "
                "feasible regime)");
}

AuditResult homogeneous_pair_audit(const Graph& g, int size, AuditMode mode,
                                   std::int64_t budget, std::uint64_t seed) {
    if (size < 1) throw Error("subset size must be >= 1");
    AuditResult res;
    if (mode == AuditMode::Exhaustive) {
        Int combos = binomial(g.n, size);
        Int combos_sq = combos * combos;
        if (combos_sq > budget)
            throw Error("exhaustive audit budget exceeded: C(n,size)^2 = " +
                        combos_sq.str() + " > " + std::to_string(budget));
        res.conclusive = true;
        if (size > g.n) return res;
        std::vector<int> c(size);
        for (int i = 0; i < size; ++i) c[i] = i;
        while (true) {
            ++res.subsets_examined;
            VertexSet a(g.n), inter = VertexSet::full(g.n), uni(g.n);
            for (int v : c) a.set(v);
            for (int v : c) {
                inter &= g.adj[v];
                uni |= g.adj[v];
            }
            inter.and_not(a);
            if (inter.count() >= size) {
                res.witness_found = true;
                res.complete = true;
                res.a = a;
                res.b = VertexSet(g.n);
                for (std::int64_t v = inter.first(); res.b.count() < size;
                     v = inter.next(v))
                    res.b.set(v);
                return res;
            }
            VertexSet anti = VertexSet::full(g.n);
            anti.and_not(uni);
            anti.and_not(a);
            if (anti.count() >= size) {
                res.witness_found = true;
                res.complete = false;
                res.a = a;
                res.b = VertexSet(g.n);
                for (std::int64_t v = anti.first(); res.b.count() < size;
                     v = anti.next(v))
                    res.b.set(v);
                return res;
            }
            int i = size - 1;
            while (i >= 0 && c[i] == g.n - size + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
        }
        return res;
    }

    // sampled mode: inconclusive unless a witness shows up
    std::mt19937_64 rng(seed);
    if (2 * size > g.n) return res;
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    for (std::int64_t it = 0; it < budget; ++it) {
        ++res.subsets_examined;
        for (int i = 0; i < 2 * size; ++i) {
            std::uniform_int_distribution<int> pick(i, g.n - 1);
            std::swap(perm[i], perm[pick(rng)]);
        }
        VertexSet a(g.n), b(g.n);
        for (int i = 0; i < size; ++i) a.set(perm[i]);
        for (int i = size; i < 2 * size; ++i) b.set(perm[i]);
        std::int64_t cross = cross_edge_count(g, a, b);
        if (cross == 0 || cross == std::int64_t(size) * size) {
            res.witness_found = true;
            res.conclusive = true;
            res.complete = cross != 0;
            res.a = a;
            res.b = b;
            return res;
        }
    }
    return res;
}

long double vc_event_log_bound(long double n, long double p, int d) {
    if (d < 0 || d > 62) throw Error("d out of range");
    long double logn = std::log(n);
    long double logp = std::log(p);  // -inf at p = 0 is reported as such
    return std::ldexp(1.0L, d) * logn + (long double)d * std::ldexp(1.0L, d - 1) * logp;
}

long double vc_event_log_bound_t4(long double n, long double p, int d) {
    if (d < 0 || d > 61) throw Error("d out of range");
    long double logn = std::log(n);
    long double logp = std::log(p);
    return log_binomial_ld(n, d + 1) + std::ldexp(1.0L, d + 1) * logn +
           (long double)(d + 1) * std::ldexp(1.0L, d) * logp;
}

}  // namespace vcreg
