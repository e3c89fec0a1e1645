#pragma once

#include <cstdint>
#include <string>

#include "vcreg/graph.hpp"
#include "vcreg/rational.hpp"

namespace vcreg {

// PRNG contract: std::mt19937_64 seeded directly with the user seed; one
// 64-bit draw per vertex pair in row order (u < v).  Certificates are
// reproducible across platforms for the same seed.
inline constexpr const char* kPrngName = "mt19937_64";

Graph sample_gnp(int n, const Rat& p, std::uint64_t seed);

// irrational p: the Bernoulli threshold floor(p * 2^64) is computed once and
// recorded so the certificate pins the exact draw rule
Graph sample_gnp_threshold(int n, std::uint64_t threshold, std::uint64_t seed);

struct LllConstants {
    double c_p = 0.1;    // p = c_p * n^{-2/(s+1)}
    double c1 = 1e4;     // t = c1 * n^{2/(s+1)} log n, capped at n
    double c2 = 0.01;    // x = c2 * n^{-2 C(s,2)/(s+1)}
    double c3 = 850.0;   // y = e^{-c3 n^{2/(s+1)} (log n)^2}
    double c4 = 1.0;     // z = c4 * n^{2^d - (2/(s+1)) d 2^{d-1}}
};

struct LllInstance {
    long long n = 0;
    int s = 0, d = 0;
    long long t = 0;
    bool t_capped = false;  // c1 n^{2/(s+1)} log n exceeded n
    // probabilities kept in natural-log space; (0,1) means log < 0
    long double log_p = 0, log_x = 0, log_y = 0, log_z = 0;
};

LllInstance lll_instance(long long n, int s, int d, const LllConstants& c = {});
LllInstance lll_instance_direct(long long n, int s, int d, long long t, long double p,
                                long double x, long double y, long double z);

struct LllInequality {
    long double lhs_log = 0;
    long double rhs_log = 0;
    long double margin = 0;  // rhs - lhs; inequality holds iff margin >= 0
    bool holds = false;
};

struct LllVerdict {
    LllInequality ineq[3];
    bool all_hold = false;
    bool t_capped = false;
};

// Evaluates the three local-lemma inequalities in log space with
// numerically stable log(1-v) accumulation.
LllVerdict lll_feasibility(const LllInstance& inst);

struct LllGridResult {
    bool found = false;
    LllConstants constants;
    LllVerdict verdict;
};

// coarse grid over (c_p, c1, c2, c3, c4) honoring c1 > 10 c3; first passing
// tuple in scan order wins
LllGridResult lll_grid_search(long long n, int s, int d);

struct KsFreeResult {
    Graph g;
    int tries = 0;
    std::int64_t repaired_edges = 0;
    int vc_dim = 0;
    int alpha = 0;
    std::string alpha_method;  // exact | greedy
    std::uint64_t p_threshold = 0;
};

// Seeded construction of a K_s-free graph with VC-dimension <= d: sample
// G(n, n^{-2/(s+1)}), delete one edge of each surviving K_s (deterministic
// rule), verify K_s-freeness exhaustively and the VC bound exactly; resample
// on VC failure.  Errors when max_tries is exhausted.
KsFreeResult ks_free_bounded_vc(int n, int s, int d, std::uint64_t seed, int max_tries);

enum class AuditMode { Exhaustive, Sampled };

struct AuditResult {
    bool witness_found = false;
    bool conclusive = false;
    VertexSet a, b;
    bool complete = false;  // witness type: complete bipartite vs empty
    std::int64_t subsets_examined = 0;
};

// Searches for disjoint A, B of the given size with A x B fully present or
// fully absent.  Exhaustive mode is a ground-truth oracle; sampled mode can
// only report "no witness found within budget".
AuditResult homogeneous_pair_audit(const Graph& g, int size, AuditMode mode,
                                   std::int64_t budget, std::uint64_t seed = 0);

// ln( n^{2^d} p^{d 2^{d-1}} ), the shattering-event bound
long double vc_event_log_bound(long double n, long double p, int d);
// ln( C(n,d+1) n^{2^{d+1}} p^{(d+1) 2^d} )
long double vc_event_log_bound_t4(long double n, long double p, int d);

}  // namespace vcreg
