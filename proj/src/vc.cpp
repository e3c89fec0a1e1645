#include "vcreg/vc.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vcreg/errors.hpp"

namespace vcreg {

bool is_shattered(const SetSystem& s, const VertexSet& t) {
    if (t.universe_size() != s.universe) throw Error("trace set universe mismatch");
    std::int64_t m = t.count();
    if (m > 30) throw Error("refusing to enumerate traces of a set larger than 30");
    if (s.family.empty()) return false;
    if (m == 0) return true;  // the empty trace is realized by any member

    std::vector<std::int64_t> idx = t.members();
    const std::uint64_t want = std::uint64_t(1) << m;
    std::vector<std::uint64_t> seen((want + 63) / 64, 0);
    std::uint64_t found = 0;
    for (const auto& a : s.family) {
        std::uint64_t trace = 0;
        for (std::int64_t i = 0; i < m; ++i)
            trace |= std::uint64_t(a.test(idx[i])) << i;
        std::uint64_t w = trace >> 6, b = trace & 63;
        if (!((seen[w] >> b) & 1)) {
            seen[w] |= std::uint64_t(1) << b;
            if (++found == want) return true;
        }
    }
    return false;
}

namespace {

VertexSet to_set(const std::vector<std::int64_t>& v, std::int64_t universe) {
    VertexSet s(universe);
    for (auto x : v) s.set(x);
    return s;
}

}  // namespace

VcResult vc_dimension(const SetSystem& s, int cap) {
    if (cap > 30) throw Error("cap must be <= 30");
    VcResult res;
    if (s.family.empty()) {
        res.dimension = -1;  // no member realizes even the empty trace
        return res;
    }
    res.dimension = 0;

    // level 1 seeds
    std::vector<std::vector<std::int64_t>> level;
    for (std::int64_t v = 0; v < s.universe; ++v) {
        VertexSet t(s.universe);
        t.set(v);
        if (is_shattered(s, t)) level.push_back({v});
    }
    if (level.empty() || cap == 0) return res;
    res.dimension = 1;
    res.witness = level.front();
    if (cap == 1) {
        res.cap_reached = true;
        return res;
    }

    int d = 1;
    while (d < cap && !level.empty()) {
        // candidates: join pairs sharing their first d-1 elements, then require
        // every d-subset shattered (heredity) before the full trace check
        std::set<std::vector<std::int64_t>> prev(level.begin(), level.end());
        std::vector<std::vector<std::int64_t>> next;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                if (!std::equal(level[i].begin(), level[i].end() - 1, level[j].begin()))
                    continue;
                std::vector<std::int64_t> cand(level[i]);
                cand.push_back(level[j].back());
                bool ok = true;
                for (std::size_t drop = 0; drop + 2 < cand.size() && ok; ++drop) {
                    std::vector<std::int64_t> sub;
                    for (std::size_t q = 0; q < cand.size(); ++q)
                        if (q != drop) sub.push_back(cand[q]);
                    ok = prev.count(sub) > 0;
                }
                if (ok && is_shattered(s, to_set(cand, s.universe))) next.push_back(cand);
            }
        }
        std::sort(next.begin(), next.end());
        if (next.empty()) break;
        ++d;
        level = std::move(next);
        res.dimension = d;
        res.witness = level.front();
    }
    res.cap_reached = (d == cap);
    return res;
}

namespace {

// visit all z-subsets of {0..u-1} in lexicographic order
template <class F>
void for_each_combination(std::int64_t u, int z, F f) {
    std::vector<std::int64_t> c(z);
    for (int i = 0; i < z; ++i) c[i] = i;
    if (z > u) return;
    while (true) {
        f(c);
        int i = z - 1;
        while (i >= 0 && c[i] == u - z + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < z; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

Int primal_shatter_value(const SetSystem& s, int z, std::int64_t budget,
                         std::vector<std::int64_t>* witness) {
    if (z < 0) throw Error("negative z");
    if (z > 20) throw Error("z must be <= 20");
    if (z == 0) {
        if (witness) witness->clear();
        return s.family.empty() ? Int(0) : Int(1);
    }
    if (binomial(s.universe, z) > budget)
        throw Error("primal shatter enumeration C(" + std::to_string(s.universe) + "," +
                    std::to_string(z) + ") exceeds budget " + std::to_string(budget));

    Int best = 0;
    std::vector<std::int64_t> best_set;
    std::set<std::uint64_t> traces;  // traces fit in 64 bits for z <= 20... z bits
    for_each_combination(s.universe, z, [&](const std::vector<std::int64_t>& c) {
        traces.clear();
        for (const auto& a : s.family) {
            std::uint64_t tr = 0;
            for (int i = 0; i < z; ++i) tr |= std::uint64_t(a.test(c[i])) << i;
            traces.insert(tr);
        }
        if (Int(traces.size()) > best) {
            best = Int(std::int64_t(traces.size()));
            best_set = c;
        }
    });
    if (witness) *witness = best_set;
    return best;
}

ShatterProfile shatter_profile(const SetSystem& s, int z_max, std::int64_t budget) {
    ShatterProfile p;
    p.z_max = z_max;
    for (int z = 0; z <= z_max; ++z) {
        std::vector<std::int64_t> w;
        p.values.push_back(primal_shatter_value(s, z, budget, &w));
        p.witness.push_back(std::move(w));
    }
    return p;
}

Int sauer_bound(int d, int z) {
    if (d < 0 || z < 0) throw Error("sauer_bound needs d, z >= 0");
    Int sum = 0;
    for (int i = 0; i <= d; ++i) sum += binomial(z, i);
    return sum;
}

}  // namespace vcreg
