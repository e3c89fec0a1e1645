#include "vcreg/set_system.hpp"

#include <algorithm>
#include <unordered_map>

#include "vcreg/errors.hpp"

namespace vcreg {

void SetSystem::check_invariants() const {
    for (const auto& a : family)
        if (a.universe_size() != universe) throw Error("set system universe mismatch");
}

SetSystem neighborhood_system(const Graph& g) {
    SetSystem s;
    s.universe = g.n;
    s.family = g.adj;
    return s;
}

SetSystem neighborhood_system(const Hypergraph& h, std::int64_t family_budget) {
    if (h.k == 2) return neighborhood_system(h.to_graph());
    Int members = binomial(h.n, h.k - 1);
    if (members > family_budget)
        throw Error("neighborhood system family too large: C(n,k-1) exceeds budget " +
                    std::to_string(family_budget));
    SetSystem s;
    s.universe = h.n;
    s.family.assign(members.convert_to<std::int64_t>(), VertexSet(h.n));

    // rank (k-1)-subsets in colexicographic order: rank(S) = sum C(s_i, i+1)
    auto rank_of = [&](const int* tuple, int skip, int len) {
        std::int64_t r = 0;
        int pos = 0;
        for (int i = 0; i < len; ++i) {
            if (i == skip) continue;
            r += binomial(tuple[i], pos + 1).convert_to<std::int64_t>();
            ++pos;
        }
        return r;
    };
    for (std::int64_t e = 0; e < h.edge_count(); ++e) {
        const int* t = h.edge(e);
        for (int j = 0; j < h.k; ++j)
            s.family[rank_of(t, j, h.k)].set(t[j]);
    }
    return s;
}

SetSystem dedup(const SetSystem& s) {
    SetSystem out;
    out.universe = s.universe;
    std::unordered_map<VertexSet, int, VertexSetHash> seen;
    for (const auto& a : s.family)
        if (seen.emplace(a, int(out.family.size())).second) out.family.push_back(a);
    out.deduplicated = out.family.size() != s.family.size();
    return out;
}

SetSystem dual_system(const SetSystem& s) {
    SetSystem base = dedup(s);
    SetSystem out;
    out.universe = std::int64_t(base.family.size());
    out.family.assign(base.universe, VertexSet(out.universe));
    for (std::int64_t v = 0; v < base.universe; ++v) {
        for (std::size_t a = 0; a < base.family.size(); ++a)
            if (base.family[a].test(v)) out.family[v].set(std::int64_t(a));
    }
    return out;
}

SetSystem atom_reduce(const SetSystem& s, std::vector<std::int64_t>* reps) {
    SetSystem base = dedup(s);
    // membership column per ground element, over the deduped family
    std::unordered_map<VertexSet, std::int64_t, VertexSetHash> cols;
    std::vector<std::int64_t> keep;
    for (std::int64_t v = 0; v < base.universe; ++v) {
        VertexSet col(std::int64_t(base.family.size()));
        for (std::size_t a = 0; a < base.family.size(); ++a)
            if (base.family[a].test(v)) col.set(std::int64_t(a));
        if (cols.emplace(std::move(col), v).second) keep.push_back(v);
    }
    SetSystem out;
    out.universe = std::int64_t(keep.size());
    out.deduplicated = base.deduplicated || out.universe != base.universe;
    out.family.reserve(base.family.size());
    for (const auto& a : base.family) {
        VertexSet r(out.universe);
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (a.test(keep[i])) r.set(std::int64_t(i));
        out.family.push_back(std::move(r));
    }
    if (reps) *reps = keep;
    return out;
}

}  // namespace vcreg
