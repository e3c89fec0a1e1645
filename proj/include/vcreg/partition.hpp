#pragma once

#include <algorithm>
#include <vector>

#include "vcreg/bitset.hpp"
#include "vcreg/errors.hpp"

namespace vcreg {

// Assignment of vertices to parts 0..K-1.
struct Partition {
    int n = 0;
    int K = 0;
    std::vector<int> part_of;  // size n

    Partition() = default;
    Partition(int nv, int parts) : n(nv), K(parts), part_of(nv, -1) {}

    std::vector<std::int64_t> part_sizes() const {
        std::vector<std::int64_t> s(K, 0);
        for (int p : part_of) {
            if (p < 0 || p >= K) throw Error("vertex without a valid part");
            ++s[p];
        }
        return s;
    }

    // sizes differ by at most one
    bool equitable() const {
        auto s = part_sizes();
        auto [lo, hi] = std::minmax_element(s.begin(), s.end());
        return s.empty() || *hi - *lo <= 1;
    }

    std::vector<VertexSet> parts() const {
        std::vector<VertexSet> out(K, VertexSet(n));
        for (int v = 0; v < n; ++v) {
            if (part_of[v] < 0 || part_of[v] >= K)
                throw Error("vertex without a valid part");
            out[part_of[v]].set(v);
        }
        return out;
    }
};

}  // namespace vcreg
