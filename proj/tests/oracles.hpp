#pragma once

// Test-only reference implementations, kept independent of the library's
// search/refinement code paths.

#include "dgc/graph.hpp"
#include "dgc/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace dgc::testing {

// All vertex permutations of 1..n as 1-based image vectors.
inline std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int perm_sign_1based(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Brute-force parity check: scans every vertex permutation, finds the ones
// fixing the edge multiset, and reports whether some automorphism induces an
// odd edge permutation. Handles duplicate pairs by multiset logic.
inline bool is_odd_bruteforce(const Graph& g) {
    auto norm = [&](Edge e) {
        if (!g.directed() && e.u > e.v) std::swap(e.u, e.v);
        return e;
    };
    std::vector<Edge> base(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) base[i] = norm(g.edges[i]);
    std::vector<Edge> sorted_base = base;
    std::sort(sorted_base.begin(), sorted_base.end());
    for (size_t i = 0; i + 1 < sorted_base.size(); ++i)
        if (sorted_base[i] == sorted_base[i + 1]) return true;

    for (const auto& p : all_perms(g.n)) {
        std::vector<Edge> mapped(base.size());
        for (size_t i = 0; i < base.size(); ++i)
            mapped[i] = norm({p[base[i].u - 1], p[base[i].v - 1]});
        std::vector<Edge> sorted_mapped = mapped;
        std::sort(sorted_mapped.begin(), sorted_mapped.end());
        if (sorted_mapped != sorted_base) continue;
        // automorphism found; the induced edge permutation sends label i to
        // the position of mapped[i] in base (all pairs distinct here)
        std::vector<int> eperm(base.size());
        for (size_t i = 0; i < base.size(); ++i)
            eperm[i] = static_cast<int>(
                std::find(base.begin(), base.end(), mapped[i]) - base.begin() + 1);
        if (perm_sign_1based(eperm) < 0) return true;
    }
    return false;
}

} // namespace dgc::testing
