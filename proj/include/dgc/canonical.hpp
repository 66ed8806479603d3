#pragma once

#include "dgc/graph.hpp"

#include <optional>

namespace dgc {

// Canonical representative of an isomorphism class, or Zero for odd graphs.
// For a non-zero result, from_graph(g) = sign * [cls] in the coinvariant space.
struct SignedClass {
    std::optional<Graph> cls;
    int sign = 1;

    bool zero() const { return !cls.has_value(); }
    static SignedClass make_zero() { return SignedClass{}; }
};

// Canonical form over all vertex relabelings that respect the refined vertex
// coloring, with edges of the winner sorted; detects odd graphs (two winning
// relabelings of opposite edge-permutation sign, or a duplicated edge pair).
SignedClass canonicalize(const Graph& g);

// True iff g is already the canonical representative of its class.
bool is_canonical(const Graph& g);

// True iff some automorphism of g induces an odd permutation of edge labels.
// (Equivalent to canonicalize(g).zero(); kept as a direct query.)
bool is_odd(const Graph& g);

} // namespace dgc
