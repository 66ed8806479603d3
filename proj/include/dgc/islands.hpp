#pragma once

#include "dgc/chain.hpp"

#include <optional>

namespace dgc {

// Decomposition of a connected >=3-valent graph with a cut vertex into its
// separating forest (separating edges + cut vertices) and islands (blocks
// that are not bridges, marked at their cut vertices). Loops are their own
// blocks, so a single loop with a marked base vertex is a valid island.
struct IslandForest {
    struct Island {
        Graph graph;               // undirected, vertices relabeled 1..k
        std::vector<int> marked;   // island labels of marked vertices
        std::vector<int> original; // island label -> original vertex label
        std::vector<int> edge_labels; // original edge labels, in island order
    };
    std::vector<Island> islands;
    std::vector<int> forest_vertices;             // cut vertices of the graph
    std::vector<char> forest_internal;            // not in any island
    std::vector<std::pair<int, int>> forest_edges; // separating edges (u, v)
    std::vector<int> forest_edge_labels;
};

IslandForest islands_and_forest(const Graph& g);

// Merges the pieces back along the original vertex labels; used to certify
// the decomposition.
Graph reassemble(const IslandForest& decomposition, int n, Flavor flavor);

// Contracts every separating edge of a connected >=3-valent undirected even
// graph; the identity when none exist. Returns the canonical class of the
// result (unsigned).
Graph reduce(const Graph& g);

// --- the complex C_beth ----------------------------------------------------

// A fixed graph satisfying: connected, all valencies >= 3, at least one cut
// vertex, no separating edges. Elements of C_beth are connected >=3-valent
// graphs whose reduction is isomorphic to beth, with non-cut vertices
// labeled 1..n0, cut vertices n0+1..n0+n, non-separating edges 1..r0 and
// separating edges r0+1..r0+r; only the cut-vertex and separating-edge
// labels are quotiented (with the sign on separating labels).
struct BethContext {
    Graph beth; // undirected, with its cut vertices labeled last
    int n0 = 0; // non-cut vertices of beth
    int r0 = 0; // edges of beth

    static BethContext make(const Graph& beth_any_labels);
};

bool is_cbeth_element(const BethContext& ctx, const Graph& g);

// Canonical form under cut-vertex relabeling and separating-edge reordering;
// sign = sgn of the separating-edge permutation. nullopt if the class is
// forced to vanish.
std::optional<std::pair<Graph, int>> cbeth_canonicalize(const Graph& g, int n0, int r0);

using CBethChain = std::map<Graph, Rational, GraphLess>;

CBethChain cbeth_chain(const Graph& g, int n0, int r0, const Rational& c = 1);
CBethChain cbeth_add(const CBethChain& x, const CBethChain& y);

// delta(G) = -(-1)^{|G|} sum over cut vertices i of the terms of
// G o_i (edge/2) with all valencies >= 3 and the new edge separating.
CBethChain cbeth_delta(const BethContext& ctx, const Graph& g);
CBethChain cbeth_delta(const BethContext& ctx, const CBethChain& x);

// The homotopy: contracts the unique separating edge at p(c0) when the
// special marked vertex c0 of the smallest island sits alone at a univalent
// forest vertex, with sign (-1)^j; zero otherwise.
CBethChain cbeth_h(const BethContext& ctx, const Graph& g);
CBethChain cbeth_h(const BethContext& ctx, const CBethChain& x);

// Representatives of gra(beth) with `extra` additional cut vertices
// (equivalently `extra` separating edges), one per isomorphism class.
std::vector<Graph> cbeth_elements(const BethContext& ctx, int extra);

// All even connected >=3-valent graphs with a cut vertex and no separating
// edge, up to max_n vertices.
std::vector<Graph> beth_catalog(int max_n, unsigned threads = 0);

} // namespace dgc
