#pragma once

#include "dgc/chain.hpp"

namespace dgc {

// Named small graphs.
Graph gamma_bullet();        // one vertex, no edges (directed flavor)
Graph gamma_edge();          // 1>2
Graph gamma_loop();          // 1>1
Graph un_edge();             // undirected 1-2
Chain gamma_un_edge_chain(); // (1/2) * [un_edge], the undirected MC element

// Raw insertion: replace vertex i of g by h and sum over all reattachments of
// the edge endpoints of g incident to i (a loop at i contributes two
// endpoints). Vertices of h occupy labels i..i+m-1; g's higher labels shift
// up; g's edges keep labels 1..r and h's follow as r+1..r+q. Terms are
// returned as representatives, not canonicalized.
std::vector<Graph> insert_raw(const Graph& g, int i, const Graph& h);

// Canonicalized insertion of representatives, as a Chain.
Chain insert(const Graph& g, int i, const Graph& h);

// Bilinear extension of sum_i insert(., i, .).
Chain bullet(const Chain& x, const Chain& y);

// Graded commutator [x, y] = x*y - (-1)^{|x||y|} y*x; inputs must be
// homogeneous (the empty chain acts as zero).
Chain bracket(const Chain& x, const Chain& y);

// The differential: [gamma_edge, .] on directed chains and
// [(1/2) un_edge, .] on undirected chains.
Chain differential(const Chain& x);
Chain differential(const Graph& g);

enum class SimplifiedVariant {
    DirectedConnected,   // vertex splitting, drop univalent i / i+1 terms
    UndirectedConnected, // same over the undirected MC element
    UndirectedMin3,      // drop every term with a uni- or bivalent vertex
};

// Vertex-splitting form of the differential for connected graphs with r >= 1
// (UndirectedMin3 additionally requires all valencies >= 3). Validated
// against differential(); the bracket form is authoritative.
Chain differential_simplified(const Graph& g, SimplifiedVariant variant);

// Sum over all 2^(non-loop edges) direction assignments; every loop
// contributes a fixed multiplicity 2. Linear extension for chains.
Chain orient(const Graph& g);
Chain orient(const Chain& x);

// Terms of differential(x) whose bivalent-vertex count exceeds the source
// term's by exactly one (the associated-graded differential of the nu2
// filtration), applied term by term.
Chain graded_differential(const Chain& x);

} // namespace dgc
