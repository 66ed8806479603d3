#pragma once

#include "dgc/graph.hpp"

#include <vector>

namespace dgc {

// Valency of each vertex; a loop contributes 2 to its vertex.
std::vector<int> valencies(const Graph& g);

bool has_loop(const Graph& g);
int loop_count(const Graph& g);

// Connectivity of the underlying undirected graph (directions ignored).
bool is_connected(const Graph& g);

// Cut vertices of the topological realization: deleting the point v leaves
// the components of g minus v plus one open arc per loop at v. In particular
// a vertex carrying a loop is a cut vertex whenever anything else is attached
// (so 1-vertex-irreducible graphs with all valencies >= 3 never have loops).
std::vector<int> cut_vertices(const Graph& g);

bool is_one_vertex_irreducible(const Graph& g);

// Labels (1-based) of separating edges (bridges). Loops are never separating.
std::vector<int> separating_edges(const Graph& g);

// Number of bivalent vertices.
int nu2(const Graph& g);

struct Bigrade {
    int n = 0;
    int r = 0;
    int degree = 0; // 2n - 2 - r
    int chi = 0;    // n - r
    friend bool operator==(const Bigrade&, const Bigrade&) = default;
    friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

Bigrade bigrade(const Graph& g);

// Degree in the d-indexed family: n + (d-1)*chi - d. Throws for odd d.
int degree_d(const Graph& g, int d);
int degree_d(int n, int chi, int d);

} // namespace dgc
