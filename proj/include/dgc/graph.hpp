#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgc {

enum class Flavor : uint8_t { Directed, Undirected };

// One labeled edge. Directed: u -> v. Undirected: stored with u <= v.
// Loops (u == v) are allowed in both flavors.
struct Edge {
    int u = 0, v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A graph with vertices 1..n and edges labeled 1..r by list position.
struct Graph {
    Flavor flavor = Flavor::Directed;
    int n = 0;
    std::vector<Edge> edges;

    int r() const { return static_cast<int>(edges.size()); }
    bool directed() const { return flavor == Flavor::Directed; }

    static Graph make(Flavor f, int n, std::vector<Edge> edges);

    friend bool operator==(const Graph&, const Graph&) = default;
};

// Total order on graphs by the flattened sequence
// (flavor, n, r, e1.u, e1.v, e2.u, ...), compared lexicographically.
bool graph_less(const Graph& a, const Graph& b);

struct GraphLess {
    bool operator()(const Graph& a, const Graph& b) const { return graph_less(a, b); }
};

struct GraphHash {
    size_t operator()(const Graph& g) const;
};

// Throws std::invalid_argument if a vertex index is out of range.
void validate(const Graph& g);

struct ParseError : std::invalid_argument {
    size_t column; // 0-based offset of the offending token
    ParseError(const std::string& msg, size_t col)
        : std::invalid_argument(msg), column(col) {}
};

// Text format, one graph per string:
//   D <n> : a>b a>b ...     (directed)
//   U <n> : a-b a-b ...     (undirected)
// Vertices are 1-based; edge order in the line defines the edge labels.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// Parity of a permutation given as a 0-based image vector.
int permutation_sign(const std::vector<int>& perm);

// Rearranges labels. vertex_perm and edge_perm map old label -> new label
// (1-based, sizes n and r). Returns the relabeled graph and sgn(edge_perm).
std::pair<Graph, int> relabel(const Graph& g,
                              const std::vector<int>& vertex_perm,
                              const std::vector<int>& edge_perm);

} // namespace dgc
