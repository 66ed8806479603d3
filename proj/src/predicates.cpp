#include "dgc/predicates.hpp"

#include <algorithm>
#include <functional>

namespace dgc {

std::vector<int> valencies(const Graph& g) {
    std::vector<int> val(g.n, 0);
    for (const auto& e : g.edges) {
        val[e.u - 1] += 1;
        val[e.v - 1] += 1; // a loop hits this twice
    }
    return val;
}

bool has_loop(const Graph& g) {
    return std::any_of(g.edges.begin(), g.edges.end(),
                       [](const Edge& e) { return e.u == e.v; });
}

int loop_count(const Graph& g) {
    return static_cast<int>(std::count_if(g.edges.begin(), g.edges.end(),
                                          [](const Edge& e) { return e.u == e.v; }));
}

namespace {

// adjacency over non-loop edges, with edge labels
struct Adj {
    std::vector<std::vector<std::pair<int, int>>> nb; // vertex -> (neighbor, edge idx)
    std::vector<int> loops;                           // loops per vertex

    explicit Adj(const Graph& g) : nb(g.n), loops(g.n, 0) {
        for (int i = 0; i < g.r(); ++i) {
            const auto& e = g.edges[i];
            if (e.u == e.v) {
                ++loops[e.u - 1];
                continue;
            }
            nb[e.u - 1].push_back({e.v - 1, i});
            nb[e.v - 1].push_back({e.u - 1, i});
        }
    }
};

} // namespace

bool is_connected(const Graph& g) {
    Adj adj(g);
    std::vector<bool> seen(g.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, idx] : adj.nb[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

namespace {

// Standard lowpoint DFS over the multigraph (loops skipped), computing both
// articulation points and bridges. A parallel edge is a distinct back edge,
// so it correctly cancels bridge-ness.
struct LowpointDfs {
    const Adj& adj;
    int n;
    std::vector<int> disc, low;
    std::vector<bool> cut, bridge_edge;
    int timer = 0;

    LowpointDfs(const Adj& a, int n_, int r)
        : adj(a), n(n_), disc(n_, -1), low(n_, 0), cut(n_, false),
          bridge_edge(r, false) {}

    void dfs(int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (auto [w, idx] : adj.nb[v]) {
            if (idx == parent_edge) continue;
            if (disc[w] < 0) {
                ++children;
                dfs(w, idx);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridge_edge[idx] = true;
                if (parent_edge >= 0 && low[w] >= disc[v]) cut[v] = true;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent_edge < 0 && children > 1) cut[v] = true;
    }

    void run() {
        for (int v = 0; v < n; ++v)
            if (disc[v] < 0) dfs(v, -1);
    }
};

} // namespace

std::vector<int> cut_vertices(const Graph& g) {
    Adj adj(g);
    LowpointDfs dfs(adj, g.n, g.r());
    dfs.run();
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v) {
        bool cut = dfs.cut[v];
        if (!cut && adj.loops[v] > 0) {
            // deleting the point leaves comp(g - v) + loops(v) pieces
            int pieces = adj.loops[v];
            if (!adj.nb[v].empty()) pieces += 1; // rest of v's component stays connected
            if (pieces >= 2) cut = true;
        }
        if (cut) out.push_back(v + 1);
    }
    return out;
}

bool is_one_vertex_irreducible(const Graph& g) {
    return is_connected(g) && cut_vertices(g).empty();
}

std::vector<int> separating_edges(const Graph& g) {
    Adj adj(g);
    LowpointDfs dfs(adj, g.n, g.r());
    dfs.run();
    std::vector<int> out;
    for (int i = 0; i < g.r(); ++i)
        if (dfs.bridge_edge[i]) out.push_back(i + 1);
    return out;
}

int nu2(const Graph& g) {
    auto val = valencies(g);
    return static_cast<int>(std::count(val.begin(), val.end(), 2));
}

Bigrade bigrade(const Graph& g) {
    Bigrade b;
    b.n = g.n;
    b.r = g.r();
    b.degree = 2 * b.n - 2 - b.r;
    b.chi = b.n - b.r;
    return b;
}

int degree_d(int n, int chi, int d) {
    if (d % 2 != 0) throw std::invalid_argument("degree_d: d must be even");
    return n + (d - 1) * chi - d;
}

int degree_d(const Graph& g, int d) { return degree_d(g.n, g.n - g.r(), d); }

} // namespace dgc
