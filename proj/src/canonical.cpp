#include "dgc/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace dgc {

namespace {

constexpr int MAX_N = 16;

// Scratch state for one canonical-form search. The search assigns new labels
// 1..n to old vertices one at a time and compares, against the best leaf so
// far, the adjacency string read in "staircase" order: for m = 1..n the
// positions (1,m),...,(m-1,m),(m,1),...,(m,m-1),(m,m) (directed), or
// (1,m),...,(m-1,m),(m,m) (undirected). In that order the known prefix of the
// string grows monotonically with the number of assigned labels, so a branch
// whose partial string exceeds the best can be pruned. `best` holds the
// smallest explored prefix padded with 0xFF, so the first full exploration
// always improves it and ties are exactly the automorphic relabelings.
struct Search {
    const Graph* g = nullptr;
    bool directed = false;
    int n = 0;
    uint32_t adj[MAX_N];  // adj[u] bit v: edge u->v (dir) / u-v (undir)
    uint32_t radj[MAX_N]; // reverse adjacency (directed only)
    bool loop[MAX_N];

    int color[MAX_N];
    std::vector<std::vector<int>> cells; // old vertices grouped by color rank
    int cell_of_label[MAX_N];

    int assigned_old[MAX_N]; // new label (0-based) -> old vertex (0-based)
    int new_label[MAX_N];    // old vertex -> new label, -1 if unassigned

    std::vector<uint8_t> best;
    std::vector<uint8_t> cur;
    bool seen_plus = false, seen_minus = false;
    std::vector<Edge> best_edges; // sorted edges of the winning leaf

    size_t seg_offset[MAX_N + 1];

    void run();
    void descend(int depth);
    void leaf();
};

uint64_t hash_mix(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

void refine_colors(Search& s) {
    int n = s.n;
    std::vector<uint64_t> key(n), next(n);
    for (int v = 0; v < n; ++v) {
        int loops = s.loop[v] ? 1 : 0;
        int outd = __builtin_popcount(s.adj[v] & ~(1u << v));
        int ind = s.directed ? __builtin_popcount(s.radj[v] & ~(1u << v)) : 0;
        key[v] = (uint64_t(loops) << 32) | (uint64_t(outd) << 16) | uint64_t(ind);
    }
    // rank descending so that e.g. the out-degree-rich vertex of a single
    // edge takes label 1 and the canonical form reads 1>2
    auto rank_keys = [&](std::vector<uint64_t>& k) {
        std::vector<uint64_t> sorted = k;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            k[v] = sorted.size() - 1 -
                   static_cast<uint64_t>(std::lower_bound(sorted.begin(), sorted.end(),
                                                          k[v]) -
                                         sorted.begin());
        return sorted.size();
    };
    size_t ncolors = rank_keys(key);
    for (int round = 0; round < n && ncolors < static_cast<size_t>(n); ++round) {
        for (int v = 0; v < n; ++v) {
            std::array<uint64_t, 2 * MAX_N> sig{};
            size_t cnt = 0;
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                if (s.adj[v] & (1u << u)) sig[cnt++] = 2 * key[u];
                if (s.directed && (s.radj[v] & (1u << u))) sig[cnt++] = 2 * key[u] + 1;
            }
            std::sort(sig.begin(), sig.begin() + cnt);
            uint64_t h = key[v] + 1;
            for (size_t i = 0; i < cnt; ++i) h = hash_mix(h, sig[i] + 1);
            next[v] = h;
        }
        key = next;
        size_t nc = rank_keys(key);
        if (nc == ncolors) break;
        ncolors = nc;
    }
    for (int v = 0; v < n; ++v) s.color[v] = static_cast<int>(key[v]);
    s.cells.assign(ncolors, {});
    for (int v = 0; v < n; ++v) s.cells[s.color[v]].push_back(v);
    int lbl = 0;
    for (size_t c = 0; c < s.cells.size(); ++c)
        for (size_t i = 0; i < s.cells[c].size(); ++i)
            s.cell_of_label[lbl++] = static_cast<int>(c);
}

void Search::leaf() {
    const Graph& gr = *g;
    int r = gr.r();
    std::array<Edge, 64> mapped;
    for (int i = 0; i < r; ++i) {
        int u = new_label[gr.edges[i].u - 1] + 1;
        int v = new_label[gr.edges[i].v - 1] + 1;
        if (!directed && u > v) std::swap(u, v);
        mapped[i] = Edge{u, v};
    }
    // insertion sort counting swaps; all pairs are distinct here
    int inversions = 0;
    for (int i = 1; i < r; ++i) {
        Edge e = mapped[i];
        int j = i - 1;
        while (j >= 0 && e < mapped[j]) {
            mapped[j + 1] = mapped[j];
            --j;
            ++inversions;
        }
        mapped[j + 1] = e;
    }
    int sign = (inversions % 2 == 0) ? 1 : -1;
    if (!seen_plus && !seen_minus)
        best_edges.assign(mapped.begin(), mapped.begin() + r);
    if (sign > 0) seen_plus = true;
    else seen_minus = true;
}

void Search::descend(int depth) {
    if (depth == n) {
        leaf();
        return;
    }
    auto& cell = cells[cell_of_label[depth]];
    size_t seg = seg_offset[depth];
    size_t segend = seg_offset[depth + 1];
    for (int old_v : cell) {
        if (new_label[old_v] >= 0) continue;
        size_t pos = seg;
        for (int j = 0; j < depth; ++j)
            cur[pos++] = (adj[assigned_old[j]] >> old_v) & 1u;
        if (directed)
            for (int j = 0; j < depth; ++j)
                cur[pos++] = (adj[old_v] >> assigned_old[j]) & 1u;
        cur[pos++] = loop[old_v] ? 1 : 0;

        int cmp = std::memcmp(cur.data() + seg, best.data() + seg, segend - seg);
        if (cmp > 0) continue;
        if (cmp < 0) {
            std::copy(cur.begin() + seg, cur.begin() + segend, best.begin() + seg);
            std::fill(best.begin() + segend, best.end(), 0xFF);
            seen_plus = seen_minus = false;
        }
        assigned_old[depth] = old_v;
        new_label[old_v] = depth;
        descend(depth + 1);
        new_label[old_v] = -1;
    }
}

void Search::run() {
    refine_colors(*this);
    size_t total = 0;
    for (int k = 0; k < n; ++k) {
        seg_offset[k] = total;
        total += directed ? static_cast<size_t>(2 * k + 1) : static_cast<size_t>(k + 1);
    }
    seg_offset[n] = total;
    cur.assign(total, 0);
    best.assign(total, 0xFF);
    std::fill(new_label, new_label + n, -1);
    descend(0);
}

} // namespace

SignedClass canonicalize(const Graph& g) {
    validate(g);
    if (g.n > MAX_N || g.r() > 64)
        throw std::invalid_argument("canonicalize: graph too large");

    // duplicate edge pair -> odd (swapping the two labels is an automorphism)
    {
        std::array<Edge, 64> tmp;
        int r = g.r();
        for (int i = 0; i < r; ++i) {
            Edge e = g.edges[i];
            if (!g.directed() && e.u > e.v) std::swap(e.u, e.v);
            tmp[i] = e;
        }
        std::sort(tmp.begin(), tmp.begin() + r);
        for (int i = 0; i + 1 < r; ++i)
            if (tmp[i] == tmp[i + 1]) return SignedClass::make_zero();
    }

    Search s;
    s.g = &g;
    s.directed = g.directed();
    s.n = g.n;
    std::fill(s.adj, s.adj + s.n, 0u);
    std::fill(s.radj, s.radj + s.n, 0u);
    std::fill(s.loop, s.loop + s.n, false);
    for (const auto& e : g.edges) {
        int u = e.u - 1, v = e.v - 1;
        if (u == v) {
            s.loop[u] = true;
            continue;
        }
        s.adj[u] |= 1u << v;
        if (g.directed()) s.radj[v] |= 1u << u;
        else s.adj[v] |= 1u << u;
    }
    s.run();

    if (s.seen_plus && s.seen_minus) return SignedClass::make_zero();
    SignedClass out;
    out.cls = Graph::make(g.flavor, g.n, s.best_edges);
    out.sign = s.seen_minus ? -1 : 1;
    return out;
}

bool is_canonical(const Graph& g) {
    auto c = canonicalize(g);
    return !c.zero() && c.sign == 1 && *c.cls == g;
}

bool is_odd(const Graph& g) { return canonicalize(g).zero(); }

} // namespace dgc
