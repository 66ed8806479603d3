#include "dgc/islands.hpp"

#include "dgc/basis.hpp"
#include "dgc/operad.hpp"
#include "dgc/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dgc {

namespace {

// biconnected components over non-loop edges via the classic edge stack;
// returns one edge-index set per block (loops become their own blocks)
std::vector<std::vector<int>> blocks_of(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> nb(g.n); // (neighbor, edge)
    std::vector<std::vector<int>> out;
    for (int e = 0; e < g.r(); ++e) {
        if (g.edges[e].u == g.edges[e].v) {
            out.push_back({e});
            continue;
        }
        nb[g.edges[e].u - 1].push_back({g.edges[e].v - 1, e});
        nb[g.edges[e].v - 1].push_back({g.edges[e].u - 1, e});
    }
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<int> estack;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        for (auto [w, e] : nb[v]) {
            if (e == parent_edge) continue;
            if (disc[w] < 0) {
                estack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<int> block;
                    for (;;) {
                        int top = estack.back();
                        estack.pop_back();
                        block.push_back(top);
                        if (top == e) break;
                    }
                    out.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                estack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[v] < 0 && !nb[v].empty()) dfs(v, -1);
    return out;
}

} // namespace

IslandForest islands_and_forest(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("islands: graph must be connected");
    auto val = valencies(g);
    for (int v : val)
        if (v < 3) throw std::invalid_argument("islands: valencies must be >= 3");
    auto cuts = cut_vertices(g);
    if (cuts.empty()) throw std::domain_error("islands: graph has no cut vertex");
    std::vector<bool> is_cut(g.n + 1, false);
    for (int v : cuts) is_cut[v] = true;
    auto bridges = separating_edges(g);
    std::vector<bool> is_bridge(g.r() + 1, false);
    for (int e : bridges) is_bridge[e] = true;

    IslandForest out;
    std::vector<bool> in_island(g.n + 1, false);
    for (auto& block : blocks_of(g)) {
        if (block.size() == 1 && is_bridge[block[0] + 1]) continue;
        std::sort(block.begin(), block.end());
        IslandForest::Island isl;
        std::vector<int> label_of(g.n + 1, 0);
        for (int e : block) {
            for (int v : {g.edges[e].u, g.edges[e].v})
                if (!label_of[v]) {
                    isl.original.push_back(v);
                    label_of[v] = static_cast<int>(isl.original.size());
                    in_island[v] = true;
                    if (is_cut[v]) isl.marked.push_back(label_of[v]);
                }
        }
        std::vector<Edge> edges;
        for (int e : block) {
            edges.push_back({label_of[g.edges[e].u], label_of[g.edges[e].v]});
            isl.edge_labels.push_back(e + 1);
        }
        isl.graph = Graph::make(g.flavor, static_cast<int>(isl.original.size()),
                                std::move(edges));
        out.islands.push_back(std::move(isl));
    }
    for (int v : cuts) {
        out.forest_vertices.push_back(v);
        out.forest_internal.push_back(!in_island[v]);
    }
    for (int e : bridges) {
        out.forest_edges.push_back({g.edges[e - 1].u, g.edges[e - 1].v});
        out.forest_edge_labels.push_back(e);
    }
    return out;
}

Graph reassemble(const IslandForest& d, int n, Flavor flavor) {
    std::map<int, Edge> edges;
    for (const auto& isl : d.islands)
        for (size_t i = 0; i < isl.edge_labels.size(); ++i)
            edges[isl.edge_labels[i]] = {isl.original[isl.graph.edges[i].u - 1],
                                         isl.original[isl.graph.edges[i].v - 1]};
    for (size_t i = 0; i < d.forest_edge_labels.size(); ++i)
        edges[d.forest_edge_labels[i]] = {d.forest_edges[i].first,
                                          d.forest_edges[i].second};
    std::vector<Edge> list;
    int expect = 1;
    for (const auto& [label, e] : edges) {
        if (label != expect++) throw std::logic_error("reassemble: edge labels have gaps");
        list.push_back(e);
    }
    return Graph::make(flavor, n, std::move(list));
}

namespace {

std::optional<Graph> reduce_class(const Graph& g) {
    auto bridges = separating_edges(g);
    std::vector<bool> is_bridge(g.r() + 1, false);
    for (int e : bridges) is_bridge[e] = true;
    // merge bridge endpoints with union-find
    std::vector<int> parent(g.n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : bridges) parent[find(g.edges[e - 1].u)] = find(g.edges[e - 1].v);
    std::vector<int> label(g.n + 1, 0);
    int m = 0;
    for (int v = 1; v <= g.n; ++v) {
        int root = find(v);
        if (!label[root]) label[root] = ++m;
    }
    std::vector<Edge> edges;
    for (int e = 0; e < g.r(); ++e) {
        if (is_bridge[e + 1]) continue;
        edges.push_back({label[find(g.edges[e].u)], label[find(g.edges[e].v)]});
    }
    auto sc = canonicalize(Graph::make(g.flavor, m, std::move(edges)));
    if (sc.zero()) return std::nullopt;
    return *sc.cls;
}

} // namespace

Graph reduce(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("reduce: graph must be connected");
    auto cls = reduce_class(g);
    if (!cls) throw std::domain_error("reduce: odd class");
    return *cls;
}

// --- C_beth ------------------------------------------------------------

BethContext BethContext::make(const Graph& beth_any) {
    if (!is_connected(beth_any)) throw std::invalid_argument("beth: must be connected");
    for (int v : valencies(beth_any))
        if (v < 3) throw std::invalid_argument("beth: valencies must be >= 3");
    if (!separating_edges(beth_any).empty())
        throw std::invalid_argument("beth: separating edges are not allowed");
    auto cuts = cut_vertices(beth_any);
    if (cuts.empty()) throw std::invalid_argument("beth: needs a cut vertex");
    std::vector<bool> is_cut(beth_any.n + 1, false);
    for (int v : cuts) is_cut[v] = true;
    // relabel with non-cut vertices first, preserving relative order
    std::vector<int> vperm(beth_any.n);
    int next = 1;
    for (int v = 1; v <= beth_any.n; ++v)
        if (!is_cut[v]) vperm[v - 1] = next++;
    BethContext ctx;
    ctx.n0 = next - 1;
    for (int v = 1; v <= beth_any.n; ++v)
        if (is_cut[v]) vperm[v - 1] = next++;
    std::vector<int> eperm(beth_any.r());
    std::iota(eperm.begin(), eperm.end(), 1);
    ctx.beth = relabel(beth_any, vperm, eperm).first;
    ctx.r0 = ctx.beth.r();
    return ctx;
}

bool is_cbeth_element(const BethContext& ctx, const Graph& g) {
    if (g.flavor != ctx.beth.flavor || g.n < ctx.beth.n || !is_connected(g)) return false;
    for (int v : valencies(g))
        if (v < 3) return false;
    auto cuts = cut_vertices(g);
    if (static_cast<int>(cuts.size()) != g.n - ctx.n0) return false;
    for (int v : cuts)
        if (v <= ctx.n0) return false;
    auto bridges = separating_edges(g);
    if (static_cast<int>(bridges.size()) != g.r() - ctx.r0) return false;
    for (int e : bridges)
        if (e <= ctx.r0) return false;
    auto red = reduce_class(g);
    return red && *red == reduce(ctx.beth);
}

std::optional<std::pair<Graph, int>> cbeth_canonicalize(const Graph& g, int n0, int r0) {
    int ncut = g.n - n0;
    int nsep = g.r() - r0;
    std::vector<int> cutperm(ncut);
    std::iota(cutperm.begin(), cutperm.end(), 0);
    std::optional<Graph> best;
    bool seen_plus = false, seen_minus = false;
    do {
        std::vector<Edge> edges = g.edges;
        auto map_v = [&](int v) { return v <= n0 ? v : n0 + 1 + cutperm[v - n0 - 1]; };
        for (auto& e : edges) {
            e.u = map_v(e.u);
            e.v = map_v(e.v);
            if (!g.directed() && e.u > e.v) std::swap(e.u, e.v);
        }
        // sort the separating block, counting swaps
        int inversions = 0;
        for (int i = r0 + 1; i < g.r(); ++i) {
            Edge e = edges[i];
            int j = i - 1;
            while (j >= r0 && e < edges[j]) {
                edges[j + 1] = edges[j];
                --j;
                ++inversions;
            }
            edges[j + 1] = e;
        }
        int sign = inversions % 2 == 0 ? 1 : -1;
        Graph cand = Graph::make(g.flavor, g.n, std::move(edges));
        if (!best || graph_less(cand, *best)) {
            best = std::move(cand);
            seen_plus = sign > 0;
            seen_minus = sign < 0;
        } else if (*best == cand) {
            (sign > 0 ? seen_plus : seen_minus) = true;
        }
    } while (std::next_permutation(cutperm.begin(), cutperm.end()));
    (void)nsep;
    if (seen_plus && seen_minus) return std::nullopt;
    return std::make_pair(*best, seen_minus ? -1 : 1);
}

CBethChain cbeth_chain(const Graph& g, int n0, int r0, const Rational& c) {
    CBethChain out;
    auto cc = cbeth_canonicalize(g, n0, r0);
    if (!cc) return out;
    Rational v = cc->second > 0 ? c : Rational(-c);
    if (v != 0) out.emplace(cc->first, v);
    return out;
}

namespace {

void cbeth_accumulate(CBethChain& x, const Graph& cls, const Rational& c) {
    if (c == 0) return;
    auto it = x.find(cls);
    if (it == x.end()) {
        x.emplace(cls, c);
        return;
    }
    it->second += c;
    if (it->second == 0) x.erase(it);
}

} // namespace

CBethChain cbeth_add(const CBethChain& x, const CBethChain& y) {
    CBethChain out = x;
    for (const auto& [g, c] : y) cbeth_accumulate(out, g, c);
    return out;
}

CBethChain cbeth_delta(const BethContext& ctx, const Graph& g) {
    if (!is_cbeth_element(ctx, g))
        throw std::invalid_argument("cbeth_delta: not a C_beth element");
    int deg = 2 * g.n - 2 - g.r();
    Rational pref = deg % 2 == 0 ? Rational(-1, 2) : Rational(1, 2);
    CBethChain out;
    for (int i = ctx.n0 + 1; i <= g.n; ++i) {
        for (const auto& t : insert_raw(g, i, un_edge())) {
            auto tval = valencies(t);
            bool ok = true;
            for (int v : tval)
                if (v < 3) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            auto bridges = separating_edges(t);
            if (std::find(bridges.begin(), bridges.end(), t.r()) == bridges.end())
                continue; // the inserted edge must be separating
            auto cc = cbeth_canonicalize(t, ctx.n0, ctx.r0);
            if (!cc) continue;
            cbeth_accumulate(out, cc->first, cc->second > 0 ? pref : Rational(-pref));
        }
    }
    return out;
}

CBethChain cbeth_delta(const BethContext& ctx, const CBethChain& x) {
    CBethChain out;
    for (const auto& [g, c] : x)
        for (const auto& [h, q] : cbeth_delta(ctx, g)) cbeth_accumulate(out, h, c * q);
    return out;
}

namespace {

// the special marked vertex of the smallest island (proof of acyclicity)
int special_vertex(const Graph& g, const IslandForest& dec) {
    // islands ordered by their smallest original edge label
    std::vector<int> order(dec.islands.size());
    std::iota(order.begin(), order.end(), 0);
    auto smallest_edge = [&](int i) { return dec.islands[i].edge_labels.front(); };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return smallest_edge(a) < smallest_edge(b); });
    const auto& isl0 = dec.islands[order[0]];
    if (isl0.marked.size() == 1) return isl0.original[isl0.marked[0] - 1];

    // forest components over the cut vertices
    std::map<int, int> comp;
    {
        std::map<int, std::vector<int>> adj;
        for (auto [u, v] : dec.forest_edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        int cid = 0;
        for (int v : dec.forest_vertices) {
            if (comp.count(v)) continue;
            ++cid;
            std::vector<int> stack{v};
            comp[v] = cid;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : adj[x])
                    if (!comp.count(w)) {
                        comp[w] = cid;
                        stack.push_back(w);
                    }
            }
        }
    }
    int best_vertex = -1, best_island_rank = 1 << 30;
    for (int m : isl0.marked) {
        int c_orig = isl0.original[m - 1];
        int target_comp = comp.at(c_orig);
        // smallest island (other than isl0) attached to the same component
        int rank_here = 1 << 30;
        for (size_t k = 0; k < order.size(); ++k) {
            if (order[k] == order[0]) continue;
            const auto& isl = dec.islands[order[k]];
            bool attached = false;
            for (int mm : isl.marked)
                if (comp.at(isl.original[mm - 1]) == target_comp) {
                    attached = true;
                    break;
                }
            if (attached) {
                rank_here = static_cast<int>(k);
                break;
            }
        }
        if (rank_here < best_island_rank) {
            best_island_rank = rank_here;
            best_vertex = c_orig;
        }
    }
    return best_vertex;
}

} // namespace

CBethChain cbeth_h(const BethContext& ctx, const Graph& g) {
    if (!is_cbeth_element(ctx, g))
        throw std::invalid_argument("cbeth_h: not a C_beth element");
    CBethChain out;
    if (g.r() == ctx.r0) return out; // no separating edges at all
    auto dec = islands_and_forest(g);
    int v = special_vertex(g, dec);
    // condition: v belongs to exactly one island and meets exactly one
    // separating edge
    int islands_at_v = 0;
    for (const auto& isl : dec.islands)
        for (int m : isl.marked)
            if (isl.original[m - 1] == v) ++islands_at_v;
    int sep_at_v = 0, the_edge = -1;
    for (size_t i = 0; i < dec.forest_edges.size(); ++i)
        if (dec.forest_edges[i].first == v || dec.forest_edges[i].second == v) {
            ++sep_at_v;
            the_edge = dec.forest_edge_labels[i];
        }
    if (islands_at_v != 1 || sep_at_v != 1) return out;

    int j = the_edge;
    int i1 = g.edges[j - 1].u, i2 = g.edges[j - 1].v;
    if (i1 > i2) std::swap(i1, i2);
    std::vector<Edge> edges;
    for (int e = 0; e < g.r(); ++e) {
        if (e + 1 == j) continue;
        Edge ed = g.edges[e];
        auto map_v = [&](int x) {
            if (x == i2) x = i1;
            return x > i2 ? x - 1 : x;
        };
        ed.u = map_v(ed.u);
        ed.v = map_v(ed.v);
        edges.push_back(ed);
    }
    Graph contracted = Graph::make(g.flavor, g.n - 1, std::move(edges));
    Rational c = j % 2 == 0 ? 1 : -1; // (-1)^j
    auto cc = cbeth_canonicalize(contracted, ctx.n0, ctx.r0);
    if (cc) cbeth_accumulate(out, cc->first, cc->second > 0 ? c : Rational(-c));
    return out;
}

CBethChain cbeth_h(const BethContext& ctx, const CBethChain& x) {
    CBethChain out;
    for (const auto& [g, c] : x)
        for (const auto& [h, q] : cbeth_h(ctx, g)) cbeth_accumulate(out, h, c * q);
    return out;
}

std::vector<Graph> cbeth_elements(const BethContext& ctx, int extra) {
    std::vector<Graph> level{ctx.beth};
    for (int step = 0; step < extra; ++step) {
        std::set<Graph, GraphLess> next;
        for (const auto& g : level)
            for (int i = ctx.n0 + 1; i <= g.n; ++i)
                for (const auto& t : insert_raw(g, i, un_edge())) {
                    auto tval = valencies(t);
                    bool ok = true;
                    for (int v : tval)
                        if (v < 3) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    auto bridges = separating_edges(t);
                    if (std::find(bridges.begin(), bridges.end(), t.r()) == bridges.end())
                        continue;
                    auto cc = cbeth_canonicalize(t, ctx.n0, ctx.r0);
                    if (cc) next.insert(cc->first);
                }
        level.assign(next.begin(), next.end());
    }
    return level;
}

std::vector<Graph> beth_catalog(int max_n, unsigned threads) {
    std::vector<Graph> out;
    auto spec = SubcomplexSpec::parse("undirected:connected,min_valency_3");
    for (int n = 3; n <= max_n; ++n) {
        int rmax = n * (n - 1) / 2 + n;
        auto all = enumerate_basis_all_r(spec, n, rmax, threads);
        for (const auto& bucket : all)
            for (const auto& g : bucket)
                if (!cut_vertices(g).empty() && separating_edges(g).empty())
                    out.push_back(g);
    }
    return out;
}

} // namespace dgc
