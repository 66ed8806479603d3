#include "dgc/operad.hpp"

namespace dgc {

Graph gamma_bullet() { return Graph::make(Flavor::Directed, 1, {}); }
Graph gamma_edge() { return Graph::make(Flavor::Directed, 2, {{1, 2}}); }
Graph gamma_loop() { return Graph::make(Flavor::Directed, 1, {{1, 1}}); }
Graph un_edge() { return Graph::make(Flavor::Undirected, 2, {{1, 2}}); }

Chain gamma_un_edge_chain() {
    return scale(Rational(1, 2), from_graph(un_edge()));
}

std::vector<Graph> insert_raw(const Graph& g, int i, const Graph& h) {
    if (g.flavor != h.flavor) throw std::invalid_argument("insert: flavor mismatch");
    if (i < 1 || i > g.n) throw std::invalid_argument("insert: vertex index out of range");
    const int m = h.n;
    const int r = g.r();

    // endpoints of g-edges incident to i: (edge index, true if the u slot)
    std::vector<std::pair<int, bool>> slots;
    for (int e = 0; e < r; ++e) {
        if (g.edges[e].u == i) slots.push_back({e, true});
        if (g.edges[e].v == i) slots.push_back({e, false});
    }
    auto map_old = [&](int x) { return x < i ? x : x + m - 1; };

    std::vector<Graph> out;
    std::vector<int> choice(slots.size(), 1); // 1..m per slot
    for (;;) {
        std::vector<Edge> edges(r + h.r());
        for (int e = 0; e < r; ++e)
            edges[e] = {map_old(g.edges[e].u), map_old(g.edges[e].v)};
        for (size_t s = 0; s < slots.size(); ++s) {
            auto [e, at_u] = slots[s];
            int w = i - 1 + choice[s];
            if (at_u) edges[e].u = w;
            else edges[e].v = w;
        }
        for (int e = 0; e < h.r(); ++e)
            edges[r + e] = {h.edges[e].u + i - 1, h.edges[e].v + i - 1};
        out.push_back(Graph::make(g.flavor, g.n + m - 1, std::move(edges)));

        size_t s = 0;
        while (s < slots.size() && choice[s] == m) choice[s++] = 1;
        if (s == slots.size()) break;
        ++choice[s];
    }
    return out;
}

Chain insert(const Graph& g, int i, const Graph& h) {
    Chain out(g.flavor);
    for (const auto& t : insert_raw(g, i, h)) out.accumulate(t, 1);
    return out;
}

Chain bullet(const Chain& x, const Chain& y) {
    if (x.flavor != y.flavor) throw std::invalid_argument("bullet: flavor mismatch");
    Chain out(x.flavor);
    for (const auto& [gx, cx] : x.terms)
        for (const auto& [gy, cy] : y.terms) {
            Rational c = cx * cy;
            for (int i = 1; i <= gx.n; ++i)
                for (const auto& t : insert_raw(gx, i, gy)) out.accumulate(t, c);
        }
    return out;
}

Chain bracket(const Chain& x, const Chain& y) {
    if (x.flavor != y.flavor) throw std::invalid_argument("bracket: flavor mismatch");
    if (x.empty() || y.empty()) return Chain(x.flavor);
    auto dx = degree(x), dy = degree(y);
    if (!dx || !dy) throw std::invalid_argument("bracket: inputs must be homogeneous");
    Chain out = bullet(x, y);
    Chain yx = bullet(y, x);
    if ((*dx * *dy) % 2 == 0) out = sub(out, yx);
    else out = add(out, yx);
    return out;
}

Chain differential(const Chain& x) {
    if (x.empty()) return Chain(x.flavor);
    if (!is_homogeneous(x))
        throw std::invalid_argument("differential: input must be homogeneous");
    Chain mc = x.flavor == Flavor::Directed ? from_graph(gamma_edge())
                                            : gamma_un_edge_chain();
    return bracket(mc, x);
}

Chain differential(const Graph& g) { return differential(from_graph(g)); }

Chain differential_simplified(const Graph& g, SimplifiedVariant variant) {
    if (!is_connected(g)) throw std::invalid_argument("simplified differential: graph must be connected");
    if (g.r() < 1) throw std::invalid_argument("simplified differential: graph must have an edge");
    bool dir = variant == SimplifiedVariant::DirectedConnected;
    if (dir != g.directed()) throw std::invalid_argument("simplified differential: flavor mismatch");
    auto val = valencies(g);
    if (variant == SimplifiedVariant::UndirectedMin3)
        for (int v : val)
            if (v < 3) throw std::invalid_argument("simplified differential: valency < 3");

    Graph e = dir ? gamma_edge() : un_edge();
    Chain sum(g.flavor);
    for (int i = 1; i <= g.n; ++i) {
        for (const auto& t : insert_raw(g, i, e)) {
            auto tval = valencies(t);
            bool keep;
            if (variant == SimplifiedVariant::UndirectedMin3) {
                keep = true;
                for (int v : tval)
                    if (v < 3) {
                        keep = false;
                        break;
                    }
            } else {
                keep = tval[i - 1] != 1 && tval[i] != 1;
            }
            if (keep) sum.accumulate(t, 1);
        }
    }
    int deg = bigrade(g).degree;
    Rational pref = (deg % 2 == 0) ? Rational(-1) : Rational(1); // -(-1)^{|g|}
    if (!dir) pref /= 2;                                         // the MC element carries 1/2
    return scale(pref, sum);
}

Chain orient(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("orient: expects an undirected graph");
    std::vector<int> flippable;
    int loops = 0;
    for (int e = 0; e < g.r(); ++e) {
        if (g.edges[e].u == g.edges[e].v) ++loops;
        else flippable.push_back(e);
    }
    Rational coeff = 1;
    for (int k = 0; k < loops; ++k) coeff *= 2;

    Chain out(Flavor::Directed);
    size_t count = size_t(1) << flippable.size();
    for (size_t mask = 0; mask < count; ++mask) {
        std::vector<Edge> edges = g.edges;
        for (size_t b = 0; b < flippable.size(); ++b)
            if (mask & (size_t(1) << b)) {
                Edge& e = edges[flippable[b]];
                std::swap(e.u, e.v);
            }
        out.accumulate(Graph::make(Flavor::Directed, g.n, std::move(edges)), coeff);
    }
    return out;
}

Chain orient(const Chain& x) {
    if (x.flavor != Flavor::Undirected)
        throw std::invalid_argument("orient: expects an undirected chain");
    Chain out(Flavor::Directed);
    for (const auto& [g, c] : x.terms) {
        Chain o = orient(g);
        for (const auto& [h, q] : o.terms) out.accumulate_class(h, c * q);
    }
    return out;
}

Chain graded_differential(const Chain& x) {
    Chain out(x.flavor);
    for (const auto& [g, c] : x.terms) {
        int target = nu2(g) + 1;
        Chain d = differential(from_class(SignedClass{g, 1}, x.flavor));
        for (const auto& [h, q] : d.terms)
            if (nu2(h) == target) out.accumulate_class(h, c * q);
    }
    return out;
}

} // namespace dgc
