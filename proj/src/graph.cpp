#include "dgc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dgc {

Graph Graph::make(Flavor f, int n, std::vector<Edge> edges) {
    Graph g;
    g.flavor = f;
    g.n = n;
    if (f == Flavor::Undirected)
        for (auto& e : edges)
            if (e.u > e.v) std::swap(e.u, e.v);
    g.edges = std::move(edges);
    validate(g);
    return g;
}

void validate(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (const auto& e : g.edges)
        if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n)
            throw std::invalid_argument("edge endpoint out of range");
}

bool graph_less(const Graph& a, const Graph& b) {
    if (a.flavor != b.flavor) return a.flavor < b.flavor;
    if (a.n != b.n) return a.n < b.n;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
}

size_t GraphHash::operator()(const Graph& g) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(g.flavor));
    mix(static_cast<uint64_t>(g.n));
    for (const auto& e : g.edges) mix((uint64_t(e.u) << 16) | uint64_t(e.v));
    return static_cast<size_t>(h);
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

int parse_int(const std::string& s, size_t& i) {
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw ParseError("expected a number", start);
    int value = 0;
    auto [p, ec] = std::from_chars(s.data() + start, s.data() + i, value);
    if (ec != std::errc()) throw ParseError("number out of range", start);
    return value;
}

} // namespace

Graph parse_graph(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size()) throw ParseError("empty graph", i);
    Flavor flavor;
    if (text[i] == 'D')
        flavor = Flavor::Directed;
    else if (text[i] == 'U')
        flavor = Flavor::Undirected;
    else
        throw ParseError("graph must start with 'D' or 'U'", i);
    ++i;
    skip_ws(text, i);
    int n = parse_int(text, i);
    if (n < 1) throw ParseError("vertex count must be positive", i);
    skip_ws(text, i);
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':'", i);
    ++i;
    char sep = flavor == Flavor::Directed ? '>' : '-';
    std::vector<Edge> edges;
    for (;;) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        size_t tok = i;
        int u = parse_int(text, i);
        if (i >= text.size() || text[i] != sep)
            throw ParseError(std::string("expected '") + sep + "' in edge", i);
        ++i;
        int v = parse_int(text, i);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("edge endpoint out of range", tok);
        edges.push_back({u, v});
    }
    return Graph::make(flavor, n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << (g.directed() ? 'D' : 'U') << ' ' << g.n << " :";
    char sep = g.directed() ? '>' : '-';
    for (const auto& e : g.edges) out << ' ' << e.u << sep << e.v;
    return out.str();
}

int permutation_sign(const std::vector<int>& perm) {
    // parity by cycle decomposition
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::pair<Graph, int> relabel(const Graph& g,
                              const std::vector<int>& vertex_perm,
                              const std::vector<int>& edge_perm) {
    if (vertex_perm.size() != static_cast<size_t>(g.n) ||
        edge_perm.size() != g.edges.size())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> edges(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) {
        int pos = edge_perm[i];
        if (pos < 1 || pos > g.r()) throw std::invalid_argument("relabel: bad edge label");
        Edge e{vertex_perm[g.edges[i].u - 1], vertex_perm[g.edges[i].v - 1]};
        edges[pos - 1] = e;
    }
    std::vector<int> perm0(edge_perm.size());
    for (size_t i = 0; i < edge_perm.size(); ++i) perm0[i] = edge_perm[i] - 1;
    Graph out = Graph::make(g.flavor, g.n, std::move(edges));
    return {out, permutation_sign(perm0)};
}

} // namespace dgc
