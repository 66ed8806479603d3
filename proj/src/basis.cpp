#include "dgc/basis.hpp"

#include "dgc/predicates.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace dgc {

bool SubcomplexSpec::matches(const Graph& g) const {
    if (g.flavor != flavor) return false;
    if (loopless && has_loop(g)) return false;
    if (with_loop && !has_loop(g)) return false;
    auto val = valencies(g);
    if (min_valency > 0)
        for (int v : val)
            if (v < min_valency) return false;
    if (all_valency_exactly_2)
        for (int v : val)
            if (v != 2) return false;
    if (some_valency_ge3 &&
        std::none_of(val.begin(), val.end(), [](int v) { return v >= 3; }))
        return false;
    if (uni_bivalent) {
        bool single_vertex = g.n == 1 && g.r() == 0;
        if (!single_vertex) {
            bool has_one = false;
            for (int v : val) {
                if (v > 2) return false;
                if (v == 1) has_one = true;
            }
            if (!has_one) return false;
        }
    }
    if (connected && !is_connected(g)) return false;
    if (one_vertex_irreducible && !is_one_vertex_irreducible(g)) return false;
    return true;
}

std::string SubcomplexSpec::to_string() const {
    std::ostringstream out;
    out << (flavor == Flavor::Directed ? "directed" : "undirected");
    std::vector<std::string> preds;
    if (connected) preds.push_back("connected");
    if (loopless) preds.push_back("loopless");
    if (with_loop) preds.push_back("with_loop");
    if (min_valency == 2) preds.push_back("min_valency_2");
    if (min_valency == 3) preds.push_back("min_valency_3");
    if (one_vertex_irreducible) preds.push_back("one_vertex_irreducible");
    if (all_valency_exactly_2) preds.push_back("all_valency_exactly_2");
    if (uni_bivalent) preds.push_back("uni_bivalent");
    if (some_valency_ge3) preds.push_back("some_valency_ge3");
    if (!preds.empty()) {
        out << ':';
        for (size_t i = 0; i < preds.size(); ++i) out << (i ? "," : "") << preds[i];
    }
    return out.str();
}

SubcomplexSpec SubcomplexSpec::parse(const std::string& text) {
    SubcomplexSpec spec;
    std::string rest = text;
    std::vector<std::string> parts;
    for (char sep : {':', ','}) (void)sep;
    std::string token;
    for (char c : rest + ",") {
        if (c == ',' || c == ':') {
            if (!token.empty()) parts.push_back(token);
            token.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    bool flavor_set = false;
    for (const auto& p : parts) {
        if (p == "directed") spec.flavor = Flavor::Directed, flavor_set = true;
        else if (p == "undirected") spec.flavor = Flavor::Undirected, flavor_set = true;
        else if (p == "connected") spec.connected = true;
        else if (p == "loopless") spec.loopless = true;
        else if (p == "with_loop") spec.with_loop = true;
        else if (p == "min_valency_2") spec.min_valency = std::max(spec.min_valency, 2);
        else if (p == "min_valency_3") spec.min_valency = std::max(spec.min_valency, 3);
        else if (p == "one_vertex_irreducible" || p == "1vi")
            spec.one_vertex_irreducible = true;
        else if (p == "all_valency_exactly_2" || p == "polygons")
            spec.connected = spec.all_valency_exactly_2 = true;
        else if (p == "uni_bivalent" || p == "paths")
            spec.connected = spec.uni_bivalent = true;
        else if (p == "some_valency_ge3") spec.some_valency_ge3 = true;
        else throw std::invalid_argument("unknown subcomplex predicate: " + p);
    }
    if (!flavor_set)
        throw std::invalid_argument("subcomplex spec must name directed/undirected");
    return spec;
}

namespace {

struct Enumerator {
    const SubcomplexSpec& spec;
    int n;
    int r_max;
    std::vector<Edge> universe;
    int valency_cap; // 0 = none
    // per-thread accumulation
    std::vector<std::unordered_set<Graph, GraphHash>> found; // indexed by r

    Enumerator(const SubcomplexSpec& s, int n_, int r_max_)
        : spec(s), n(n_), r_max(r_max_), found(r_max_ + 1) {
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                if (spec.flavor == Flavor::Undirected && v < u) continue;
                if (u == v && spec.loopless) continue;
                universe.push_back({u, v});
            }
        valency_cap = 0;
        if (spec.all_valency_exactly_2 || spec.uni_bivalent) valency_cap = 2;
    }

    void leaf(std::vector<Edge>& edges) {
        Graph g = Graph::make(spec.flavor, n, edges);
        if (!spec.matches(g)) return;
        auto sc = canonicalize(g);
        if (sc.zero()) return;
        found[edges.size()].insert(std::move(*sc.cls));
    }

    // depth-first over increasing universe indices; deg[] tracks valencies
    void walk(size_t next, std::vector<Edge>& chosen, std::vector<int>& deg) {
        leaf(chosen);
        if (static_cast<int>(chosen.size()) == r_max) return;
        int slots = r_max - static_cast<int>(chosen.size());
        if (spec.min_valency > 0) {
            int deficiency = 0;
            for (int v = 0; v < n; ++v)
                deficiency += std::max(0, spec.min_valency - deg[v]);
            if (deficiency > 2 * slots) return;
        }
        for (size_t i = next; i < universe.size(); ++i) {
            const Edge& e = universe[i];
            int du = e.u == e.v ? 2 : 1;
            if (valency_cap) {
                if (deg[e.u - 1] + du > valency_cap) continue;
                if (e.u != e.v && deg[e.v - 1] + 1 > valency_cap) continue;
            }
            deg[e.u - 1] += du;
            if (e.u != e.v) deg[e.v - 1] += 1;
            chosen.push_back(e);
            walk(i + 1, chosen, deg);
            chosen.pop_back();
            deg[e.u - 1] -= du;
            if (e.u != e.v) deg[e.v - 1] -= 1;
        }
    }
};

std::vector<Graph> sorted_classes(std::unordered_set<Graph, GraphHash>& set) {
    std::vector<Graph> out(set.begin(), set.end());
    std::sort(out.begin(), out.end(), GraphLess{});
    return out;
}

} // namespace

std::vector<std::vector<Graph>> enumerate_basis_all_r(const SubcomplexSpec& spec,
                                                      int n, int r_max,
                                                      unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    Enumerator proto(spec, n, r_max);
    size_t u = proto.universe.size();

    unsigned workers = std::min<size_t>(threads, std::max<size_t>(1, u));
    std::vector<Enumerator> enums;
    enums.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) enums.emplace_back(spec, n, r_max);

    // partition on the first chosen universe index (plus the empty set once)
    auto work = [&](unsigned t) {
        Enumerator& en = enums[t];
        std::vector<Edge> chosen;
        std::vector<int> deg(n, 0);
        if (t == 0) en.leaf(chosen);
        for (size_t i = t; i < u; i += workers) {
            const Edge& e = en.universe[i];
            int du = e.u == e.v ? 2 : 1;
            if (en.valency_cap && du > en.valency_cap) continue;
            deg[e.u - 1] += du;
            if (e.u != e.v) deg[e.v - 1] += 1;
            chosen.push_back(e);
            if (r_max >= 1) en.walk(i + 1, chosen, deg);
            chosen.pop_back();
            deg[e.u - 1] -= du;
            if (e.u != e.v) deg[e.v - 1] -= 1;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<Graph>> out(r_max + 1);
    for (int r = 0; r <= r_max; ++r) {
        std::unordered_set<Graph, GraphHash> merged;
        for (auto& en : enums)
            merged.insert(std::make_move_iterator(en.found[r].begin()),
                          std::make_move_iterator(en.found[r].end()));
        out[r] = sorted_classes(merged);
    }
    return out;
}

std::vector<Graph> enumerate_basis(const SubcomplexSpec& spec, int n, int r,
                                   unsigned threads) {
    // walk only subsets of size <= r and keep the top bucket
    if (n < 1 || r < 0) throw std::invalid_argument("enumerate_basis: bad bigrade");
    auto all = enumerate_basis_all_r(spec, n, r, threads);
    return std::move(all[r]);
}

} // namespace dgc
