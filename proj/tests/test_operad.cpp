#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgc/operad.hpp"
#include "oracles.hpp"

#include <random>

using namespace dgc;

namespace {

Graph tetra() { return parse_graph("U 4 : 1-2 1-3 1-4 2-3 2-4 3-4"); }
Graph pentagon() { return parse_graph("D 5 : 1>2 2>3 3>4 4>5 5>1"); }

// all even classes of a given bigrade, for random homogeneous chains
std::vector<Graph> classes_at(Flavor f, int n, int r) {
    std::vector<Edge> universe;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (f == Flavor::Undirected && v < u) continue;
            universe.push_back({u, v});
        }
    std::vector<Graph> out;
    std::vector<int> c(r);
    if (r > static_cast<int>(universe.size())) return out;
    for (int i = 0; i < r; ++i) c[i] = i;
    for (;;) {
        std::vector<Edge> edges(r);
        for (int i = 0; i < r; ++i) edges[i] = universe[c[i]];
        auto sc = canonicalize(Graph::make(f, n, std::move(edges)));
        if (!sc.zero() && std::find(out.begin(), out.end(), *sc.cls) == out.end())
            out.push_back(*sc.cls);
        int i = r - 1;
        while (i >= 0 && c[i] == static_cast<int>(universe.size()) - r + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

} // namespace

TEST_CASE("chain basics") {
    CHECK(from_graph(parse_graph("D 4 : 1>2 2>3 3>4 4>1")).empty());
    Graph pent = pentagon();
    auto [rot, sgn] = relabel(pent, {2, 3, 4, 5, 1}, {2, 3, 4, 5, 1});
    CHECK(from_graph(rot) == from_graph(pent));
    Chain x = from_graph(pent);
    CHECK(add(x, scale(-1, x)).empty());

    auto bg = is_homogeneous(from_graph(gamma_edge()));
    REQUIRE(bg.has_value());
    CHECK(bg->n == 2);
    CHECK(bg->r == 1);
    CHECK(bg->degree == 1);
    CHECK_FALSE(is_homogeneous(Chain(Flavor::Directed)).has_value());
    Chain mixed = add(from_graph(gamma_bullet()), from_graph(gamma_loop()));
    CHECK_FALSE(is_homogeneous(mixed).has_value());
    CHECK_FALSE(degree(mixed).has_value());

    // vector space sanity on random small chains
    std::mt19937 rng(12345);
    auto pool = classes_at(Flavor::Directed, 3, 2);
    auto rnd_chain = [&]() {
        Chain c(Flavor::Directed);
        for (const auto& g : pool) {
            int k = static_cast<int>(rng() % 7) - 3;
            Rational q(k, 1 + int(rng() % 3));
            q.canonicalize();
            if (k != 0) c.accumulate_class(g, q);
        }
        return c;
    };
    for (int rep = 0; rep < 20; ++rep) {
        Chain a = rnd_chain(), b = rnd_chain(), c = rnd_chain();
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(add(a, b) == add(b, a));
        CHECK(scale(Rational(2, 3), add(a, b)) ==
              add(scale(Rational(2, 3), a), scale(Rational(2, 3), b)));
        CHECK(add(a, scale(-1, a)).empty());
    }
}

TEST_CASE("chain json round trip") {
    Chain x = add(scale(Rational(1, 2), from_graph(gamma_loop())),
                  scale(Rational(-3, 7), from_graph(gamma_edge())));
    Chain y = chain_from_json(chain_to_json(x));
    CHECK(x == y);
    CHECK(chain_to_json(x) == chain_to_json(y));
}

TEST_CASE("from_graph respects relabeling sign, exhaustive") {
    using dgc::testing::all_perms;
    auto vperms = all_perms(3);
    for (int r = 0; r <= 3; ++r) {
        auto eperms = all_perms(r);
        for (const auto& g0 : classes_at(Flavor::Directed, 3, r))
            for (const auto& vp : vperms)
                for (const auto& ep : eperms) {
                    auto [h, sgn] = relabel(g0, vp, ep);
                    CHECK(from_graph(h) == scale(sgn, from_graph(g0)));
                }
    }
}

TEST_CASE("insertion examples") {
    // triangle o_2 edge: four raw terms, three surviving classes (fig. ins)
    Graph tri = parse_graph("D 3 : 1>2 2>3 3>1");
    auto raw = insert_raw(tri, 2, gamma_edge());
    CHECK(raw.size() == 4);
    Chain ins = insert(tri, 2, gamma_edge());
    CHECK(ins.size() == 3);
    for (const auto& [g, c] : ins.terms) CHECK((c == 1 || c == -1));

    // inserting the single vertex changes nothing
    CHECK(insert(gamma_edge(), 1, gamma_bullet()) == from_graph(gamma_edge()));

    // edge o_1 edge: two raw attachments; the double-out cherry is odd
    auto raw2 = insert_raw(gamma_edge(), 1, gamma_edge());
    CHECK(raw2.size() == 2);
    Chain ins2 = insert(gamma_edge(), 1, gamma_edge());
    CHECK(ins2.size() == 1);
    for (const auto& [g, c] : ins2.terms) CHECK((c == 1 || c == -1));

    CHECK_THROWS_AS(insert_raw(gamma_edge(), 3, gamma_edge()), std::invalid_argument);
}

TEST_CASE("bullet examples") {
    CHECK(bullet(from_graph(gamma_bullet()), from_graph(gamma_bullet())) ==
          from_graph(gamma_bullet()));
    CHECK(bullet(from_graph(gamma_edge()), from_graph(gamma_bullet())) ==
          scale(2, from_graph(gamma_edge())));
    // the four raw terms of edge*edge cancel pairwise
    CHECK(bullet(from_graph(gamma_edge()), from_graph(gamma_edge())).empty());
}

TEST_CASE("Maurer-Cartan equation") {
    Chain e = from_graph(gamma_edge());
    CHECK(bracket(e, e).empty());
    Chain ue = gamma_un_edge_chain();
    CHECK(bracket(ue, ue).empty());
    Chain l = from_graph(gamma_loop());
    CHECK(bracket(l, l).empty());
}

TEST_CASE("differential examples") {
    CHECK(differential(gamma_bullet()) == from_graph(gamma_edge()));
    CHECK(differential(gamma_loop()).empty());
    // undirected: d(point) = (1/2) * [undirected edge], so orient is a chain map
    CHECK(differential(Graph::make(Flavor::Undirected, 1, {})) ==
          scale(Rational(1, 2), from_graph(un_edge())));
    // trivalent cocycles
    CHECK(differential(tetra()).empty());
    CHECK(differential(orient(tetra())).empty());
    CHECK_THROWS_AS(
        differential(add(from_graph(gamma_bullet()), from_graph(gamma_loop()))),
        std::invalid_argument);
}

TEST_CASE("differential respects the bigrade") {
    for (const auto& g : classes_at(Flavor::Directed, 3, 3)) {
        Chain d = differential(g);
        if (d.empty()) continue;
        auto b = is_homogeneous(d);
        REQUIRE(b.has_value());
        CHECK(b->n == 4);
        CHECK(b->r == 4);
        CHECK(b->chi == 0);
    }
}

TEST_CASE("differential preserves the loopless and connected subspaces") {
    for (int r = 1; r <= 4; ++r)
        for (const auto& g : classes_at(Flavor::Directed, 3, r)) {
            Chain d = differential(g);
            bool gloop = has_loop(g);
            bool gconn = is_connected(g);
            for (const auto& [h, c] : d.terms) {
                if (!gloop) CHECK_FALSE(has_loop(h));
                if (gloop) CHECK(has_loop(h));
                if (gconn) CHECK(is_connected(h));
            }
        }
}

TEST_CASE("simplified differential agrees with the bracket") {
    for (const char* s : {"D 5 : 1>2 2>3 3>4 4>5 5>1", "D 3 : 1>2 2>3",
                          "D 3 : 1>2 2>1 2>3", "D 2 : 1>2 1>1", "D 1 : 1>1"}) {
        Graph g = parse_graph(s);
        CHECK(differential_simplified(g, SimplifiedVariant::DirectedConnected) ==
              differential(g));
    }
    for (const char* s : {"U 3 : 1-2 2-3", "U 4 : 1-2 1-3 1-4 2-3 2-4 3-4",
                          "U 2 : 1-2 1-1"}) {
        Graph g = parse_graph(s);
        CHECK(differential_simplified(g, SimplifiedVariant::UndirectedConnected) ==
              differential(g));
    }
    CHECK(differential_simplified(tetra(), SimplifiedVariant::UndirectedMin3) ==
          differential(tetra()));
    CHECK_THROWS_AS(
        differential_simplified(parse_graph("D 1 :"), SimplifiedVariant::DirectedConnected),
        std::invalid_argument);
    CHECK_THROWS_AS(
        differential_simplified(parse_graph("D 4 : 1>2 3>4"),
                                SimplifiedVariant::DirectedConnected),
        std::invalid_argument);
}

TEST_CASE("only uni-bivalent terms survive for a path source") {
    // the 3-vertex example: every term of d is a path graph
    Graph g = parse_graph("D 3 : 1>2 2>3");
    Chain d = differential(g);
    CHECK_FALSE(d.empty());
    for (const auto& [h, c] : d.terms) {
        auto val = valencies(h);
        for (int v : val) CHECK(v <= 2);
        CHECK(std::count(val.begin(), val.end(), 1) == 2);
    }
}

TEST_CASE("orient") {
    CHECK(orient(un_edge()) == scale(2, from_graph(gamma_edge())));
    // the undirected 2-path is odd, so its four direction assignments cancel
    Graph path2 = parse_graph("U 3 : 1-2 2-3");
    CHECK(canonicalize(path2).zero());
    CHECK(orient(path2).empty());
    // an even source keeps all assignments: 2^6 = 64 oriented tetrahedra
    Chain ot = orient(tetra());
    Rational total = 0;
    for (const auto& [g, c] : ot.terms) total += abs(c);
    CHECK(total == 64);
    CHECK(orient(Graph::make(Flavor::Undirected, 1, {})) == from_graph(gamma_bullet()));
    // loop multiplicity
    CHECK(orient(parse_graph("U 1 : 1-1")) == scale(2, from_graph(gamma_loop())));
    CHECK_THROWS_AS(orient(gamma_edge()), std::invalid_argument);
}

TEST_CASE("orient is a chain map on small loopless graphs") {
    for (const char* s : {"U 3 : 1-2 2-3", "U 4 : 1-2 1-3 1-4 2-3 2-4 3-4",
                          "U 2 : 1-2", "U 3 : 1-2 1-3 2-3 1-2"}) {
        Graph g = parse_graph(s);
        Chain lhs = differential(orient(g));
        Chain rhs = orient(differential(from_graph(g)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bracket laws on random homogeneous chains") {
    std::mt19937 rng(987);
    std::vector<std::vector<Graph>> pools;
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 3; ++r) {
            auto p = classes_at(Flavor::Directed, n, r);
            if (!p.empty()) pools.push_back(p);
        }
    auto rnd_hom = [&]() {
        const auto& pool = pools[rng() % pools.size()];
        Chain c(Flavor::Directed);
        for (const auto& g : pool) {
            int k = static_cast<int>(rng() % 5) - 2;
            if (k != 0) c.accumulate_class(g, k);
        }
        if (c.empty()) c.accumulate_class(pool[0], 1);
        return c;
    };
    for (int rep = 0; rep < 25; ++rep) {
        Chain x = rnd_hom(), y = rnd_hom(), z = rnd_hom();
        int dx = *degree(x), dy = *degree(y), dz = *degree(z);
        // graded antisymmetry
        Chain anti = add(bracket(x, y), scale((dx * dy) % 2 == 0 ? 1 : -1, bracket(y, x)));
        CHECK(anti.empty());
        // graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        Chain lhs = bracket(x, bracket(y, z));
        Chain rhs = add(bracket(bracket(x, y), z),
                        scale((dx * dy) % 2 == 0 ? 1 : -1, bracket(y, bracket(x, z))));
        CHECK(lhs == rhs);
        (void)dz;
    }
}

TEST_CASE("bracket of an element with itself") {
    // [x, x] = 2 x*x when |x| is odd, and 0 identically when |x| is even
    for (const auto& g : classes_at(Flavor::Directed, 2, 1)) {
        Chain x = from_graph(g);
        REQUIRE(*degree(x) % 2 != 0);
        CHECK(bracket(x, x) == scale(2, bullet(x, x)));
    }
    for (const auto& g : classes_at(Flavor::Directed, 2, 2)) {
        Chain x = from_graph(g);
        REQUIRE(*degree(x) % 2 == 0);
        CHECK(bracket(x, x).empty());
    }
}

TEST_CASE("graded differential") {
    CHECK(nu2(pentagon()) == 5);
    CHECK(nu2(tetra()) == 0);
    CHECK(graded_differential(orient(tetra())).empty());
    // on the poked-loop graph, compare against a direct filter
    Graph poked = parse_graph("D 3 : 2>1 1>3 3>1");
    Chain d = differential(poked);
    Chain g2(Flavor::Directed);
    for (const auto& [h, c] : d.terms)
        if (nu2(h) == nu2(poked) + 1) g2.accumulate_class(h, c);
    CHECK(graded_differential(from_graph(poked)) == g2);
}
