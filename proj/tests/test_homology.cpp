#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgc/homology.hpp"
#include "dgc/operad.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace dgc;

namespace {

// independent dense rational elimination used as the rank oracle
long dense_rank_oracle(const SparseExactMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, 0));
    for (const auto& [r, c, v] : m.entries) a[r][c] += v;
    long rank = 0;
    size_t row = 0;
    for (int col = 0; col < m.cols && row < a.size(); ++col) {
        size_t sel = row;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[row]);
        for (size_t r2 = row + 1; r2 < a.size(); ++r2) {
            if (a[r2][col] == 0) continue;
            Rational f = a[r2][col] / a[row][col];
            for (int c2 = col; c2 < m.cols; ++c2) a[r2][c2] -= f * a[row][c2];
        }
        ++rank;
        ++row;
    }
    return rank;
}

SubcomplexSpec directed_all() { return SubcomplexSpec{.flavor = Flavor::Directed}; }

} // namespace

TEST_CASE("spec parsing round trip") {
    for (const char* s :
         {"directed", "undirected:connected,min_valency_3,one_vertex_irreducible",
          "directed:connected,all_valency_exactly_2", "directed:loopless",
          "directed:connected,uni_bivalent", "directed:connected,some_valency_ge3"}) {
        auto spec = SubcomplexSpec::parse(s);
        CHECK(SubcomplexSpec::parse(spec.to_string()) == spec);
    }
    CHECK(SubcomplexSpec::parse("undirected:polygons").all_valency_exactly_2);
    CHECK(SubcomplexSpec::parse("directed:paths").uni_bivalent);
    CHECK_THROWS(SubcomplexSpec::parse("directed:frobnicate"));
    CHECK_THROWS(SubcomplexSpec::parse("connected"));
}

TEST_CASE("basis enumeration examples") {
    CHECK(enumerate_basis(directed_all(), 1, 1) ==
          std::vector<Graph>{gamma_loop()});
    // connected + min3 + 1vi at (4, 6): exactly the tetrahedron class
    auto spec = SubcomplexSpec::parse("undirected:connected,min_valency_3,one_vertex_irreducible");
    auto b46 = enumerate_basis(spec, 4, 6);
    REQUIRE(b46.size() == 1);
    CHECK(b46[0] == *canonicalize(parse_graph("U 4 : 1-2 1-3 1-4 2-3 2-4 3-4")).cls);
    // (2,2) directed: same-direction doubles cannot appear, and the bare
    // opposite 2-cycle is odd (the vertex swap transposes its edge labels),
    // so the basis is the two loop-plus-edge classes
    auto b22 = enumerate_basis(directed_all(), 2, 2);
    CHECK(canonicalize(parse_graph("D 2 : 1>2 2>1")).zero());
    REQUIRE(b22.size() == 2);
    for (const auto& g : b22) {
        CHECK(is_canonical(g));
        CHECK(loop_count(g) == 1);
    }
    // opposite double edges do occur in even graphs once the symmetry breaks
    auto b33 = enumerate_basis(directed_all(), 3, 3);
    Graph funny = *canonicalize(parse_graph("D 3 : 1>2 2>1 2>3")).cls;
    CHECK(std::find(b33.begin(), b33.end(), funny) != b33.end());
    // uni-bivalent includes the single vertex
    auto paths = SubcomplexSpec::parse("directed:paths");
    CHECK(enumerate_basis(paths, 1, 0).size() == 1);
    CHECK(enumerate_basis(paths, 1, 1).empty()); // the loop is not a path
    // polygons at (1,1): the loop
    auto poly = SubcomplexSpec::parse("directed:polygons");
    CHECK(enumerate_basis(poly, 1, 1) == std::vector<Graph>{gamma_loop()});
    CHECK(enumerate_basis(poly, 2, 2).empty()); // both 2-cycles are odd
}

TEST_CASE("threaded enumeration agrees with serial") {
    auto spec = directed_all();
    for (int r = 0; r <= 4; ++r)
        CHECK(enumerate_basis(spec, 3, r, 1) == enumerate_basis(spec, 3, r, 4));
}

TEST_CASE("differential matrix examples") {
    // targets at (2,1): the edge class and the disconnected loop + point
    auto b10 = differential_matrix(directed_all(), 1, 0);
    REQUIRE(b10.matrix.cols == 1);
    REQUIRE(b10.source == std::vector<Graph>{gamma_bullet()});
    REQUIRE(b10.targets.size() == 2);
    auto edge_it = std::find(b10.targets.begin(), b10.targets.end(), gamma_edge());
    REQUIRE(edge_it != b10.targets.end());
    REQUIRE(b10.matrix.entries.size() == 1);
    CHECK(std::get<0>(b10.matrix.entries[0]) ==
          static_cast<int>(edge_it - b10.targets.begin()));
    CHECK(std::get<2>(b10.matrix.entries[0]) == 1);

    auto b11 = differential_matrix(directed_all(), 1, 1);
    CHECK(b11.matrix.cols == 1); // the loop column
    CHECK(b11.matrix.entries.empty());

    // GC at (4,6): the tetrahedron and the loop-claw, both trivalent,
    // hence both cocycles
    auto gc = SubcomplexSpec::parse("undirected:connected,min_valency_3");
    auto b46 = differential_matrix(gc, 4, 6);
    CHECK(b46.matrix.cols == 2);
    CHECK(b46.matrix.entries.empty());
}

TEST_CASE("composition of consecutive differential matrices vanishes") {
    for (const char* sp : {"directed", "undirected", "directed:connected",
                           "undirected:connected,min_valency_3"}) {
        auto spec = SubcomplexSpec::parse(sp);
        for (int n = 1; n <= 3; ++n)
            for (int r = 0; r <= 4; ++r) {
                auto a = differential_matrix(spec, n, r);
                if (a.matrix.cols == 0 || a.targets.empty()) continue;
                auto b = differential_matrix(spec, n + 1, r + 1);
                // b.matrix * a.matrix must be zero
                std::map<std::pair<int, int>, Rational> prod;
                std::vector<std::vector<std::pair<int, Rational>>> acols(a.matrix.cols);
                for (const auto& [row, col, v] : a.matrix.entries)
                    acols[col].push_back({row, v});
                std::vector<std::vector<std::pair<int, Rational>>> bcols(b.matrix.cols);
                for (const auto& [row, col, v] : b.matrix.entries)
                    bcols[col].push_back({row, v});
                for (int j = 0; j < a.matrix.cols; ++j)
                    for (const auto& [mid, va] : acols[j])
                        for (const auto& [row, vb] : bcols[mid])
                            prod[{row, j}] += vb * va;
                for (const auto& [pos, v] : prod) CHECK(v == 0);
            }
    }
}

TEST_CASE("rank routines") {
    SparseExactMatrix zero;
    zero.rows = 4;
    zero.cols = 3;
    CHECK(rank_exact(zero) == 0);

    SparseExactMatrix id3;
    id3.rows = 3;
    id3.cols = 3;
    for (int i = 0; i < 3; ++i) id3.add_entry(i, i, Rational(2 - i * 3));
    CHECK(rank_exact(id3) == 3);

    // the (2,2) -> (3,3) directed differential block against the dense oracle
    auto blk = differential_matrix(directed_all(), 2, 2);
    long oracle = dense_rank_oracle(blk.matrix);
    CHECK(rank_exact(blk.matrix) == oracle);
    for (uint64_t p : cross_check_primes(42))
        CHECK(rank_mod(blk.matrix, p) == oracle);
}

TEST_CASE("rank on random sparse matrices matches the oracle") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 30; ++rep) {
        SparseExactMatrix m;
        m.rows = 1 + int(rng() % 12);
        m.cols = 1 + int(rng() % 12);
        int nnz = int(rng() % (m.rows * m.cols + 1));
        for (int k = 0; k < nnz; ++k) {
            Rational v(int(rng() % 9) - 4, 1 + int(rng() % 3));
            v.canonicalize();
            m.add_entry(int(rng() % m.rows), int(rng() % m.cols), v);
        }
        long oracle = dense_rank_oracle(m);
        CHECK(rank_exact(m) == oracle);
        CHECK(rank_mod(m, cross_check_primes(rep)[0]) == oracle);
    }
}

TEST_CASE("kernel and solve") {
    // 2x3: x + y + z = 0, y - z = 0
    SparseExactMatrix m;
    m.rows = 2;
    m.cols = 3;
    m.add_entry(0, 0, 1);
    m.add_entry(0, 1, 1);
    m.add_entry(0, 2, 1);
    m.add_entry(1, 1, 1);
    m.add_entry(1, 2, Rational(-1));
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    Rational k0 = ker[0][0] + ker[0][1] + ker[0][2];
    Rational k1 = ker[0][1] - ker[0][2];
    CHECK(k0 == 0);
    CHECK(k1 == 0);

    auto sol = solve(m, {Rational(3), Rational(1)});
    REQUIRE(sol.has_value());
    Rational s0 = (*sol)[0] + (*sol)[1] + (*sol)[2];
    Rational s1 = (*sol)[1] - (*sol)[2];
    CHECK(s0 == 3);
    CHECK(s1 == 1);

    SparseExactMatrix bad;
    bad.rows = 2;
    bad.cols = 1;
    bad.add_entry(0, 0, 1);
    bad.add_entry(1, 0, 1);
    CHECK_FALSE(solve(bad, {Rational(1), Rational(2)}).has_value());
    CHECK_THROWS_AS(solve(bad, {Rational(1)}), std::invalid_argument);

    // the edge class is exact: it is d of the point with coefficient 1
    auto b10 = differential_matrix(directed_all(), 1, 0);
    std::vector<Rational> target(b10.targets.size(), 0);
    for (size_t i = 0; i < b10.targets.size(); ++i)
        if (b10.targets[i] == gamma_edge()) target[i] = 1;
    auto pre = solve(b10.matrix, target);
    REQUIRE(pre.has_value());
    CHECK((*pre)[0] == 1);
}

TEST_CASE("cohomology dims, small cases") {
    HomologyOptions opts;
    // H^{-1}(dfGC) at chi = 0 is spanned by the loop
    CHECK(cohomology_dim_chi(directed_all(), 1, 0, opts) == 1);
    // the 4-gon bidegree carries no cohomology
    auto poly = SubcomplexSpec::parse("directed:polygons");
    CHECK(cohomology_dim(poly, 4, 4, opts) == 0);
    // the path subcomplex is acyclic in low positions
    auto paths = SubcomplexSpec::parse("directed:paths");
    for (int n = 1; n <= 4; ++n) CHECK(cohomology_dim(paths, n, n - 1, opts) == 0);
    // (1,0): the point is not a cocycle
    CHECK(cohomology_dim(directed_all(), 1, 0, opts) == 0);
    // (2,1): the edge is the image of the point and the kernel is trivial
    CHECK(cohomology_dim(directed_all(), 2, 1, opts) == 0);
}

TEST_CASE("degree shift tables") {
    std::map<int, long> dims{{-1, 1}, {0, 2}};
    CHECK(degree_shift_dims(dims, 2, 5) == dims);
    auto at4 = degree_shift_dims(std::map<int, long>{{-1, 1}}, 4, 0);
    CHECK(at4 == std::map<int, long>{{-3, 1}});
    auto tetra4 = degree_shift_dims(std::map<int, long>{{0, 1}}, 4, -2);
    CHECK(tetra4 == std::map<int, long>{{-6, 1}});
    CHECK_THROWS_AS(degree_shift_dims(dims, 3, 0), std::invalid_argument);
}

TEST_CASE("cache determinism and reuse") {
    auto dir = std::filesystem::temp_directory_path() / "dgc-cache-test";
    std::filesystem::remove_all(dir);
    auto read_all = [&]() {
        std::map<std::string, std::string> files;
        for (const auto& e : std::filesystem::directory_iterator(dir)) {
            std::ifstream in(e.path());
            files[e.path().filename()] = std::string(
                std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        return files;
    };
    {
        Cache cache(dir);
        HomologyOptions opts;
        CHECK(cohomology_dim_chi(directed_all(), 1, 0, opts, &cache) == 1);
        CHECK(cohomology_dim(directed_all(), 2, 2, opts, &cache) == 0);
        CHECK_FALSE(cache.list_keys().empty());
    }
    auto first = read_all();
    {
        Cache cache(dir);
        cache.clear();
        CHECK(cache.list_keys().empty());
        HomologyOptions opts;
        CHECK(cohomology_dim_chi(directed_all(), 1, 0, opts, &cache) == 1);
        CHECK(cohomology_dim(directed_all(), 2, 2, opts, &cache) == 0);
    }
    CHECK(read_all() == first);
    // cached rerun gives identical results
    {
        Cache cache(dir);
        HomologyOptions opts;
        CHECK(cohomology_dim_chi(directed_all(), 1, 0, opts, &cache) == 1);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("rank is invariant under basis shuffles") {
    auto blk = differential_matrix(directed_all(), 3, 3);
    long base = rank_exact(blk.matrix);
    std::mt19937 rng(3);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<int> rp(blk.matrix.rows), cp(blk.matrix.cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        SparseExactMatrix shuffled;
        shuffled.rows = blk.matrix.rows;
        shuffled.cols = blk.matrix.cols;
        for (const auto& [r, c, v] : blk.matrix.entries)
            shuffled.add_entry(rp[r], cp[c], v);
        CHECK(rank_exact(shuffled) == base);
    }
}
