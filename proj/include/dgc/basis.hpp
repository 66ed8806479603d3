#pragma once

#include "dgc/canonical.hpp"
#include "dgc/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgc {

// A diff-closed span of even classes cut out by structural predicates.
struct SubcomplexSpec {
    Flavor flavor = Flavor::Directed;
    bool connected = false;
    bool loopless = false;
    bool with_loop = false; // at least one loop (the complement of loopless)
    int min_valency = 0;    // 0, 2 or 3
    bool one_vertex_irreducible = false;
    bool all_valency_exactly_2 = false; // polygons (and the loop)
    bool uni_bivalent = false;          // path graphs plus the single vertex
    bool some_valency_ge3 = false;

    bool matches(const Graph& g) const;
    std::string to_string() const; // e.g. "directed:connected,min_valency_3"
    static SubcomplexSpec parse(const std::string& text);

    friend bool operator==(const SubcomplexSpec&, const SubcomplexSpec&) = default;
};

// All even classes with n vertices and r edges satisfying the predicates,
// deduplicated and sorted by the canonical encoding. Search space: r-subsets
// of the n^2 ordered pairs (directed) or the n(n+1)/2 unordered pairs.
std::vector<Graph> enumerate_basis(const SubcomplexSpec& spec, int n, int r,
                                   unsigned threads = 0);

// One pass over all edge subsets, bucketed by edge count r = 0..r_max.
std::vector<std::vector<Graph>> enumerate_basis_all_r(const SubcomplexSpec& spec,
                                                      int n, int r_max,
                                                      unsigned threads = 0);

} // namespace dgc
