#pragma once

#include "dgc/canonical.hpp"
#include "dgc/graph.hpp"
#include "dgc/predicates.hpp"
#include "dgc/rational.hpp"

#include <map>
#include <optional>

namespace dgc {

// Finite formal sum of canonical even graph classes with exact rational
// coefficients. Zero coefficients are never stored; all terms share a flavor.
struct Chain {
    Flavor flavor = Flavor::Directed;
    std::map<Graph, Rational, GraphLess> terms;

    explicit Chain(Flavor f = Flavor::Directed) : flavor(f) {}

    bool empty() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    // Adds c * [canonical class of g]; drops odd graphs and cancellations.
    void accumulate(const Graph& g, const Rational& c);
    void accumulate_class(const Graph& canonical_cls, const Rational& c);

    friend bool operator==(const Chain&, const Chain&) = default;
};

Chain from_graph(const Graph& g);
Chain from_class(const SignedClass& sc, Flavor flavor);
Chain add(const Chain& x, const Chain& y);
Chain sub(const Chain& x, const Chain& y);
Chain scale(const Rational& c, const Chain& x);

// Common bigrade of all terms, or nullopt for the empty or mixed chain.
std::optional<Bigrade> is_homogeneous(const Chain& x);
std::optional<int> degree(const Chain& x);

std::string chain_to_json(const Chain& x);
Chain chain_from_json(const std::string& text);

std::string format_chain(const Chain& x); // human-readable one-liner

} // namespace dgc
