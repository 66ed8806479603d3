#pragma once

#include "dgc/canonical.hpp"
#include "dgc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgc {

// Words over the degree-1 symbols a and b; the degree is the length.
// The empty word is permitted only in the complex P.
using Word = std::string;

using WordChain = std::map<Word, Rational>;

enum class ComplexTag { U, R, P, K_diamond, K_diamond_S2, P_S2 };

WordChain word_chain(const Word& w, const Rational& c = 1);
WordChain add(const WordChain& x, const WordChain& y);
WordChain scale(const Rational& c, const WordChain& x);

// b1 inserts (a+b) after each position with alternating signs; b2 prepends
// -(a+b) on top of b1; b3 inserts only strictly inside, sends single symbols
// to zero and the empty word to (a+b)/2.
WordChain b1(const WordChain& x);
WordChain b2(const WordChain& x);
WordChain b3(const WordChain& x);

// Projection to cyclic coinvariants: the generator acts by
// (v1,...,vn) -> (-1)^(n-1) (v2,...,vn,v1). Orbits whose stabilizer forces a
// sign conflict map to zero; otherwise the class is the lexicographically
// least orbit word with the accumulated sign.
WordChain cyclic_reduce(const WordChain& x);

// Projection to S2 coinvariants: sigma(v1...vn) = (-1)^{n(n-1)/2} vn~...v1~
// with a~ = b, b~ = a.
Word s2_image(const Word& w, int& sign);
WordChain s2_reduce(const WordChain& x);

// Combined cyclic + S2 reduction (normal forms of (K_diamond)_{S2}).
WordChain full_reduce(const WordChain& x);

// Normal-form basis of the tagged complex in each degree.
std::vector<Word> word_basis(ComplexTag tag, int length);

// The tagged complex differential followed by the tag's reduction.
WordChain word_differential(ComplexTag tag, const WordChain& x);

// Exact cohomology dims per degree, computed through max_length and reported
// for degrees <= max_length - 1 (the top degree's kernel is inconclusive).
std::map<int, long> word_cohomology_dims(ComplexTag tag, int max_length);

// Path graph of a word: symbol i directs edge i rightward (a) or leftward
// (b) along the path 1..n+1; the empty word gives the single vertex.
SignedClass word_to_path(const Word& w);

// Cycle graph of a word of length n >= 1; the n-th edge closes up to vertex
// 1 and originates at vertex n for a, at vertex 1 for b.
SignedClass word_to_polygon(const Word& w);

std::string word_to_string(const Word& w); // empty word prints as "1"
Word word_from_string(const std::string& s);

} // namespace dgc
