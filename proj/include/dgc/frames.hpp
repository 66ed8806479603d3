#pragma once

#include "dgc/chain.hpp"
#include "dgc/words.hpp"

namespace dgc {

// A connected directed graph without bivalent vertices, at least one vertex
// of valency >= 3. Edges come in label blocks: edges at univalent vertices
// first (each directed out of its univalent vertex), then ordinary edges,
// then loops. Frames may repeat edge pairs; they are not dfGC vectors.
struct Frame {
    Graph g; // directed
    int e_uni = 0, e_ord = 0, e_loop = 0;

    int e() const { return e_uni + e_ord + e_loop; }
    void validate() const;
};

// One word per frame edge: univalent-edge entries live in U, the others in
// R. All words are nonempty.
struct FrameDecoration {
    std::vector<Word> words;
    friend bool operator==(const FrameDecoration&, const FrameDecoration&) = default;
};

// The graph reconstructed from a decorated frame: each frame edge is
// replaced by the chain of arrows of its word (a points toward the edge
// target, b back toward the source; loops close up at their base vertex),
// vertices are ordered by first appearance along the concatenated symbol
// string and edges are labeled by symbol position.
Graph reconstruct_raw(const Frame& frame, const FrameDecoration& dec);
SignedClass reconstruct(const Frame& frame, const FrameDecoration& dec);

struct FrameOfResult {
    Frame frame;
    FrameDecoration decoration;
    int sign = 1; // from_graph(g) = sign * from_class(reconstruct(frame, dec))
};

// Contracts every maximal chain of bivalent vertices of an even connected
// directed graph with a valency->=3 vertex. Ordinary and loop chains are
// directed so that their word is lexicographically least, with the residual
// sign returned. Round-trips through reconstruct.
FrameOfResult frame_of(const Graph& g);

// An element of the frame group: a block-preserving permutation of the edge
// slots (old slot -> new slot, 1-based) together with per-slot word
// reversals (identity on the univalent block).
struct FrameGroupElement {
    std::vector<int> tau;
    std::vector<bool> flip;
};

// Applies flips (with their S2 signs) and then the slot permutation (with
// the Koszul sign over word degrees). Returns the image and the sign.
std::pair<FrameDecoration, int> group_act(const Frame& frame,
                                          const FrameGroupElement& g,
                                          const FrameDecoration& dec);

// The decoration differential b1 (x) 1 + 1 (x) b2: b1 acts on univalent-edge
// slots, b2 on the rest, with Koszul signs over the preceding word degrees.
std::vector<std::pair<FrameDecoration, Rational>> decoration_differential(
    const Frame& frame, const FrameDecoration& dec);

} // namespace dgc
