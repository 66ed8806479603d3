#include "dgc/frames.hpp"

#include "dgc/predicates.hpp"

#include <algorithm>
#include <numeric>

namespace dgc {

void Frame::validate() const {
    if (!g.directed()) throw std::invalid_argument("frame: must be directed");
    dgc::validate(g);
    if (e() != g.r()) throw std::invalid_argument("frame: block sizes do not sum to r");
    if (!is_connected(g)) throw std::invalid_argument("frame: must be connected");
    auto val = valencies(g);
    if (std::any_of(val.begin(), val.end(), [](int v) { return v == 2; }))
        throw std::invalid_argument("frame: bivalent vertex");
    if (std::none_of(val.begin(), val.end(), [](int v) { return v >= 3; }))
        throw std::invalid_argument("frame: needs a vertex of valency >= 3");
    for (int i = 0; i < g.r(); ++i) {
        const Edge& ed = g.edges[i];
        bool is_loop = ed.u == ed.v;
        bool uni_src = !is_loop && val[ed.u - 1] == 1;
        bool uni_tgt = !is_loop && val[ed.v - 1] == 1;
        if (i < e_uni) {
            if (!uni_src) throw std::invalid_argument(
                "frame: univalent-block edge must originate at a univalent vertex");
        } else if (i < e_uni + e_ord) {
            if (is_loop || uni_src || uni_tgt)
                throw std::invalid_argument("frame: bad ordinary-block edge");
        } else {
            if (!is_loop) throw std::invalid_argument("frame: loop block holds a non-loop");
        }
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Graph reconstruct_raw(const Frame& frame, const FrameDecoration& dec) {
    frame.validate();
    if (static_cast<size_t>(frame.e()) != dec.words.size())
        throw std::invalid_argument("decoration shape mismatch");
    for (const auto& w : dec.words)
        if (w.empty()) throw std::invalid_argument("decoration words must be nonempty");

    int total_symbols = 0;
    for (const auto& w : dec.words) total_symbols += static_cast<int>(w.size());

    // endpoint ids 0..2K-1; symbol j (0-based) owns 2j and 2j+1
    UnionFind uf(2 * total_symbols);
    std::vector<int> frame_vertex_endpoint(frame.g.n, -1);
    auto attach = [&](int endpoint, int frame_vertex) {
        int& anchor = frame_vertex_endpoint[frame_vertex - 1];
        if (anchor < 0) anchor = endpoint;
        else uf.unite(endpoint, anchor);
    };

    int sym = 0;
    for (int i = 0; i < frame.e(); ++i) {
        int len = static_cast<int>(dec.words[i].size());
        int first = sym, last = sym + len - 1;
        for (int j = first; j < last; ++j) uf.unite(2 * j + 1, 2 * (j + 1));
        attach(2 * first, frame.g.edges[i].u);
        attach(2 * last + 1, frame.g.edges[i].v);
        sym += len;
    }

    // vertices ordered by the smallest endpoint id of their class
    std::vector<int> label(2 * total_symbols, 0);
    int m = 0;
    for (int ep = 0; ep < 2 * total_symbols; ++ep) {
        int root = uf.find(ep);
        if (label[root] == 0) label[root] = ++m;
    }
    auto vertex_of = [&](int ep) { return label[uf.find(ep)]; };

    std::vector<Edge> edges(total_symbols);
    sym = 0;
    for (int i = 0; i < frame.e(); ++i)
        for (char c : dec.words[i]) {
            int left = vertex_of(2 * sym), right = vertex_of(2 * sym + 1);
            edges[sym] = c == 'a' ? Edge{left, right} : Edge{right, left};
            ++sym;
        }
    return Graph::make(Flavor::Directed, m, std::move(edges));
}

SignedClass reconstruct(const Frame& frame, const FrameDecoration& dec) {
    return canonicalize(reconstruct_raw(frame, dec));
}

namespace {

struct ChainWalk {
    int start = 0, end = 0;     // original vertex labels
    Word word;                  // symbols along the walk from start to end
    int smallest_edge = 1 << 30; // original edge label, for deterministic order
};

Word reversed_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (char& c : out) c = c == 'a' ? 'b' : 'a';
    return out;
}

} // namespace

FrameOfResult frame_of(const Graph& g) {
    if (!g.directed()) throw std::invalid_argument("frame_of: expects a directed graph");
    if (!is_connected(g)) throw std::invalid_argument("frame_of: graph must be connected");
    auto val = valencies(g);
    if (std::none_of(val.begin(), val.end(), [](int v) { return v >= 3; }))
        throw std::domain_error("frame_of: no vertex of valency >= 3 (polygon or path)");
    auto gc = canonicalize(g);
    if (gc.zero()) throw std::invalid_argument("frame_of: graph is odd");

    // endpoint incidence: (edge, takes-u-slot) pairs per vertex
    std::vector<std::vector<std::pair<int, bool>>> inc(g.n);
    for (int e = 0; e < g.r(); ++e) {
        inc[g.edges[e].u - 1].push_back({e, true});
        inc[g.edges[e].v - 1].push_back({e, false});
    }

    std::vector<bool> used(g.r(), false);
    std::vector<ChainWalk> chains;
    // walk from (vertex, endpoint slot) through bivalent vertices
    auto walk = [&](int v0, std::pair<int, bool> slot) {
        ChainWalk cw;
        cw.start = v0;
        int edge = slot.first;
        bool from_u = slot.second;
        for (;;) {
            used[edge] = true;
            cw.smallest_edge = std::min(cw.smallest_edge, edge);
            // traversal direction agrees with the edge direction iff we
            // entered at the u (source) slot
            cw.word += from_u ? 'a' : 'b';
            int next = from_u ? g.edges[edge].v : g.edges[edge].u;
            if (val[next - 1] != 2) {
                cw.end = next;
                return cw;
            }
            // continue through the bivalent vertex by its other endpoint
            // (a loop at a bivalent vertex would be an isolated component)
            bool advanced = false;
            for (auto [e2, at_u] : inc[next - 1]) {
                if (e2 == edge && at_u == !from_u) continue; // the entry slot
                edge = e2;
                from_u = at_u;
                advanced = true;
                break;
            }
            if (!advanced) throw std::logic_error("frame_of: chain walk stuck");
        }
    };

    for (int v = 1; v <= g.n; ++v) {
        if (val[v - 1] == 2) continue;
        for (auto slot : inc[v - 1]) {
            if (used[slot.first]) continue;
            chains.push_back(walk(v, slot));
        }
    }

    // frame vertices: non-bivalent vertices in original label order
    std::vector<int> frame_label(g.n + 1, 0);
    int fn = 0;
    for (int v = 1; v <= g.n; ++v)
        if (val[v - 1] != 2) frame_label[v] = ++fn;

    // orient chains and classify into blocks
    struct FrameEdge {
        int u, v;
        Word word;
        int block; // 0 uni, 1 ordinary, 2 loop
        int smallest_edge;
    };
    std::vector<FrameEdge> fedges;
    for (auto& cw : chains) {
        FrameEdge fe;
        fe.smallest_edge = cw.smallest_edge;
        bool start_uni = val[cw.start - 1] == 1;
        bool end_uni = val[cw.end - 1] == 1;
        if (start_uni || end_uni) {
            fe.block = 0;
            if (end_uni && !start_uni) {
                std::swap(cw.start, cw.end);
                cw.word = reversed_word(cw.word);
            }
            fe.u = frame_label[cw.start];
            fe.v = frame_label[cw.end];
            fe.word = cw.word;
        } else if (cw.start == cw.end) {
            fe.block = 2;
            fe.u = fe.v = frame_label[cw.start];
            Word rev = reversed_word(cw.word);
            fe.word = std::min(cw.word, rev);
        } else {
            fe.block = 1;
            Word rev = reversed_word(cw.word);
            if (rev < cw.word || (rev == cw.word && cw.end < cw.start)) {
                std::swap(cw.start, cw.end);
                cw.word = rev;
            }
            fe.u = frame_label[cw.start];
            fe.v = frame_label[cw.end];
            fe.word = cw.word;
        }
        fedges.push_back(std::move(fe));
    }
    std::sort(fedges.begin(), fedges.end(), [](const FrameEdge& a, const FrameEdge& b) {
        if (a.block != b.block) return a.block < b.block;
        return a.smallest_edge < b.smallest_edge;
    });

    FrameOfResult out;
    out.frame.g.flavor = Flavor::Directed;
    out.frame.g.n = fn;
    for (const auto& fe : fedges) {
        out.frame.g.edges.push_back({fe.u, fe.v});
        out.decoration.words.push_back(fe.word);
        if (fe.block == 0) ++out.frame.e_uni;
        else if (fe.block == 1) ++out.frame.e_ord;
        else ++out.frame.e_loop;
    }
    out.frame.validate();

    auto rc = reconstruct(out.frame, out.decoration);
    if (rc.zero() || !(*rc.cls == *gc.cls))
        throw std::logic_error("frame_of: reconstruction mismatch");
    out.sign = gc.sign * rc.sign;
    return out;
}

std::pair<FrameDecoration, int> group_act(const Frame& frame,
                                          const FrameGroupElement& g,
                                          const FrameDecoration& dec) {
    int e = frame.e();
    if (static_cast<int>(g.tau.size()) != e || static_cast<int>(g.flip.size()) != e ||
        static_cast<int>(dec.words.size()) != e)
        throw std::invalid_argument("group_act: size mismatch");
    auto block_of = [&](int slot) {
        if (slot < frame.e_uni) return 0;
        if (slot < frame.e_uni + frame.e_ord) return 1;
        return 2;
    };
    for (int i = 0; i < e; ++i) {
        int img = g.tau[i] - 1;
        if (img < 0 || img >= e || block_of(i) != block_of(img))
            throw std::invalid_argument("group_act: permutation breaks the blocks");
        if (g.flip[i] && block_of(i) == 0)
            throw std::invalid_argument("group_act: flips are trivial on the univalent block");
    }

    int sign = 1;
    std::vector<Word> flipped(dec.words);
    for (int i = 0; i < e; ++i)
        if (g.flip[i]) {
            int s = 1;
            flipped[i] = s2_image(flipped[i], s);
            sign *= s;
        }
    // Koszul sign of the slot permutation over the word degrees
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            if (g.tau[i] > g.tau[j] &&
                (flipped[i].size() % 2) == 1 && (flipped[j].size() % 2) == 1)
                sign = -sign;
    FrameDecoration out;
    out.words.resize(e);
    for (int i = 0; i < e; ++i) out.words[g.tau[i] - 1] = flipped[i];
    return {out, sign};
}

std::vector<std::pair<FrameDecoration, Rational>> decoration_differential(
    const Frame& frame, const FrameDecoration& dec) {
    std::vector<std::pair<FrameDecoration, Rational>> out;
    int e = frame.e();
    int degree_before = 0;
    for (int i = 0; i < e; ++i) {
        WordChain d = i < frame.e_uni ? b1(word_chain(dec.words[i]))
                                      : b2(word_chain(dec.words[i]));
        Rational koszul = degree_before % 2 == 0 ? 1 : -1;
        for (const auto& [w, c] : d) {
            FrameDecoration img = dec;
            img.words[i] = w;
            out.push_back({std::move(img), koszul * c});
        }
        degree_before += static_cast<int>(dec.words[i].size());
    }
    return out;
}

} // namespace dgc
