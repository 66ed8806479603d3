#include "dgc/words.hpp"

#include "dgc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgc {

namespace {

void check_alphabet(const Word& w) {
    for (char c : w)
        if (c != 'a' && c != 'b') throw std::invalid_argument("word symbols must be a/b");
}

void accumulate(WordChain& x, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto it = x.find(w);
    if (it == x.end()) {
        x.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) x.erase(it);
}

} // namespace

WordChain word_chain(const Word& w, const Rational& c) {
    check_alphabet(w);
    WordChain x;
    accumulate(x, w, c);
    return x;
}

WordChain add(const WordChain& x, const WordChain& y) {
    WordChain out = x;
    for (const auto& [w, c] : y) accumulate(out, w, c);
    return out;
}

WordChain scale(const Rational& c, const WordChain& x) {
    WordChain out;
    if (c == 0) return out;
    for (const auto& [w, q] : x) out.emplace(w, c * q);
    return out;
}

WordChain b1(const WordChain& x) {
    WordChain out;
    for (const auto& [w, c] : x) {
        if (w.empty()) throw std::invalid_argument("b1 is undefined on the empty word");
        int n = static_cast<int>(w.size());
        for (int i = 1; i <= n; ++i) {
            Rational s = (i % 2 == 1) ? c : Rational(-c);
            for (char sym : {'a', 'b'})
                accumulate(out, w.substr(0, i) + sym + w.substr(i), s);
        }
    }
    return out;
}

WordChain b2(const WordChain& x) {
    WordChain out = b1(x);
    for (const auto& [w, c] : x)
        for (char sym : {'a', 'b'}) accumulate(out, sym + w, Rational(-c));
    return out;
}

WordChain b3(const WordChain& x) {
    WordChain out;
    for (const auto& [w, c] : x) {
        int n = static_cast<int>(w.size());
        if (n == 0) {
            accumulate(out, "a", c / 2);
            accumulate(out, "b", c / 2);
            continue;
        }
        for (int i = 1; i <= n - 1; ++i) {
            Rational s = (i % 2 == 1) ? c : Rational(-c);
            for (char sym : {'a', 'b'})
                accumulate(out, w.substr(0, i) + sym + w.substr(i), s);
        }
    }
    return out;
}

namespace {

Word rotate_once(const Word& w) { return w.substr(1) + w[0]; }

// orbit of (w, +1) under the given signed generators; zero on sign conflict
bool orbit_reduce(const Word& w, bool use_cyclic, bool use_s2, Word& rep, int& sign) {
    std::map<Word, int> seen{{w, 1}};
    std::vector<Word> frontier{w};
    int n = static_cast<int>(w.size());
    int rot_sign = (n % 2 == 1) ? 1 : -1; // (-1)^{n-1}
    while (!frontier.empty()) {
        Word cur = frontier.back();
        frontier.pop_back();
        int cur_sign = seen[cur];
        std::vector<std::pair<Word, int>> next;
        if (use_cyclic && n > 0) next.push_back({rotate_once(cur), cur_sign * rot_sign});
        if (use_s2) {
            int s = 1;
            Word img = s2_image(cur, s);
            next.push_back({img, cur_sign * s});
        }
        for (auto& [img, s] : next) {
            auto it = seen.find(img);
            if (it == seen.end()) {
                seen.emplace(img, s);
                frontier.push_back(img);
            } else if (it->second != s) {
                return false; // the class vanishes
            }
        }
    }
    rep = seen.begin()->first; // lexicographically least orbit word
    sign = seen.begin()->second;
    return true;
}

WordChain group_reduce(const WordChain& x, bool use_cyclic, bool use_s2) {
    WordChain out;
    for (const auto& [w, c] : x) {
        Word rep;
        int sign = 1;
        if (!orbit_reduce(w, use_cyclic, use_s2, rep, sign)) continue;
        accumulate(out, rep, sign > 0 ? c : Rational(-c));
    }
    return out;
}

} // namespace

WordChain cyclic_reduce(const WordChain& x) { return group_reduce(x, true, false); }

Word s2_image(const Word& w, int& sign) {
    int n = static_cast<int>(w.size());
    Word img(w.rbegin(), w.rend());
    for (char& c : img) c = c == 'a' ? 'b' : 'a';
    sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    return img;
}

WordChain s2_reduce(const WordChain& x) { return group_reduce(x, false, true); }

WordChain full_reduce(const WordChain& x) { return group_reduce(x, true, true); }

std::vector<Word> word_basis(ComplexTag tag, int length) {
    if (length < 0) return {};
    std::vector<Word> out;
    if (length == 0) {
        if (tag == ComplexTag::P || tag == ComplexTag::P_S2) out.push_back("");
        return out;
    }
    // normal forms: reduced image of each word equals itself with sign +1
    bool cyc = tag == ComplexTag::K_diamond || tag == ComplexTag::K_diamond_S2;
    bool s2 = tag == ComplexTag::K_diamond_S2 || tag == ComplexTag::P_S2;
    for (uint64_t mask = 0; mask < (uint64_t(1) << length); ++mask) {
        Word w(length, 'a');
        for (int i = 0; i < length; ++i)
            if (mask & (uint64_t(1) << i)) w[i] = 'b';
        if (!cyc && !s2) {
            out.push_back(w);
            continue;
        }
        Word rep;
        int sign = 1;
        if (!orbit_reduce(w, cyc, s2, rep, sign)) continue;
        if (rep == w && sign == 1) out.push_back(w);
    }
    return out;
}

WordChain word_differential(ComplexTag tag, const WordChain& x) {
    switch (tag) {
    case ComplexTag::U: return b1(x);
    case ComplexTag::R: return b2(x);
    case ComplexTag::P: return b3(x);
    case ComplexTag::K_diamond: return cyclic_reduce(b1(x));
    case ComplexTag::K_diamond_S2: return full_reduce(b1(x));
    case ComplexTag::P_S2: return s2_reduce(b3(x));
    }
    throw std::logic_error("bad tag");
}

std::map<int, long> word_cohomology_dims(ComplexTag tag, int max_length) {
    if (max_length < 2) throw std::invalid_argument("max_length must be >= 2");
    int min_len = (tag == ComplexTag::P || tag == ComplexTag::P_S2) ? 0 : 1;
    std::map<int, std::vector<Word>> bases;
    for (int l = min_len; l <= max_length; ++l) bases[l] = word_basis(tag, l);
    std::map<int, long> ranks;
    for (int l = min_len; l < max_length; ++l) {
        const auto& src = bases[l];
        const auto& dst = bases[l + 1];
        std::map<Word, int> index;
        for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
        SparseExactMatrix m;
        m.rows = static_cast<int>(dst.size());
        m.cols = static_cast<int>(src.size());
        for (size_t j = 0; j < src.size(); ++j) {
            WordChain d = word_differential(tag, word_chain(src[j]));
            for (const auto& [w, c] : d) {
                auto it = index.find(w);
                if (it == index.end())
                    throw std::logic_error("word differential left the normal-form basis");
                m.add_entry(it->second, static_cast<int>(j), c);
            }
        }
        ranks[l] = rank_exact(m);
    }
    std::map<int, long> dims;
    for (int l = min_len; l <= max_length - 1; ++l) {
        long dim = static_cast<long>(bases[l].size());
        long out_rank = ranks.count(l) ? ranks[l] : 0;
        long in_rank = ranks.count(l - 1) ? ranks[l - 1] : 0;
        dims[l] = dim - out_rank - in_rank;
    }
    return dims;
}

SignedClass word_to_path(const Word& w) {
    check_alphabet(w);
    int n = static_cast<int>(w.size());
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        if (w[i - 1] == 'a') edges.push_back({i, i + 1});
        else edges.push_back({i + 1, i});
    }
    return canonicalize(Graph::make(Flavor::Directed, n + 1, std::move(edges)));
}

SignedClass word_to_polygon(const Word& w) {
    check_alphabet(w);
    int n = static_cast<int>(w.size());
    if (n < 1) throw std::invalid_argument("polygon words must be nonempty");
    std::vector<Edge> edges;
    for (int i = 1; i <= n - 1; ++i) {
        if (w[i - 1] == 'a') edges.push_back({i, i + 1});
        else edges.push_back({i + 1, i});
    }
    if (w[n - 1] == 'a') edges.push_back({n, 1});
    else edges.push_back({1, n});
    return canonicalize(Graph::make(Flavor::Directed, std::max(n, 1), std::move(edges)));
}

std::string word_to_string(const Word& w) { return w.empty() ? "1" : w; }

Word word_from_string(const std::string& s) {
    if (s == "1") return "";
    check_alphabet(s);
    return s;
}

} // namespace dgc
