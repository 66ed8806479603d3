#include "dgc/chain.hpp"

#include <json.hpp>

#include <sstream>

namespace dgc {

void Chain::accumulate_class(const Graph& cls, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(cls);
    if (it == terms.end()) {
        terms.emplace(cls, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

void Chain::accumulate(const Graph& g, const Rational& c) {
    if (g.flavor != flavor) throw std::invalid_argument("chain: flavor mismatch");
    if (c == 0) return;
    SignedClass sc = canonicalize(g);
    if (sc.zero()) return;
    accumulate_class(*sc.cls, sc.sign > 0 ? c : Rational(-c));
}

Chain from_graph(const Graph& g) {
    Chain x(g.flavor);
    x.accumulate(g, 1);
    return x;
}

Chain from_class(const SignedClass& sc, Flavor flavor) {
    Chain x(flavor);
    if (!sc.zero()) x.accumulate_class(*sc.cls, sc.sign);
    return x;
}

Chain add(const Chain& x, const Chain& y) {
    if (x.flavor != y.flavor) throw std::invalid_argument("add: flavor mismatch");
    Chain out = x;
    for (const auto& [g, c] : y.terms) out.accumulate_class(g, c);
    return out;
}

Chain sub(const Chain& x, const Chain& y) {
    if (x.flavor != y.flavor) throw std::invalid_argument("sub: flavor mismatch");
    Chain out = x;
    for (const auto& [g, c] : y.terms) out.accumulate_class(g, Rational(-c));
    return out;
}

Chain scale(const Rational& c, const Chain& x) {
    Chain out(x.flavor);
    if (c == 0) return out;
    for (const auto& [g, q] : x.terms) out.terms.emplace(g, c * q);
    return out;
}

std::optional<Bigrade> is_homogeneous(const Chain& x) {
    std::optional<Bigrade> common;
    for (const auto& [g, c] : x.terms) {
        Bigrade b = bigrade(g);
        if (!common) common = b;
        else if (!(*common == b)) return std::nullopt;
    }
    return common;
}

std::optional<int> degree(const Chain& x) {
    auto b = is_homogeneous(x);
    if (!b) return std::nullopt;
    return b->degree;
}

std::string chain_to_json(const Chain& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [g, c] : x.terms)
        arr.push_back({{"coeff", rational_to_string(c)}, {"graph", format_graph(g)}});
    return arr.dump();
}

Chain chain_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("chain json: expected array");
    std::optional<Chain> out;
    for (const auto& item : arr) {
        Graph g = parse_graph(item.at("graph").get<std::string>());
        Rational c = rational_from_string(item.at("coeff").get<std::string>());
        if (!out) out = Chain(g.flavor);
        out->accumulate(g, c);
    }
    return out.value_or(Chain(Flavor::Directed));
}

std::string format_chain(const Chain& x) {
    if (x.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : x.terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << rational_to_string(c) << ")*[" << format_graph(g) << "]";
    }
    return out.str();
}

} // namespace dgc
