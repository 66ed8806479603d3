// Command-line front end: parse graphs, apply the operad operations, compute
// cohomology tables, run the verification suites and manage the cache.

#include "dgc/assemble.hpp"
#include "dgc/frames.hpp"
#include "dgc/islands.hpp"
#include "dgc/operad.hpp"
#include "dgc/predicates.hpp"
#include "dgc/verify.hpp"
#include "dgc/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace dgc;

namespace {

struct Options {
    std::string spec = "directed";
    int n = 0, r = -1, chi = 0, degree = 0, n_max = 0;
    bool have_chi = false, have_degree = false;
    std::string cache_dir;
    unsigned threads = 0;
    std::string format = "text";
    std::string file;
};

std::string default_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DGC_CACHE_DIR")) return env;
    return {};
}

std::vector<Graph> input_graphs(const std::vector<std::string>& args,
                                const std::string& file) {
    std::vector<Graph> out;
    for (const auto& a : args) out.push_back(parse_graph(a));
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                out.push_back(parse_graph(line));
            } catch (const ParseError& e) {
                throw std::runtime_error(file + ":" + std::to_string(lineno) + ":" +
                                         std::to_string(e.column + 1) + ": " + e.what());
            }
        }
    }
    return out;
}

void print_chain(const Chain& c, const std::string& format) {
    if (format == "json") std::cout << chain_to_json(c) << "\n";
    else std::cout << format_chain(c) << "\n";
}

int cmd_canon(const Options& opt, const std::vector<std::string>& args) {
    for (const auto& g : input_graphs(args, opt.file)) {
        auto sc = canonicalize(g);
        if (opt.format == "json") {
            nlohmann::json j;
            if (sc.zero()) j = {{"zero", true}};
            else j = {{"zero", false}, {"sign", sc.sign}, {"graph", format_graph(*sc.cls)}};
            std::cout << j.dump() << "\n";
        } else if (sc.zero()) {
            std::cout << "ZERO (odd graph)\n";
        } else {
            std::cout << (sc.sign > 0 ? "+1 " : "-1 ") << format_graph(*sc.cls) << "\n";
        }
    }
    return 0;
}

int cmd_diff(const Options& opt, const std::vector<std::string>& args, bool simplified) {
    for (const auto& g : input_graphs(args, opt.file)) {
        Chain d;
        if (!simplified) {
            d = differential(g);
        } else {
            auto variant = g.directed() ? SimplifiedVariant::DirectedConnected
                                        : SimplifiedVariant::UndirectedConnected;
            d = differential_simplified(g, variant);
        }
        print_chain(d, opt.format);
    }
    return 0;
}

int cmd_bracket(const Options& opt, const std::vector<std::string>& args) {
    if (args.size() != 2) throw CLI::ValidationError("bracket needs two graphs");
    Chain x = from_graph(parse_graph(args[0]));
    Chain y = from_graph(parse_graph(args[1]));
    print_chain(bracket(x, y), opt.format);
    return 0;
}

int cmd_insert(const Options& opt, const std::vector<std::string>& args) {
    if (args.size() != 3) throw CLI::ValidationError("insert needs: graph index graph");
    Graph g = parse_graph(args[0]);
    int i = std::stoi(args[1]);
    Graph h = parse_graph(args[2]);
    print_chain(insert(g, i, h), opt.format);
    return 0;
}

int cmd_enumerate(const Options& opt) {
    auto spec = SubcomplexSpec::parse(opt.spec);
    if (opt.n < 1 || opt.r < 0) throw CLI::ValidationError("enumerate needs --n and --r");
    Cache cache(default_cache_dir(opt.cache_dir));
    auto b = basis(spec, opt.n, opt.r, cache.enabled() ? &cache : nullptr, opt.threads);
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& g : b) arr.push_back(format_graph(g));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& g : b) std::cout << format_graph(g) << "\n";
        std::cerr << b.size() << " classes\n";
    }
    return 0;
}

int cmd_cohomology(const Options& opt) {
    auto spec = SubcomplexSpec::parse(opt.spec);
    Cache cache(default_cache_dir(opt.cache_dir));
    Cache* cp = cache.enabled() ? &cache : nullptr;
    HomologyOptions hopts;
    hopts.threads = opt.threads;
    std::vector<std::tuple<int, int, long>> rows; // (n, r, dim)
    if (opt.n_max > 0) {
        for (int n = 1; n <= opt.n_max; ++n) {
            int rmax = spec.flavor == Flavor::Directed ? n * n : n * (n + 1) / 2;
            for (int r = 0; r <= rmax; ++r) {
                if (basis(spec, n, r, cp, opt.threads).empty()) continue;
                rows.push_back({n, r, cohomology_dim(spec, n, r, hopts, cp)});
            }
        }
    } else if (opt.n >= 1) {
        int r = opt.have_chi ? opt.n - opt.chi
                             : (opt.have_degree ? 2 * opt.n - 2 - opt.degree : opt.r);
        if (r < 0) throw CLI::ValidationError("cohomology needs --r, --chi or --degree");
        rows.push_back({opt.n, r, cohomology_dim(spec, opt.n, r, hopts, cp)});
    } else {
        throw CLI::ValidationError("cohomology needs --n or --n-max");
    }
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [n, r, dim] : rows)
            arr.push_back({{"n", n}, {"r", r}, {"degree", 2 * n - 2 - r}, {"dim", dim}});
        std::cout << arr.dump() << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,r,degree,dim\n";
        for (const auto& [n, r, dim] : rows)
            std::cout << n << ',' << r << ',' << 2 * n - 2 - r << ',' << dim << "\n";
    } else {
        for (const auto& [n, r, dim] : rows)
            std::cout << "n=" << n << " r=" << r << " degree=" << 2 * n - 2 - r
                      << " dim=" << dim << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    Cache cache(default_cache_dir(opt.cache_dir));
    HomologyOptions hopts;
    hopts.threads = opt.threads;
    auto res = verify_suite(suite, hopts, cache.enabled() ? &cache : nullptr,
                            [](const std::string& line) { std::cerr << "  .. " << line << "\n"; });
    if (opt.format == "json") {
        nlohmann::json j = {{"suite", res.name},
                            {"pass", res.pass},
                            {"seconds", res.seconds},
                            {"details", res.details}};
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << "\n";
        for (const auto& d : res.details) std::cout << "  " << d << "\n";
    }
    return res.pass ? 0 : 1;
}

int cmd_decompose(const Options& opt, const std::vector<std::string>& args) {
    for (const auto& g : input_graphs(args, opt.file)) {
        nlohmann::json j;
        if (g.directed()) {
            auto res = frame_of(g);
            j["kind"] = "frame";
            j["frame"] = format_graph(res.frame.g);
            j["blocks"] = {{"univalent", res.frame.e_uni},
                           {"ordinary", res.frame.e_ord},
                           {"loops", res.frame.e_loop}};
            nlohmann::json words = nlohmann::json::array();
            for (const auto& w : res.decoration.words) words.push_back(word_to_string(w));
            j["decoration"] = words;
            j["sign"] = res.sign;
        } else {
            auto dec = islands_and_forest(g);
            j["kind"] = "islands";
            nlohmann::json islands = nlohmann::json::array();
            for (const auto& isl : dec.islands) {
                nlohmann::json one;
                one["graph"] = format_graph(isl.graph);
                one["marked"] = isl.marked;
                one["original_vertices"] = isl.original;
                one["edge_labels"] = isl.edge_labels;
                islands.push_back(one);
            }
            j["islands"] = islands;
            j["forest"] = {{"vertices", dec.forest_vertices},
                           {"internal", std::vector<int>(dec.forest_internal.begin(),
                                                         dec.forest_internal.end())},
                           {"edges", dec.forest_edges},
                           {"edge_labels", dec.forest_edge_labels}};
        }
        std::cout << j.dump(1) << "\n";
    }
    return 0;
}

int cmd_assemble(const Options& opt) {
    if (opt.n_max < 1) throw CLI::ValidationError("assemble needs --n-max");
    Cache cache(default_cache_dir(opt.cache_dir));
    HomologyOptions hopts;
    hopts.threads = opt.threads;
    auto report =
        verify_main_theorem(opt.n_max, hopts, cache.enabled() ? &cache : nullptr);
    if (opt.format == "json") {
        std::cout << report_to_json(report) << "\n";
    } else if (opt.format == "csv") {
        std::cout << report_to_csv(report);
    } else {
        for (const auto& row : report.full)
            std::cout << "full n=" << row.n << " deg=" << row.degree
                      << " lhs=" << row.lhs << " rhs=" << row.rhs
                      << (row.match() ? "" : "  MISMATCH") << "\n";
        for (const auto& row : report.loopless)
            std::cout << "loopless n=" << row.n << " deg=" << row.degree
                      << " lhs=" << row.lhs << " rhs=" << row.rhs
                      << (row.match() ? "" : "  MISMATCH") << "\n";
        std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
    }
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the directed graph complex and its relatives"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--spec", opt.spec, "subcomplex: flavor plus comma list of predicates");
    app.add_option("--n", opt.n, "vertex count");
    app.add_option("--r", opt.r, "edge count");
    auto* chi_opt = app.add_option("--chi", opt.chi, "Euler characteristic (n - r)");
    auto* deg_opt = app.add_option("--degree", opt.degree, "degree 2n - 2 - r");
    app.add_option("--n-max", opt.n_max, "verify through this vertex count");
    app.add_option("--cache-dir", opt.cache_dir,
                   "results cache directory (default: $DGC_CACHE_DIR)");
    app.add_option("--threads", opt.threads, "worker thread count");
    app.add_option("--format", opt.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag_callback("--json", [&opt] { opt.format = "json"; },
                          "shorthand for --format json");
    app.add_option("--file", opt.file, "read graphs from a file, one per line");

    std::vector<std::string> graph_args;
    auto* canon = app.add_subcommand("canon", "canonical form and sign of graphs");
    canon->fallthrough();
    canon->add_option("graphs", graph_args, "graphs in text format");
    auto* diff = app.add_subcommand("diff", "differential of graphs");
    diff->fallthrough();
    diff->add_option("graphs", graph_args, "graphs in text format");
    bool simplified = false;
    diff->add_flag("--simplified", simplified, "use the vertex-splitting form");
    auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two graphs");
    bracket_cmd->fallthrough();
    bracket_cmd->add_option("graphs", graph_args, "two graphs");
    auto* insert_cmd = app.add_subcommand("insert", "insertion g o_i h");
    insert_cmd->fallthrough();
    insert_cmd->add_option("args", graph_args, "graph, vertex index, graph");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "basis of a graded piece");
    enumerate_cmd->fallthrough();
    auto* cohomology_cmd = app.add_subcommand("cohomology", "cohomology dimensions");
    cohomology_cmd->fallthrough();
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->fallthrough();
    std::string suite;
    verify_cmd->add_option("suite", suite, "one of the named suites")
        ->required()
        ->check(CLI::IsMember(verify_suite_names()));
    auto* decompose_cmd = app.add_subcommand(
        "decompose", "frame/word decomposition (directed) or islands (undirected)");
    decompose_cmd->fallthrough();
    decompose_cmd->add_option("graphs", graph_args, "graphs in text format");
    auto* assemble_cmd = app.add_subcommand("assemble", "main-theorem comparison report");
    assemble_cmd->fallthrough();
    auto* cache_cmd = app.add_subcommand("cache", "cache maintenance");
    cache_cmd->fallthrough();
    auto* cache_ls = cache_cmd->add_subcommand("ls", "list cache keys");
    cache_ls->fallthrough();
    auto* cache_clear = cache_cmd->add_subcommand("clear", "remove cache entries");
    cache_clear->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.have_chi = chi_opt->count() > 0;
    opt.have_degree = deg_opt->count() > 0;

    try {
        if (canon->parsed()) return cmd_canon(opt, graph_args);
        if (diff->parsed()) return cmd_diff(opt, graph_args, simplified);
        if (bracket_cmd->parsed()) return cmd_bracket(opt, graph_args);
        if (insert_cmd->parsed()) return cmd_insert(opt, graph_args);
        if (enumerate_cmd->parsed()) return cmd_enumerate(opt);
        if (cohomology_cmd->parsed()) return cmd_cohomology(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt, suite);
        if (decompose_cmd->parsed()) return cmd_decompose(opt, graph_args);
        if (assemble_cmd->parsed()) return cmd_assemble(opt);
        if (cache_cmd->parsed()) {
            std::string dir = default_cache_dir(opt.cache_dir);
            if (dir.empty()) dir = "dgc-cache";
            Cache cache(dir);
            if (cache_ls->parsed())
                for (const auto& key : cache.list_keys()) std::cout << key << "\n";
            else if (cache_clear->parsed()) cache.clear();
            else throw CLI::ValidationError("cache: use ls or clear");
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at column " << e.column + 1 << ": " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
