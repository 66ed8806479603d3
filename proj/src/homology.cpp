#include "dgc/homology.hpp"

#include "dgc/operad.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <functional>
#include <thread>
#include <unordered_map>

namespace dgc {

namespace {

unsigned worker_count(unsigned threads) {
    return threads ? threads : std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn) {
    unsigned workers = std::min<size_t>(worker_count(threads), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto body = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

// Compact canonical-class key: n, r and one byte per edge. Enough for
// n <= 16 and r <= 29, which covers every block this engine touches.
struct PackedClass {
    std::array<uint64_t, 4> w{};
    friend bool operator==(const PackedClass&, const PackedClass&) = default;
    friend auto operator<=>(const PackedClass&, const PackedClass&) = default;
};

struct PackedHash {
    size_t operator()(const PackedClass& k) const {
        uint64_t h = 14695981039346656037ull;
        for (uint64_t x : k.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

PackedClass pack_class(const Graph& g) {
    if (g.n > 16 || g.r() > 29) throw std::invalid_argument("pack_class: graph too large");
    PackedClass k;
    auto put = [&k](size_t byte, uint8_t v) {
        k.w[byte / 8] |= uint64_t(v) << (8 * (byte % 8));
    };
    put(0, static_cast<uint8_t>(g.n));
    put(1, static_cast<uint8_t>(g.r()));
    for (int i = 0; i < g.r(); ++i)
        put(2 + i, static_cast<uint8_t>((g.edges[i].u - 1) * 16 + (g.edges[i].v - 1)));
    return k;
}

} // namespace

// --- cache -------------------------------------------------------------

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string Cache::key_of(const SubcomplexSpec& spec, int n, int r) const {
    return spec.to_string() + "|n" + std::to_string(n) + "|r" + std::to_string(r);
}

std::filesystem::path Cache::file_of(const std::string& key) const {
    std::string name;
    for (char c : key) name += (isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return dir_ / (name + ".json");
}

void Cache::update_manifest(const std::string& key, const std::string& filename) {
    auto path = dir_ / "manifest.json";
    nlohmann::json manifest = nlohmann::json::object();
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        in >> manifest;
    }
    manifest[key] = filename;
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << manifest.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

namespace {

nlohmann::json read_entry(const std::filesystem::path& file) {
    if (!std::filesystem::exists(file)) return nlohmann::json::object();
    std::ifstream in(file);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_entry(const std::filesystem::path& file, const nlohmann::json& j) {
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, file);
}

} // namespace

std::optional<std::vector<Graph>> Cache::load_basis(const SubcomplexSpec& spec, int n, int r) {
    if (!enabled()) return std::nullopt;
    std::lock_guard lock(mutex_);
    auto j = read_entry(file_of(key_of(spec, n, r)));
    if (!j.contains("basis")) return std::nullopt;
    std::vector<Graph> out;
    for (const auto& s : j["basis"]) out.push_back(parse_graph(s.get<std::string>()));
    return out;
}

void Cache::store_basis(const SubcomplexSpec& spec, int n, int r,
                        const std::vector<Graph>& basis) {
    if (!enabled()) return;
    std::lock_guard lock(mutex_);
    std::string key = key_of(spec, n, r);
    auto file = file_of(key);
    auto j = read_entry(file);
    j["spec"] = spec.to_string();
    j["n"] = n;
    j["r"] = r;
    auto arr = nlohmann::json::array();
    for (const auto& g : basis) arr.push_back(format_graph(g));
    j["basis"] = arr;
    write_entry(file, j);
    update_manifest(key, file.filename().string());
}

std::optional<RankInfo> Cache::load_rank(const SubcomplexSpec& spec, int n, int r) {
    if (!enabled()) return std::nullopt;
    std::lock_guard lock(mutex_);
    auto j = read_entry(file_of(key_of(spec, n, r)));
    if (!j.contains("rank")) return std::nullopt;
    RankInfo info;
    info.rank = j["rank"].get<long>();
    info.exact = j.value("rank_exact", false);
    if (j.contains("rank_modular"))
        for (const auto& pr : j["rank_modular"])
            info.modular.push_back({pr[0].get<uint64_t>(), pr[1].get<long>()});
    return info;
}

void Cache::store_rank(const SubcomplexSpec& spec, int n, int r, const RankInfo& info) {
    if (!enabled()) return;
    std::lock_guard lock(mutex_);
    std::string key = key_of(spec, n, r);
    auto file = file_of(key);
    auto j = read_entry(file);
    j["spec"] = spec.to_string();
    j["n"] = n;
    j["r"] = r;
    j["rank"] = info.rank;
    j["rank_exact"] = info.exact;
    auto arr = nlohmann::json::array();
    for (const auto& [p, rk] : info.modular) arr.push_back({p, rk});
    j["rank_modular"] = arr;
    write_entry(file, j);
    update_manifest(key, file.filename().string());
}

std::vector<std::string> Cache::list_keys() const {
    std::vector<std::string> out;
    if (!enabled()) return out;
    auto path = dir_ / "manifest.json";
    if (!std::filesystem::exists(path)) return out;
    std::ifstream in(path);
    nlohmann::json manifest;
    in >> manifest;
    for (auto it = manifest.begin(); it != manifest.end(); ++it) out.push_back(it.key());
    std::sort(out.begin(), out.end());
    return out;
}

void Cache::clear() {
    if (!enabled()) return;
    std::lock_guard lock(mutex_);
    for (const auto& entry : std::filesystem::directory_iterator(dir_))
        if (entry.path().extension() == ".json") std::filesystem::remove(entry.path());
}

// --- bases and matrices --------------------------------------------------

std::vector<Graph> basis(const SubcomplexSpec& spec, int n, int r, Cache* cache,
                         unsigned threads) {
    if (cache) {
        if (auto hit = cache->load_basis(spec, n, r)) return *hit;
        // a cached flavor-only basis filters down to any predicate subset
        SubcomplexSpec parent;
        parent.flavor = spec.flavor;
        if (!(parent == spec))
            if (auto ph = cache->load_basis(parent, n, r)) {
                std::vector<Graph> out;
                for (const auto& g : *ph)
                    if (spec.matches(g)) out.push_back(g);
                cache->store_basis(spec, n, r, out);
                return out;
            }
    }
    auto out = enumerate_basis(spec, n, r, threads);
    if (cache) cache->store_basis(spec, n, r, out);
    return out;
}

void warm_basis_cache(const SubcomplexSpec& spec, int n, int r_max, Cache& cache,
                      unsigned threads) {
    bool all_cached = true;
    for (int r = 0; r <= r_max && all_cached; ++r)
        if (!cache.load_basis(spec, n, r)) all_cached = false;
    if (all_cached) return;
    auto buckets = enumerate_basis_all_r(spec, n, r_max, threads);
    for (int r = 0; r <= r_max; ++r) cache.store_basis(spec, n, r, buckets[r]);
}

DifferentialBlock differential_matrix(const SubcomplexSpec& spec, int n, int r,
                                      Cache* cache, unsigned threads) {
    DifferentialBlock block;
    block.spec = spec;
    block.n = n;
    block.r = r;
    block.source = basis(spec, n, r, cache, threads);
    block.targets = basis(spec, n + 1, r + 1, cache, threads);
    block.matrix.rows = static_cast<int>(block.targets.size());
    block.matrix.cols = static_cast<int>(block.source.size());

    std::vector<std::vector<std::tuple<int, int, Rational>>> cols(block.source.size());
    parallel_for(block.source.size(), threads, [&](size_t j) {
        Chain d = differential(from_class(SignedClass{block.source[j], 1}, spec.flavor));
        for (const auto& [h, c] : d.terms) {
            auto it = std::lower_bound(block.targets.begin(), block.targets.end(), h,
                                       GraphLess{});
            if (it == block.targets.end() || !(*it == h))
                throw std::logic_error("differential left the subcomplex span: " +
                                       format_graph(h));
            cols[j].push_back({static_cast<int>(it - block.targets.begin()),
                               static_cast<int>(j), c});
        }
    });
    for (auto& col : cols)
        for (auto& e : col) block.matrix.entries.push_back(std::move(e));
    return block;
}

namespace {

struct PackedColumns {
    long source_size = 0;
    std::vector<std::vector<std::pair<PackedClass, long long>>> cols;
};

// Columns of the differential with rows as packed discovered classes.
// Each column is scaled to integers (column scaling preserves rank).
PackedColumns packed_columns(const SubcomplexSpec& spec, const std::vector<Graph>& src,
                             unsigned threads) {
    PackedColumns out;
    out.source_size = static_cast<long>(src.size());
    out.cols.resize(src.size());
    parallel_for(src.size(), threads, [&](size_t j) {
        Chain d = differential(from_class(SignedClass{src[j], 1}, spec.flavor));
        Integer lcm = 1;
        for (const auto& [h, c] : d.terms)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        auto& col = out.cols[j];
        for (const auto& [h, c] : d.terms) {
            if (!spec.matches(h))
                throw std::logic_error("differential left the subcomplex span: " +
                                       format_graph(h));
            Integer num = c.get_num() * (lcm / c.get_den());
            if (!num.fits_slong_p())
                throw std::overflow_error("differential coefficient overflow");
            col.push_back({pack_class(h), num.get_si()});
        }
    });
    return out;
}

SparseExactMatrix matrix_of_packed(const PackedColumns& pc) {
    std::unordered_map<PackedClass, int, PackedHash> row_of;
    std::vector<PackedClass> keys;
    for (const auto& col : pc.cols)
        for (const auto& [k, v] : col)
            if (row_of.emplace(k, 0).second) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (size_t i = 0; i < keys.size(); ++i) row_of[keys[i]] = static_cast<int>(i);
    SparseExactMatrix m;
    m.rows = static_cast<int>(keys.size());
    m.cols = static_cast<int>(pc.cols.size());
    for (size_t j = 0; j < pc.cols.size(); ++j)
        for (const auto& [k, v] : pc.cols[j])
            m.entries.push_back({row_of[k], static_cast<int>(j),
                                 Rational(static_cast<long>(v))});
    return m;
}

} // namespace

namespace {

RankInfo rank_of_sources(const SubcomplexSpec& spec, int n, int r,
                         const std::vector<Graph>& src, const HomologyOptions& opts,
                         Cache* cache) {
    if (cache)
        if (auto hit = cache->load_rank(spec, n, r)) return *hit;
    RankInfo info;
    if (src.empty()) {
        info.rank = 0;
        info.exact = true;
        if (cache) cache->store_rank(spec, n, r, info);
        return info;
    }
    auto pc = packed_columns(spec, src, opts.threads);
    SparseExactMatrix m = matrix_of_packed(pc);
    pc.cols.clear();
    pc.cols.shrink_to_fit();

    uint64_t seed = 0;
    for (char ch : spec.to_string()) seed = seed * 131 + static_cast<unsigned char>(ch);
    seed = seed * 1000003 + static_cast<uint64_t>(n) * 101 + static_cast<uint64_t>(r);
    auto primes = cross_check_primes(seed);

    std::vector<long> mod_ranks(primes.size(), -1);
    parallel_for(primes.size(), opts.threads,
                 [&](size_t i) { mod_ranks[i] = rank_mod(m, primes[i]); });
    for (size_t i = 0; i < primes.size(); ++i)
        info.modular.push_back({primes[i], mod_ranks[i]});

    long consensus = *std::max_element(mod_ranks.begin(), mod_ranks.end());
    for (long rk : mod_ranks)
        if (rk != consensus)
            throw std::runtime_error("modular ranks disagree; unlucky prime set");

    if (m.cols <= opts.exact_max_cols) {
        info.rank = rank_exact(m);
        info.exact = true;
        if (info.rank != consensus)
            throw std::runtime_error("exact rank disagrees with modular cross-check");
    } else {
        info.rank = consensus;
        info.exact = false;
    }
    if (cache) cache->store_rank(spec, n, r, info);
    return info;
}

} // namespace

RankInfo differential_rank(const SubcomplexSpec& spec, int n, int r,
                           const HomologyOptions& opts, Cache* cache) {
    if (cache)
        if (auto hit = cache->load_rank(spec, n, r)) return *hit;

    auto src = basis(spec, n, r, cache, opts.threads);

    // The loop-count-zero and loop-count-positive spans are each closed under
    // the differential (the would-be loopless terms of a loop-bearing source
    // cancel), so the matrix is block diagonal and the ranks add. Splitting
    // keeps the big blocks smaller and the loopless half is reused directly.
    bool splittable = !spec.loopless && !spec.with_loop && !spec.all_valency_exactly_2 &&
                      !spec.uni_bivalent;
    if (splittable && src.size() > 2000) {
        SubcomplexSpec a = spec, b = spec;
        a.loopless = true;
        b.with_loop = true;
        std::vector<Graph> src_a, src_b;
        for (const auto& g : src) (has_loop(g) ? src_b : src_a).push_back(g);
        if (cache) {
            cache->store_basis(a, n, r, src_a);
            cache->store_basis(b, n, r, src_b);
        }
        RankInfo ia = rank_of_sources(a, n, r, src_a, opts, cache);
        RankInfo ib = rank_of_sources(b, n, r, src_b, opts, cache);
        RankInfo info;
        info.rank = ia.rank + ib.rank;
        info.exact = ia.exact && ib.exact;
        info.modular = ia.modular;
        info.modular.insert(info.modular.end(), ib.modular.begin(), ib.modular.end());
        if (cache) cache->store_rank(spec, n, r, info);
        return info;
    }
    return rank_of_sources(spec, n, r, src, opts, cache);
}

long cohomology_dim(const SubcomplexSpec& spec, int n, int r,
                    const HomologyOptions& opts, Cache* cache) {
    long dim = static_cast<long>(basis(spec, n, r, cache, opts.threads).size());
    if (dim == 0) return 0;
    long rank_out = differential_rank(spec, n, r, opts, cache).rank;
    long rank_in = 0;
    if (n >= 2 && r >= 1) rank_in = differential_rank(spec, n - 1, r - 1, opts, cache).rank;
    return dim - rank_out - rank_in;
}

long cohomology_dim_chi(const SubcomplexSpec& spec, int n, int chi,
                        const HomologyOptions& opts, Cache* cache) {
    int r = n - chi;
    if (r < 0) return 0;
    return cohomology_dim(spec, n, r, opts, cache);
}

std::map<int, long> degree_shift_dims(const std::map<int, long>& dims_d2,
                                      int d_target, int chi) {
    if (d_target % 2 != 0)
        throw std::invalid_argument("degree_shift_dims: d must be even");
    int shift = (d_target - 2) * (chi - 1);
    std::map<int, long> out;
    for (const auto& [deg, dim] : dims_d2) out[deg + shift] = dim;
    return out;
}

} // namespace dgc
