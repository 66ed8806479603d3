#pragma once

#include "dgc/basis.hpp"
#include "dgc/chain.hpp"
#include "dgc/matrix.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace dgc {

// Differential matrix in the deterministic basis orders: column j expands
// differential() of source basis element j; rows are indexed by the
// enumerated basis at (n+1, r+1). Every column term must land in the target
// basis (the diff-closedness of the span is asserted).
struct DifferentialBlock {
    SubcomplexSpec spec;
    int n = 0, r = 0;
    std::vector<Graph> source;
    std::vector<Graph> targets;
    SparseExactMatrix matrix; // rows = targets, cols = source
};

struct RankInfo {
    long rank = -1;
    bool exact = false;                             // exact elimination ran
    std::vector<std::pair<uint64_t, long>> modular; // cross-check primes
};

struct HomologyOptions {
    // exact elimination is attempted up to this many columns; larger blocks
    // fall back to the multi-prime modular consensus (still cross-checked)
    long exact_max_cols = 100000;
    unsigned threads = 0;
};

// Persistent results store: one JSON document per (spec, n, r) under dir,
// with a manifest mapping keys to files. Write-temp-then-rename.
class Cache {
  public:
    explicit Cache(std::filesystem::path dir); // empty path disables persistence
    const std::filesystem::path& dir() const { return dir_; }
    bool enabled() const { return !dir_.empty(); }

    std::optional<std::vector<Graph>> load_basis(const SubcomplexSpec&, int n, int r);
    void store_basis(const SubcomplexSpec&, int n, int r, const std::vector<Graph>&);
    std::optional<RankInfo> load_rank(const SubcomplexSpec&, int n, int r);
    void store_rank(const SubcomplexSpec&, int n, int r, const RankInfo&);

    std::vector<std::string> list_keys() const;
    void clear();

  private:
    std::filesystem::path dir_;
    std::mutex mutex_;
    std::string key_of(const SubcomplexSpec&, int n, int r) const;
    std::filesystem::path file_of(const std::string& key) const;
    void update_manifest(const std::string& key, const std::string& filename);
};

// Basis with caching; predicate subsets filter down from a cached
// flavor-only basis when one is available.
std::vector<Graph> basis(const SubcomplexSpec&, int n, int r, Cache* cache,
                         unsigned threads = 0);

// Enumerates every r <= r_max at once and fills the cache.
void warm_basis_cache(const SubcomplexSpec&, int n, int r_max, Cache& cache,
                      unsigned threads = 0);

// Full differential matrix with both bases enumerated (suitable for tests,
// serialization and moderate sizes).
DifferentialBlock differential_matrix(const SubcomplexSpec&, int n, int r,
                                      Cache* cache = nullptr, unsigned threads = 0);

// Rank of the differential leaving (n, r). Row classes are discovered from
// the columns (each checked against the spec predicates), so no basis
// enumeration at n+1 is required.
RankInfo differential_rank(const SubcomplexSpec&, int n, int r,
                           const HomologyOptions& opts = {}, Cache* cache = nullptr);

// dim ker(d at (n, r)) - rank(d into (n, r)).
long cohomology_dim(const SubcomplexSpec&, int n, int r,
                    const HomologyOptions& opts = {}, Cache* cache = nullptr);

// Position n at fixed Euler characteristic chi (r = n - chi).
long cohomology_dim_chi(const SubcomplexSpec&, int n, int chi,
                        const HomologyOptions& opts = {}, Cache* cache = nullptr);

// Translates a degree-indexed dimension table from d = 2 to an even d_target
// at fixed chi: degree shifts by (d_target - 2) * (chi - 1).
std::map<int, long> degree_shift_dims(const std::map<int, long>& dims_d2,
                                      int d_target, int chi);

} // namespace dgc
