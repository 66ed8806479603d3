#include "dgc/matrix.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace dgc {

void SparseExactMatrix::add_entry(int row, int col, const Rational& value) {
    if (row < 0 || row >= rows || col < 0 || col >= cols)
        throw std::invalid_argument("matrix entry out of range");
    if (value != 0) entries.push_back({row, col, value});
}

namespace {

// --- exact integer elimination --------------------------------------------

using IntRow = std::vector<std::pair<int, Integer>>; // sorted by column

void gcd_normalize(IntRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

template <typename V>
const V* row_find(const std::vector<std::pair<int, V>>& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// target := target * p - source * a, sparse merge
void combine(IntRow& target, const IntRow& source, const Integer& p, const Integer& a) {
    IntRow out;
    out.reserve(target.size() + source.size());
    size_t i = 0, j = 0;
    Integer tmp;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() ||
            (i < target.size() && target[i].first < source[j].first)) {
            out.push_back({target[i].first, target[i].second * p});
            ++i;
        } else if (i == target.size() || source[j].first < target[i].first) {
            out.push_back({source[j].first, -(source[j].second * a)});
            ++j;
        } else {
            tmp = target[i].second * p - source[j].second * a;
            if (tmp != 0) out.push_back({target[i].first, tmp});
            ++i;
            ++j;
        }
    }
    gcd_normalize(out);
    target = std::move(out);
}

std::vector<IntRow> integer_rows(const SparseExactMatrix& m) {
    std::vector<std::map<int, Rational>> rows(m.rows);
    for (const auto& [r, c, v] : m.entries) rows[r][c] += v;
    std::vector<IntRow> out(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        Integer lcm = 1;
        for (const auto& [c, v] : rows[r])
            if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        for (const auto& [c, v] : rows[r]) {
            if (v == 0) continue;
            Integer num = v.get_num() * (lcm / v.get_den());
            out[r].push_back({c, std::move(num)});
        }
        gcd_normalize(out[r]);
    }
    return out;
}

// shared Markowitz-ish pivot scaffolding over arbitrary row value types
template <typename Row, typename EliminateFn>
long eliminate(std::vector<Row>& rows, int cols, EliminateFn&& eliminate_with) {
    std::vector<std::vector<int>> col_rows(cols);
    std::vector<int> col_count(cols, 0);
    std::vector<char> row_active(rows.size(), 1);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) {
            col_rows[c].push_back(static_cast<int>(r));
            ++col_count[c];
        }
    using QEntry = std::pair<int, int>; // (count, col)
    std::priority_queue<QEntry, std::vector<QEntry>, std::greater<>> queue;
    for (int c = 0; c < cols; ++c)
        if (col_count[c] > 0) queue.push({col_count[c], c});

    long rank = 0;
    while (!queue.empty()) {
        auto [cnt, col] = queue.top();
        queue.pop();
        // refresh stale column data (dropping dead rows and duplicates)
        auto& rowlist = col_rows[col];
        std::sort(rowlist.begin(), rowlist.end());
        rowlist.erase(std::unique(rowlist.begin(), rowlist.end()), rowlist.end());
        rowlist.erase(std::remove_if(rowlist.begin(), rowlist.end(),
                                     [&](int r) {
                                         return !row_active[r] ||
                                                row_find(rows[r], col) == nullptr;
                                     }),
                      rowlist.end());
        col_count[col] = static_cast<int>(rowlist.size());
        if (col_count[col] == 0) continue;
        if (col_count[col] != cnt) {
            queue.push({col_count[col], col});
            continue;
        }
        // pivot row: fewest nonzeros in this column
        int pivot = -1;
        size_t best = SIZE_MAX;
        for (int r : rowlist)
            if (rows[r].size() < best) {
                best = rows[r].size();
                pivot = r;
            }
        ++rank;
        row_active[pivot] = 0;
        Row pivot_row = std::move(rows[pivot]);
        rows[pivot].clear();
        for (int r : rowlist) {
            if (r == pivot || !row_active[r]) continue;
            if (row_find(rows[r], col) == nullptr) continue;
            eliminate_with(rows[r], pivot_row, col);
            for (const auto& [c, v] : rows[r]) {
                col_rows[c].push_back(r);
                ++col_count[c];
                queue.push({col_count[c], c}); // lazily refreshed on pop
            }
        }
        rowlist.clear();
        col_count[col] = 0;
    }
    return rank;
}

// --- mod p -----------------------------------------------------------------

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

bool miller_rabin(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                       29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                       29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

using ModRow = std::vector<std::pair<int, uint64_t>>;

std::vector<ModRow> mod_rows(const SparseExactMatrix& m, uint64_t p) {
    std::vector<std::map<int, Rational>> rows(m.rows);
    for (const auto& [r, c, v] : m.entries) rows[r][c] += v;
    std::vector<ModRow> out(m.rows);
    Integer tmp;
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : rows[r]) {
            if (v == 0) continue;
            uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
            uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
            if (den == 0) throw std::domain_error("rank_mod: denominator divisible by p");
            uint64_t val = mulmod(num, invmod(den, p), p);
            if (val) out[r].push_back({c, val});
        }
    return out;
}

} // namespace

long rank_exact(const SparseExactMatrix& m) {
    auto rows = integer_rows(m);
    return eliminate(rows, m.cols, [](IntRow& target, const IntRow& pivot_row, int col) {
        const Integer* a = row_find(target, col);
        const Integer* p = row_find(pivot_row, col);
        combine(target, pivot_row, *p, *a);
    });
}

long rank_mod(const SparseExactMatrix& m, uint64_t p) {
    auto rows = mod_rows(m, p);
    return eliminate(rows, m.cols, [p](ModRow& target, const ModRow& pivot_row, int col) {
        const uint64_t* a = row_find(target, col);
        const uint64_t* pv = row_find(pivot_row, col);
        uint64_t factor = mulmod(*a, invmod(*pv, p), p);
        ModRow out;
        out.reserve(target.size() + pivot_row.size());
        size_t i = 0, j = 0;
        while (i < target.size() || j < pivot_row.size()) {
            if (j == pivot_row.size() ||
                (i < target.size() && target[i].first < pivot_row[j].first)) {
                out.push_back(target[i]);
                ++i;
            } else if (i == target.size() || pivot_row[j].first < target[i].first) {
                uint64_t v = p - mulmod(factor, pivot_row[j].second, p);
                if (v != p && v != 0) out.push_back({pivot_row[j].first, v});
                ++j;
            } else {
                uint64_t v = (target[i].second + p - mulmod(factor, pivot_row[j].second, p)) % p;
                if (v != 0) out.push_back({target[i].first, v});
                ++i;
                ++j;
            }
        }
        target = std::move(out);
    });
}

std::vector<uint64_t> cross_check_primes(uint64_t seed) {
    std::vector<uint64_t> primes;
    uint64_t x = seed * 6364136223846793005ull + 1442695040888963407ull;
    while (primes.size() < 3) {
        x ^= x >> 27;
        x *= 0x2545f4914f6cdd1dull;
        x ^= x >> 31;
        uint64_t candidate = (x % (1ull << 61)) + (1ull << 61);
        candidate |= 1;
        while (!miller_rabin(candidate)) candidate += 2;
        if (std::find(primes.begin(), primes.end(), candidate) == primes.end())
            primes.push_back(candidate);
    }
    return primes;
}

namespace {

// dense exact row echelon; returns pivot columns, mutates rows in place
std::vector<int> dense_echelon(std::vector<std::vector<Rational>>& a) {
    std::vector<int> pivot_cols;
    if (a.empty()) return pivot_cols;
    size_t nrows = a.size(), ncols = a[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && a[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        Rational inv = 1 / a[row][col];
        for (size_t c = col; c < ncols; ++c) a[row][c] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = col; c < ncols; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    return pivot_cols;
}

std::vector<std::vector<Rational>> dense_of(const SparseExactMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, 0));
    for (const auto& [r, c, v] : m.entries) a[r][c] += v;
    return a;
}

} // namespace

std::vector<std::vector<Rational>> kernel_basis(const SparseExactMatrix& m) {
    auto a = dense_of(m);
    auto pivots = dense_echelon(a);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols, 0);
        v[free_col] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -a[pr][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const SparseExactMatrix& m,
                                           const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve: dimension mismatch");
    auto a = dense_of(m);
    for (int r = 0; r < m.rows; ++r) a[r].push_back(b[r]);
    auto pivots = dense_echelon(a);
    // inconsistent iff some pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<Rational> x(m.cols, 0);
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = a[pr][m.cols];
    return x;
}

} // namespace dgc
