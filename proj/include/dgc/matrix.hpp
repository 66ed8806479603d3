#pragma once

#include "dgc/rational.hpp"

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace dgc {

// Sparse matrix of exact rationals; entries hold no explicit zeros.
struct SparseExactMatrix {
    int rows = 0, cols = 0;
    std::vector<std::tuple<int, int, Rational>> entries;

    void add_entry(int row, int col, const Rational& value);
};

// Exact rank over the rationals: rows are scaled to primitive integer
// vectors, then eliminated fraction-free (integer-preserving combinations,
// gcd-normalized after every update) with Markowitz-style sparse pivoting.
long rank_exact(const SparseExactMatrix& m);

// Rank over F_p (p an odd prime < 2^62). Always a lower bound for the
// rational rank.
long rank_mod(const SparseExactMatrix& m, uint64_t p);

// Three deterministic pseudo-random 62-bit primes derived from `seed`.
std::vector<uint64_t> cross_check_primes(uint64_t seed);

// Exact kernel basis (dense elimination; intended for moderate sizes).
std::vector<std::vector<Rational>> kernel_basis(const SparseExactMatrix& m);

// One exact solution of M x = b if the system is consistent.
std::optional<std::vector<Rational>> solve(const SparseExactMatrix& m,
                                           const std::vector<Rational>& b);

} // namespace dgc
