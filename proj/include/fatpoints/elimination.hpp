#pragma once

#include <optional>

#include "fatpoints/matrix.hpp"

namespace fatpoints {

// Exact rank and kernel kernels. Pivoting is always "first nonzero entry in
// column order": exact arithmetic needs no magnitude heuristics and the fixed
// rule keeps every run deterministic.
//
// The rational path uses fraction-free Bareiss updates on a denominator-
// cleared integer matrix, which bounds entry growth to minor size. The
// residue path is ordinary Gaussian elimination. Inner row-update loops are
// OpenMP-parallel; a plain serial implementation lives in reference/ and is
// used as the oracle in tests and as the baseline in the benchmark.

std::size_t rank_rational(const RatMatrix& m);
std::size_t rank_integer(IntMatrix m);  // consumed

// Rank of m reduced mod field.modulus(); never exceeds the rational rank.
std::size_t rank_mod(const PrimeField& field, Matrix<std::uint64_t> m);  // consumed

struct ModularRankReport {
    std::size_t rank = 0;                 // max over primes: certified lower bound
    std::vector<std::uint64_t> primes;    // the primes actually used
    std::vector<std::size_t> ranks;       // per-prime ranks
};

// Rank of a rational matrix computed modulo `num_primes` distinct random
// word-sized primes (deterministic from `seed`). The result is a certified
// lower bound for the rational rank; it equals it unless every sampled prime
// divides the same maximal minor. Primes dividing a row's cleared
// denominator are rejected and resampled.
ModularRankReport rank_multimodular(const RatMatrix& m, unsigned num_primes,
                                    std::uint64_t seed = 0x5EEDULL);

// Basis of the right kernel, cols - rank vectors. Rational kernel vectors
// are scaled to integer entries with content 1 and positive leading nonzero
// entry. Every returned vector v satisfies m*v == 0 exactly.
std::vector<std::vector<Rat>> kernel_basis_rational(const RatMatrix& m);
std::vector<std::vector<std::uint64_t>> kernel_basis_mod(const PrimeField& field,
                                                         Matrix<std::uint64_t> m);

// Multi-prime CRT + rational reconstruction search for one exact kernel
// vector of a large rational matrix. On success the vector has been verified
// against every row over the rationals, so "kernel vector exists" (dimension
// > 0) is proved, not sampled. Returns nullopt if reconstruction does not
// stabilize within `max_primes` primes or the matrix has full column rank.
std::optional<std::vector<Int>> kernel_witness(const RatMatrix& m, unsigned max_primes = 48,
                                               std::uint64_t seed = 0x5EEDULL);

// Scale a rational vector to integers with content 1 and positive leading
// nonzero entry; the zero vector is returned unchanged.
std::vector<Int> canonical_integer_vector(const std::vector<Rat>& v);

}  // namespace fatpoints
