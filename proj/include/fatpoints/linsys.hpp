#pragma once

#include "fatpoints/elimination.hpp"
#include "fatpoints/poly.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// The linear system [I_Z]_d of degree-d plane curves through the fat-point
// scheme Z. Columns of the interpolation matrix are the degree-d monomials
// in graded-lex order; rows are, per support point (P, m), the C(m+1, 2)
// local Taylor coefficients of order < m after an exact translation of P to
// the origin of its chart. No factorials are ever divided by, so the same
// construction is valid over the rationals and over every prime field used
// by the modular fast path.
struct LinearSystemQuery {
    FatPointScheme scheme;
    int degree = 0;
};

struct DimResult {
    long dimension = 0;
    long expected_dimension = 0;  // C(d+2,2) - sum C(m_i+1,2); may be negative
    long superabundance = 0;      // dimension - max(0, expected_dimension)
    std::string confirmation;     // how the rank was established
};

struct LinsysOptions {
    enum class RankMode { Auto, Rational, Modular };
    RankMode mode = RankMode::Auto;
    unsigned primes = 3;  // primes consulted for emptiness certification
    std::uint64_t seed = 0x5EEDULL;
    // Auto policy: rational fraction-free elimination up to this many
    // columns, modular rank plus a rationally verified kernel witness above.
    std::size_t rational_col_cap = 400;
};

RatMatrix conditions_matrix_rational(const FatPointScheme& z, int degree);
// Fails (nullopt) only if the prime divides a coordinate denominator.
std::optional<Matrix<std::uint64_t>> conditions_matrix_mod(const FatPointScheme& z, int degree,
                                                           const PrimeField& field);

DimResult dim_linear_system(const LinearSystemQuery& q, const LinsysOptions& opt = {});

struct EmptinessCheck {
    bool empty = false;
    std::vector<std::pair<std::uint64_t, std::size_t>> prime_ranks;
    std::size_t cols = 0;
    std::string how;
};

// Certified emptiness: a single prime with full column rank already proves
// dim over Q is zero (modular rank never exceeds rational rank); several
// primes are consulted and recorded.
EmptinessCheck certify_empty(const FatPointScheme& z, int degree, unsigned primes = 3,
                             std::uint64_t seed = 0x5EEDULL);

// Least degree with a nonzero curve through the scheme; nullopt when the
// search passed degree_cap. The scan starts at the largest multiplicity: a
// degree-d curve has point multiplicity at most d.
struct AlphaResult {
    std::optional<int> alpha;
    int degree_cap = 0;
    std::string how;
};
AlphaResult alpha(const FatPointScheme& z, int degree_cap, const LinsysOptions& opt = {});
AlphaResult alpha_symbolic(const std::vector<ProjPoint>& points, int t, int degree_cap,
                           const LinsysOptions& opt = {});

// Two-sided pin of alpha == expected: dimension in degree expected-1 is
// certified zero, and nonemptiness in degree expected is either inherited
// from an audited witness curve supplied by the caller or established by an
// exact kernel computation. Dimension is monotone in the degree, so the two
// checks pin the value.
struct AlphaPin {
    bool empty_below = false;
    bool nonempty_at = false;
    std::string how;
    bool ok() const { return empty_below && nonempty_at; }
};
AlphaPin check_alpha_value(const FatPointScheme& z, int expected_alpha, bool caller_has_witness,
                           const LinsysOptions& opt = {});

// Canonical-form basis of [I_Z]_d; every element is re-verified to vanish to
// the required orders at every support point.
std::vector<HomPoly> system_basis(const LinearSystemQuery& q);

// Candidate lines whose defining form divides c exactly.
std::vector<Line> has_linear_component(const HomPoly& c, const std::vector<Line>& candidates);

}  // namespace fatpoints
