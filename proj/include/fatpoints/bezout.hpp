#pragma once

#include "fatpoints/linsys.hpp"
#include "fatpoints/recipe.hpp"

namespace fatpoints {

// A single forced-component reduction. The justification snapshot refers to
// the residual scheme and degree right before the step, so the whole log is
// independently replayable.
struct CollinearCeilingData {
    int points_on_component = 0;  // support points on the line, s >= 2
    long sum_mults = 0;           // sum of their multiplicities
    int degree = 0;               // degree of the system at the time
};
struct BezoutExcessData {
    long intersection_count = 0;  // sum over points of order * multiplicity
    long degree_product = 0;      // comp degree * system degree
};

struct ReductionStep {
    CurveComponent component;  // multiplicity field unused; forced amount below
    int forced_multiplicity = 0;
    std::variant<CollinearCeilingData, BezoutExcessData> justification;
};

enum class TerminalReason { DegreeExhausted, PointExceedsDegree, ResidualEmptyByCount };

struct CertificateTerminal {
    TerminalReason reason = TerminalReason::PointExceedsDegree;
    // PointExceedsDegree
    std::optional<ProjPoint> witness_point;
    int witness_multiplicity = 0;
    // DegreeExhausted: removing forced * component would push the degree negative
    std::optional<CurveComponent> overflow_component;
    int overflow_forced = 0;
    // ResidualEmptyByCount
    std::vector<std::pair<std::uint64_t, std::size_t>> final_prime_ranks;
    std::size_t final_cols = 0;
    int final_degree = 0;
};

// Replayable proof that [I_Z]_d = {0}: assuming a nonzero curve exists, each
// step's component is forced into it with the stated multiplicity; the
// terminal state is impossible, so no such curve exists.
struct ReductionCertificate {
    FatPointScheme initial;
    int initial_degree = 0;
    std::vector<ReductionStep> steps;
    CertificateTerminal terminal;
};

// ceil((m_1 + ... + m_s - d) / (s - 1)), clamped at 0: the multiplicity with
// which a line through s >= 2 of the scheme's points is forced into every
// nonzero curve of degree d through the scheme. Throws for s < 2.
int mu_fixed_multiplicity(const std::vector<int>& mults, int d);

// Residual scheme after removing k copies of a component: degree drops by
// k * deg(comp); each point multiplicity drops by k * (vanishing order of the
// component there), clamped at 0; points at 0 are dropped.
std::pair<FatPointScheme, int> reduce_by_component(const FatPointScheme& z, int d,
                                                   const CurveComponent& comp, int k);

// If sum over points of (component order * multiplicity) exceeds
// deg(comp) * d, the component is forced once (intersection-count excess).
std::optional<ReductionStep> bezout_fixed_check(const FatPointScheme& z, int d,
                                                const CurveComponent& comp);

struct BezoutOptions {
    unsigned primes = 3;
    std::uint64_t seed = 0x5EEDULL;
    // final exact rank check allowed up to this many matrix columns
    std::size_t final_rank_col_cap = 1200;
    bool allow_final_rank = true;
};

struct CertificateSearch {
    std::optional<ReductionCertificate> certificate;  // nullopt: Inconclusive
    std::vector<ReductionStep> partial_trace;         // reductions found either way
    std::string note;
};

// Greedy forward play of the reduction game: hint components first (in
// order), then lines through at least two support points sorted by forced
// multiplicity, ties broken by normalized coefficients. Deterministic.
CertificateSearch emptiness_certificate(const FatPointScheme& z, int d,
                                        const std::vector<CurveComponent>& hints,
                                        const BezoutOptions& opt = {});

// Full independent replay: every ceiling and product is recomputed from the
// initial scheme, the reductions re-applied, and the terminal predicate
// re-established (with fresh primes for the rank terminal).
bool verify_certificate(const ReductionCertificate& c, const BezoutOptions& opt = {});

std::string certificate_to_json(const ReductionCertificate& c);
ReductionCertificate certificate_from_json(const std::string& text);

// Hint list from a recipe: each distinct component once, in recipe order.
std::vector<CurveComponent> recipe_hints(const CurveRecipe& r);

}  // namespace fatpoints
