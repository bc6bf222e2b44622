#pragma once

#include "fatpoints/linsys.hpp"
#include "fatpoints/table.hpp"

namespace fatpoints {

// Raised when a required alpha value was not found below the degree cap.
struct NotFoundBelowCap : std::runtime_error {
    explicit NotFoundBelowCap(const std::string& what) : std::runtime_error(what) {}
};

struct WcEntry {
    int t = 0;
    std::optional<int> alpha_value;  // nullopt: search passed the cap
    std::optional<Rat> ratio;        // alpha / t, exact
};

// alpha of the uniform scheme tX for t = 1..t_max, with exact ratios.
std::vector<WcEntry> wc_sequence(const std::vector<ProjPoint>& points, int t_max, int degree_cap,
                                 const LinsysOptions& opt = {});

// (alpha(X) + 1) / 2: the proved plane lower bound for every ratio
// alpha(tX)/t and hence for the Waldschmidt constant.
Rat chudnovsky_lower_bound(const std::vector<ProjPoint>& points, const LinsysOptions& opt = {});

struct StabVerdict {
    int m = 0;
    bool pass = false;
    std::string how;
};

struct StabilizationReport {
    int mu = 0, d = 0, m_max = 0;
    std::vector<StabVerdict> verdicts;
    bool all_pass = false;
    std::optional<Rat> implied_value;  // d / mu when every m passed
};

// Checks alpha((m*mu) X) == m*d for m = 1..m_max. A caller-supplied audited
// witness curve of degree d with multiplicity >= mu at every point settles
// the nonemptiness side for free (its m-th power witnesses every m);
// otherwise each nonemptiness is established by exact kernel computation.
// Passing every m is consistent with, not a proof of, the limit value d/mu.
StabilizationReport verify_stabilization(const std::vector<ProjPoint>& points, int mu, int d,
                                         int m_max, bool have_witness,
                                         const LinsysOptions& opt = {});

struct Bracket {
    Rat lower;  // Chudnovsky bound
    Rat upper;  // min over sampled t of alpha(tX)/t; an upper bound by subadditivity
};

// Throws NotFoundBelowCap if any required alpha passes the cap.
Bracket bracket(const std::vector<ProjPoint>& points, const std::vector<int>& t_list,
                int degree_cap, const LinsysOptions& opt = {});

struct ClosedFormResult {
    enum class Kind { Single, Interval, Unknown } kind = Kind::Unknown;
    Rat value;
    RatInterval interval{Rat(0), Rat(0)};
    bool any_k_configuration = false;  // value applies to every k-configuration of the type
    bool degenerate_parameter = false;
    int row_id = 0;
    std::string row_pattern, mechanism;
};

// Matches the type against the catalogue (guards are pairwise disjoint;
// a double match throws). Unknown for uncatalogued types.
ClosedFormResult closed_form(const KConfigType& t);

struct WaldschmidtReport {
    std::vector<WcEntry> seq;
    std::optional<Rat> lower_bound;  // Chudnovsky
    std::optional<Rat> upper_bound;  // min ratio over seq
    ClosedFormResult closed;
    std::optional<StabilizationReport> stabilization;
};

std::string report_to_json(const WaldschmidtReport& r);

}  // namespace fatpoints
