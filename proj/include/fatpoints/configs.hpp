#pragma once

#include <map>
#include <mutex>

#include "fatpoints/bezout.hpp"
#include "fatpoints/waldschmidt.hpp"

namespace fatpoints {

// Append-only JSON-lines cache of verified alpha values keyed by the scheme
// content hash and the symbolic power t: {"hash": hex, "t": int, "alpha": int}.
// Hits are trusted as-is; only verified values are ever stored. Appends are
// line-atomic, so concurrent writers at worst duplicate identical lines
// (values are deterministic), and the last line wins on load.
class AlphaCache {
public:
    AlphaCache() = default;  // in-memory only
    explicit AlphaCache(std::string path);

    std::optional<int> lookup(std::uint64_t hash, int t) const;
    void store(std::uint64_t hash, int t, int alpha_value);

    const std::string& path() const { return path_; }
    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    std::string path_;
    mutable std::mutex mu_;
    mutable std::size_t hits_ = 0, misses_ = 0;
    std::map<std::pair<std::uint64_t, int>, int> map_;
};

enum class CheckStatus { Pass, Fail, Skipped, Inconclusive };
const char* check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

struct VerificationOutcome {
    KConfigType type;
    bool uncatalogued = false;
    int row_id = 0;
    std::string row_pattern;
    bool degenerate_parameter = false;
    ClosedFormResult closed;
    std::vector<CheckResult> checks;
    // certificate id -> serialized certificate JSON
    std::vector<std::pair<std::string, std::string>> certificates;
    double wall_seconds = 0;  // kept out of the deterministic payload

    bool any_failed() const;
};

struct VerifyTypeOptions {
    int m_max = 2;
    double budget_seconds = 10.0;
    bool long_run = false;
    unsigned primes = 3;
    std::uint64_t seed = 0x5EEDULL;
    AlphaCache* cache = nullptr;
};

// Runs the full per-type verification: recipe audit, closed form vs (mu, d),
// stabilization up to m_max, emptiness certificates at the degrees m*d - 1,
// and the bracket/Chudnovsky cross-checks. Checks that would exceed the time
// budget are marked Skipped, never Failed.
VerificationOutcome verify_type(const KConfigType& t, const VerifyTypeOptions& opt = {});

struct TableReport {
    int b_max = 0, c_max = 0, m_max = 0;
    bool long_run = false;
    std::vector<VerificationOutcome> outcomes;
    std::vector<CheckResult> pair_checks;  // equal-value step checks between (1,b,c) and (1,b,c+1)
    double wall_seconds = 0;

    bool any_failed() const;
};

// Enumerates every type with middle entry <= b_max and last entry <= c_max
// (lengths 1..3), verifies each, and runs the step-function comparisons for
// c even <= 2b-4.
TableReport reproduce_table(int b_max, int c_max, int m_max, const VerifyTypeOptions& base = {});

std::string table_report_to_json(const TableReport& r, bool include_timing = true);
std::string table_report_to_markdown(const TableReport& r);

}  // namespace fatpoints
