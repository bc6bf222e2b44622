#include "fatpoints/linsys.hpp"

#include <sstream>

namespace fatpoints {

namespace {

struct ConditionRow {
    PointChart chart;
    int j, k;  // Taylor order pair, j + k < multiplicity
};

std::vector<ConditionRow> condition_rows(const FatPointScheme& z) {
    std::vector<ConditionRow> rows;
    rows.reserve(z.condition_count());
    for (const auto& [p, m] : z.supports()) {
        PointChart pc = point_chart(p);
        for (int t = 0; t < m; ++t)
            for (int j = t; j >= 0; --j) rows.push_back({pc, j, t - j});
    }
    return rows;
}

}  // namespace

RatMatrix conditions_matrix_rational(const FatPointScheme& z, int degree) {
    const int cols = monomial_count(degree);
    auto rows = condition_rows(z);
    auto bin = binomial_table(degree);
    RatMatrix m(rows.size(), cols);
#pragma omp parallel for schedule(dynamic, 4)
    for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
        const ConditionRow& row = rows[r];
        std::vector<Rat> pu(degree + 1), pv(degree + 1);
        pu[0] = 1;
        pv[0] = 1;
        for (int e = 1; e <= degree; ++e) {
            pu[e] = pu[e - 1] * row.chart.u;
            pv[e] = pv[e - 1] * row.chart.v;
        }
        for (int idx = 0; idx < cols; ++idx) {
            auto e = monomial_exponents(degree, idx);
            int au = e[row.chart.u_slot], av = e[row.chart.v_slot];
            if (au < row.j || av < row.k) continue;  // stays zero
            m.at(r, idx) = Rat(bin[au][row.j] * bin[av][row.k]) * pu[au - row.j] * pv[av - row.k];
        }
    }
    return m;
}

std::optional<Matrix<std::uint64_t>> conditions_matrix_mod(const FatPointScheme& z, int degree,
                                                           const PrimeField& f) {
    const int cols = monomial_count(degree);
    auto rows = condition_rows(z);
    auto bin = binomial_table(degree);
    std::vector<std::vector<std::uint64_t>> bin_mod(degree + 1);
    for (int i = 0; i <= degree; ++i) {
        bin_mod[i].resize(i + 1);
        for (int j = 0; j <= i; ++j) bin_mod[i][j] = f.from_int(bin[i][j]);
    }
    Matrix<std::uint64_t> m(rows.size(), cols);
    bool fail = false;
#pragma omp parallel for schedule(dynamic, 4) reduction(|| : fail)
    for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
        const ConditionRow& row = rows[r];
        auto u0 = f.from_rat(row.chart.u);
        auto v0 = f.from_rat(row.chart.v);
        if (!u0 || !v0) {
            fail = true;
            continue;
        }
        std::vector<std::uint64_t> pu(degree + 1), pv(degree + 1);
        pu[0] = 1;
        pv[0] = 1;
        for (int e = 1; e <= degree; ++e) {
            pu[e] = f.mul(pu[e - 1], *u0);
            pv[e] = f.mul(pv[e - 1], *v0);
        }
        for (int idx = 0; idx < cols; ++idx) {
            auto e = monomial_exponents(degree, idx);
            int au = e[row.chart.u_slot], av = e[row.chart.v_slot];
            if (au < row.j || av < row.k) continue;
            m.at(r, idx) =
                f.mul(f.mul(bin_mod[au][row.j], bin_mod[av][row.k]), f.mul(pu[au - row.j], pv[av - row.k]));
        }
    }
    if (fail) return std::nullopt;
    return m;
}

EmptinessCheck certify_empty(const FatPointScheme& z, int degree, unsigned primes,
                             std::uint64_t seed) {
    EmptinessCheck out;
    out.cols = monomial_count(degree);
    unsigned index = 0;
    while (out.prime_ranks.size() < primes) {
        if (index > primes + 64) throw std::runtime_error("certify_empty: prime pool exhausted");
        std::uint64_t p = sample_prime(seed, index++);
        PrimeField f(p);
        auto m = conditions_matrix_mod(z, degree, f);
        if (!m) continue;  // prime divides a coordinate denominator
        std::size_t r = rank_mod(f, std::move(*m));
        out.prime_ranks.emplace_back(p, r);
        if (r == out.cols) out.empty = true;
    }
    std::ostringstream os;
    os << "modular ranks";
    for (auto& [p, r] : out.prime_ranks) os << " " << r << "(mod " << p << ")";
    os << " of " << out.cols << " cols";
    out.how = os.str();
    return out;
}

DimResult dim_linear_system(const LinearSystemQuery& q, const LinsysOptions& opt) {
    DimResult res;
    const long cols = monomial_count(q.degree);
    res.expected_dimension = cols - q.scheme.condition_count();

    const bool rational_path =
        opt.mode == LinsysOptions::RankMode::Rational ||
        (opt.mode == LinsysOptions::RankMode::Auto &&
         static_cast<std::size_t>(cols) <= opt.rational_col_cap);

    if (rational_path) {
        std::size_t r = rank_rational(conditions_matrix_rational(q.scheme, q.degree));
        res.dimension = cols - static_cast<long>(r);
        res.confirmation = "rational fraction-free elimination";
    } else {
        auto empt = certify_empty(q.scheme, q.degree, std::max(opt.primes, 3u), opt.seed);
        std::size_t best = 0;
        for (auto& [p, r] : empt.prime_ranks) best = std::max(best, r);
        res.dimension = cols - static_cast<long>(best);
        if (empt.empty) {
            res.dimension = 0;
            res.confirmation = "empty: " + empt.how;
        } else {
            // dimension > 0 must be witnessed rationally, not sampled
            auto w = kernel_witness(conditions_matrix_rational(q.scheme, q.degree), 48, opt.seed);
            if (w) {
                res.confirmation = "modular rank + rationally verified kernel witness";
            } else {
                std::size_t r = rank_rational(conditions_matrix_rational(q.scheme, q.degree));
                res.dimension = cols - static_cast<long>(r);
                res.confirmation = "rational fraction-free elimination (witness fallback)";
            }
        }
    }
    res.superabundance = res.dimension - std::max(0L, res.expected_dimension);
    return res;
}

namespace {

// Nonemptiness of [I_Z]_d established exactly: rational rank for small
// matrices, verified kernel witness for large ones.
bool confirm_nonempty(const FatPointScheme& z, int degree, const LinsysOptions& opt,
                      std::string& how) {
    const long cols = monomial_count(degree);
    if (static_cast<std::size_t>(cols) <= opt.rational_col_cap ||
        opt.mode == LinsysOptions::RankMode::Rational) {
        std::size_t r = rank_rational(conditions_matrix_rational(z, degree));
        how = "rational rank";
        return static_cast<long>(r) < cols;
    }
    auto w = kernel_witness(conditions_matrix_rational(z, degree), 48, opt.seed);
    if (w) {
        how = "verified kernel witness";
        return true;
    }
    std::size_t r = rank_rational(conditions_matrix_rational(z, degree));
    how = "rational rank (witness fallback)";
    return static_cast<long>(r) < cols;
}

}  // namespace

AlphaResult alpha(const FatPointScheme& z, int degree_cap, const LinsysOptions& opt) {
    AlphaResult out;
    out.degree_cap = degree_cap;
    if (z.empty()) {
        out.alpha = 0;
        out.how = "empty scheme: constants";
        return out;
    }
    for (int d = z.max_multiplicity(); d <= degree_cap; ++d) {
        auto empt = certify_empty(z, d, opt.primes, opt.seed);
        if (empt.empty) continue;
        std::string how;
        if (confirm_nonempty(z, d, opt, how)) {
            out.alpha = d;
            out.how = "first nonzero degree confirmed by " + how;
            return out;
        }
        // All sampled primes under-reported the rank; rational arithmetic
        // ruled the degree empty, so the scan moves on.
    }
    out.how = "no nonzero curve up to the degree cap";
    return out;
}

AlphaResult alpha_symbolic(const std::vector<ProjPoint>& points, int t, int degree_cap,
                           const LinsysOptions& opt) {
    if (t < 1) throw std::invalid_argument("alpha_symbolic: t must be >= 1");
    return alpha(FatPointScheme::uniform(points, t), degree_cap, opt);
}

AlphaPin check_alpha_value(const FatPointScheme& z, int expected_alpha, bool caller_has_witness,
                           const LinsysOptions& opt) {
    AlphaPin pin;
    std::ostringstream how;
    if (expected_alpha == 0) {
        pin.empty_below = true;
        how << "degree -1 vacuous; ";
    } else {
        auto empt = certify_empty(z, expected_alpha - 1, opt.primes, opt.seed);
        pin.empty_below = empt.empty;
        how << "below: " << empt.how << "; ";
    }
    if (caller_has_witness) {
        pin.nonempty_at = true;
        how << "at: audited witness curve";
    } else {
        std::string sub;
        pin.nonempty_at = confirm_nonempty(z, expected_alpha, opt, sub);
        how << "at: " << sub;
    }
    pin.how = how.str();
    return pin;
}

std::vector<HomPoly> system_basis(const LinearSystemQuery& q) {
    auto kb = kernel_basis_rational(conditions_matrix_rational(q.scheme, q.degree));
    std::vector<HomPoly> basis;
    basis.reserve(kb.size());
    for (const auto& v : kb) {
        std::vector<Int> z(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].get_den() != 1) throw std::logic_error("system_basis: non-integer kernel vector");
            z[i] = v[i].get_num();
        }
        HomPoly h(q.degree, std::move(z));
        for (const auto& [p, m] : q.scheme.supports()) {
            if (h.vanishing_order(p) < m)
                throw std::logic_error("system_basis: basis element fails a vanishing condition");
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

std::vector<Line> has_linear_component(const HomPoly& c, const std::vector<Line>& candidates) {
    if (c.is_zero()) throw std::invalid_argument("has_linear_component: zero polynomial");
    std::vector<Line> out;
    for (const auto& l : candidates)
        if (c.divide_by_line(l)) out.push_back(l);
    return out;
}

}  // namespace fatpoints
