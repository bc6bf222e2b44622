#include "fatpoints/waldschmidt.hpp"

#include <json.hpp>

namespace fatpoints {

std::vector<WcEntry> wc_sequence(const std::vector<ProjPoint>& points, int t_max, int degree_cap,
                                 const LinsysOptions& opt) {
    if (t_max < 1) throw std::invalid_argument("wc_sequence: t_max must be >= 1");
    std::vector<WcEntry> seq;
    for (int t = 1; t <= t_max; ++t) {
        WcEntry e;
        e.t = t;
        auto a = alpha_symbolic(points, t, degree_cap, opt);
        if (a.alpha) {
            e.alpha_value = *a.alpha;
            e.ratio = make_rat(*a.alpha, t);
        }
        seq.push_back(e);
    }
    return seq;
}

Rat chudnovsky_lower_bound(const std::vector<ProjPoint>& points, const LinsysOptions& opt) {
    if (points.empty()) throw std::invalid_argument("chudnovsky_lower_bound: empty point set");
    // alpha(X) <= ceil(n/2) + 1: pair points off with lines.
    int cap = static_cast<int>(points.size()) / 2 + 2;
    auto a = alpha(FatPointScheme::uniform(points, 1), cap, opt);
    if (!a.alpha) throw std::logic_error("chudnovsky_lower_bound: alpha(X) not found below cap");
    return make_rat(*a.alpha + 1, 2);
}

StabilizationReport verify_stabilization(const std::vector<ProjPoint>& points, int mu, int d,
                                         int m_max, bool have_witness, const LinsysOptions& opt) {
    if (mu < 1 || d < 1 || m_max < 1)
        throw std::invalid_argument("verify_stabilization: mu, d, m_max must be >= 1");
    StabilizationReport rep;
    rep.mu = mu;
    rep.d = d;
    rep.m_max = m_max;
    rep.all_pass = true;
    for (int m = 1; m <= m_max; ++m) {
        FatPointScheme z = FatPointScheme::uniform(points, m * mu);
        AlphaPin pin = check_alpha_value(z, m * d, have_witness, opt);
        rep.verdicts.push_back({m, pin.ok(), pin.how});
        rep.all_pass = rep.all_pass && pin.ok();
    }
    if (rep.all_pass) rep.implied_value = make_rat(d, mu);
    return rep;
}

Bracket bracket(const std::vector<ProjPoint>& points, const std::vector<int>& t_list,
                int degree_cap, const LinsysOptions& opt) {
    if (t_list.empty()) throw std::invalid_argument("bracket: empty t list");
    Bracket b{chudnovsky_lower_bound(points, opt), Rat(0)};
    bool first = true;
    for (int t : t_list) {
        auto a = alpha_symbolic(points, t, degree_cap, opt);
        if (!a.alpha)
            throw NotFoundBelowCap("bracket: alpha(" + std::to_string(t) +
                                   "X) not found below degree cap " + std::to_string(degree_cap));
        Rat ratio = make_rat(*a.alpha, t);
        if (first || ratio < b.upper) b.upper = ratio;
        first = false;
    }
    return b;
}

ClosedFormResult closed_form(const KConfigType& t) {
    ClosedFormResult res;
    const TableRow* row = match_table_row(t);
    if (!row) return res;  // Unknown
    res.row_id = row->id;
    res.row_pattern = row->pattern;
    res.mechanism = row->mechanism;
    res.any_k_configuration = row->any_k_configuration;
    res.degenerate_parameter = row->degenerate_parameter && row->degenerate_parameter(t);
    if (row->is_interval) {
        res.kind = ClosedFormResult::Kind::Interval;
        res.interval = row->interval(t);
    } else {
        res.kind = ClosedFormResult::Kind::Single;
        res.value = row->value(t);
    }
    return res;
}

std::string report_to_json(const WaldschmidtReport& r) {
    nlohmann::json j;
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& e : r.seq) {
        nlohmann::json je;
        je["t"] = e.t;
        if (e.alpha_value) {
            je["alpha"] = *e.alpha_value;
            je["ratio"] = rat_to_string(*e.ratio);
            je["approx"] = mpq_get_d(e.ratio->get_mpq_t());  // non-authoritative decimal
        } else {
            je["alpha"] = nullptr;
            je["note"] = "not found below degree cap";
        }
        seq.push_back(je);
    }
    j["sequence"] = seq;
    if (r.lower_bound) j["lower_bound"] = rat_to_string(*r.lower_bound);
    if (r.upper_bound) j["upper_bound"] = rat_to_string(*r.upper_bound);
    switch (r.closed.kind) {
        case ClosedFormResult::Kind::Single:
            j["closed_form"] = {{"value", rat_to_string(r.closed.value)},
                                {"row", r.closed.row_pattern},
                                {"mechanism", r.closed.mechanism},
                                {"any_k_configuration", r.closed.any_k_configuration},
                                {"degenerate_parameter", r.closed.degenerate_parameter}};
            break;
        case ClosedFormResult::Kind::Interval:
            j["closed_form"] = {{"interval",
                                 {rat_to_string(r.closed.interval.lo), rat_to_string(r.closed.interval.hi)}},
                                {"row", r.closed.row_pattern},
                                {"mechanism", r.closed.mechanism}};
            break;
        case ClosedFormResult::Kind::Unknown:
            j["closed_form"] = nullptr;
            break;
    }
    if (r.stabilization) {
        nlohmann::json js;
        js["mu"] = r.stabilization->mu;
        js["d"] = r.stabilization->d;
        js["m_max"] = r.stabilization->m_max;
        nlohmann::json verdicts = nlohmann::json::array();
        for (const auto& v : r.stabilization->verdicts)
            verdicts.push_back({{"m", v.m}, {"pass", v.pass}, {"how", v.how}});
        js["verdicts"] = verdicts;
        js["all_pass"] = r.stabilization->all_pass;
        if (r.stabilization->implied_value)
            js["implied_value"] = rat_to_string(*r.stabilization->implied_value);
        j["stabilization"] = js;
    }
    return j.dump(2);
}

}  // namespace fatpoints
