#include "fatpoints/bezout.hpp"

#include <set>

#include <json.hpp>

namespace fatpoints {

int mu_fixed_multiplicity(const std::vector<int>& mults, int d) {
    const int s = static_cast<int>(mults.size());
    if (s < 2) throw std::invalid_argument("mu_fixed_multiplicity: needs at least two points");
    long sum = 0;
    for (int m : mults) sum += m;
    Int mu = ceil_div(Int(sum - d), Int(s - 1));
    if (mu < 0) return 0;
    return static_cast<int>(to_long(mu));
}

std::pair<FatPointScheme, int> reduce_by_component(const FatPointScheme& z, int d,
                                                   const CurveComponent& comp, int k) {
    if (k < 1) throw std::invalid_argument("reduce_by_component: k must be >= 1");
    if (k * comp.degree() > d)
        throw std::invalid_argument("reduce_by_component: removal exceeds the degree");
    std::vector<std::pair<ProjPoint, int>> supports;
    for (const auto& [p, m] : z.supports()) {
        int drop = k * comp.vanishing_order_at(p);
        int left = m > drop ? m - drop : 0;
        if (left > 0) supports.emplace_back(p, left);
    }
    return {FatPointScheme(std::move(supports)), d - k * comp.degree()};
}

std::optional<ReductionStep> bezout_fixed_check(const FatPointScheme& z, int d,
                                                const CurveComponent& comp) {
    if (comp.degree() < 1) throw std::invalid_argument("bezout_fixed_check: degree must be >= 1");
    long count = 0;
    for (const auto& [p, m] : z.supports())
        count += static_cast<long>(comp.vanishing_order_at(p)) * m;
    long product = static_cast<long>(comp.degree()) * d;
    if (count <= product) return std::nullopt;
    ReductionStep step;
    step.component = comp;
    step.component.multiplicity = 1;
    step.forced_multiplicity = 1;
    step.justification = BezoutExcessData{count, product};
    return step;
}

namespace {

// Forced multiplicity of a line via the collinear-ceiling rule; 0 when fewer
// than two support points lie on it.
std::optional<ReductionStep> line_forced_step(const FatPointScheme& z, int d, const Line& l) {
    std::vector<int> mults;
    for (const auto& [p, m] : z.supports())
        if (l.contains(p)) mults.push_back(m);
    if (mults.size() < 2) return std::nullopt;
    int mu = mu_fixed_multiplicity(mults, d);
    if (mu < 1) return std::nullopt;
    long sum = 0;
    for (int m : mults) sum += m;
    ReductionStep step;
    step.component = CurveComponent{l, 1};
    step.forced_multiplicity = mu;
    step.justification = CollinearCeilingData{static_cast<int>(mults.size()), sum, d};
    return step;
}

std::optional<ReductionStep> forced_step_for(const FatPointScheme& z, int d,
                                             const CurveComponent& comp) {
    if (const Line* l = std::get_if<Line>(&comp.geom)) return line_forced_step(z, d, *l);
    return bezout_fixed_check(z, d, comp);
}

std::vector<Line> lines_through_support_pairs(const FatPointScheme& z) {
    std::set<Line> seen;
    const auto& s = z.supports();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) seen.insert(line_through(s[i].first, s[j].first));
    return {seen.begin(), seen.end()};
}

std::optional<std::pair<ProjPoint, int>> point_exceeding_degree(const FatPointScheme& z, int d) {
    for (const auto& [p, m] : z.supports())
        if (m > d) return std::make_pair(p, m);
    return std::nullopt;
}

}  // namespace

CertificateSearch emptiness_certificate(const FatPointScheme& z, int d,
                                        const std::vector<CurveComponent>& hints,
                                        const BezoutOptions& opt) {
    if (d < 0) throw std::invalid_argument("emptiness_certificate: degree must be >= 0");
    CertificateSearch out;
    ReductionCertificate cert;
    cert.initial = z;
    cert.initial_degree = d;

    FatPointScheme cur = z;
    int deg = d;
    while (true) {
        if (auto pe = point_exceeding_degree(cur, deg)) {
            cert.terminal.reason = TerminalReason::PointExceedsDegree;
            cert.terminal.witness_point = pe->first;
            cert.terminal.witness_multiplicity = pe->second;
            out.certificate = std::move(cert);
            out.note = "point multiplicity exceeds the degree";
            return out;
        }
        if (cur.empty()) {
            out.partial_trace = cert.steps;
            out.note = "residual scheme empty: system nonempty, nothing to certify";
            return out;
        }
        std::optional<ReductionStep> pick;
        for (const auto& h : hints) {
            if (auto step = forced_step_for(cur, deg, h)) {
                pick = step;
                break;
            }
        }
        if (!pick) {
            for (const Line& l : lines_through_support_pairs(cur)) {
                auto step = line_forced_step(cur, deg, l);
                if (!step) continue;
                if (!pick || step->forced_multiplicity > pick->forced_multiplicity) pick = step;
            }
        }
        if (!pick) {
            if (opt.allow_final_rank &&
                static_cast<std::size_t>(monomial_count(deg)) <= opt.final_rank_col_cap) {
                auto empt = certify_empty(cur, deg, opt.primes, opt.seed);
                if (empt.empty) {
                    cert.terminal.reason = TerminalReason::ResidualEmptyByCount;
                    cert.terminal.final_prime_ranks = empt.prime_ranks;
                    cert.terminal.final_cols = empt.cols;
                    cert.terminal.final_degree = deg;
                    out.certificate = std::move(cert);
                    out.note = "residual certified empty by exact rank";
                    return out;
                }
                out.partial_trace = cert.steps;
                out.note = "no forced component and the residual system is nonempty";
                return out;
            }
            out.partial_trace = cert.steps;
            out.note = "no forced component; final rank check not allowed at this size";
            return out;
        }
        if (pick->forced_multiplicity * pick->component.degree() > deg) {
            cert.terminal.reason = TerminalReason::DegreeExhausted;
            cert.terminal.overflow_component = pick->component;
            cert.terminal.overflow_forced = pick->forced_multiplicity;
            out.certificate = std::move(cert);
            out.note = "forced removal would exceed the remaining degree";
            return out;
        }
        auto [next, next_deg] = reduce_by_component(cur, deg, pick->component,
                                                    pick->forced_multiplicity);
        cert.steps.push_back(*pick);
        cur = std::move(next);
        deg = next_deg;
    }
}

bool verify_certificate(const ReductionCertificate& c, const BezoutOptions& opt) {
    FatPointScheme cur = c.initial;
    int deg = c.initial_degree;
    if (deg < 0) return false;
    for (const auto& step : c.steps) {
        if (step.forced_multiplicity < 1) return false;
        // Recompute the justification from the current state.
        if (const auto* lj = std::get_if<CollinearCeilingData>(&step.justification)) {
            const Line* l = std::get_if<Line>(&step.component.geom);
            if (!l) return false;
            std::vector<int> mults;
            long sum = 0;
            for (const auto& [p, m] : cur.supports()) {
                if (l->contains(p)) {
                    mults.push_back(m);
                    sum += m;
                }
            }
            if (static_cast<int>(mults.size()) != lj->points_on_component) return false;
            if (sum != lj->sum_mults || deg != lj->degree) return false;
            if (mults.size() < 2) return false;
            if (mu_fixed_multiplicity(mults, deg) != step.forced_multiplicity) return false;
        } else {
            const auto& bj = std::get<BezoutExcessData>(step.justification);
            long count = 0;
            for (const auto& [p, m] : cur.supports())
                count += static_cast<long>(step.component.vanishing_order_at(p)) * m;
            if (count != bj.intersection_count) return false;
            if (static_cast<long>(step.component.degree()) * deg != bj.degree_product) return false;
            if (count <= bj.degree_product) return false;
            if (step.forced_multiplicity != 1) return false;
        }
        if (step.forced_multiplicity * step.component.degree() > deg) return false;
        auto [next, next_deg] =
            reduce_by_component(cur, deg, step.component, step.forced_multiplicity);
        cur = std::move(next);
        deg = next_deg;
        if (deg < 0) return false;
    }
    switch (c.terminal.reason) {
        case TerminalReason::PointExceedsDegree: {
            if (!c.terminal.witness_point) return false;
            for (const auto& [p, m] : cur.supports())
                if (p == *c.terminal.witness_point)
                    return m == c.terminal.witness_multiplicity && m > deg;
            return false;
        }
        case TerminalReason::DegreeExhausted: {
            if (!c.terminal.overflow_component) return false;
            auto step = forced_step_for(cur, deg, *c.terminal.overflow_component);
            if (!step) return false;
            if (step->forced_multiplicity != c.terminal.overflow_forced) return false;
            return step->forced_multiplicity * step->component.degree() > deg;
        }
        case TerminalReason::ResidualEmptyByCount: {
            if (c.terminal.final_degree != deg) return false;
            // Independent recomputation with a different prime stream.
            auto empt = certify_empty(cur, deg, opt.primes, opt.seed ^ 0xA5A5A5A5ULL);
            return empt.empty;
        }
    }
    return false;
}

namespace {

nlohmann::json component_to_json(const CurveComponent& c) {
    nlohmann::json j;
    if (const Line* l = std::get_if<Line>(&c.geom)) {
        j["kind"] = "line";
        nlohmann::json coeffs = nlohmann::json::array();
        for (int i = 0; i < 3; ++i) coeffs.push_back(rat_to_string((*l)[i]));
        j["coeffs"] = coeffs;
    } else {
        const HomPoly& h = std::get<HomPoly>(c.geom);
        j["kind"] = "curve";
        j["degree"] = h.degree();
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Int& x : h.coeffs()) coeffs.push_back(x.get_str());
        j["coeffs"] = coeffs;
    }
    return j;
}

CurveComponent component_from_json(const nlohmann::json& j) {
    CurveComponent c;
    c.multiplicity = 1;
    if (j.at("kind") == "line") {
        auto& co = j.at("coeffs");
        c.geom = Line(rat_from_string(co.at(0).get<std::string>()),
                      rat_from_string(co.at(1).get<std::string>()),
                      rat_from_string(co.at(2).get<std::string>()));
    } else {
        int d = j.at("degree").get<int>();
        std::vector<Int> coeffs;
        for (const auto& x : j.at("coeffs")) coeffs.emplace_back(x.get<std::string>());
        c.geom = HomPoly(d, std::move(coeffs));
    }
    return c;
}

const char* reason_name(TerminalReason r) {
    switch (r) {
        case TerminalReason::DegreeExhausted: return "degree_exhausted";
        case TerminalReason::PointExceedsDegree: return "point_exceeds_degree";
        case TerminalReason::ResidualEmptyByCount: return "residual_empty_by_count";
    }
    return "?";
}

TerminalReason reason_from_name(const std::string& s) {
    if (s == "degree_exhausted") return TerminalReason::DegreeExhausted;
    if (s == "point_exceeds_degree") return TerminalReason::PointExceedsDegree;
    if (s == "residual_empty_by_count") return TerminalReason::ResidualEmptyByCount;
    throw std::invalid_argument("unknown terminal reason: " + s);
}

}  // namespace

std::string certificate_to_json(const ReductionCertificate& c) {
    nlohmann::json j;
    j["initial"] = {{"scheme", nlohmann::json::parse(scheme_to_json(c.initial))},
                    {"degree", c.initial_degree}};
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : c.steps) {
        nlohmann::json js;
        js["component"] = component_to_json(s.component);
        js["forced_multiplicity"] = s.forced_multiplicity;
        if (const auto* lj = std::get_if<CollinearCeilingData>(&s.justification)) {
            js["justification"] = {{"kind", "collinear_ceiling"},
                                   {"points_on_component", lj->points_on_component},
                                   {"sum_mults", lj->sum_mults},
                                   {"degree", lj->degree}};
        } else {
            const auto& bj = std::get<BezoutExcessData>(s.justification);
            js["justification"] = {{"kind", "bezout_excess"},
                                   {"intersection_count", bj.intersection_count},
                                   {"degree_product", bj.degree_product}};
        }
        steps.push_back(js);
    }
    j["steps"] = steps;
    nlohmann::json jt;
    jt["reason"] = reason_name(c.terminal.reason);
    switch (c.terminal.reason) {
        case TerminalReason::PointExceedsDegree: {
            nlohmann::json coords = nlohmann::json::array();
            for (int i = 0; i < 3; ++i) coords.push_back(rat_to_string((*c.terminal.witness_point)[i]));
            jt["point"] = coords;
            jt["multiplicity"] = c.terminal.witness_multiplicity;
            break;
        }
        case TerminalReason::DegreeExhausted:
            jt["component"] = component_to_json(*c.terminal.overflow_component);
            jt["forced_multiplicity"] = c.terminal.overflow_forced;
            break;
        case TerminalReason::ResidualEmptyByCount: {
            jt["final_degree"] = c.terminal.final_degree;
            jt["columns"] = c.terminal.final_cols;
            nlohmann::json pr = nlohmann::json::array();
            for (auto& [p, r] : c.terminal.final_prime_ranks)
                pr.push_back({{"prime", p}, {"rank", r}});
            jt["prime_ranks"] = pr;
            break;
        }
    }
    j["terminal"] = jt;
    return j.dump(2);
}

ReductionCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ReductionCertificate c;
    c.initial = scheme_from_json(j.at("initial").at("scheme").dump());
    c.initial_degree = j.at("initial").at("degree").get<int>();
    for (const auto& js : j.at("steps")) {
        ReductionStep s;
        s.component = component_from_json(js.at("component"));
        s.forced_multiplicity = js.at("forced_multiplicity").get<int>();
        const auto& jj = js.at("justification");
        if (jj.at("kind") == "collinear_ceiling") {
            s.justification = CollinearCeilingData{jj.at("points_on_component").get<int>(),
                                                   jj.at("sum_mults").get<long>(),
                                                   jj.at("degree").get<int>()};
        } else {
            s.justification = BezoutExcessData{jj.at("intersection_count").get<long>(),
                                               jj.at("degree_product").get<long>()};
        }
        c.steps.push_back(std::move(s));
    }
    const auto& jt = j.at("terminal");
    c.terminal.reason = reason_from_name(jt.at("reason").get<std::string>());
    switch (c.terminal.reason) {
        case TerminalReason::PointExceedsDegree: {
            const auto& co = jt.at("point");
            c.terminal.witness_point = ProjPoint(rat_from_string(co.at(0).get<std::string>()),
                                                 rat_from_string(co.at(1).get<std::string>()),
                                                 rat_from_string(co.at(2).get<std::string>()));
            c.terminal.witness_multiplicity = jt.at("multiplicity").get<int>();
            break;
        }
        case TerminalReason::DegreeExhausted:
            c.terminal.overflow_component = component_from_json(jt.at("component"));
            c.terminal.overflow_forced = jt.at("forced_multiplicity").get<int>();
            break;
        case TerminalReason::ResidualEmptyByCount:
            c.terminal.final_degree = jt.at("final_degree").get<int>();
            c.terminal.final_cols = jt.at("columns").get<std::size_t>();
            for (const auto& pr : jt.at("prime_ranks"))
                c.terminal.final_prime_ranks.emplace_back(pr.at("prime").get<std::uint64_t>(),
                                                          pr.at("rank").get<std::size_t>());
            break;
    }
    return c;
}

std::vector<CurveComponent> recipe_hints(const CurveRecipe& r) {
    std::vector<CurveComponent> hints;
    for (const auto& c : r.components) {
        CurveComponent h = c;
        h.multiplicity = 1;
        bool dup = false;
        for (const auto& e : hints) {
            if (e.geom.index() != h.geom.index()) continue;
            if (const Line* l = std::get_if<Line>(&h.geom)) {
                if (*l == std::get<Line>(e.geom)) dup = true;
            } else if (std::get<HomPoly>(h.geom) == std::get<HomPoly>(e.geom)) {
                dup = true;
            }
        }
        if (!dup) hints.push_back(std::move(h));
    }
    return hints;
}

}  // namespace fatpoints
