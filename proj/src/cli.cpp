#include "fatpoints/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatpoints/configs.hpp"

namespace fatpoints {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string default_cache_path() {
    const char* env = std::getenv("FATPOINT_CACHE");
    return env ? std::string(env) : std::string();
}

struct SchemeInput {
    std::string scheme_path;
    std::string type_str;

    bool has_type() const { return !type_str.empty(); }
    KConfigType type() const { return KConfigType::parse(type_str); }
};

// Scheme for an alpha-style query: standard configuration of the type, or
// the file's scheme, scaled by t.
FatPointScheme resolve_scheme(const SchemeInput& in, int t, std::uint64_t* base_hash) {
    FatPointScheme base;
    if (in.has_type()) {
        base = FatPointScheme::uniform(standard_k_config(in.type()), 1);
    } else if (!in.scheme_path.empty()) {
        base = scheme_from_json(read_file(in.scheme_path));
    } else {
        throw std::invalid_argument("provide either --type or --scheme");
    }
    if (base_hash) *base_hash = base.content_hash();
    return t == 1 ? base : base.scaled(t);
}

nlohmann::json dims_json(const DimResult& r) {
    return {{"dimension", r.dimension},
            {"expected_dimension", r.expected_dimension},
            {"superabundance", r.superabundance},
            {"confirmation", r.confirmation}};
}

void emit(std::ostream& out, const std::string& format, const nlohmann::json& j) {
    if (format == "json") {
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        // one header line and one value line from the flattened object
        auto flat = j.flatten();
        std::string keys, vals;
        for (auto it = flat.begin(); it != flat.end(); ++it) {
            if (!keys.empty()) {
                keys += ",";
                vals += ",";
            }
            keys += it.key().substr(1);  // strip leading '/'
            vals += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        }
        out << keys << "\n" << vals << "\n";
    } else {  // markdown
        out << "```json\n" << j.dump(2) << "\n```\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for fat-point linear systems, Waldschmidt brackets and "
                 "emptiness certificates of standard k-configurations"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    unsigned primes = 3;
    app.add_option("--primes", primes, "primes consulted for modular certification");
    std::uint64_t seed = 0x5EEDULL;
    app.add_option("--seed", seed, "seed of the deterministic prime stream");
    std::string cache_path = default_cache_path();
    app.add_option("--cache", cache_path, "alpha cache file (JSON lines); FATPOINT_CACHE overrides");

    SchemeInput input;
    int degree = 0, t = 1, t_max = 3, m_max = 2;
    int degree_cap = -1;

    // allow the global options (--format, --cache, ...) after a subcommand
    app.fallthrough();

    auto* dims = app.add_subcommand("dims", "dimension of the linear system [I_Z]_d");
    dims->fallthrough();
    dims->add_option("--scheme", input.scheme_path, "scheme JSON file");
    dims->add_option("--type", input.type_str, "standard k-configuration type, e.g. 1,5,6");
    dims->add_option("--d", degree, "degree of the system")->required();
    dims->add_option("--t", t, "uniform multiplicity applied to the scheme");
    bool want_basis = false;
    dims->add_flag("--basis", want_basis,
                   "also emit a kernel basis as integer coefficient lists, graded-lex x0>x1>x2");

    auto* alpha_cmd = app.add_subcommand("alpha", "initial degree of the t-th symbolic power");
    alpha_cmd->fallthrough();
    alpha_cmd->add_option("--scheme", input.scheme_path, "scheme JSON file");
    alpha_cmd->add_option("--type", input.type_str, "standard k-configuration type");
    alpha_cmd->add_option("--t", t, "symbolic power");
    alpha_cmd->add_option("--degree-cap", degree_cap, "search cap (default: recipe-informed)");

    auto* wc = app.add_subcommand("waldschmidt", "alpha sequence, bracket, closed form");
    wc->fallthrough();
    wc->add_option("--scheme", input.scheme_path, "scheme JSON file (multiplicities must be 1)");
    wc->add_option("--type", input.type_str, "standard k-configuration type");
    wc->add_option("--t-max", t_max, "largest symbolic power in the sequence");
    wc->add_option("--m-max", m_max, "stabilization checks up to this m");
    wc->add_option("--degree-cap", degree_cap, "alpha search cap");

    auto* cert = app.add_subcommand("certificate", "emptiness certificate search / replay");
    cert->fallthrough();
    cert->add_option("--type", input.type_str, "standard k-configuration type");
    int cert_mu = 0, cert_d = 0, cert_m = 1;
    cert->add_option("--mu", cert_mu, "uniform multiplicity scale");
    cert->add_option("--d", cert_d, "stabilization degree; the search runs at m*d-1");
    cert->add_option("--m", cert_m, "multiple m");
    std::string cert_out, verify_only;
    cert->add_option("--out", cert_out, "write the certificate JSON here");
    cert->add_option("--verify-only", verify_only, "replay and verify an existing certificate");

    auto* table = app.add_subcommand("table", "reproduce the catalogue at desk scale");
    table->fallthrough();
    int b_max = 5, c_max = 12;
    double budget = 10.0;
    bool long_run = false;
    std::string out_dir = ".";
    table->add_option("--b-max", b_max, "largest middle entry");
    table->add_option("--c-max", c_max, "largest last entry");
    table->add_option("--m-max", m_max, "stabilization checks up to this m");
    table->add_option("--budget", budget, "per-type time budget in seconds");
    table->add_flag("--long-run", long_run, "include the degree-71 endpoint check for (2,3,5)");
    table->add_option("--out-dir", out_dir, "directory for the markdown and JSON reports");

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    LinsysOptions lopt;
    lopt.primes = primes;
    lopt.seed = seed;

    try {
        if (dims->parsed()) {
            FatPointScheme z = resolve_scheme(input, t, nullptr);
            DimResult r = dim_linear_system({z, degree}, lopt);
            nlohmann::json j = dims_json(r);
            if (want_basis) {
                nlohmann::json basis = nlohmann::json::array();
                for (const auto& h : system_basis({z, degree})) {
                    nlohmann::json coeffs = nlohmann::json::array();
                    for (const Int& c : h.coeffs()) coeffs.push_back(c.get_str());
                    basis.push_back(coeffs);
                }
                j["basis"] = basis;
                j["monomial_order"] = "graded-lex x0 > x1 > x2";
            }
            emit(out, format, j);
            return 0;
        }

        if (alpha_cmd->parsed()) {
            std::uint64_t base_hash = 0;
            FatPointScheme z = resolve_scheme(input, t, &base_hash);
            AlphaCache cache(cache_path.empty() ? AlphaCache() : AlphaCache(cache_path));
            std::optional<int> cached;
            if (!cache_path.empty()) cached = cache.lookup(base_hash, t);
            if (cached) {
                emit(out, format, {{"t", t}, {"alpha", *cached}, {"source", "cache"}});
                return 0;
            }
            int cap = degree_cap;
            if (cap < 0) {
                cap = input.has_type() ? default_degree_cap(input.type(), t)
                                       : static_cast<int>(4 * z.sum_multiplicities());
            }
            auto a = alpha(z, cap, lopt);
            if (!a.alpha) {
                emit(out, format, {{"t", t}, {"alpha", nullptr}, {"degree_cap", cap}});
                return 3;
            }
            if (!cache_path.empty()) cache.store(base_hash, t, *a.alpha);
            emit(out, format, {{"t", t}, {"alpha", *a.alpha}, {"how", a.how}});
            return 0;
        }

        if (wc->parsed()) {
            std::vector<ProjPoint> points;
            WaldschmidtReport rep;
            if (input.has_type()) {
                KConfigType ty = input.type();
                points = standard_k_config(ty);
                rep.closed = closed_form(ty);
                const TableRow* row = match_table_row(ty);
                if (row && row->mu_d) {
                    auto [mu, d] = row->mu_d(ty);
                    bool witness = false;
                    if (row->has_recipe) {
                        CurveRecipe recipe = build_recipe(ty);
                        witness = audit_recipe(recipe, points).empty();
                    }
                    rep.stabilization = verify_stabilization(points, mu, d, m_max, witness, lopt);
                }
            } else {
                FatPointScheme z = resolve_scheme(input, 1, nullptr);
                for (const auto& [p, m] : z.supports()) {
                    if (m != 1)
                        throw std::invalid_argument(
                            "waldschmidt expects a reduced scheme (all multiplicities 1)");
                    points.push_back(p);
                }
            }
            int cap = degree_cap;
            if (cap < 0)
                cap = input.has_type() ? default_degree_cap(input.type(), t_max)
                                       : static_cast<int>(points.size()) * t_max + 2;
            rep.seq = wc_sequence(points, t_max, cap, lopt);
            bool all_found = true;
            for (const auto& e : rep.seq) {
                if (!e.ratio) {
                    all_found = false;
                    continue;
                }
                if (!rep.upper_bound || *e.ratio < *rep.upper_bound) rep.upper_bound = *e.ratio;
            }
            rep.lower_bound = chudnovsky_lower_bound(points, lopt);
            out << report_to_json(rep) << "\n";
            return all_found ? 0 : 3;
        }

        if (cert->parsed()) {
            BezoutOptions bopt;
            bopt.primes = primes;
            bopt.seed = seed;
            if (!verify_only.empty()) {
                ReductionCertificate c = certificate_from_json(read_file(verify_only));
                bool ok = verify_certificate(c, bopt);
                auto cross = certify_empty(c.initial, c.initial_degree, primes, seed ^ 0x7777ULL);
                emit(out, format,
                     {{"verified", ok}, {"rank_cross_check_empty", cross.empty}, {"how", cross.how}});
                return ok ? 0 : 4;
            }
            if (!input.has_type() || cert_mu < 1 || cert_d < 1 || cert_m < 1)
                throw std::invalid_argument("certificate needs --type, --mu, --d, --m");
            KConfigType ty = input.type();
            FatPointScheme z = FatPointScheme::uniform(standard_k_config(ty), cert_m * cert_mu);
            std::vector<CurveComponent> hints;
            const TableRow* row = match_table_row(ty);
            if (row && row->has_recipe) hints = recipe_hints(build_recipe(ty));
            auto search = emptiness_certificate(z, cert_m * cert_d - 1, hints, bopt);
            if (!search.certificate) {
                nlohmann::json j = {{"inconclusive", true},
                                    {"note", search.note},
                                    {"steps_found", search.partial_trace.size()}};
                emit(out, format, j);
                return 4;
            }
            std::string cert_json = certificate_to_json(*search.certificate);
            if (!cert_out.empty()) {
                std::ofstream o(cert_out);
                o << cert_json << "\n";
            }
            bool ok = verify_certificate(*search.certificate, bopt);
            auto cross = certify_empty(z, cert_m * cert_d - 1, primes, seed ^ 0x7777ULL);
            nlohmann::json j = {{"verified", ok},
                                {"rank_cross_check_empty", cross.empty},
                                {"steps", search.certificate->steps.size()},
                                {"note", search.note}};
            if (cert_out.empty()) j["certificate"] = nlohmann::json::parse(cert_json);
            else j["certificate_file"] = cert_out;
            emit(out, format, j);
            return ok && cross.empty ? 0 : 4;
        }

        if (table->parsed()) {
            VerifyTypeOptions vopt;
            vopt.m_max = m_max;
            vopt.budget_seconds = budget;
            vopt.long_run = long_run;
            vopt.primes = primes;
            vopt.seed = seed;
            AlphaCache cache(cache_path.empty() ? AlphaCache() : AlphaCache(cache_path));
            vopt.cache = &cache;
            TableReport rep = reproduce_table(b_max, c_max, m_max, vopt);
            {
                std::ofstream jo(out_dir + "/table_report.json");
                jo << table_report_to_json(rep) << "\n";
                std::ofstream mo(out_dir + "/table_report.md");
                mo << table_report_to_markdown(rep);
                for (const auto& o : rep.outcomes)
                    for (const auto& [id, text] : o.certificates) {
                        std::ofstream co(out_dir + "/certificate-" + id + ".json");
                        co << text << "\n";
                    }
            }
            emit(out, format,
                 {{"types", rep.outcomes.size()},
                  {"any_failed", rep.any_failed()},
                  {"reports", {out_dir + "/table_report.json", out_dir + "/table_report.md"}}});
            return rep.any_failed() ? 5 : 0;
        }
    } catch (const NotFoundBelowCap& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace fatpoints
