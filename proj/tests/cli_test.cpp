#include <doctest.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fatpoints/cli.hpp"
#include "fatpoints/scheme.hpp"

using namespace fatpoints;

namespace {

struct CliRun {
    int exit_code;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/fatpoints-cli-" + name + "-" + std::to_string(::getpid());
    std::ofstream o(path);
    o << content;
    return path;
}

}  // namespace

TEST_CASE("dims: pencil through one point, the unique-curve scheme, empty scheme") {
    std::string one = write_temp("one", R"({"points":[[1,2,3]],"multiplicities":[1]})");
    auto r = run({"dims", "--scheme", one, "--d", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.json().at("dimension") == 2);

    // the two-line-plus-fat-point scheme at b = 2 in degree 2: one conic
    std::string fivepts = write_temp(
        "fivepts",
        R"({"points":[[1,0,0],[1,1,0],[1,3,1],[1,4,1],[1,0,2]],"multiplicities":[1,1,1,1,1]})");
    auto r2 = run({"dims", "--scheme", fivepts, "--d", "2"});
    CHECK(r2.exit_code == 0);
    CHECK(r2.json().at("dimension") == 1);

    std::string empty = write_temp("empty", R"({"points":[],"multiplicities":[]})");
    auto r3 = run({"dims", "--scheme", empty, "--d", "3"});
    CHECK(r3.json().at("dimension") == 10);

    // basis export: integer coefficient lists in graded-lex order
    auto rb = run({"dims", "--scheme", fivepts, "--d", "2", "--basis"});
    CHECK(rb.exit_code == 0);
    auto basis = rb.json().at("basis");
    REQUIRE(basis.size() == 1);
    CHECK(basis.at(0).size() == 6);  // conic coefficients

    std::remove(one.c_str());
    std::remove(fivepts.c_str());
    std::remove(empty.c_str());
}

TEST_CASE("dims: malformed input exits 2") {
    std::string bad = write_temp("bad", "{\"points\": [[1,2]]}");
    auto r = run({"dims", "--scheme", bad, "--d", "1"});
    CHECK(r.exit_code == 2);
    std::remove(bad.c_str());

    auto r2 = run({"dims", "--scheme", "/nonexistent/file.json", "--d", "1"});
    CHECK(r2.exit_code == 2);

    auto r3 = run({"frobnicate"});
    CHECK(r3.exit_code == 2);
}

TEST_CASE("alpha: catalogue types and the cap exit") {
    auto r = run({"alpha", "--type", "1,2,6", "--t", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.json().at("alpha") == 5);

    auto r2 = run({"alpha", "--type", "2,3", "--t", "1"});
    CHECK(r2.json().at("alpha") == 2);

    auto r3 = run({"alpha", "--type", "2,3,4", "--t", "6"});
    CHECK(r3.json().at("alpha") == 17);

    auto capped = run({"alpha", "--type", "2,3", "--t", "2", "--degree-cap", "3"});
    CHECK(capped.exit_code == 3);
}

TEST_CASE("alpha consults and updates the cache file") {
    std::string cache = "/tmp/fatpoints-cli-cache-" + std::to_string(::getpid());
    std::remove(cache.c_str());
    auto r = run({"alpha", "--type", "2,3", "--t", "1", "--cache", cache});
    CHECK(r.exit_code == 0);
    auto r2 = run({"alpha", "--type", "2,3", "--t", "1", "--cache", cache});
    CHECK(r2.exit_code == 0);
    CHECK(r2.json().at("source") == "cache");
    CHECK(r2.json().at("alpha") == 2);
    std::remove(cache.c_str());
}

TEST_CASE("waldschmidt report for a type carries sequence, bracket and closed form") {
    auto r = run({"waldschmidt", "--type", "2,3,4", "--t-max", "1", "--m-max", "1"});
    CHECK(r.exit_code == 0);
    auto j = r.json();
    CHECK(j.at("lower_bound") == "2");
    CHECK(j.at("closed_form").at("value") == "17/6");
    CHECK(j.at("stabilization").at("all_pass") == true);
    CHECK(j.at("sequence").at(0).at("alpha") == 3);
}

TEST_CASE("waldschmidt on a scheme file requires a reduced scheme") {
    std::string fat = write_temp("fat", R"({"points":[[1,0,0]],"multiplicities":[2]})");
    auto r = run({"waldschmidt", "--scheme", fat});
    CHECK(r.exit_code == 2);
    std::remove(fat.c_str());

    std::string ok = write_temp("red", R"({"points":[[1,0,0],[1,1,0]],"multiplicities":[1,1]})");
    auto r2 = run({"waldschmidt", "--scheme", ok, "--t-max", "2"});
    CHECK(r2.exit_code == 0);
    CHECK(r2.json().at("sequence").size() == 2);
    std::remove(ok.c_str());
}

TEST_CASE("certificate: emitted, verified, cross-checked, and replayable") {
    std::string path = "/tmp/fatpoints-cli-cert-" + std::to_string(::getpid()) + ".json";
    auto r = run({"certificate", "--type", "1,5,6", "--mu", "8", "--d", "22", "--m", "1", "--out",
                  path});
    CHECK(r.exit_code == 0);
    auto j = r.json();
    CHECK(j.at("verified") == true);
    CHECK(j.at("rank_cross_check_empty") == true);

    auto rv = run({"certificate", "--verify-only", path});
    CHECK(rv.exit_code == 0);
    CHECK(rv.json().at("verified") == true);

    // tamper with the forced multiplicity: replay must say false
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    auto cert = nlohmann::json::parse(ss.str());
    cert["steps"][0]["forced_multiplicity"] =
        cert["steps"][0]["forced_multiplicity"].get<int>() + 1;
    std::string tampered = write_temp("tampered", cert.dump());
    auto rt = run({"certificate", "--verify-only", tampered});
    CHECK(rt.exit_code == 4);
    CHECK(rt.json().at("verified") == false);

    std::remove(path.c_str());
    std::remove(tampered.c_str());
}

TEST_CASE("certificate for the triple-line scheme of type (3,4,5)") {
    auto r = run({"certificate", "--type", "3,4,5", "--mu", "1", "--d", "3", "--m", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.json().at("verified") == true);
    CHECK(r.json().at("rank_cross_check_empty") == true);
}

TEST_CASE("table: small bounds finish clean and write both reports") {
    std::string dir = "/tmp/fatpoints-cli-table-" + std::to_string(::getpid());
    mkdir(dir.c_str(), 0755);
    auto r = run({"table", "--b-max", "2", "--c-max", "4", "--m-max", "1", "--budget", "10",
                  "--out-dir", dir});
    CHECK(r.exit_code == 0);
    CHECK(r.json().at("any_failed") == false);
    std::ifstream jf(dir + "/table_report.json");
    CHECK(jf.good());
    std::ifstream mf(dir + "/table_report.md");
    CHECK(mf.good());
}

TEST_CASE("scheme round trip through the CLI surface is exact") {
    FatPointScheme z({{ProjPoint(make_rat(1), make_rat(-2, 3), make_rat(4)), 2},
                      {ProjPoint(make_rat(0), make_rat(1), make_rat(7, 2)), 1}});
    std::string path = write_temp("roundtrip", scheme_to_json(z));
    auto r = run({"dims", "--scheme", path, "--d", "2"});
    CHECK(r.exit_code == 0);
    CHECK(scheme_from_json(scheme_to_json(z)) == z);
    std::remove(path.c_str());
}

TEST_CASE("json output mode emits exactly one document") {
    auto r = run({"alpha", "--type", "2,3", "--t", "1", "--format", "json"});
    CHECK_NOTHROW(nlohmann::json::parse(r.out));

    auto csv = run({"alpha", "--type", "2,3", "--t", "1", "--format", "csv"});
    CHECK(csv.out.find("alpha") != std::string::npos);
    CHECK(csv.exit_code == 0);
}
