#include "fatpoints/scheme.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace fatpoints {

FatPointScheme::FatPointScheme(std::vector<std::pair<ProjPoint, int>> supports)
    : supports_(std::move(supports)) {
    std::set<ProjPoint> seen;
    for (const auto& [p, m] : supports_) {
        if (m < 1) throw std::invalid_argument("FatPointScheme: multiplicity must be >= 1");
        if (!seen.insert(p).second)
            throw std::invalid_argument("FatPointScheme: repeated point " + p.str());
    }
}

FatPointScheme FatPointScheme::uniform(const std::vector<ProjPoint>& points, int multiplicity) {
    std::vector<std::pair<ProjPoint, int>> s;
    s.reserve(points.size());
    for (const auto& p : points) s.emplace_back(p, multiplicity);
    return FatPointScheme(std::move(s));
}

int FatPointScheme::max_multiplicity() const {
    int m = 0;
    for (const auto& [p, mi] : supports_) m = std::max(m, mi);
    return m;
}

long FatPointScheme::sum_multiplicities() const {
    long s = 0;
    for (const auto& [p, m] : supports_) s += m;
    return s;
}

long FatPointScheme::condition_count() const {
    long s = 0;
    for (const auto& [p, m] : supports_) s += static_cast<long>(m) * (m + 1) / 2;
    return s;
}

FatPointScheme FatPointScheme::scaled(int t) const {
    if (t < 1) throw std::invalid_argument("FatPointScheme::scaled: factor must be >= 1");
    auto s = supports_;
    for (auto& [p, m] : s) m *= t;
    return FatPointScheme(std::move(s));
}

std::string FatPointScheme::canonical_string() const {
    std::ostringstream os;
    for (const auto& [p, m] : supports_) os << p.str() << "^" << m << ";";
    return os.str();
}

std::uint64_t FatPointScheme::content_hash() const { return fnv1a64(canonical_string()); }

KConfigType::KConfigType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("KConfigType: empty type");
    int prev = 0;
    for (int d : degrees_) {
        if (d <= prev) throw std::invalid_argument("KConfigType: degrees must strictly increase");
        prev = d;
    }
}

KConfigType KConfigType::parse(const std::string& s) {
    std::vector<int> d;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("KConfigType: empty component in '" + s + "'");
        d.push_back(std::stoi(tok));
    }
    return KConfigType(std::move(d));
}

int KConfigType::total_points() const {
    int t = 0;
    for (int d : degrees_) t += d;
    return t;
}

std::string KConfigType::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(degrees_[i]);
    }
    return s + ")";
}

namespace {

Rat coord_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("scheme coordinate must be an integer or \"num/den\" string");
}

}  // namespace

FatPointScheme scheme_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("points") || !j.contains("multiplicities"))
        throw std::invalid_argument("scheme JSON needs 'points' and 'multiplicities'");
    const auto& pts = j["points"];
    const auto& mults = j["multiplicities"];
    if (!pts.is_array() || !mults.is_array() || pts.size() != mults.size())
        throw std::invalid_argument("scheme JSON: points/multiplicities must be arrays of equal length");
    std::vector<std::pair<ProjPoint, int>> supports;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& c = pts[i];
        if (!c.is_array() || c.size() != 3)
            throw std::invalid_argument("scheme JSON: each point is a coordinate triple");
        ProjPoint p(coord_from_json(c[0]), coord_from_json(c[1]), coord_from_json(c[2]));
        if (!mults[i].is_number_integer())
            throw std::invalid_argument("scheme JSON: multiplicities must be integers");
        supports.emplace_back(p, mults[i].get<int>());
    }
    return FatPointScheme(std::move(supports));
}

std::string scheme_to_json(const FatPointScheme& s) {
    nlohmann::json pts = nlohmann::json::array();
    nlohmann::json mults = nlohmann::json::array();
    for (const auto& [p, m] : s.supports()) {
        nlohmann::json triple = nlohmann::json::array();
        for (int i = 0; i < 3; ++i) triple.push_back(rat_to_string(p[i]));
        pts.push_back(triple);
        mults.push_back(m);
    }
    nlohmann::json j;
    j["points"] = pts;
    j["multiplicities"] = mults;
    return j.dump();
}

}  // namespace fatpoints
