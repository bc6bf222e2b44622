#include "fatpoints/kconfig.hpp"

#include <random>
#include <set>

namespace fatpoints {

std::vector<Line> standard_k_config_lines(const KConfigType& t) {
    const int s = t.size();
    std::vector<Line> lines;
    lines.reserve(s);
    for (int i = 1; i <= s; ++i) lines.push_back(Line::of_ints(-(s - i), 0, 1));
    return lines;
}

KConfig standard_k_config_full(const KConfigType& t) {
    const int s = t.size();
    KConfig c;
    c.type = t;
    c.lines = standard_k_config_lines(t);
    c.groups.resize(s);
    for (int i = 1; i <= s; ++i)
        for (int j = 0; j < t[i - 1]; ++j) c.groups[i - 1].push_back(ProjPoint::of_ints(1, j, s - i));
    return c;
}

std::vector<ProjPoint> KConfig::points() const {
    std::vector<ProjPoint> all;
    for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
    return all;
}

std::vector<ProjPoint> standard_k_config(const KConfigType& t) {
    return standard_k_config_full(t).points();
}

bool is_k_configuration(const KConfig& c) {
    const int s = c.type.size();
    if (static_cast<int>(c.groups.size()) != s || static_cast<int>(c.lines.size()) != s) return false;
    // distinct lines
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (c.lines[i] == c.lines[j]) return false;
    // group sizes, incidence, distinct points overall
    std::set<ProjPoint> seen;
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(c.groups[i].size()) != c.type[i]) return false;
        for (const auto& p : c.groups[i]) {
            if (!c.lines[i].contains(p)) return false;
            if (!seen.insert(p).second) return false;
        }
    }
    // no later line through an earlier point
    for (int i = 1; i < s; ++i)
        for (int j = 0; j < i; ++j)
            for (const auto& p : c.groups[j])
                if (c.lines[i].contains(p)) return false;
    // no configuration point at a pairwise line intersection
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            ProjPoint x = meet(c.lines[i], c.lines[j]);
            if (seen.count(x)) return false;
        }
    return true;
}

KConfig generic_k_config(const KConfigType& t, std::uint64_t seed) {
    const int s = t.size();
    std::mt19937_64 rng(seed ^ 0xC0FF33ULL);
    std::uniform_int_distribution<int> coef(-24, 24);

    for (int attempt = 0; attempt < 256; ++attempt) {
        KConfig c;
        c.type = t;
        c.groups.assign(s, {});
        c.lines.clear();
        bool ok = true;
        for (int i = 0; i < s && ok; ++i) {
            int a = coef(rng), b = coef(rng), d = coef(rng);
            if (a == 0 && b == 0 && d == 0) {
                ok = false;
                break;
            }
            Line l = Line::of_ints(a, b, d);
            // two anchor points on l to parametrize rational points on it
            ProjPoint p0, p1;
            try {
                if (l[1] != 0 || l[2] != 0) {
                    // points with x0 = 1, x1 = u free when possible
                    if (l[2] != 0) {
                        p0 = ProjPoint(Rat(1), Rat(0), -l[0] / l[2]);
                        p1 = ProjPoint(Rat(0), Rat(1), -l[1] / l[2]);
                    } else {
                        p0 = ProjPoint(Rat(1), -l[0] / l[1], Rat(0));
                        p1 = ProjPoint(Rat(0), Rat(0), Rat(1));
                    }
                } else {
                    p0 = ProjPoint(Rat(0), Rat(1), Rat(0));
                    p1 = ProjPoint(Rat(0), Rat(0), Rat(1));
                }
            } catch (const std::invalid_argument&) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<int> par(-60, 60);
            for (int k = 0; k < t[i] && ok; ++k) {
                for (int draw = 0; draw < 64; ++draw) {
                    int u = par(rng);
                    ProjPoint cand(p0[0] + Rat(u) * p1[0], p0[1] + Rat(u) * p1[1],
                                   p0[2] + Rat(u) * p1[2]);
                    bool fresh = true;
                    for (const auto& g : c.groups)
                        for (const auto& q : g)
                            if (q == cand) fresh = false;
                    if (fresh) {
                        c.groups[i].push_back(cand);
                        break;
                    }
                    if (draw == 63) ok = false;
                }
            }
            c.lines.push_back(l);
        }
        if (ok && is_k_configuration(c)) return c;
    }
    throw std::runtime_error("generic_k_config: retry budget exhausted for type " + t.str());
}

}  // namespace fatpoints
