#pragma once

#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Standard k-configuration of type (d1,...,ds): for i = 1..s the line
// L_i = { x2 = (s-i) x0 } carries the d_i points [1 : j : s-i], j < d_i.
// Points are returned grouped by line, in that order.
std::vector<ProjPoint> standard_k_config(const KConfigType& t);

// The defining lines L_1..L_s of the standard configuration.
std::vector<Line> standard_k_config_lines(const KConfigType& t);

// A k-configuration with its grouping, as produced by the generators.
struct KConfig {
    KConfigType type;
    std::vector<std::vector<ProjPoint>> groups;  // groups[i] on line i
    std::vector<Line> lines;

    std::vector<ProjPoint> points() const;
};

KConfig standard_k_config_full(const KConfigType& t);

// Seeded random k-configuration with exact rational coordinates. Conditions
// checked exactly after each draw: d_i distinct points on s distinct lines,
// no later line through an earlier point, and no configuration point at a
// pairwise line intersection. Throws after a bounded number of retries.
KConfig generic_k_config(const KConfigType& t, std::uint64_t seed);

// Exact validator for the definition above; the oracle for the generator.
bool is_k_configuration(const KConfig& c);

}  // namespace fatpoints
