#pragma once

#include <cstdint>
#include <utility>

#include "fatpoints/projective.hpp"

namespace fatpoints {

// A fat-point scheme m1*P1 + ... + ms*Ps: pairwise distinct points with
// positive multiplicities.
class FatPointScheme {
public:
    FatPointScheme() = default;
    explicit FatPointScheme(std::vector<std::pair<ProjPoint, int>> supports);
    static FatPointScheme uniform(const std::vector<ProjPoint>& points, int multiplicity);

    const std::vector<std::pair<ProjPoint, int>>& supports() const { return supports_; }
    std::size_t size() const { return supports_.size(); }
    bool empty() const { return supports_.empty(); }

    int max_multiplicity() const;
    long sum_multiplicities() const;
    long condition_count() const;  // sum of C(m_i + 1, 2)

    FatPointScheme scaled(int t) const;  // multiplicities times t

    bool operator==(const FatPointScheme& o) const { return supports_ == o.supports_; }

    // Canonical serialization (points in stored order) and its FNV-1a hash;
    // the hash keys the alpha cache.
    std::string canonical_string() const;
    std::uint64_t content_hash() const;

private:
    std::vector<std::pair<ProjPoint, int>> supports_;
};

// Type (d1, ..., ds) of a k-configuration: strictly increasing positive
// integers.
class KConfigType {
public:
    KConfigType() = default;
    explicit KConfigType(std::vector<int> degrees);
    static KConfigType parse(const std::string& comma_separated);

    const std::vector<int>& degrees() const { return degrees_; }
    int size() const { return static_cast<int>(degrees_.size()); }
    int total_points() const;
    int operator[](int i) const { return degrees_[i]; }

    bool operator==(const KConfigType& o) const { return degrees_ == o.degrees_; }
    std::string str() const;  // "(1,5,6)"

private:
    std::vector<int> degrees_;
};

// Scheme file format: {"points": [[x0,x1,x2], ...], "multiplicities": [...]}
// with coordinates as JSON integers or exact "num/den" strings, never floats.
FatPointScheme scheme_from_json(const std::string& text);
std::string scheme_to_json(const FatPointScheme& s);

}  // namespace fatpoints
