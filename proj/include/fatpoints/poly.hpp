#pragma once

#include <optional>

#include "fatpoints/projective.hpp"

namespace fatpoints {

// Monomials of fixed total degree d in x0, x1, x2, in graded-lex order with
// x0 > x1 > x2: (d,0,0), (d-1,1,0), (d-1,0,1), (d-2,2,0), ...
inline int monomial_count(int d) { return (d + 1) * (d + 2) / 2; }
inline int monomial_index(int d, int a0, int a1) {
    int k = d - a0;
    return k * (k + 1) / 2 + (k - a1);
}
inline std::array<int, 3> monomial_exponents(int d, int idx) {
    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= idx) ++k;
    int a1 = k - (idx - k * (k + 1) / 2);
    return {d - k, a1, k - a1};
}

// Homogeneous polynomial in x0, x1, x2 with integer coefficients, stored
// densely in the order above. Canonical form: content 1, first nonzero
// coefficient positive. The zero polynomial is representable (empty-ish) but
// callers constructing curves must pass nonzero data.
class HomPoly {
public:
    HomPoly() : degree_(0), c_(1, Int(0)) {}
    HomPoly(int degree, std::vector<Int> coeffs);
    static HomPoly from_line(const Line& l);
    static HomPoly constant_one() { return HomPoly(0, {Int(1)}); }

    int degree() const { return degree_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const;

    Rat eval(const ProjPoint& p) const;

    // Least total order of a nonvanishing local Taylor coefficient at p,
    // computed after an exact translation of p to the origin of its affine
    // chart. 0 means the curve misses p; the order of a nonzero polynomial
    // is at most its degree.
    int vanishing_order(const ProjPoint& p) const;

    HomPoly operator*(const HomPoly& o) const;
    bool operator==(const HomPoly& o) const { return degree_ == o.degree_ && c_ == o.c_; }
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    // Exact division: quotient if the line's form divides this polynomial.
    std::optional<HomPoly> divide_by_line(const Line& l) const;

    std::string str() const;

private:
    int degree_;
    std::vector<Int> c_;
};

// Chart data of a normalized point: index of the chart coordinate (== 1) and
// the two affine coordinates in increasing slot order.
struct PointChart {
    int chart;      // coordinate slot equal to 1
    int u_slot, v_slot;
    Rat u, v;       // affine coordinates of the point in that chart
};
PointChart point_chart(const ProjPoint& p);

}  // namespace fatpoints
