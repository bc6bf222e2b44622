#pragma once

#include <array>
#include <string>

#include "fatpoints/rational.hpp"

namespace fatpoints {

// A point of the projective plane with exact rational homogeneous
// coordinates, normalized so the first nonzero coordinate is 1. Equality is
// equality of normalized triples.
class ProjPoint {
public:
    ProjPoint() : c_{Rat(1), Rat(0), Rat(0)} {}
    ProjPoint(Rat x0, Rat x1, Rat x2);
    static ProjPoint of_ints(long x0, long x1, long x2) {
        return ProjPoint(Rat(x0), Rat(x1), Rat(x2));
    }

    const std::array<Rat, 3>& coords() const { return c_; }
    const Rat& operator[](int i) const { return c_[i]; }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;  // lexicographic on normalized coords

    std::string str() const;  // "[1:2:0]"

private:
    std::array<Rat, 3> c_;
};

// A line a0*x0 + a1*x1 + a2*x2 = 0, coefficients normalized as for points.
class Line {
public:
    Line() : a_{Rat(0), Rat(0), Rat(1)} {}
    Line(Rat a0, Rat a1, Rat a2);
    static Line of_ints(long a0, long a1, long a2) { return Line(Rat(a0), Rat(a1), Rat(a2)); }

    const std::array<Rat, 3>& coeffs() const { return a_; }
    const Rat& operator[](int i) const { return a_[i]; }

    bool contains(const ProjPoint& p) const;

    bool operator==(const Line& o) const { return a_ == o.a_; }
    bool operator!=(const Line& o) const { return !(*this == o); }
    bool operator<(const Line& o) const;

    std::string str() const;

private:
    std::array<Rat, 3> a_;
};

// The unique line through two distinct points (cross product of the
// coordinate triples). Throws on equal points.
Line line_through(const ProjPoint& p, const ProjPoint& q);

// The intersection point of two distinct lines.
ProjPoint meet(const Line& l1, const Line& l2);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

}  // namespace fatpoints
