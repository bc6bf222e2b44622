#include "fatpoints/projective.hpp"

namespace fatpoints {

namespace {

std::array<Rat, 3> normalize_triple(std::array<Rat, 3> c, const char* what) {
    for (auto& x : c) x.canonicalize();
    int lead = -1;
    for (int i = 0; i < 3; ++i) {
        if (c[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw std::invalid_argument(std::string(what) + ": all coordinates zero");
    Rat scale = c[lead];
    for (int i = lead; i < 3; ++i) c[i] /= scale;
    return c;
}

std::array<Rat, 3> cross(const std::array<Rat, 3>& u, const std::array<Rat, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::string triple_str(const std::array<Rat, 3>& c, char open, char close) {
    std::string s(1, open);
    for (int i = 0; i < 3; ++i) {
        if (i) s += ':';
        s += rat_to_string(c[i]);
    }
    s += close;
    return s;
}

bool triple_less(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    for (int i = 0; i < 3; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

ProjPoint::ProjPoint(Rat x0, Rat x1, Rat x2)
    : c_(normalize_triple({std::move(x0), std::move(x1), std::move(x2)}, "ProjPoint")) {}

bool ProjPoint::operator<(const ProjPoint& o) const { return triple_less(c_, o.c_); }

std::string ProjPoint::str() const { return triple_str(c_, '[', ']'); }

Line::Line(Rat a0, Rat a1, Rat a2)
    : a_(normalize_triple({std::move(a0), std::move(a1), std::move(a2)}, "Line")) {}

bool Line::contains(const ProjPoint& p) const {
    return a_[0] * p[0] + a_[1] * p[1] + a_[2] * p[2] == 0;
}

bool Line::operator<(const Line& o) const { return triple_less(a_, o.a_); }

std::string Line::str() const { return triple_str(a_, '{', '}'); }

Line line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw std::invalid_argument("line_through: points coincide");
    auto c = cross(p.coords(), q.coords());
    return Line(c[0], c[1], c[2]);
}

ProjPoint meet(const Line& l1, const Line& l2) {
    if (l1 == l2) throw std::invalid_argument("meet: lines coincide");
    auto c = cross(l1.coeffs(), l2.coeffs());
    return ProjPoint(c[0], c[1], c[2]);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    if (a == b || a == c || b == c) return true;
    return line_through(a, b).contains(c);
}

}  // namespace fatpoints
