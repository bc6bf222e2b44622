#include "fatpoints/poly.hpp"

#include <algorithm>

#include "fatpoints/elimination.hpp"

namespace fatpoints {

namespace {

void canonicalize_ints(std::vector<Int>& c) {
    Int g(0);
    for (const Int& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    int sign = 0;
    for (const Int& x : c) {
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    }
    if (sign < 0) g = -g;
    for (Int& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

HomPoly::HomPoly(int degree, std::vector<Int> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree_ < 0 || static_cast<int>(c_.size()) != monomial_count(degree_))
        throw std::invalid_argument("HomPoly: coefficient count does not match degree");
    canonicalize_ints(c_);
}

HomPoly HomPoly::from_line(const Line& l) {
    std::vector<Rat> q{l[0], l[1], l[2]};
    return HomPoly(1, canonical_integer_vector(q));
}

bool HomPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

PointChart point_chart(const ProjPoint& p) {
    PointChart pc{};
    int chart = 0;
    while (p[chart] == 0) ++chart;  // normalized: this coordinate is 1
    pc.chart = chart;
    int slots[2], n = 0;
    for (int i = 0; i < 3; ++i)
        if (i != chart) slots[n++] = i;
    pc.u_slot = slots[0];
    pc.v_slot = slots[1];
    pc.u = p[pc.u_slot];
    pc.v = p[pc.v_slot];
    return pc;
}

Rat HomPoly::eval(const ProjPoint& p) const {
    // Power tables per coordinate.
    std::array<std::vector<Rat>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        pw[i].resize(degree_ + 1);
        pw[i][0] = 1;
        for (int e = 1; e <= degree_; ++e) pw[i][e] = pw[i][e - 1] * p[i];
    }
    Rat acc(0);
    for (int idx = 0; idx < static_cast<int>(c_.size()); ++idx) {
        if (c_[idx] == 0) continue;
        auto e = monomial_exponents(degree_, idx);
        acc += Rat(c_[idx]) * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
    }
    return acc;
}

int HomPoly::vanishing_order(const ProjPoint& p) const {
    if (is_zero()) throw std::logic_error("vanishing_order of the zero polynomial");
    PointChart pc = point_chart(p);
    auto bin = binomial_table(degree_);
    std::array<std::vector<Rat>, 2> pw;  // powers of u and v
    for (int s = 0; s < 2; ++s) {
        const Rat& base = s == 0 ? pc.u : pc.v;
        pw[s].resize(degree_ + 1);
        pw[s][0] = 1;
        for (int e = 1; e <= degree_; ++e) pw[s][e] = pw[s][e - 1] * base;
    }
    for (int t = 0; t <= degree_; ++t) {
        for (int j = t; j >= 0; --j) {
            int k = t - j;
            // Taylor coefficient of U^j V^k of F(chart=1, u+U, v+V).
            Rat acc(0);
            for (int idx = 0; idx < static_cast<int>(c_.size()); ++idx) {
                if (c_[idx] == 0) continue;
                auto e = monomial_exponents(degree_, idx);
                int au = e[pc.u_slot], av = e[pc.v_slot];
                if (au < j || av < k) continue;
                acc += Rat(c_[idx] * bin[au][j] * bin[av][k]) * pw[0][au - j] * pw[1][av - k];
            }
            if (acc != 0) return t;
        }
    }
    throw std::logic_error("vanishing_order: nonzero polynomial with no nonzero local coefficient");
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    int d = degree_ + o.degree_;
    std::vector<Int> out(monomial_count(d), Int(0));
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        auto ei = monomial_exponents(degree_, i);
        for (int j = 0; j < static_cast<int>(o.c_.size()); ++j) {
            if (o.c_[j] == 0) continue;
            auto ej = monomial_exponents(o.degree_, j);
            out[monomial_index(d, ei[0] + ej[0], ei[1] + ej[1])] += c_[i] * o.c_[j];
        }
    }
    return HomPoly(d, std::move(out));
}

std::optional<HomPoly> HomPoly::divide_by_line(const Line& l) const {
    if (is_zero() || degree_ < 1) return std::nullopt;
    // Pivot on the first variable with a nonzero line coefficient and run a
    // synthetic division with the remaining two variables as parameters.
    int w = 0;
    while (l[w] == 0) ++w;
    const Rat aw = l[w];
    int s1 = -1, s2 = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == w) continue;
        (s1 < 0 ? s1 : s2) = i;
    }
    const Rat g1 = l[s1], g2 = l[s2];

    const int d = degree_;
    // f[e] = coefficient of x_w^e: a homogeneous bivariate polynomial in
    // (s1, s2) of degree d-e, indexed by the exponent of s1.
    std::vector<std::vector<Rat>> f(d + 1);
    for (int e = 0; e <= d; ++e) f[e].assign(d - e + 1, Rat(0));
    for (int idx = 0; idx < static_cast<int>(c_.size()); ++idx) {
        if (c_[idx] == 0) continue;
        auto ex = monomial_exponents(d, idx);
        f[ex[w]][ex[s1]] = Rat(c_[idx]);
    }
    // Divide by aw*x_w + g1*s1 + g2*s2.
    std::vector<std::vector<Rat>> q(d);
    for (int e = 0; e < d; ++e) q[e].assign(d - 1 - e + 1, Rat(0));
    std::vector<Rat> carry;  // g * q_e, degree d-e
    for (int e = d; e >= 1; --e) {
        // q_{e-1} = (f_e - carry_from_q_e) / aw, where carry was folded below
        for (int i = 0; i <= d - e; ++i) q[e - 1][i] = f[e][i] / aw;
        // fold g*q_{e-1} into f_{e-1}: g1*s1*q + g2*s2*q
        for (int i = 0; i <= d - e; ++i) {
            if (q[e - 1][i] == 0) continue;
            f[e - 1][i + 1] -= g1 * q[e - 1][i];
            f[e - 1][i] -= g2 * q[e - 1][i];
        }
    }
    for (const Rat& r : f[0])
        if (r != 0) return std::nullopt;  // nonzero remainder

    std::vector<Rat> qflat(monomial_count(d - 1), Rat(0));
    for (int e = 0; e <= d - 1; ++e) {
        for (int i = 0; i <= d - 1 - e; ++i) {
            if (q[e][i] == 0) continue;
            std::array<int, 3> ex{};
            ex[w] = e;
            ex[s1] = i;
            ex[s2] = d - 1 - e - i;
            qflat[monomial_index(d - 1, ex[0], ex[1])] = q[e][i];
        }
    }
    return HomPoly(d - 1, canonical_integer_vector(qflat));
}

std::string HomPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    const char* names[3] = {"x0", "x1", "x2"};
    for (int idx = 0; idx < static_cast<int>(c_.size()); ++idx) {
        if (c_[idx] == 0) continue;
        auto e = monomial_exponents(degree_, idx);
        const Int& a = c_[idx];
        if (!s.empty())
            s += a > 0 ? " + " : " - ";
        else if (a < 0)
            s += "-";
        Int mag = abs(a);
        std::string term;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!term.empty()) term += "*";
            term += names[i];
            if (e[i] > 1) term += "^" + std::to_string(e[i]);
        }
        if (term.empty()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += term;
        }
    }
    return s;
}

}  // namespace fatpoints
