#include "fatpoints/table.hpp"

#include "fatpoints/linsys.hpp"

namespace fatpoints {

namespace {

int len(const KConfigType& t) { return t.size(); }

// Named points and lines of a standard configuration of type (1,b,c):
// R alone on its line, Q_1..Q_b, P_1..P_c. L1 carries the P's, L2 the Q's.
// M_i joins P_{2i-1}, Q_i and R; N_i joins P_{2i} and R; T_i joins Q_i and R
// for the far Q's with no partner P.
struct Notation1bc {
    int b, c;
    ProjPoint R;
    std::vector<ProjPoint> Q, P;  // 0-based storage, 1-based accessors
    Line L1, L2;

    explicit Notation1bc(const KConfigType& t) {
        b = t[1];
        c = t[2];
        KConfig cfg = standard_k_config_full(t);
        R = cfg.groups[0][0];
        Q = cfg.groups[1];
        P = cfg.groups[2];
        L1 = cfg.lines[2];
        L2 = cfg.lines[1];
    }
    const ProjPoint& p(int i) const { return P[i - 1]; }
    const ProjPoint& q(int i) const { return Q[i - 1]; }
    Line M(int i) const {
        if (!(i >= 1 && i <= b && 2 * i <= c + 1)) throw std::logic_error("M_i out of range");
        Line l = line_through(p(2 * i - 1), R);
        if (!l.contains(q(i))) throw std::logic_error("M_i misses Q_i");
        return l;
    }
    Line N(int i) const {
        if (!(i >= 1 && 2 * i <= c)) throw std::logic_error("N_i out of range");
        return line_through(p(2 * i), R);
    }
    Line T(int i) const {
        if (!(i >= 1 && i <= b && 2 * i >= c + 2)) throw std::logic_error("T_i out of range");
        return line_through(q(i), R);
    }
};

CurveComponent kernel_component(std::vector<std::pair<ProjPoint, int>> supports, int degree,
                                int multiplicity) {
    std::vector<std::pair<ProjPoint, int>> s;
    for (auto& [p, m] : supports)
        if (m > 0) s.emplace_back(p, m);
    auto basis = system_basis({FatPointScheme(std::move(s)), degree});
    if (basis.size() != 1)
        throw std::logic_error("interpolation kernel is not 1-dimensional: got " +
                               std::to_string(basis.size()) + " in degree " + std::to_string(degree));
    HomPoly h = basis[0];
    if (h.degree() == 1) {
        const auto& co = h.coeffs();
        return CurveComponent{Line(Rat(co[0]), Rat(co[1]), Rat(co[2])), multiplicity};
    }
    return CurveComponent{h, multiplicity};
}

void add_line(CurveRecipe& r, const Line& l, int mult) {
    if (mult > 0) r.components.push_back(CurveComponent{l, mult});
}

Rat rv(long n, long d = 1) { return make_rat(n, d); }

}  // namespace

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> v;
        auto no_degenerate = [](const KConfigType&) { return false; };

        // (a)
        v.push_back({1, "(a)", "", "single line through all points", true, true, true, false,
                     [](const KConfigType& t) { return len(t) == 1; },
                     [](const KConfigType&) { return rv(1); },
                     {},
                     [](const KConfigType&) { return std::pair<int, int>{1, 1}; },
                     no_degenerate});
        // (1,b)
        v.push_back({2, "(1,b)", "", "b-fold line plus the star of lines through the lone point",
                     false, true, true, false,
                     [](const KConfigType& t) { return len(t) == 2 && t[0] == 1; },
                     [](const KConfigType& t) { return rv(2L * t[1] - 1, t[1]); },
                     {},
                     [](const KConfigType& t) { return std::pair<int, int>{t[1], 2 * t[1] - 1}; },
                     no_degenerate});
        // (a,b), a >= 2
        v.push_back({3, "(a,b)", "a >= 2", "two-line witness, lines stripped in turn", true, true,
                     false, false,
                     [](const KConfigType& t) { return len(t) == 2 && t[0] >= 2; },
                     [](const KConfigType&) { return rv(2); },
                     {},
                     [](const KConfigType&) { return std::pair<int, int>{1, 2}; },
                     no_degenerate});
        // (1,b,b+1), b even >= 4
        v.push_back({4, "(1,b,b+1)", "b even, b >= 4", "half-integer union of joining lines", false,
                     true, true, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] == t[1] + 1 && t[1] % 2 == 0 &&
                                t[1] >= 4;
                     },
                     [](const KConfigType& t) { return rv(9L * t[1] - 4, 3L * t[1]); },
                     {},
                     [](const KConfigType& t) {
                         return std::pair<int, int>{3 * t[1] / 2, (9 * t[1] - 4) / 2};
                     },
                     no_degenerate});
        // (1,b,c), c even <= 2b-4
        v.push_back({5, "(1,b,c)", "c even, c <= 2b-4", "half-integer union of joining lines",
                     false, true, true, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] % 2 == 0 && t[2] <= 2 * t[1] - 4;
                     },
                     [](const KConfigType& t) {
                         return rv(6L * t[1] + 3L * t[2] - 4, 2L * t[1] + t[2]);
                     },
                     {},
                     [](const KConfigType& t) {
                         return std::pair<int, int>{(2 * t[1] + t[2]) / 2,
                                                    (6 * t[1] + 3 * t[2] - 4) / 2};
                     },
                     no_degenerate});
        // (1,b,c), c odd, b+1 < c <= 2b-3
        v.push_back({6, "(1,b,c)", "c odd, b+1 < c <= 2b-3",
                     "half-integer union; value shared with the even type below it", false, true,
                     false, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] % 2 == 1 && t[1] + 1 < t[2] &&
                                t[2] <= 2 * t[1] - 3;
                     },
                     [](const KConfigType& t) {
                         return rv(6L * t[1] + 3L * t[2] - 7, 2L * t[1] + t[2] - 1);
                     },
                     {},
                     [](const KConfigType& t) {
                         return std::pair<int, int>{(2 * t[1] + t[2] - 1) / 2,
                                                    (6 * t[1] + 3 * t[2] - 7) / 2};
                     },
                     no_degenerate});
        // (1,b,2b-2)
        v.push_back({7, "(1,b,2b-2)", "", "lines plus interpolated degree-(b-1) curves", false,
                     true, true, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] == 2 * t[1] - 2;
                     },
                     [](const KConfigType& t) {
                         long b = t[1];
                         return rv(6 * b * b - 14 * b + 6, 2 * b * b - 4 * b + 1);
                     },
                     {},
                     [](const KConfigType& t) {
                         int b = t[1];
                         return std::pair<int, int>{2 * b * b - 4 * b + 1, 6 * b * b - 14 * b + 6};
                     },
                     no_degenerate});
        // (1,b,2b-1)
        v.push_back({8, "(1,b,2b-1)", "", "lines plus interpolated degree-(b-1) curves", false,
                     true, true, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] == 2 * t[1] - 1;
                     },
                     [](const KConfigType& t) {
                         long b = t[1];
                         return rv(6 * b * b - 8 * b + 1, 2 * b * b - 2 * b);
                     },
                     {},
                     [](const KConfigType& t) {
                         int b = t[1];
                         return std::pair<int, int>{2 * b * b - 2 * b, 6 * b * b - 8 * b + 1};
                     },
                     // at b = 2 the interpolated curves collapse to lines
                     [](const KConfigType& t) { return t[1] == 2; }});
        // (1,b,2b)
        v.push_back({9, "(1,b,2b)", "", "lines plus one interpolated degree-b curve", false, true,
                     true, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] == 2 * t[1];
                     },
                     [](const KConfigType& t) { return rv(6L * t[1] - 5, 2L * t[1] - 1); },
                     {},
                     [](const KConfigType& t) {
                         return std::pair<int, int>{2 * t[1] - 1, 6 * t[1] - 5};
                     },
                     no_degenerate});
        // (1,b,2b+1)
        v.push_back({10, "(1,b,2b+1)", "", "lines plus b+1 interpolated degree-b curves", false,
                     true, true, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] == 2 * t[1] + 1;
                     },
                     [](const KConfigType& t) {
                         long b = t[1];
                         return rv(6 * b * b - 2 * b - 3, 2 * b * b - 1);
                     },
                     {},
                     [](const KConfigType& t) {
                         int b = t[1];
                         return std::pair<int, int>{2 * b * b - 1, 6 * b * b - 2 * b - 3};
                     },
                     no_degenerate});
        // (1,b,c), c >= 2b+2: value independent of c
        v.push_back({11, "(1,b,c)", "c >= 2b+2", "stable tail: b lines through the far point",
                     false, true, false, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 1 && t[2] >= 2 * t[1] + 2;
                     },
                     [](const KConfigType& t) { return rv(3L * t[1] - 1, t[1]); },
                     {},
                     [](const KConfigType& t) { return std::pair<int, int>{t[1], 3 * t[1] - 1}; },
                     no_degenerate});
        // (2,3,4)
        v.push_back({12, "(2,3,4)", "", "lines plus the interpolated conic", false, true, true,
                     false,
                     [](const KConfigType& t) {
                         return t == KConfigType({2, 3, 4});
                     },
                     [](const KConfigType&) { return rv(17, 6); },
                     {},
                     [](const KConfigType&) { return std::pair<int, int>{6, 17}; },
                     no_degenerate});
        // (2,3,5): two-sided interval only
        v.push_back({13, "(2,3,5)", "", "bracketed: subset from below, machine curve from above",
                     false, false, false, true,
                     [](const KConfigType& t) { return t == KConfigType({2, 3, 5}); },
                     {},
                     [](const KConfigType&) {
                         return RatInterval{rv(17, 6), rv(71, 24)};
                     },
                     {},
                     no_degenerate});
        // (2,3,c), c >= 6
        v.push_back({14, "(2,3,c)", "c >= 6", "triple-line witness, subset from below", false,
                     true, true, false,
                     [](const KConfigType& t) {
                         return len(t) == 3 && t[0] == 2 && t[1] == 3 && t[2] >= 6;
                     },
                     [](const KConfigType&) { return rv(3); },
                     {},
                     [](const KConfigType&) { return std::pair<int, int>{3, 9}; },
                     no_degenerate});
        // (2,b,c), b >= 4
        v.push_back({15, "(2,b,c)", "b >= 4", "triple-line witness, subset from below", false,
                     true, true, false,
                     [](const KConfigType& t) { return len(t) == 3 && t[0] == 2 && t[1] >= 4; },
                     [](const KConfigType&) { return rv(3); },
                     {},
                     [](const KConfigType&) { return std::pair<int, int>{2, 6}; },
                     no_degenerate});
        // (a,b,c), a >= 3
        v.push_back({16, "(a,b,c)", "a >= 3", "triple-line witness, lines stripped in turn", true,
                     true, true, false,
                     [](const KConfigType& t) { return len(t) == 3 && t[0] >= 3; },
                     [](const KConfigType&) { return rv(3); },
                     {},
                     [](const KConfigType&) { return std::pair<int, int>{1, 3}; },
                     no_degenerate});
        return v;
    }();
    return rows;
}

const TableRow* match_table_row(const KConfigType& t) {
    const TableRow* hit = nullptr;
    for (const auto& row : table_rows()) {
        if (!row.guard(t)) continue;
        if (hit)
            throw std::logic_error("table catalogue inconsistency: type " + t.str() +
                                   " matches rows " + std::to_string(hit->id) + " and " +
                                   std::to_string(row.id));
        hit = &row;
    }
    return hit;
}

namespace {

CurveRecipe recipe_lines_only(const KConfigType& t, int per_line_mult) {
    KConfig cfg = standard_k_config_full(t);
    CurveRecipe r;
    for (const auto& l : cfg.lines) add_line(r, l, per_line_mult);
    r.declared_degree = per_line_mult * t.size();
    r.declared_point_multiplicity = per_line_mult;
    r.multiplicity_exact = true;
    return r;
}

CurveRecipe recipe_1b(const KConfigType& t) {
    // (b-1) times the line of the P's, plus the b lines joining R to each P.
    KConfig cfg = standard_k_config_full(t);
    const ProjPoint& R = cfg.groups[0][0];
    const auto& P = cfg.groups[1];
    const int b = t[1];
    CurveRecipe r;
    add_line(r, cfg.lines[1], b - 1);
    for (const auto& p : P) add_line(r, line_through(R, p), 1);
    r.declared_degree = 2 * b - 1;
    r.declared_point_multiplicity = b;
    r.multiplicity_exact = true;
    return r;
}

CurveRecipe recipe_half_union(const Notation1bc& n, int half_mult, int m_hi, int n_hi, int t_lo) {
    CurveRecipe r;
    add_line(r, n.L1, half_mult);
    add_line(r, n.L2, half_mult);
    for (int i = 1; i <= m_hi; ++i) add_line(r, n.M(i), 1);
    for (int i = 1; i <= n_hi; ++i) add_line(r, n.N(i), 1);
    for (int i = t_lo; i <= n.b; ++i) add_line(r, n.T(i), 1);
    return r;
}

std::vector<std::pair<ProjPoint, int>> curve_scheme_1bc(const Notation1bc& n, int even_hi,
                                                        std::vector<int> skip_q, int r_mult,
                                                        std::vector<int> extra_p = {}) {
    std::vector<std::pair<ProjPoint, int>> s;
    for (int i = 2; i <= even_hi; i += 2) s.emplace_back(n.p(i), 1);
    for (int i = 1; i <= n.b; ++i) {
        bool skip = false;
        for (int j : skip_q)
            if (j == i) skip = true;
        if (!skip) s.emplace_back(n.q(i), 1);
    }
    for (int i : extra_p) s.emplace_back(n.p(i), 1);
    s.emplace_back(n.R, r_mult);
    return s;
}

}  // namespace

CurveRecipe build_recipe(const KConfigType& t) {
    const TableRow* row = match_table_row(t);
    if (!row) throw std::invalid_argument("build_recipe: uncatalogued type " + t.str());
    if (!row->has_recipe)
        throw std::invalid_argument("build_recipe: no recipe for type " + t.str());

    switch (row->id) {
        case 1: {
            KConfig cfg = standard_k_config_full(t);
            CurveRecipe r;
            add_line(r, cfg.lines[0], 1);
            r.declared_degree = 1;
            r.declared_point_multiplicity = 1;
            r.multiplicity_exact = true;
            return r;
        }
        case 2:
            return recipe_1b(t);
        case 3: {
            CurveRecipe r = recipe_lines_only(t, 1);
            r.multiplicity_exact = false;  // at-least, as used by the stripping argument
            return r;
        }
        case 4: {
            Notation1bc n(t);
            const int b = n.b;
            CurveRecipe r = recipe_half_union(n, (3 * b - 2) / 2, b / 2 + 1, b / 2, b / 2 + 2);
            r.declared_degree = (9 * b - 4) / 2;
            r.declared_point_multiplicity = 3 * b / 2;
            r.multiplicity_exact = true;
            return r;
        }
        case 5: {
            Notation1bc n(t);
            const int b = n.b, c = n.c;
            CurveRecipe r = recipe_half_union(n, (2 * b + c - 2) / 2, c / 2, c / 2, (c + 2) / 2);
            r.declared_degree = (6 * b + 3 * c - 4) / 2;
            r.declared_point_multiplicity = (2 * b + c) / 2;
            r.multiplicity_exact = true;
            return r;
        }
        case 6: {
            Notation1bc n(t);
            const int b = n.b, c = n.c;
            CurveRecipe r =
                recipe_half_union(n, (2 * b + c - 3) / 2, (c + 1) / 2, (c - 1) / 2, (c + 3) / 2);
            r.declared_degree = (6 * b + 3 * c - 7) / 2;
            r.declared_point_multiplicity = (2 * b + c - 1) / 2;
            r.multiplicity_exact = false;
            return r;
        }
        case 7: {
            Notation1bc n(t);
            const int b = n.b;
            CurveRecipe r;
            add_line(r, n.L1, 2 * b * b - 5 * b + 2);
            add_line(r, n.L2, 2 * b * b - 6 * b + 4);
            for (int i = 1; i <= b - 1; ++i) add_line(r, n.M(i), b - 1);
            add_line(r, n.T(b), b - 2);
            for (int i = 1; i <= b - 1; ++i)
                r.components.push_back(
                    kernel_component(curve_scheme_1bc(n, 2 * b - 2, {i}, b - 2), b - 1, 1));
            r.declared_degree = 6 * b * b - 14 * b + 6;
            r.declared_point_multiplicity = 2 * b * b - 4 * b + 1;
            r.multiplicity_exact = true;
            return r;
        }
        case 8: {
            Notation1bc n(t);
            const int b = n.b;
            CurveRecipe r;
            add_line(r, n.L1, 2 * b * b - 3 * b);
            add_line(r, n.L2, 2 * b * b - 4 * b + 1);
            for (int i = 1; i <= b; ++i) add_line(r, n.M(i), b);
            for (int i = 1; i <= b; ++i)
                r.components.push_back(
                    kernel_component(curve_scheme_1bc(n, 2 * b - 2, {i}, b - 2), b - 1, 1));
            r.declared_degree = 6 * b * b - 8 * b + 1;
            r.declared_point_multiplicity = 2 * b * b - 2 * b;
            r.multiplicity_exact = true;
            return r;
        }
        case 9: {
            Notation1bc n(t);
            const int b = n.b;
            CurveRecipe r;
            add_line(r, n.L1, 2 * b - 2);
            add_line(r, n.L2, 2 * b - 3);
            for (int i = 1; i <= b; ++i) add_line(r, n.M(i), 1);
            r.components.push_back(
                kernel_component(curve_scheme_1bc(n, 2 * b, {}, b - 1), b, 1));
            r.declared_degree = 6 * b - 5;
            r.declared_point_multiplicity = 2 * b - 1;
            r.multiplicity_exact = true;
            return r;
        }
        case 10: {
            Notation1bc n(t);
            const int b = n.b;
            CurveRecipe r;
            add_line(r, n.L1, 2 * b * b - b - 1);
            add_line(r, n.L2, 2 * b * b - 2 * b - 2);
            for (int i = 1; i <= b; ++i) add_line(r, n.M(i), b);
            for (int i = 1; i <= b; ++i) {
                // evens except P_{2i}, plus the last point P_{2b+1}
                auto s = curve_scheme_1bc(n, 2 * b, {}, b - 1, {2 * b + 1});
                std::vector<std::pair<ProjPoint, int>> filtered;
                for (auto& e : s)
                    if (!(e.first == n.p(2 * i))) filtered.push_back(e);
                r.components.push_back(kernel_component(filtered, b, 1));
            }
            r.components.push_back(
                kernel_component(curve_scheme_1bc(n, 2 * b, {}, b - 1), b, 1));
            r.declared_degree = 6 * b * b - 2 * b - 3;
            r.declared_point_multiplicity = 2 * b * b - 1;
            r.multiplicity_exact = true;
            return r;
        }
        case 11: {
            Notation1bc n(t);
            const int b = n.b;
            CurveRecipe r;
            add_line(r, n.L1, b);
            add_line(r, n.L2, b - 1);
            for (int i = 1; i <= b; ++i) add_line(r, n.M(i), 1);
            r.declared_degree = 3 * b - 1;
            r.declared_point_multiplicity = b;
            r.multiplicity_exact = false;  // odd P's pick up an extra order from their M line
            return r;
        }
        case 12: {
            KConfig cfg = standard_k_config_full(t);
            const auto& Rg = cfg.groups[0];
            const auto& Qg = cfg.groups[1];
            const auto& Pg = cfg.groups[2];
            Line L1 = cfg.lines[2], L2 = cfg.lines[1];
            Line M1 = line_through(Pg[0], Rg[0]);
            Line M2 = line_through(Pg[1], Rg[1]);
            Line N1 = line_through(Pg[2], Rg[0]);
            Line N2 = line_through(Pg[3], Rg[1]);
            if (!M1.contains(Qg[0]) || !M2.contains(Qg[1]) || !N1.contains(Qg[1]) ||
                !N2.contains(Qg[2]))
                throw std::logic_error("(2,3,4) joining lines miss their Q points");
            CurveRecipe r;
            add_line(r, L1, 3);
            add_line(r, L2, 2);
            add_line(r, M1, 3);
            add_line(r, M2, 2);
            add_line(r, N1, 2);
            add_line(r, N2, 3);
            r.components.push_back(kernel_component(
                {{Pg[1], 1}, {Pg[2], 1}, {Qg[0], 1}, {Qg[2], 1}, {Rg[0], 1}, {Rg[1], 1}}, 2, 1));
            r.declared_degree = 17;
            r.declared_point_multiplicity = 6;
            r.multiplicity_exact = true;
            return r;
        }
        case 14:
            return recipe_lines_only(t, 3);
        case 15:
            return recipe_lines_only(t, 2);
        case 16:
            return recipe_lines_only(t, 1);
        default:
            throw std::logic_error("build_recipe: unhandled row");
    }
}

int default_degree_cap(const KConfigType& t, int multiplicity) {
    const TableRow* row = match_table_row(t);
    if (row && row->mu_d) {
        auto [mu, d] = row->mu_d(t);
        return static_cast<int>(to_long(ceil_div(Int(multiplicity) * d, Int(mu)))) + 2;
    }
    return multiplicity * t.size() + 2;
}

}  // namespace fatpoints
