#include <doctest.h>

#include "fatpoints/bezout.hpp"
#include "fatpoints/table.hpp"
#include "fatpoints/kconfig.hpp"

using namespace fatpoints;

namespace {

ProjPoint pt(long a, long b, long c) { return ProjPoint::of_ints(a, b, c); }

FatPointScheme uniform_standard(const KConfigType& t, int mult) {
    return FatPointScheme::uniform(standard_k_config(t), mult);
}

}  // namespace

TEST_CASE("forced-multiplicity ceiling") {
    CHECK(mu_fixed_multiplicity({1, 1}, 1) == 1);
    CHECK(mu_fixed_multiplicity({8, 8, 8, 8, 8, 8}, 21) == 6);
    CHECK(mu_fixed_multiplicity({3, 3, 3}, 9) == 0);
    CHECK(mu_fixed_multiplicity({2, 2}, 9) == 0);  // clamped, not negative
    CHECK_THROWS_AS(mu_fixed_multiplicity({5}, 3), std::invalid_argument);
}

TEST_CASE("reduction by a component") {
    Line l = Line::of_ints(0, 0, 1);
    FatPointScheme three(
        {{pt(1, 0, 0), 1}, {pt(1, 1, 0), 1}, {pt(1, 2, 0), 1}});
    auto [res, d] = reduce_by_component(three, 2, CurveComponent{l, 1}, 1);
    CHECK(res.empty());
    CHECK(d == 1);

    // removing 5 copies of the long line from the (1,5,6) scheme at
    // multiplicity 8 drops its points to 3 and the degree to 16
    FatPointScheme z = uniform_standard(KConfigType({1, 5, 6}), 8);
    auto [res2, d2] = reduce_by_component(z, 21, CurveComponent{l, 1}, 5);
    CHECK(d2 == 16);
    for (const auto& [p, m] : res2.supports()) CHECK(m == (l.contains(p) ? 3 : 8));
    CHECK(res2.size() == z.size());

    // clamping at zero
    FatPointScheme low({{pt(1, 0, 0), 1}, {pt(1, 3, 0), 3}});
    auto [res3, d3] = reduce_by_component(low, 4, CurveComponent{l, 1}, 2);
    CHECK(d3 == 2);
    REQUIRE(res3.size() == 1);
    CHECK(res3.supports()[0].second == 1);

    CHECK_THROWS_AS(reduce_by_component(low, 4, CurveComponent{l, 1}, 5), std::invalid_argument);
}

TEST_CASE("reduction is degree-additive") {
    Line l = Line::of_ints(0, 0, 1);
    FatPointScheme z = uniform_standard(KConfigType({1, 5, 6}), 8);
    auto [a1, d1] = reduce_by_component(z, 21, CurveComponent{l, 1}, 2);
    auto [a2, d2] = reduce_by_component(a1, d1, CurveComponent{l, 1}, 3);
    auto [b1, e1] = reduce_by_component(z, 21, CurveComponent{l, 1}, 5);
    CHECK(a2 == b1);
    CHECK(d2 == e1);
}

TEST_CASE("intersection-count excess forces a component") {
    // line through two simple points in degree 1
    Line l = Line::of_ints(0, 0, 1);
    FatPointScheme two({{pt(1, 0, 0), 1}, {pt(1, 1, 0), 1}});
    auto step = bezout_fixed_check(two, 1, CurveComponent{l, 1});
    REQUIRE(step.has_value());
    CHECK(step->forced_multiplicity == 1);
    auto& j = std::get<BezoutExcessData>(step->justification);
    CHECK(j.intersection_count == 2);
    CHECK(j.degree_product == 1);

    // the interpolated conic of (1,2,4) against 3X in degree 6:
    // count 15 beats 2*6
    KConfigType t({1, 2, 4});
    CurveRecipe recipe = build_recipe(t);
    CurveComponent conic;
    for (const auto& c : recipe.components)
        if (std::holds_alternative<HomPoly>(c.geom)) conic = c;
    REQUIRE(std::holds_alternative<HomPoly>(conic.geom));
    FatPointScheme z = uniform_standard(t, 3);
    auto step2 = bezout_fixed_check(z, 6, conic);
    REQUIRE(step2.has_value());
    auto& j2 = std::get<BezoutExcessData>(step2->justification);
    CHECK(j2.intersection_count == 15);
    CHECK(j2.degree_product == 12);

    // a conic meeting only 3 simple points is not forced
    HomPoly q(2, {Int(0), Int(0), Int(1), Int(-1), Int(0), Int(0)});  // x0 x2 - x1^2
    FatPointScheme th({{pt(1, 0, 0), 1}, {pt(1, 1, 1), 1}, {pt(1, 2, 4), 1}});
    CHECK_FALSE(bezout_fixed_check(th, 2, CurveComponent{q, 1}).has_value());
}

TEST_CASE("certificate: two simple points in degree 0") {
    FatPointScheme two({{pt(1, 0, 0), 1}, {pt(1, 1, 0), 1}});
    auto search = emptiness_certificate(two, 0, {});
    REQUIRE(search.certificate.has_value());
    CHECK(search.certificate->terminal.reason == TerminalReason::PointExceedsDegree);
    CHECK(verify_certificate(*search.certificate));
}

TEST_CASE("certificate: two generic lines at degree s*m - 1, lines stripped until contradiction") {
    auto cfg = generic_k_config(KConfigType({2, 3}), 23);
    // restrict to 2 points on each line, all simple: the minimal two-line case
    std::vector<std::pair<ProjPoint, int>> s;
    for (int i = 0; i < 2; ++i) {
        s.emplace_back(cfg.groups[0][i], 1);
        s.emplace_back(cfg.groups[1][i], 1);
    }
    FatPointScheme z(s);
    auto search = emptiness_certificate(z, 1, {CurveComponent{cfg.lines[0], 1},
                                               CurveComponent{cfg.lines[1], 1}});
    REQUIRE(search.certificate.has_value());
    const auto& cert = *search.certificate;
    // the first line is forced once; stripping it leaves conditions that no
    // degree-0 form can meet
    REQUIRE(cert.steps.size() == 1);
    CHECK(std::get<Line>(cert.steps[0].component.geom) == cfg.lines[0]);
    CHECK(cert.steps[0].forced_multiplicity == 1);
    CHECK(verify_certificate(cert));
    CHECK(dim_linear_system({z, 1}).dimension == 0);
}

TEST_CASE("certificate for the (1,5,6) system at degree 21, cross-checked by rank") {
    KConfigType t({1, 5, 6});
    FatPointScheme z = uniform_standard(t, 8);
    auto hints = recipe_hints(build_recipe(t));
    auto search = emptiness_certificate(z, 21, hints);
    REQUIRE(search.certificate.has_value());
    CHECK(verify_certificate(*search.certificate));
    CHECK(certify_empty(z, 21).empty);
}

TEST_CASE("certificates agree with exact rank on every terminal kind produced here") {
    // six general points at degree 2: no line is forced (pairs sum to 2 < 3)
    // and no point exceeds the degree, so the final exact rank closes it
    FatPointScheme gen({{pt(1, 0, 0), 1},
                        {pt(1, 1, 1), 1},
                        {pt(1, -1, 2), 1},
                        {pt(1, 3, -1), 1},
                        {pt(1, -2, -3), 1},
                        {pt(1, 5, 2), 1}});
    auto search = emptiness_certificate(gen, 2, {});
    REQUIRE(search.certificate.has_value());
    CHECK(search.certificate->terminal.reason == TerminalReason::ResidualEmptyByCount);
    CHECK(verify_certificate(*search.certificate));
    CHECK(dim_linear_system({gen, 2}).dimension == 0);

    // five of them leave the one conic: no certificate, honest inconclusive
    FatPointScheme five({{pt(1, 0, 0), 1},
                         {pt(1, 1, 1), 1},
                         {pt(1, -1, 2), 1},
                         {pt(1, 3, -1), 1},
                         {pt(1, -2, -3), 1}});
    auto nothing = emptiness_certificate(five, 2, {});
    CHECK_FALSE(nothing.certificate.has_value());
    CHECK(dim_linear_system({five, 2}).dimension > 0);
}

TEST_CASE("tampered certificates replay to false") {
    KConfigType t({1, 5, 6});
    FatPointScheme z = uniform_standard(t, 8);
    auto search = emptiness_certificate(z, 21, recipe_hints(build_recipe(t)));
    REQUIRE(search.certificate.has_value());
    ReductionCertificate good = *search.certificate;
    REQUIRE(verify_certificate(good));

    ReductionCertificate bumped = good;
    REQUIRE(!bumped.steps.empty());
    bumped.steps[0].forced_multiplicity += 1;
    // keep the stored justification: the replayed ceiling now disagrees
    CHECK_FALSE(verify_certificate(bumped));

    ReductionCertificate wrong_terminal = good;
    wrong_terminal.terminal.reason = TerminalReason::DegreeExhausted;
    wrong_terminal.terminal.overflow_component = CurveComponent{Line::of_ints(0, 0, 1), 1};
    wrong_terminal.terminal.overflow_forced = 99;
    CHECK_FALSE(verify_certificate(wrong_terminal));
}

TEST_CASE("certificate JSON round trip") {
    KConfigType t({1, 2, 4});
    FatPointScheme z = uniform_standard(t, 3);
    auto hints = recipe_hints(build_recipe(t));
    auto search = emptiness_certificate(z, 6, hints);
    REQUIRE(search.certificate.has_value());
    std::string text = certificate_to_json(*search.certificate);
    ReductionCertificate back = certificate_from_json(text);
    CHECK(back.initial == search.certificate->initial);
    CHECK(back.initial_degree == search.certificate->initial_degree);
    CHECK(back.steps.size() == search.certificate->steps.size());
    CHECK(back.terminal.reason == search.certificate->terminal.reason);
    CHECK(verify_certificate(back));
    // byte-stable across runs on identical inputs
    auto search2 = emptiness_certificate(z, 6, hints);
    CHECK(certificate_to_json(*search2.certificate) == text);
}

TEST_CASE("soundness sweep: every certificate produced here implies an empty system") {
    std::vector<std::pair<KConfigType, std::pair<int, int>>> cases = {
        {KConfigType({2, 3}), {1, 2}},      // alpha(mX) = 2m
        {KConfigType({3, 4, 5}), {1, 3}},   // alpha(mX) = 3m
        {KConfigType({1, 2, 4}), {3, 7}},   // alpha(3X) = 7
        {KConfigType({1, 2, 6}), {2, 5}},   // alpha(2X) = 5
    };
    for (const auto& [t, md] : cases) {
        auto [mult, deg] = md;
        CAPTURE(t.str());
        FatPointScheme z = uniform_standard(t, mult);
        std::vector<CurveComponent> hints;
        if (match_table_row(t) && match_table_row(t)->has_recipe)
            hints = recipe_hints(build_recipe(t));
        auto search = emptiness_certificate(z, deg - 1, hints);
        REQUIRE(search.certificate.has_value());
        CHECK(verify_certificate(*search.certificate));
        CHECK(certify_empty(z, deg - 1).empty);
    }
}
