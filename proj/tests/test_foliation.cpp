#include <doctest.h>

#include "bbres/foliation.hpp"
#include "bbres/parser.hpp"
#include "bbres/errors.hpp"

using namespace bbres;

namespace {

const std::vector<std::string> P3 = {"x", "y", "z", "t"};
const std::vector<std::string> P3W = {"x", "y", "z", "w"};

std::vector<MultiPoly> forms(const std::vector<std::string>& vars,
                             const std::vector<std::string>& texts) {
    std::vector<MultiPoly> out;
    for (const auto& s : texts) out.push_back(parse_poly(s, vars));
    return out;
}

FoliationSpec six_lines() {
    return make_foliation(3, 1, P3, forms(P3, {"y*z*t", "x*z*t", "x*y*t", "-3x*y*z"}));
}

FoliationSpec cubic_conic_line() {
    return make_foliation(3, 1, P3W,
                          forms(P3W, {"2y^2z - 3x*z*w", "3z^2w - x*y*z",
                                      "-x*y^2 + 2x^2w - y*z*w", "x^2z - 2y*z^2"}));
}

} // namespace

TEST_CASE("charts enumerate the affine variables") {
    Chart ct = make_chart(P3, std::string("t"));
    CHECK(ct.n == 3);
    CHECK(ct.chart_id == 3);
    CHECK(ct.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(ct.affine_index("z") == 2);
    CHECK(ct.affine_index("t") == -1);

    Chart cy = make_chart(P3, 1);
    CHECK(cy.vars == std::vector<std::string>{"x", "z", "t"});

    CHECK_THROWS_AS(make_chart(P3, std::string("q")), InputError);
    CHECK_THROWS_AS(make_chart(P3, 7), InputError);
}

TEST_CASE("foliation constructor validates the coefficient degrees") {
    auto F = six_lines();
    CHECK(F.twist == 4);
    CHECK(euler_contraction(F).is_zero());

    auto G = cubic_conic_line();
    CHECK(G.twist == 4);
    CHECK(euler_contraction(G).is_zero());

    CHECK_THROWS_AS(make_foliation(3, 1, P3, forms(P3, {"x^2", "y", "0", "0"})), InputError);
    CHECK_THROWS_AS(make_foliation(3, 1, P3, forms(P3, {"x^2 + y", "0", "0", "0"})), InputError);
    CHECK_THROWS_AS(make_foliation(3, 1, P3, forms(P3, {"0", "0", "0", "0"})), InputError);
    CHECK_THROWS_AS(make_foliation(3, 1, P3, forms(P3, {"y*z*t", "x*z*t", "x*y*t"})), InputError);
}

TEST_CASE("dehomogenization drops the chart coordinate") {
    auto F = six_lines();

    Chart ct = make_chart(P3, std::string("t"));
    auto at = dehomogenize(F, ct);
    CHECK(at == forms(ct.vars, {"y*z", "x*z", "x*y"}));

    Chart cy = make_chart(P3, std::string("y"));
    auto ay = dehomogenize(F, cy);
    CHECK(ay == forms(cy.vars, {"z*t", "x*t", "-3x*z"}));

    auto G = cubic_conic_line();
    Chart cw = make_chart(P3W, std::string("w"));
    auto aw = dehomogenize(G, cw);
    CHECK(aw == forms(cw.vars, {"2y^2z - 3x*z", "3z^2 - x*y*z", "-x*y^2 + 2x^2 - y*z"}));

    // a contraction that misses the Euler identity is rejected
    auto bad = F;
    bad.form[3] = parse_poly("-2x*y*z", P3);
    CHECK_THROWS_AS(dehomogenize(bad, ct), InputError);
}

TEST_CASE("rehomogenization inverts dehomogenization") {
    auto F = six_lines();
    for (int id = 0; id <= 3; ++id) {
        Chart c = make_chart(P3, id);
        CHECK(rehomogenize(dehomogenize(F, c), c) == F.form);
    }
    auto G = cubic_conic_line();
    Chart cw = make_chart(P3W, std::string("w"));
    CHECK(rehomogenize(dehomogenize(G, cw), cw) == G.form);

    CHECK_THROWS_AS(rehomogenize(forms({"x", "y"}, {"1", "0"}), make_chart(P3, 3)),
                    InputError);
}

TEST_CASE("disc restriction keeps the free coefficients") {
    auto F = six_lines();

    SUBCASE("first line, chart t, slice z = 1") {
        DiscSlice s;
        s.chart = make_chart(P3, std::string("t"));
        s.fixed = {{"z", Rational(1)}};
        s.free_vars = {"x", "y"};
        auto r = restrict_to_disc(dehomogenize(F, s.chart), s);
        CHECK(r == forms({"x", "y"}, {"y", "x"}));
        auto X = dual_vector_field_2d(r);
        CHECK(X.components == forms({"x", "y"}, {"x", "-y"}));
    }

    SUBCASE("fourth line, chart y, slice z = 1") {
        DiscSlice s;
        s.chart = make_chart(P3, std::string("y"));
        s.fixed = {{"z", Rational(1)}};
        s.free_vars = {"x", "t"};
        auto r = restrict_to_disc(dehomogenize(F, s.chart), s);
        CHECK(r == forms({"x", "t"}, {"t", "-3x"}));
        auto X = dual_vector_field_2d(r);
        CHECK(X.components == forms({"x", "t"}, {"-3x", "-t"}));
    }

    SUBCASE("free variables listed out of chart order are honored") {
        DiscSlice s;
        s.chart = make_chart(P3, std::string("y"));
        s.fixed = {{"z", Rational(1)}};
        s.free_vars = {"t", "x"};
        auto r = restrict_to_disc(dehomogenize(F, s.chart), s);
        CHECK(r == forms({"t", "x"}, {"-3x", "t"}));
    }

    SUBCASE("coefficients that never involve the fixed variable pass through") {
        auto aff = forms({"x", "y", "z"}, {"y^2 + x", "x*y", "z"});
        DiscSlice s;
        s.chart = make_chart(P3, std::string("t"));
        s.fixed = {{"z", Rational(5)}};
        s.free_vars = {"x", "y"};
        auto r = restrict_to_disc(aff, s);
        CHECK(r == forms({"x", "y"}, {"y^2 + x", "x*y"}));
    }

    SUBCASE("restriction of the cubic-conic-line form to its disc") {
        auto G = cubic_conic_line();
        DiscSlice s;
        s.chart = make_chart(P3W, std::string("w"));
        s.fixed = {{"y", Rational(1)}};
        s.free_vars = {"x", "z"};
        auto r = restrict_to_disc(dehomogenize(G, s.chart), s);
        CHECK(r == forms({"x", "z"}, {"2z - 3x*z", "2x^2 - x - z"}));
        auto X = dual_vector_field_2d(r);
        CHECK(X.components == forms({"x", "z"}, {"2x^2 - x - z", "3x*z - 2z"}));
    }

    SUBCASE("a disc on which the form vanishes identically is rejected") {
        DiscSlice s;
        s.chart = make_chart(P3, std::string("t"));
        s.fixed = {{"x", Rational(0)}};
        s.free_vars = {"y", "z"};
        CHECK_THROWS_AS(restrict_to_disc(dehomogenize(F, s.chart), s), InputError);
    }

    SUBCASE("assignments must partition the chart variables") {
        auto aff = dehomogenize(F, make_chart(P3, std::string("t")));
        DiscSlice s;
        s.chart = make_chart(P3, std::string("t"));
        s.fixed = {{"z", Rational(1)}};
        s.free_vars = {"x"};
        CHECK_THROWS_AS(restrict_to_disc(aff, s), InputError);
        s.free_vars = {"x", "z"};
        CHECK_THROWS_AS(restrict_to_disc(aff, s), InputError);
        s.free_vars = {"x", "q"};
        CHECK_THROWS_AS(restrict_to_disc(aff, s), InputError);
    }
}

TEST_CASE("dual field swaps coefficients with one sign") {
    auto f = forms({"x", "y"}, {"y", "x"});
    auto X = dual_vector_field_2d(f);
    CHECK(X.vars == std::vector<std::string>{"x", "y"});
    CHECK(X.components == forms({"x", "y"}, {"x", "-y"}));
    CHECK_THROWS_AS(dual_vector_field_2d(forms({"x", "y"}, {"0", "0"})), InputError);
    CHECK_THROWS_AS(dual_vector_field_2d(forms({"x", "y"}, {"x"})), InputError);
}

TEST_CASE("normal determinant degree and point helpers") {
    auto F = six_lines();
    auto nd = det_normal_degree(F);
    CHECK(nd.m == 4);
    CHECK(nd.c1 == CohomologyClass::hyperplane_power(3, 1, Rational(4)));
    CHECK((nd.c1 * nd.c1) == CohomologyClass::hyperplane_power(3, 2, Rational(16)));

    auto lin = make_foliation(3, 1, P3, forms(P3, {"y", "-x", "0", "0"}));
    CHECK(det_normal_degree(lin).m == 2);

    AffinePoint p;
    p.coords = {Rational(1, 2), Rational(-2)};
    auto a = point_approx(p);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == std::complex<double>(0.5, 0.0));
    CHECK(a[1] == std::complex<double>(-2.0, 0.0));
}
