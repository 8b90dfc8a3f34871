#include <doctest.h>

#include "bbres/chern.hpp"
#include "bbres/errors.hpp"

using namespace bbres;

namespace {

CohomologyClass hp(int n, int d, const Rational& c) {
    return CohomologyClass::hyperplane_power(n, d, c);
}

} // namespace

TEST_CASE("chern monomial parsing and weight") {
    auto phi = ChernMonomial::parse("c1^2");
    CHECK(phi.alpha == std::vector<int>{2});
    CHECK(phi.weight() == 2);
    CHECK_FALSE(phi.uses_beyond_c1());
    CHECK(phi.str() == "c1^2");

    auto c2 = ChernMonomial::parse("c2");
    CHECK(c2.alpha == std::vector<int>{0, 1});
    CHECK(c2.weight() == 2);
    CHECK(c2.uses_beyond_c1());

    auto mixed = ChernMonomial::parse("c1*c2^3");
    CHECK(mixed.alpha == std::vector<int>{1, 3});
    CHECK(mixed.weight() == 7);
    CHECK(mixed.str() == "c1*c2^3");
    CHECK(ChernMonomial::parse("c1 c2^3").alpha == mixed.alpha);

    auto one = ChernMonomial::parse("1");
    CHECK(one.alpha.empty());
    CHECK(one.weight() == 0);
    CHECK(one.str() == "1");

    CHECK_THROWS_AS(ChernMonomial::parse("c0"), InputError);
    CHECK_THROWS_AS(ChernMonomial::parse("d1"), InputError);
    CHECK_THROWS_AS(ChernMonomial::parse("c1^"), InputError);
    CHECK_THROWS_AS(ChernMonomial::parse(""), InputError);
}

TEST_CASE("cohomology ring truncates past the ambient dimension") {
    const int n = 3;
    auto h = hp(n, 1, Rational(1));
    auto h2 = h * h;
    CHECK(h2.coeff(2) == Rational(1));
    auto h4 = h2 * h2;
    CHECK(h4.is_zero());

    auto a = hp(n, 1, Rational(2)) + hp(n, 2, Rational(-3));
    auto b = hp(n, 0, Rational(1)) + hp(n, 1, Rational(5));
    auto ab = a * b;
    // (2h - 3h^2)(1 + 5h) = 2h + 7h^2 - 15h^3
    CHECK(ab.coeff(1) == Rational(2));
    CHECK(ab.coeff(2) == Rational(7));
    CHECK(ab.coeff(3) == Rational(-15));

    CHECK((a * b) == (b * a));
    CHECK(((a + b) * ab) == (a * ab + b * ab));
    CHECK((a - a).is_zero());
    CHECK((-a + a).is_zero());

    CHECK(hp(n, 2, Rational(16)).str() == "16h^2");
    CHECK((hp(n, 2, Rational(1)) + hp(n, 3, Rational(-3))).str() == "h^2 - 3h^3");
    CHECK((hp(n, 2, Rational(-1, 2))).str() == "-1/2h^2");
    CHECK(CohomologyClass(n).str() == "0");
}

TEST_CASE("component class is degree times a hyperplane power") {
    CHECK(component_class(3, 3, 1) == hp(3, 2, Rational(3)));
    CHECK(component_class(1, 3, 1) == hp(3, 2, Rational(1)));
    CHECK(component_class(2, 4, 2) == hp(4, 3, Rational(2)));
    CHECK_THROWS_AS(component_class(0, 3, 1), InputError);
    CHECK_THROWS_AS(component_class(-1, 3, 1), InputError);
}

TEST_CASE("global check balances residues against the normal determinant class") {
    auto phi = ChernMonomial::parse("c1^2");

    SUBCASE("six-line arrangement") {
        std::vector<GlobalItem> items = {
            {"Z1", 1, Rational(0)},     {"Z2", 1, Rational(0)},
            {"Z3", 1, Rational(0)},     {"Z4", 1, Rational(16, 3)},
            {"Z5", 1, Rational(16, 3)}, {"Z6", 1, Rational(16, 3)},
        };
        auto rep = global_check(3, 1, 4, phi, items);
        CHECK(rep.pass);
        CHECK(rep.lhs == hp(3, 2, Rational(16)));
        CHECK(rep.rhs == hp(3, 2, Rational(16)));
        CHECK(rep.lhs.str() == "16h^2");
        CHECK(rep.discrepancy.is_zero());
    }

    SUBCASE("twisted cubic, conic and line") {
        std::vector<GlobalItem> items = {
            {"Gamma", 3, Rational(25, 6)},
            {"Q", 2, Rational(-1, 2)},
            {"L", 1, Rational(9, 2)},
        };
        auto rep = global_check(3, 1, 4, phi, items);
        CHECK(rep.pass);
        CHECK(rep.rhs == hp(3, 2, Rational(16)));
        CHECK(rep.discrepancy.is_zero());
    }

    SUBCASE("perturbing one residue leaves an exact discrepancy") {
        std::vector<GlobalItem> items = {
            {"Gamma", 3, Rational(25, 6)},
            {"Q", 2, Rational(-1, 2)},
            {"L", 1, Rational(9, 2) + Rational(1)},
        };
        auto rep = global_check(3, 1, 4, phi, items);
        CHECK_FALSE(rep.pass);
        CHECK(rep.discrepancy == hp(3, 2, Rational(1)));
        CHECK(rep.discrepancy.str() == "h^2");
    }

    SUBCASE("discrepancy is linear in a residue shift") {
        for (int num = -3; num <= 3; ++num) {
            Rational delta(num, 2);
            std::vector<GlobalItem> items = {
                {"Gamma", 3, Rational(25, 6) + delta},
                {"Q", 2, Rational(-1, 2)},
                {"L", 1, Rational(9, 2)},
            };
            auto rep = global_check(3, 1, 4, phi, items);
            CHECK(rep.discrepancy == hp(3, 2, delta * Rational(3)));
            CHECK(rep.pass == (num == 0));
        }
    }

    SUBCASE("classes beyond c1 are rejected for rank-one normal data") {
        auto c2 = ChernMonomial::parse("c2");
        std::vector<GlobalItem> items = {{"Z", 1, Rational(1)}};
        CHECK_THROWS_AS(global_check(3, 1, 4, c2, items), InputError);
    }

    SUBCASE("weight must match the expected codimension") {
        auto c1 = ChernMonomial::parse("c1");
        std::vector<GlobalItem> items = {{"Z", 1, Rational(1)}};
        CHECK_THROWS_AS(global_check(3, 1, 4, c1, items), InputError);
    }
}
