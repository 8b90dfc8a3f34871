#include <doctest.h>

#include "bbres/errors.hpp"
#include "bbres/martinelli.hpp"
#include "bbres/parser.hpp"

using namespace bbres;

namespace {

std::vector<MultiPoly> forms(const std::vector<std::string>& vars,
                             const std::vector<std::string>& texts) {
    std::vector<MultiPoly> out;
    for (const auto& s : texts) out.push_back(parse_poly(s, vars));
    return out;
}

VectorFieldGerm field(const std::vector<std::string>& vars,
                      const std::vector<std::string>& comps) {
    VectorFieldGerm X;
    X.vars = vars;
    X.components = forms(vars, comps);
    return X;
}

AffinePoint origin2() {
    AffinePoint p;
    p.coords = {Rational(0), Rational(0)};
    return p;
}

const ChernMonomial C1SQ = ChernMonomial::parse("c1^2");
const ChernMonomial C2 = ChernMonomial::parse("c2");

} // namespace

TEST_CASE("the identity field pins the orientation") {
    auto r = bb_martinelli(field({"x", "y"}, {"x", "y"}), origin2(), C2, 0.7, 1e-6);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.evaluations > 0);
    CHECK(r.radius == 0.7);
}

TEST_CASE("quadrature matches the exact residues at simple zeros") {
    SUBCASE("a traceless linear field integrates to zero") {
        auto r = bb_martinelli(field({"x", "y"}, {"x", "-y"}), origin2(), C1SQ, 0.5, 1e-6);
        CHECK(std::abs(r.value) < 1e-6);
    }

    SUBCASE("the transversal field of the fourth line") {
        auto r = bb_martinelli(field({"x", "t"}, {"-3x", "-t"}), origin2(), C1SQ, 0.5, 1e-6);
        CHECK(r.value == doctest::Approx(16.0 / 3.0).epsilon(1e-6));
    }

    SUBCASE("the cubic-conic-line transversal field at the origin") {
        auto r = bb_martinelli(field({"x", "z"}, {"2x^2 - x - z", "3x*z - 2z"}), origin2(), C1SQ,
                               0.1, 1e-5);
        CHECK(r.value == doctest::Approx(4.5).epsilon(1e-4));
    }
}

TEST_CASE("quadrature reproduces the transformation law at degenerate zeros") {
    SUBCASE("a double zero") {
        auto r = bb_martinelli(field({"x", "y"}, {"x^2", "y"}), origin2(), C1SQ, 0.5, 1e-5);
        CHECK(r.value == doctest::Approx(4.0).epsilon(1e-4));
    }

    SUBCASE("a multiplicity-four zero") {
        auto r = bb_martinelli(field({"x", "y"}, {"x^2 - x*y", "y^2"}), origin2(), C1SQ, 0.4,
                               1e-5);
        CHECK(r.value == doctest::Approx(8.0).epsilon(1e-4));
    }
}

TEST_CASE("nearby zeros invalidate the integration sphere") {
    auto X = field({"x", "z"}, {"2x^2 - x - z", "3x*z - 2z"});
    CHECK_THROWS_AS(bb_martinelli(X, origin2(), C1SQ, 1.0, 1e-5), InputError);

    auto Y = field({"x", "y"}, {"x^2 - x", "y"});
    CHECK_THROWS_AS(bb_martinelli(Y, origin2(), C1SQ, 0.95, 1e-5), InputError);

    AffinePoint q;
    q.coords = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(bb_martinelli(Y, q, C1SQ, 0.3, 1e-5), InputError);
}

TEST_CASE("the value is stable across radii") {
    auto rep = radius_stability(field({"x", "y"}, {"x^2", "y"}), origin2(), C1SQ,
                                {0.3, 0.5, 0.8}, 1e-4);
    CHECK(rep.pass);
    CHECK(rep.runs.size() == 3);
    for (const auto& run : rep.runs) CHECK(run.value == doctest::Approx(4.0).epsilon(1e-3));

    auto ex2 = radius_stability(field({"x", "z"}, {"2x^2 - x - z", "3x*z - 2z"}), origin2(),
                                C1SQ, {0.1, 0.2}, 1e-4);
    CHECK(ex2.pass);
    for (const auto& run : ex2.runs) CHECK(run.value == doctest::Approx(4.5).epsilon(1e-3));
}

TEST_CASE("budget exhaustion raises a convergence error") {
    CHECK_THROWS_AS(
        bb_martinelli(field({"x", "y"}, {"x^2", "y"}), origin2(), C1SQ, 0.5, 1e-6, 1000),
        ConvergenceError);
}
