#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bbres/errors.hpp"
#include "bbres/ideal.hpp"
#include "bbres/parser.hpp"
#include "bbres/resultant.hpp"
#include "bbres/univariate.hpp"

#include <random>

using namespace bbres;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

MultiPoly P(const std::string& s, const std::vector<std::string>& vars = XY) {
    return parse_poly(s, vars);
}

MultiPoly rand_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<int> expd(0, max_deg);
    std::uniform_int_distribution<long> coef(-6, 6);
    MultiPoly p = MultiPoly::constant(vars, Rational(0));
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(vars.size());
        for (auto& x : e) x = expd(rng);
        p.add_term(e, Rational(coef(rng)));
    }
    return p;
}

// Laplace expansion along the first row: the slow independent check for the
// fraction-free determinant.
MultiPoly det_laplace(const PolyMatrix& M) {
    const int n = M.rows();
    if (n == 0) return MultiPoly::constant({}, Rational(1));
    if (n == 1) return M.at(0, 0);
    MultiPoly acc = MultiPoly::constant(M.at(0, 0).vars(), Rational(0));
    for (int j = 0; j < n; ++j) {
        if (M.at(0, j).is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1, M.at(0, 0).vars());
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = M.at(r, c);
            }
        }
        MultiPoly term = M.at(0, j) * det_laplace(sub);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("rational construction and normalization") {
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("-3/4").str() == "-3/4");
    CHECK(Rational::parse("+2/6").str() == "1/3");
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), MathError);
    CHECK_THROWS_AS((void)Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational::pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), MathError);
    CHECK(Rational(-7, 2) < Rational(-3));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("parser accepts the sample grammar") {
    MultiPoly p = P("x^2 + 2*x*y - 3");
    CHECK(p.coefficient({2, 0}) == Rational(1));
    CHECK(p.coefficient({1, 1}) == Rational(2));
    CHECK(p.coefficient({0, 0}) == Rational(-3));
    CHECK(p.total_degree() == 2);

    CHECK(P("2x y") == P("2*x*y"));
    CHECK(P("-x^2") == -P("x^2"));
    CHECK(P("(-x)^2") == P("x^2"));
    CHECK(P("2^3") == P("8"));
    CHECK(P("x(x + 1)") == P("x^2 + x"));
    CHECK(P("- - x") == P("x"));
    CHECK(P("y^2/2") == P("1/2 y^2"));
    CHECK(P("2/3y^2").coefficient({0, 2}) == Rational(2, 3));
    CHECK(P("x - x").is_zero());
}

TEST_CASE("parser rejects malformed input with byte offsets") {
    CHECK_THROWS_AS((void)P(""), ParseError);
    CHECK_THROWS_AS((void)P("x +"), ParseError);
    CHECK_THROWS_AS((void)P("x ^ -2"), ParseError);
    CHECK_THROWS_AS((void)P("x/(y)"), ParseError);
    CHECK_THROWS_AS((void)P("x/0"), ParseError);
    CHECK_THROWS_AS((void)P("x y z"), ParseError); // z undeclared in {x,y}

    try {
        (void)P("x + qq*y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
        CHECK(std::string(e.what()).find("qq") != std::string::npos);
    }
}

TEST_CASE("parser round trips str()") {
    std::mt19937 rng(20260821);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = rand_poly(rng, XYZ, 4);
        CHECK(parse_poly(p.str(), XYZ) == p);
    }
}

TEST_CASE("polynomial ring axioms on random samples") {
    std::mt19937 rng(41);
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = rand_poly(rng, XY, 3);
        MultiPoly b = rand_poly(rng, XY, 3);
        MultiPoly c = rand_poly(rng, XY, 3);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == MultiPoly::constant(XY, Rational(0)));
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    std::mt19937 rng(42);
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = rand_poly(rng, XY, 4);
        MultiPoly b = rand_poly(rng, XY, 4);
        for (int v = 0; v < 2; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("substitute, compose and evaluate agree") {
    MultiPoly p = P("x^2 y - 3 x + y^3");
    CHECK(p.substitute(0, Rational(2)) == P("4y - 6 + y^3"));
    CHECK(p.evaluate({Rational(2), Rational(-1)}) == Rational(-11));

    // compose with images (x -> x + y, y -> x y)
    MultiPoly q = P("x^2 - y");
    MultiPoly comp = q.compose({P("x + y"), P("x y")});
    CHECK(comp == P("x^2 + 2x y + y^2 - x y"));

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> val(-5, 5);
    for (int i = 0; i < 20; ++i) {
        MultiPoly a = rand_poly(rng, XY, 3);
        Rational px(val(rng)), py(val(rng));
        MultiPoly ix = P("x^2 - y + 1");
        MultiPoly iy = P("x y");
        Rational lhs = a.compose({ix, iy}).evaluate({px, py});
        Rational rhs = a.evaluate({ix.evaluate({px, py}), iy.evaluate({px, py})});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("homogeneity and degree queries") {
    int d = -1;
    CHECK(P("x^3 + x y^2").is_homogeneous(&d));
    CHECK(d == 3);
    CHECK_FALSE(P("x^2 + y").is_homogeneous());
    CHECK(P("0").is_homogeneous());
    CHECK(P("x^2 y").degree_in(1) == 1);
    CHECK(P("0").total_degree() == -1);
    int uv = -1;
    CHECK(P("y^3 - y").is_univariate(&uv));
    CHECK(uv == 1);
    CHECK_FALSE(P("x y").is_univariate());
}

TEST_CASE("jacobian of a plane field") {
    std::vector<MultiPoly> X{P("x^2 - y"), P("x y")};
    PolyMatrix J = jacobian(X);
    CHECK(J.at(0, 0) == P("2x"));
    CHECK(J.at(0, 1) == P("-1"));
    CHECK(J.at(1, 0) == P("y"));
    CHECK(J.at(1, 1) == P("x"));
    CHECK(J.det() == P("2x^2 + y"));
    CHECK(J.trace() == P("3x"));
}

TEST_CASE("fraction-free determinant matches Laplace expansion") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + static_cast<int>(trial % 4);
        PolyMatrix M(n, n, XY);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = rand_poly(rng, XY, 2);
        CHECK(M.det() == det_laplace(M));
    }
}

TEST_CASE("exact division") {
    MultiPoly a = P("x^2 - y^2");
    CHECK(divide_exact(a, P("x - y")) == P("x + y"));
    CHECK_THROWS_AS((void)divide_exact(P("x^2 + 1"), P("x + 1")), MathError);
}

namespace {

void check_basis_contract(const GroebnerBasis& G, const std::vector<MultiPoly>& gens) {
    // every representation row reconstructs its basis element exactly
    for (std::size_t i = 0; i < G.polys.size(); ++i) {
        MultiPoly acc = MultiPoly::constant(G.vars, Rational(0));
        for (std::size_t j = 0; j < gens.size(); ++j) acc += G.reps[i][j] * gens[j];
        CHECK(acc == G.polys[i]);
    }
    // every generator reduces to zero
    for (const auto& g : gens) CHECK(normal_form(g, G).remainder.is_zero());
    // Buchberger criterion: every S-polynomial reduces to zero
    for (std::size_t i = 0; i < G.polys.size(); ++i)
        for (std::size_t j = i + 1; j < G.polys.size(); ++j) {
            Term ti = leading_term(G.polys[i], G.order);
            Term tj = leading_term(G.polys[j], G.order);
            Exponents l = exp_lcm(ti.exps, tj.exps);
            MultiPoly s = MultiPoly::monomial(G.vars, exp_sub(l, ti.exps), Rational(1) / ti.coeff) * G.polys[i] -
                          MultiPoly::monomial(G.vars, exp_sub(l, tj.exps), Rational(1) / tj.coeff) * G.polys[j];
            CHECK(normal_form(s, G).remainder.is_zero());
        }
}

} // namespace

TEST_CASE("groebner basis of simple ideals") {
    SUBCASE("monomial plus variable") {
        Ideal I{{P("y"), P("x^2")}, TermOrder::Grevlex};
        GroebnerBasis G = groebner(I);
        REQUIRE(G.polys.size() == 2);
        CHECK(G.polys[0] == P("y"));
        CHECK(G.polys[1] == P("x^2"));
        check_basis_contract(G, I.gens);
    }
    SUBCASE("coordinate axes in three variables") {
        Ideal I{{parse_poly("y z", XYZ), parse_poly("x z", XYZ), parse_poly("x y", XYZ)},
                TermOrder::Grevlex};
        GroebnerBasis G = groebner(I);
        REQUIRE(G.polys.size() == 3);
        CHECK(G.polys[0] == parse_poly("y z", XYZ));
        CHECK(G.polys[1] == parse_poly("x z", XYZ));
        CHECK(G.polys[2] == parse_poly("x y", XYZ));
        check_basis_contract(G, I.gens);
    }
    SUBCASE("unit ideal collapses to one") {
        Ideal I{{P("x + 1"), P("x")}, TermOrder::Grevlex};
        GroebnerBasis G = groebner(I);
        REQUIRE(G.polys.size() == 1);
        CHECK(G.polys[0] == P("1"));
        check_basis_contract(G, I.gens);
    }
    SUBCASE("linear pair inter-reduces to the variables") {
        Ideal I{{P("x + y"), P("x - y")}, TermOrder::Grevlex};
        GroebnerBasis G = groebner(I);
        REQUIRE(G.polys.size() == 2);
        CHECK(G.polys[0] == P("y"));
        CHECK(G.polys[1] == P("x"));
        check_basis_contract(G, I.gens);
    }
    SUBCASE("random ideals satisfy the basis contract") {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<MultiPoly> gens;
            for (int g = 0; g < 3; ++g) {
                MultiPoly p = rand_poly(rng, XY, 3);
                if (!p.is_zero()) gens.push_back(p);
            }
            if (gens.empty()) continue;
            for (auto order : {TermOrder::Grevlex, TermOrder::Lex}) {
                GroebnerBasis G = groebner({gens, order});
                check_basis_contract(G, gens);
            }
        }
    }
}

TEST_CASE("groebner is idempotent") {
    Ideal I{{P("x^2 + y"), P("x y - 1")}, TermOrder::Grevlex};
    GroebnerBasis G = groebner(I);
    GroebnerBasis G2 = groebner({G.polys, TermOrder::Grevlex});
    CHECK(G.polys == G2.polys);
}

TEST_CASE("normal form returns remainder and cofactors") {
    Ideal I{{P("y"), P("x^2")}, TermOrder::Grevlex};
    GroebnerBasis G = groebner(I);
    MultiPoly f = P("4x^2 + 4x + 1");
    NormalFormResult r = normal_form(f, G);
    CHECK(r.remainder == P("4x + 1"));
    REQUIRE(r.cofactors.size() == 2);
    CHECK(r.cofactors[0].is_zero());
    CHECK(r.cofactors[1] == P("4"));
    MultiPoly acc = r.remainder;
    for (std::size_t i = 0; i < 2; ++i) acc += r.cofactors[i] * G.polys[i];
    CHECK(acc == f);
    CHECK(ideal_contains(G, P("x^2 y + x^4")));
    CHECK_FALSE(ideal_contains(G, P("x + y")));
}

TEST_CASE("quotient dimension") {
    GroebnerOptions opts;
    CHECK(quotient_dimension({{P("y"), P("x^2")}, TermOrder::Grevlex}, opts).dim == 2);
    CHECK(quotient_dimension({{P("x^3"), P("y^4")}, TermOrder::Grevlex}, opts).dim == 12);
    CHECK(quotient_dimension({{P("x + 1"), P("x")}, TermOrder::Grevlex}, opts).dim == 0);
    CHECK_FALSE(quotient_dimension({{P("x y")}, TermOrder::Grevlex}, opts).finite);
    CHECK_FALSE(quotient_dimension({{P("0")}, TermOrder::Grevlex}, opts).finite);
    QuotientDim q = quotient_dimension({{P("x^2 + 1"), P("y - x")}, TermOrder::Grevlex}, opts);
    CHECK(q.finite);
    CHECK(q.dim == 2);
}

TEST_CASE("groebner budget is enforced") {
    GroebnerOptions opts;
    opts.budget = 0;
    Ideal I{{P("x^2 + y"), P("x y - 1")}, TermOrder::Grevlex};
    CHECK_THROWS_AS((void)groebner(I, opts), BudgetExceeded);
}

TEST_CASE("elimination to a univariate generator") {
    SUBCASE("circle meets diagonal") {
        std::vector<MultiPoly> gens{P("x^2 + y^2 - 1"), P("x - y")};
        auto r = eliminate_to_univariate(gens, 0);
        REQUIRE(r.has_value());
        CHECK(r->generator == P("x^2 - 1/2"));
        MultiPoly acc = MultiPoly::constant(XY, Rational(0));
        for (std::size_t j = 0; j < gens.size(); ++j) acc += r->cofactors[j] * gens[j];
        CHECK(acc == r->generator);
    }
    SUBCASE("product with a sibling zero stays a multiple of x") {
        std::vector<MultiPoly> gens{P("x^2 - x"), P("y")};
        auto r = eliminate_to_univariate(gens, 0);
        REQUIRE(r.has_value());
        CHECK(r->generator == P("x^2 - x"));
        auto ry = eliminate_to_univariate(gens, 1);
        REQUIRE(ry.has_value());
        CHECK(ry->generator == P("y"));
    }
    SUBCASE("no univariate relation in a principal ideal") {
        std::vector<MultiPoly> gens{P("x - y")};
        CHECK_FALSE(eliminate_to_univariate(gens, 0).has_value());
    }
}

TEST_CASE("sylvester resultant") {
    SUBCASE("against a linear factor the resultant is evaluation") {
        MultiPoly f = P("x^2 - 2");
        MultiPoly g = P("x - y");
        CHECK(resultant(f, g, 0) == P("y^2 - 2"));
    }
    SUBCASE("circle and diagonal eliminate y") {
        CHECK(resultant(P("x^2 + y^2 - 1"), P("x - y"), 1) == P("2x^2 - 1"));
    }
    SUBCASE("root locations survive elimination") {
        MultiPoly f = P("6x^3 - 7x^2 + 2x + y");
        MultiPoly g = P("y");
        MultiPoly r = resultant(f, g, 1);
        CHECK(r == P("-6x^3 + 7x^2 - 2x"));
        RationalRootsResult roots = rational_roots(uni_from_multi(r, 0));
        REQUIRE(roots.roots.size() == 3);
        CHECK(roots.roots[0].value == Rational(0));
        CHECK(roots.roots[1].value == Rational(1, 2));
        CHECK(roots.roots[2].value == Rational(2, 3));
        CHECK(roots.residual == UniPoly{Rational(1)});
    }
    SUBCASE("shared factor forces a zero resultant") {
        // common root x = 0 for every y: resultant vanishes identically
        CHECK(resultant(P("x y"), P("x (x - 1)"), 0).is_zero());
        CHECK_FALSE(resultant(P("x y - 1"), P("x (x - 1)"), 0).is_zero());
    }
    SUBCASE("constants") {
        CHECK(resultant(P("3"), P("5"), 0) == P("1"));
        CHECK(resultant(P("0"), P("x"), 0).is_zero());
    }
}

TEST_CASE("univariate arithmetic and roots") {
    SUBCASE("divrem identity on random pairs") {
        std::mt19937 rng(123);
        std::uniform_int_distribution<long> coef(-4, 4);
        for (int trial = 0; trial < 30; ++trial) {
            UniPoly a, b;
            for (int i = 0; i < 6; ++i) a.push_back(Rational(coef(rng)));
            for (int i = 0; i < 3; ++i) b.push_back(Rational(coef(rng)));
            uni_trim(a);
            uni_trim(b);
            if (uni_is_zero(b)) continue;
            auto [q, r] = uni_divrem(a, b);
            CHECK(uni_add(uni_mul(q, b), r) == a);
            CHECK(uni_degree(r) < uni_degree(b));
        }
    }
    SUBCASE("gcd of products") {
        UniPoly f = uni_from_multi(P("(x - 1)(x + 2)"), 0);
        UniPoly g = uni_from_multi(P("(x - 1) x"), 0);
        CHECK(uni_gcd(f, g) == uni_from_multi(P("x - 1"), 0));
    }
    SUBCASE("rational roots of a squared factor") {
        RationalRootsResult r = rational_roots(uni_from_multi(P("x^2 (x - 1)^2 (x + 3)"), 0));
        REQUIRE(r.roots.size() == 3);
        CHECK(r.roots[0].value == Rational(-3));
        CHECK(r.roots[0].multiplicity == 1);
        CHECK(r.roots[1].value == Rational(0));
        CHECK(r.roots[1].multiplicity == 2);
        CHECK(r.roots[2].value == Rational(1));
        CHECK(r.roots[2].multiplicity == 2);
    }
    SUBCASE("irrational part is preserved") {
        RationalRootsResult r = rational_roots(uni_from_multi(P("(2x - 3)(x^2 - 2)"), 0));
        REQUIRE(r.roots.size() == 1);
        CHECK(r.roots[0].value == Rational(3, 2));
        CHECK(r.residual == uni_from_multi(P("x^2 - 2"), 0));
    }
    SUBCASE("numeric roots of x^2 - 2") {
        auto z = numeric_roots(uni_from_multi(P("x^2 - 2"), 0));
        REQUIRE(z.size() == 2);
        CHECK(z[0].real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
        CHECK(z[1].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
        CHECK(std::abs(z[0].imag()) < 1e-10);
    }
    SUBCASE("numeric roots of a triple root cluster") {
        auto z = numeric_roots(uni_from_multi(P("(x - 1)^3"), 0));
        REQUIRE(z.size() == 3);
        for (const auto& root : z) CHECK(std::abs(root - std::complex<double>(1.0, 0.0)) < 1e-3);
    }
}
