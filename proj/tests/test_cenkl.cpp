#include <doctest.h>

#include <string>
#include <vector>

#include "bbres/cenkl.hpp"
#include "bbres/errors.hpp"
#include "bbres/parser.hpp"

using namespace bbres;

namespace {

std::vector<std::string> sigma_y_vars(int count) {
    std::vector<std::string> vars;
    for (int i = 1; i <= count; ++i) vars.push_back("s" + std::to_string(i));
    vars.push_back("y");
    return vars;
}

SymPoly sig(const char* text) { return parse_sym(text, SymAlphabet::Sigma); }
SymPoly rho(const char* text) { return parse_sym(text, SymAlphabet::Rho); }

// Elementary symmetric functions of the sample values, index 0 holding 1.
std::vector<Rational> elem_sym(const std::vector<Rational>& xs) {
    std::vector<Rational> e(xs.size() + 1, Rational(0));
    e[0] = Rational(1);
    for (const Rational& x : xs)
        for (int j = static_cast<int>(xs.size()); j >= 1; --j) e[j] += x * e[j - 1];
    return e;
}

Rational at(const std::vector<Rational>& v, int j) {
    return j >= 0 && j < static_cast<int>(v.size()) ? v[j] : Rational(0);
}

}  // namespace

TEST_CASE("symmetric polynomials carry weights and alphabets") {
    CHECK(sig("s1^2").weight() == 2);
    CHECK(sig("s1*s2 - s3").weight() == 3);
    CHECK(sig("5").weight() == 0);
    CHECK(sym_zero(SymAlphabet::Sigma, 2).weight() == -1);
    CHECK(rho("r4").weight() == 4);
    CHECK_THROWS_AS(sig("s1 + s2").weight(), InputError);
    CHECK(sym_generator(SymAlphabet::Rho, 2, 3) == SymPoly{SymAlphabet::Rho, parse_poly("r2", {"r1", "r2", "r3"})});
    CHECK_THROWS_AS(sym_generator(SymAlphabet::Sigma, 4, 3), InputError);
    // the alphabet decides which names the parser accepts
    CHECK_THROWS(parse_sym("s1", SymAlphabet::Rho));
}

TEST_CASE("the rho generators expand through the one-extra-variable identity") {
    CHECK(rho_to_sigma(rho("r1^2")) == parse_poly("s1^2 + 2*s1*y + y^2", sigma_y_vars(1)));
    CHECK(rho_to_sigma(rho("r2")) == parse_poly("s2 + s1*y", sigma_y_vars(2)));
    CHECK(rho_to_sigma(rho("r1*r2 - r3")) ==
          parse_poly("s1*s2 - s3 + s1^2*y + s1*y^2", sigma_y_vars(3)));
    CHECK_THROWS_AS(rho_to_sigma(sig("s1")), InputError);
}

TEST_CASE("decomposition splits off the linear-in-y coefficient") {
    SUBCASE("a single generator") {
        CenklDecomposition dec = decompose(rho("r2"));
        CHECK(dec.ell == 1);
        CHECK(dec.phi == sig("s1"));
        CHECK(dec.phi0 == sig("s2"));
        CHECK(dec.phij.empty());
    }
    SUBCASE("the two-term combination") {
        CenklDecomposition dec = decompose(rho("r1*r2 - r3"));
        CHECK(dec.ell == 2);
        CHECK(dec.phi == sig("s1^2"));
        CHECK(dec.phi0 == sig("s1*s2 - s3"));
        CHECK(dec.phij.size() == 1);
        CHECK(dec.phij.at(2) == sig("s1"));
        CHECK(dec.phi.str() == "s1^2");
        CHECK(dec.phi0.str() == "s1*s2 - s3");
        CHECK(dec.phij.at(2).str() == "s1");
    }
    SUBCASE("a square") {
        CenklDecomposition dec = decompose(rho("r1^2"));
        CHECK(dec.ell == 1);
        CHECK(dec.phi == sig("2*s1"));
        CHECK(dec.phi0 == sig("s1^2"));
        CHECK(dec.phij.at(2) == sig("1"));
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(decompose(rho("r1 + r2")), InputError);
        CHECK_THROWS_AS(decompose(sym_zero(SymAlphabet::Rho, 2)), InputError);
        CHECK_THROWS_AS(decompose(sig("s1")), InputError);
        CHECK_THROWS_AS(decompose(rho("3")), InputError);
    }
}

TEST_CASE("lifting picks the deterministic low-degree representative") {
    CHECK(lift(sig("1")) == rho("r1"));
    CHECK(lift(sig("s1")) == rho("r2"));
    CHECK(lift(sig("s2")) == rho("r3"));
    CHECK(lift(sig("s3")) == rho("r4"));
    CHECK(lift(sig("s1^2")) == rho("r1*r2 - r3"));
    CHECK(lift(sig("s1*s2")) == rho("1/2*r2^2"));
    CHECK(lift(sig("s1^3")) == rho("r1^2*r2 - r2^2"));
    CHECK(lift(sym_zero(SymAlphabet::Sigma, 1)).is_zero());
    CHECK_THROWS_AS(lift(rho("r1")), InputError);
    CHECK_THROWS_AS(lift(sig("s1 + s2")), InputError);
}

TEST_CASE("decompose undoes lift on the linear slot") {
    const char* monomials[] = {"1", "s1", "s2", "s1^2", "s3", "s1*s2", "s1^3"};
    for (const char* text : monomials) {
        CAPTURE(text);
        SymPoly phi = sig(text);
        CenklDecomposition dec = decompose(lift(phi));
        CHECK(dec.phi == phi);
        CHECK(dec.ell == phi.weight());
    }
}

TEST_CASE("reassembly reproduces the input over the low-weight basis") {
    // sample points keep the check honest against the actual symmetric
    // functions rather than the implementation's own expansion
    std::vector<Rational> xs = {Rational::parse("3/2"), Rational::parse("-2/3"), Rational(5),
                                Rational::parse("-1/4")};
    Rational y0 = Rational::parse("7/3");
    std::vector<Rational> sigv = elem_sym(xs);
    std::vector<Rational> xsy = xs;
    xsy.push_back(y0);
    std::vector<Rational> rhov = elem_sym(xsy);
    for (int j = 1; j <= 5; ++j) CHECK(at(rhov, j) == at(sigv, j) + y0 * at(sigv, j - 1));

    const char* basis[] = {"r1",   "r2",    "r1^2", "r3",      "r1*r2", "r1^3",
                           "r4",   "r1*r3", "r2^2", "r1^2*r2", "r1^4"};
    for (const char* text : basis) {
        CAPTURE(text);
        SymPoly psi = rho(text);
        int count = psi.generators();
        int w = psi.weight();
        CenklDecomposition dec = decompose(psi);

        CHECK(dec.ell == w - 1);
        if (!dec.phi.is_zero()) CHECK(dec.phi.weight() == w - 1);
        CHECK(dec.phi0.weight() == w);
        for (const auto& [j, part] : dec.phij) CHECK(part.weight() == w - j);

        // exact polynomial identity in the sigma alphabet plus y
        std::vector<std::string> vars = sigma_y_vars(count);
        Exponents ye(vars.size(), 0);
        ye[count] = 1;
        MultiPoly yv = MultiPoly::monomial(vars, ye, Rational(1));
        MultiPoly rhs = dec.phi0.poly.with_vars(vars) + dec.phi.poly.with_vars(vars) * yv;
        for (const auto& [j, part] : dec.phij) rhs += part.poly.with_vars(vars) * yv.pow(j);
        CHECK(rho_to_sigma(psi) == rhs);

        // numeric identity on genuine elementary symmetric values
        std::vector<Rational> rpoint(rhov.begin() + 1, rhov.begin() + 1 + count);
        Rational lhs = psi.poly.evaluate(rpoint);
        auto eval_part = [&](const SymPoly& part) {
            std::vector<Rational> spoint(sigv.begin() + 1, sigv.begin() + 1 + part.generators());
            return part.poly.evaluate(spoint);
        };
        Rational total = eval_part(dec.phi0) + eval_part(dec.phi) * y0;
        for (const auto& [j, part] : dec.phij) total += eval_part(part) * Rational::pow(y0, j);
        CHECK(lhs == total);
    }
}

TEST_CASE("each projectivization step raises the singular dimension by one") {
    CHECK(bundle_dimension_shift(0, 2) == std::pair<int, int>{1, 2});
    // starting s below the leaf dimension, expected position is s-1 steps away
    int dim_sing = 1, dim_leaf = 5;
    int steps = 0;
    while (dim_sing < dim_leaf - 1) {
        auto [s, f] = bundle_dimension_shift(dim_sing, dim_leaf);
        dim_sing = s;
        dim_leaf = f;
        ++steps;
    }
    CHECK(steps == 3);
    CHECK_THROWS_AS(bundle_dimension_shift(1, 1), InputError);
    CHECK_THROWS_AS(bundle_dimension_shift(3, 2), InputError);
    CHECK_THROWS_AS(bundle_dimension_shift(-1, 2), InputError);
}

TEST_CASE("the bundle ring closes its defining relations") {
    BundleRing ring(3, 4);
    CHECK(ring.xi() * ring.xi() ==
          ring.scalar(Rational(8)) * ring.h() * ring.xi() -
              ring.scalar(Rational(16)) * ring.h_power(2));
    CHECK((ring.xi() - ring.scalar(Rational(4)) * ring.h()).pow(2).is_zero());
    CHECK(ring.tau().pow(2).is_zero());
    CHECK(ring.h_power(4).is_zero());
    CHECK(ring.tau().str() == "-8h + 2xi");
    CHECK(ring.tau().homogeneous_degree() == 1);
    CHECK((ring.one() + ring.h()).homogeneous_degree() == -2);
    CHECK(ring.zero().homogeneous_degree() == -1);
    CHECK((ring.h_power(2) * ring.xi()).homogeneous_degree() == 3);
    BundleRing other(3, 5);
    CHECK_THROWS_AS(ring.h() + other.h(), InputError);
    CHECK_THROWS_AS(BundleRing(0, 4), InputError);
    CHECK_THROWS_AS(BundleRing(3, 0), InputError);
}

TEST_CASE("the downstairs residue class evaluates on the bundle ring") {
    SUBCASE("the fourth line of the logarithmic fixture") {
        CenklDecomposition dec = decompose(lift(sig("s1^2")));
        BundleClass out = rhs_theorem5(Rational::parse("16/3"), 1, 3, 1, 4, dec);
        BundleRing ring(3, 4);
        BundleClass want = ring.scalar(Rational::parse("32/3")) * ring.h_power(2) * ring.xi() -
                           ring.scalar(Rational::parse("128/3")) * ring.h_power(3);
        CHECK(out == want);
        CHECK(out.str() == "-128/3h^3 + 32/3h^2*xi");
        // everything sits in one graded piece, real degree six
        CHECK(out.homogeneous_degree() == 3);
    }
    SUBCASE("zero data gives the zero class") {
        CenklDecomposition dec;
        dec.ell = 2;
        dec.phi = sig("s1^2");
        dec.phi0 = sym_zero(SymAlphabet::Sigma, 1);
        BundleClass out = rhs_theorem5(Rational(0), 1, 3, 1, 4, dec);
        CHECK(out.is_zero());
    }
    SUBCASE("a constant-term contribution survives while higher fiber powers die") {
        CenklDecomposition dec;
        dec.ell = 2;
        dec.phi = sig("s1^2");
        dec.phi0 = sig("s1^3");
        BundleClass out = rhs_theorem5(Rational(1), 1, 3, 1, 2, dec);
        BundleRing ring(3, 2);
        CHECK(out == ring.scalar(Rational(4)) * ring.h_power(3) +
                         ring.scalar(Rational(2)) * ring.h_power(2) * ring.xi());
        dec.phij[2] = sig("s1");
        CHECK(rhs_theorem5(Rational(1), 1, 3, 1, 2, dec) == out);
    }
    SUBCASE("rejections") {
        CenklDecomposition dec = decompose(lift(sig("s1^2")));
        CHECK_THROWS_AS(rhs_theorem5(Rational(1), 1, 3, 2, 4, dec), InputError);
        CHECK_THROWS_AS(rhs_theorem5(Rational(1), 0, 3, 1, 4, dec), InputError);
        CenklDecomposition wrong = decompose(lift(sig("s1^3")));
        CHECK_THROWS_AS(rhs_theorem5(Rational(1), 1, 3, 1, 4, wrong), InputError);
    }
}
