#pragma once

#include "bbres/multipoly.hpp"

#include <complex>
#include <utility>

namespace bbres {

// Dense univariate polynomial: coeffs[i] is the coefficient of x^i, with no
// trailing zero entries. The zero polynomial is the empty vector.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p);
int uni_degree(const UniPoly& p); // -1 for zero
bool uni_is_zero(const UniPoly& p);

// Requires p to involve at most the single variable `var`.
UniPoly uni_from_multi(const MultiPoly& p, int var);
MultiPoly uni_to_multi(const UniPoly& u, std::vector<std::string> vars, int var);

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const Rational& c);
UniPoly uni_monic(const UniPoly& a);
UniPoly uni_derivative(const UniPoly& a);

// Quotient and remainder; throws MathError on a zero divisor.
std::pair<UniPoly, UniPoly> uni_divrem(const UniPoly& a, const UniPoly& b);

// Monic greatest common divisor.
UniPoly uni_gcd(UniPoly a, UniPoly b);

Rational uni_eval(const UniPoly& p, const Rational& x);
std::complex<double> uni_eval(const UniPoly& p, const std::complex<double>& x);

struct RationalRoot {
    Rational value;
    int multiplicity = 0;
};

// All rational roots with multiplicities, plus the monic cofactor with no
// rational roots left ([1] when the polynomial splits over Q).
struct RationalRootsResult {
    std::vector<RationalRoot> roots;
    UniPoly residual;
};

RationalRootsResult rational_roots(const UniPoly& p);

// Numeric roots (with multiplicity, repeated) of a nonzero polynomial,
// sorted by real part then imaginary part. Deterministic.
std::vector<std::complex<double>> numeric_roots(const UniPoly& p);

// Same solver on complex coefficients (c[i] multiplies x^i). Near-zero leading
// coefficients are trimmed relative to the largest one.
std::vector<std::complex<double>> numeric_roots_c(std::vector<std::complex<double>> c);

} // namespace bbres
