#pragma once

#include "bbres/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace bbres {

// Exponent vector; one entry per variable of the owning polynomial.
using Exponents = std::vector<int>;

int exp_total_degree(const Exponents& e);
bool exp_divides(const Exponents& a, const Exponents& b); // a | b componentwise
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b); // requires b | a
Exponents exp_lcm(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial over the rationals. A polynomial owns an
// ordered variable list; binary operations require identical lists. Terms are
// kept in a canonical map keyed by exponent vector, zero coefficients never
// stored. Two polynomials over the same list compare equal iff their term
// maps are equal.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, Rational c);
    static MultiPoly variable(std::vector<std::string> vars, int index);
    static MultiPoly monomial(std::vector<std::string> vars, Exponents e, Rational c);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int var_index(const std::string& name) const; // -1 if absent
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // 0 for the zero polynomial; requires is_constant
    int total_degree() const;        // -1 for zero
    int degree_in(int var) const;    // -1 for zero
    bool is_homogeneous(int* degree = nullptr) const; // zero counts as homogeneous
    // True when at most one variable occurs; *var is its index (0 if none occurs).
    bool is_univariate(int* var = nullptr) const;
    Rational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly pow(int e) const; // e >= 0

    MultiPoly derivative(int var) const;
    // Evaluate one variable at a rational; the variable list is unchanged.
    MultiPoly substitute(int var, const Rational& value) const;
    // Remove a variable the polynomial no longer uses.
    MultiPoly without_var(int var) const;
    // Simultaneous substitution x_i -> images[i]; images share one variable list.
    MultiPoly compose(const std::vector<MultiPoly>& images) const;
    MultiPoly rename_vars(std::vector<std::string> names) const;
    // Reinterpret over a superset variable list (names matched, order given).
    MultiPoly with_vars(const std::vector<std::string>& superset) const;
    // Apply a permutation: new variable j is old variable perm[j].
    MultiPoly permute_vars(const std::vector<int>& perm) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

    // Deterministic rendering, e.g. "2*x^2 - x - z"; parseable back.
    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

// Divide by a single divisor, requiring a term-exact quotient. Throws
// MathError when the division leaves a remainder.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

// Rectangular matrix of polynomials over one shared variable list.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, const std::vector<std::string>& vars);
    explicit PolyMatrix(std::vector<std::vector<MultiPoly>> rows);

    int rows() const { return static_cast<int>(m_.size()); }
    int cols() const { return m_.empty() ? 0 : static_cast<int>(m_[0].size()); }
    MultiPoly& at(int i, int j) { return m_[i][j]; }
    const MultiPoly& at(int i, int j) const { return m_[i][j]; }

    MultiPoly trace() const;
    // Fraction-free elimination; exact at every step.
    MultiPoly det() const;

private:
    std::vector<std::vector<MultiPoly>> m_;
};

// Matrix of partial derivatives d components[i] / d x_j.
PolyMatrix jacobian(const std::vector<MultiPoly>& components);

} // namespace bbres
