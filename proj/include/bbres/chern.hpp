#pragma once

#include "bbres/rational.hpp"

#include <string>
#include <vector>

namespace bbres {

// Monomial in Chern classes: alpha[i] is the exponent of c_{i+1}.
struct ChernMonomial {
    std::vector<int> alpha;

    int weight() const; // sum of (i+1) * alpha[i]
    bool uses_beyond_c1() const;

    // "c1^2", "c2", "c1*c3^2" (also accepts space-separated factors)
    static ChernMonomial parse(const std::string& text);
    std::string str() const;
};

// Element of Q[h]/(h^{n+1}), the cohomology ring of P^n with h the
// hyperplane class.
class CohomologyClass {
public:
    explicit CohomologyClass(int n);
    static CohomologyClass hyperplane_power(int n, int degree, const Rational& coeff);

    int ambient() const { return n_; }
    const Rational& coeff(int degree) const;
    void set_coeff(int degree, const Rational& c);
    bool is_zero() const;

    CohomologyClass operator+(const CohomologyClass& o) const;
    CohomologyClass operator-(const CohomologyClass& o) const;
    CohomologyClass operator-() const;
    CohomologyClass operator*(const CohomologyClass& o) const; // truncates past h^n
    CohomologyClass operator*(const Rational& c) const;
    bool operator==(const CohomologyClass& o) const = default;

    std::string str() const; // "16h^2", "h^2 - 3h^3", "0"

private:
    int n_ = 0;
    std::vector<Rational> c_; // c_[d] is the coefficient of h^d
};

// Class of a codimension-(k+1) component of degree d: d * h^{k+1}.
CohomologyClass component_class(int degree, int n, int k);

struct GlobalItem {
    std::string name;
    int degree = 0;
    Rational lambda;
};

struct GlobalCheckReport {
    CohomologyClass lhs;
    CohomologyClass rhs;
    CohomologyClass discrepancy; // rhs - lhs
    bool pass = false;
};

// Residue theorem check on P^n: phi evaluated on c(N_F) (rank-one data,
// c_1 = m h) against the sum of residue-weighted component classes.
GlobalCheckReport global_check(int n, int k, int m, const ChernMonomial& phi,
                               const std::vector<GlobalItem>& items);

} // namespace bbres
