#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multipoly.hpp"
#include "rational.hpp"

namespace bbres {

// Weighted symmetric-function algebra: generator i carries weight i. The two
// alphabets stand for elementary symmetric functions in n variables (s1, s2,
// ...) and in n+1 variables (r1, r2, ...), linked by r_j = s_j + y*s_{j-1}.
enum class SymAlphabet { Sigma, Rho };

struct SymPoly {
    SymAlphabet alphabet = SymAlphabet::Sigma;
    MultiPoly poly;

    bool is_zero() const { return poly.is_zero(); }
    int generators() const { return poly.nvars(); }
    // Weighted degree. Requires a weighted-homogeneous polynomial; -1 for zero.
    int weight() const;
    std::string str() const { return poly.str(); }

    friend bool operator==(const SymPoly& a, const SymPoly& b) = default;
};

SymPoly sym_zero(SymAlphabet alphabet, int generators);
SymPoly sym_generator(SymAlphabet alphabet, int index, int generators);
// Generator count is read off the highest index appearing in the text.
SymPoly parse_sym(std::string_view text, SymAlphabet alphabet);

// psi(r1..rl) rewritten through r_j = s_j + y*s_{j-1} (s_0 = 1). The result
// lives in s1..sl plus a trailing variable y, expanded exactly.
MultiPoly rho_to_sigma(const SymPoly& psi);

// Coefficients of psi(r) = phi(s)*y + phi0(s) + sum_{j>=2} phij(s)*y^j.
struct CenklDecomposition {
    int ell = 0;                  // the input weight is ell + 1
    SymPoly phi;                  // y^1 coefficient, weight ell
    SymPoly phi0;                 // y^0 coefficient, weight ell + 1
    std::map<int, SymPoly> phij;  // y^j coefficients for j >= 2 (zeros omitted)
};

CenklDecomposition decompose(const SymPoly& psi);

// Right inverse of the phi slot of decompose: a weight-(w+1) rho-polynomial
// whose y^1 coefficient is phi, w the weight of phi. The representative is
// picked deterministically, preferring low total degree in the generators.
SymPoly lift(const SymPoly& phi);

// One projectivization step: the singular set gains a dimension while the
// leaf dimension stays put. Requires dim_sing < dim_leaf.
std::pair<int, int> bundle_dimension_shift(int dim_sing, int dim_leaf);

// Q[h, xi] / (h^{n+1}, xi^2 - 2m*h*xi + m^2*h^2): the cohomology of the
// projectivization of a rank-two sum of degree-(-m) line bundles over
// n-dimensional projective space. h is the pulled-back hyperplane class, xi
// the tautological relative class; both carry complex degree one here.
class BundleRing;

class BundleClass {
public:
    bool is_zero() const;
    // Complex degree shared by every term; -1 for the zero class, -2 if mixed.
    int homogeneous_degree() const;
    std::string str() const;

    BundleClass operator+(const BundleClass& o) const;
    BundleClass operator-(const BundleClass& o) const;
    BundleClass operator*(const BundleClass& o) const;
    BundleClass pow(int e) const;

    friend bool operator==(const BundleClass& a, const BundleClass& b) = default;

private:
    friend class BundleRing;
    BundleClass(int n, int m);
    void require_same(const BundleClass& o) const;
    void truncate();

    int n_ = 0;
    int m_ = 0;
    std::vector<Rational> plain_;  // coefficient of h^i
    std::vector<Rational> fiber_;  // coefficient of h^i * xi
};

class BundleRing {
public:
    BundleRing(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }

    BundleClass zero() const;
    BundleClass one() const;
    BundleClass scalar(const Rational& c) const;
    BundleClass h() const;
    BundleClass h_power(int k) const;
    BundleClass xi() const;
    // Relative tangent class of the fiber direction: 2*xi - 2m*h. Squares to zero.
    BundleClass tau() const;

private:
    int n_;
    int m_;
};

// Downstairs side of the residue theorem on the projectivized bundle:
//   lambda * deg(Z) * h^{k+1} * tau  +  phi0(N)  +  sum_{j>=2} phij(N) * tau^j
// with the sigma generators evaluated on a rank-one bundle, s1 -> m*h and
// higher generators to zero. Only k = 1 carries rank-one normal data.
BundleClass rhs_theorem5(const Rational& lambda, int z_degree, int n, int k, int m,
                         const CenklDecomposition& dec);

}  // namespace bbres
