#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bbres/chern.hpp"
#include "bbres/singular.hpp"

namespace bbres {

// phi evaluated on a square polynomial matrix: the Chern classes c_i are the
// sums of i-by-i principal minors. The monomial weight must match the matrix
// size.
MultiPoly chern_eval(const ChernMonomial& phi, const PolyMatrix& M);
std::complex<double> chern_eval(const ChernMonomial& phi,
                                const std::vector<std::vector<std::complex<double>>>& M);

// Grothendieck residue of phi at a simple zero p of X: phi(JX(p)) / det JX(p).
Rational grothendieck_nondegenerate(const VectorFieldGerm& X, const std::vector<Rational>& p,
                                    const ChernMonomial& phi);

// Residue of h dz / z^m: the coefficient of z^(m-1), all entries of m >= 1.
Rational grothendieck_monomial(const MultiPoly& h, const std::vector<int>& m);

struct TransformationDetail {
    Rational value;
    std::vector<int> m; // monomial exponents produced by the elimination step
};

// Residue of phi at an arbitrary isolated zero p, through the transformation
// law: the ideal is rewritten with univariate elimination generators and the
// residue is read off a truncated series.
TransformationDetail grothendieck_transformation(const VectorFieldGerm& X,
                                                 const std::vector<Rational>& p,
                                                 const ChernMonomial& phi,
                                                 const GroebnerOptions& opts = {});

// Sum of the numeric residues over a Galois orbit of certified clusters,
// recognized as a rational number within tol.
Rational residue_conjugate_sum(const VectorFieldGerm& X,
                               const std::vector<SingularPoint2D>& cluster,
                               const ChernMonomial& phi, double tol = 1e-9);

// Nearest rational with small denominator via continued fractions.
Rational rationalize(double x, double tol);

struct ResidueResult {
    Rational value;
    std::string method; // "nondegenerate" or "transformation"
    std::vector<int> m; // set when the transformation law was used
    AffinePoint center; // disc coordinates of the component point
    VectorFieldGerm transversal;
};

// Baum-Bott residue of F along Z: restrict to the disc slice through Z(t0),
// dualize, and take the Grothendieck residue at the center.
ResidueResult residue_for_component(const FoliationSpec& F, const SingularComponent& Z,
                                    const ChernMonomial& phi, const DiscSlice& slice,
                                    const Rational& t0,
                                    const std::vector<SingularComponent>& all,
                                    const GroebnerOptions& opts = {});

} // namespace bbres
