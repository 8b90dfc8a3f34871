#pragma once

#include <string>
#include <vector>

#include "bbres/foliation.hpp"
#include "bbres/ideal.hpp"
#include "bbres/univariate.hpp"

namespace bbres {

// One irreducible curve of the singular scheme, given by a projective
// parametrization: n+1 polynomials in the single parameter variable.
struct SingularComponent {
    std::string name;
    std::string param_var = "s";
    std::vector<MultiPoly> parametrization;
    int degree = 0;
};

struct SingularIdealResult {
    Ideal ideal;             // coefficient ideal, sign-normalized generators
    bool empty_locus = false; // a unit among the coefficients: no singular set
};

// Ideal generated by the coefficients of an affine 1-form.
SingularIdealResult singular_ideal(const std::vector<MultiPoly>& affine_form);

struct VerifyReport {
    bool pass = true;
    int generator_index = -1; // first generator that fails to vanish
    MultiPoly witness;        // its nonzero pullback along the parametrization
};

// Checks that every generator vanishes along Z. The first overload expects
// generators in the homogeneous coordinates, the second in chart coordinates
// (the chart entry of the parametrization must be a nonzero constant).
VerifyReport verify_component(const SingularComponent& Z, const std::vector<MultiPoly>& gens);
VerifyReport verify_component(const SingularComponent& Z, const Chart& chart,
                              const std::vector<MultiPoly>& gens);

// Chart coordinates of Z at parameter value t0.
AffinePoint component_point(const SingularComponent& Z, const Chart& chart, const Rational& t0);

struct SingularPoint2D {
    AffinePoint point;
    int multiplicity = 1;
    bool nondegenerate = true;
    // For a numeric cluster: the irreducible-over-the-rationals factor that
    // certified the cluster, and which coordinate (0 or 1) it constrains.
    UniPoly minpoly;
    int minpoly_var = 0;
};

// All common zeros of a planar vector field, rational ones exactly and the
// rest as certified numeric clusters. Throws InputError when the zero locus
// has a one-dimensional part.
std::vector<SingularPoint2D> isolated_points_2d(const VectorFieldGerm& X,
                                                const GroebnerOptions& opts = {});

// Local intersection multiplicity of X at a rational zero p.
int multiplicity_at(const VectorFieldGerm& X, const std::vector<Rational>& p,
                    const GroebnerOptions& opts = {});

struct GenericityReport {
    bool immersive = false;
    bool disjoint = false;
    bool transversal = false;
    bool pass = false;
    std::vector<std::string> failures; // names of the checks that failed
};

// Disc admissibility at Z(t0): the parametrization is immersive there, no
// other listed component passes through the point, and the disc directions
// together with the curve's tangent span the chart.
GenericityReport check_genericity(const SingularComponent& Z, const DiscSlice& slice,
                                  const Rational& t0,
                                  const std::vector<SingularComponent>& all);

} // namespace bbres
