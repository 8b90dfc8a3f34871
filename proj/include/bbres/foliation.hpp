#pragma once

#include "bbres/chern.hpp"
#include "bbres/multipoly.hpp"

#include <complex>
#include <utility>

namespace bbres {

// Affine chart of P^n: the homogeneous coordinate chart_id is set to 1 and
// the remaining coordinate names, in their original order, become the n
// affine variables.
struct Chart {
    int n = 0;
    int chart_id = 0;
    std::vector<std::string> hvars; // n+1 homogeneous names
    std::vector<std::string> vars;  // n affine names

    int affine_index(const std::string& name) const; // -1 when absent
};

Chart make_chart(const std::vector<std::string>& hvars, int chart_id);
Chart make_chart(const std::vector<std::string>& hvars, const std::string& chart_var);

struct AffinePoint {
    std::vector<Rational> coords;
    std::vector<std::complex<double>> approx; // numeric view (filled on demand)
    bool exact = true;
};

std::vector<std::complex<double>> point_approx(const AffinePoint& p);

// Foliation on P^n presented by a twisted projective 1-form: n+1 homogeneous
// coefficient polynomials of equal degree e with zero Euler contraction.
// twist is the degree m = e + 1 of det(N_F).
struct FoliationSpec {
    int n = 0;
    int k = 1;
    std::vector<std::string> hvars;
    std::vector<MultiPoly> form;
    int twist = 0;
};

FoliationSpec make_foliation(int n, int k, const std::vector<std::string>& hvars,
                             const std::vector<MultiPoly>& form);

// The Euler contraction sum X_i * coeff_i, identically zero for projective input.
MultiPoly euler_contraction(const FoliationSpec& F);

// Coordinate-parallel (k+1)-disc inside a chart: the fixed variables are
// pinned to rationals, the free pair carries the germ; center holds the
// free-variable coordinates of the disc's center.
struct DiscSlice {
    Chart chart;
    std::vector<std::pair<std::string, Rational>> fixed;
    std::vector<std::string> free_vars;
    std::vector<Rational> center;
};

struct VectorFieldGerm {
    std::vector<std::string> vars;
    std::vector<MultiPoly> components;
};

// Substitute 1 for the chart coordinate and drop its differential; the n
// results are ordered like the surviving homogeneous coordinates.
std::vector<MultiPoly> dehomogenize(const FoliationSpec& F, const Chart& chart);

// Inverse of dehomogenize up to the homogeneity degree: homogenize the n
// affine coefficients and recover the chart coefficient from the Euler
// relation. Used as a round-trip check.
std::vector<MultiPoly> rehomogenize(const std::vector<MultiPoly>& affine_form,
                                    const Chart& chart);

// Pin the fixed variables of the slice, keep the differentials of the free
// pair; the results live in the free variables, in slice order.
std::vector<MultiPoly> restrict_to_disc(const std::vector<MultiPoly>& affine_form,
                                        const DiscSlice& slice);

// A dx + B dy  ->  X = B d/dx - A d/dy, which spans ker(form).
VectorFieldGerm dual_vector_field_2d(const std::vector<MultiPoly>& form2);

struct NormalDegree {
    int m = 0;
    CohomologyClass c1;
};

NormalDegree det_normal_degree(const FoliationSpec& F);

} // namespace bbres
