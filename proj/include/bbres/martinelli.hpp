#pragma once

#include <vector>

#include "bbres/residue.hpp"

namespace bbres {

struct QuadratureResult {
    double value = 0.0;          // extrapolated residue
    double error_estimate = 0.0; // deviation between the last two refinements
    long evaluations = 0;        // integrand evaluations spent
    double radius = 0.0;
};

// Numeric residue of phi at an isolated zero of X, as a Bochner-Martinelli
// integral over the sphere of the given radius around the center. Refines a
// product Simpson rule until two levels agree within tol; throws
// ConvergenceError when the evaluation budget runs out first, and InputError
// when another zero of the field sits within 1.1 * radius of the center.
QuadratureResult bb_martinelli(const VectorFieldGerm& X, const AffinePoint& center,
                               const ChernMonomial& phi, double radius, double tol = 1e-6,
                               long budget = 1L << 24);

struct StabilityReport {
    std::vector<QuadratureResult> runs;
    double max_deviation = 0.0;
    bool pass = false; // max pairwise deviation below 3 * tol
};

// The integral must not depend on the radius; runs the quadrature for each
// radius and compares the values.
StabilityReport radius_stability(const VectorFieldGerm& X, const AffinePoint& center,
                                 const ChernMonomial& phi, const std::vector<double>& radii,
                                 double tol = 1e-6, long budget = 1L << 24);

} // namespace bbres
