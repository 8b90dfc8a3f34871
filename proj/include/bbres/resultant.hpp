#pragma once

#include "bbres/multipoly.hpp"

namespace bbres {

// Coefficient of var^k in f, as a polynomial over the same variable list
// (degree zero in var).
MultiPoly coeff_in(const MultiPoly& f, int var, int k);

// Sylvester resultant of f and g with respect to var. Both nonzero constants
// in var give 1 (empty matrix); a zero polynomial gives 0.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

} // namespace bbres
