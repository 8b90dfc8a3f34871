#pragma once

#include "bbres/multipoly.hpp"

#include <optional>

namespace bbres {

enum class TermOrder { Grevlex, Lex };

// Strict comparison of exponent vectors. Lex gives the first listed variable
// the highest priority; grevlex compares total degree, then the last nonzero
// entry of the difference.
bool exp_less(const Exponents& a, const Exponents& b, TermOrder order);

struct Term {
    Exponents exps;
    Rational coeff;
};

// Leading term under the given order. Throws MathError on zero.
Term leading_term(const MultiPoly& p, TermOrder order);

struct Ideal {
    std::vector<MultiPoly> gens;
    TermOrder order = TermOrder::Grevlex;
};

struct GroebnerOptions {
    long budget = 100000; // S-pair reductions before BudgetExceeded
};

// Reduced Groebner basis. polys are monic and sorted by ascending leading
// monomial; reps[i] expresses polys[i] as a combination of the input
// generators: polys[i] == sum_j reps[i][j] * input[j].
struct GroebnerBasis {
    std::vector<MultiPoly> polys;
    std::vector<std::vector<MultiPoly>> reps;
    TermOrder order = TermOrder::Grevlex;
    std::vector<std::string> vars;
    long spair_reductions = 0;
};

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& opts = {});

// Division remainder and cofactors against a Groebner basis:
// f == sum_i cofactors[i] * G.polys[i] + remainder, and no term of the
// remainder is divisible by any leading monomial of G.
struct NormalFormResult {
    MultiPoly remainder;
    std::vector<MultiPoly> cofactors;
};

NormalFormResult normal_form(const MultiPoly& f, const GroebnerBasis& G);

bool ideal_contains(const GroebnerBasis& G, const MultiPoly& f);

// Dimension of the quotient ring as a vector space: the number of standard
// monomials under the basis staircase. finite == false when the staircase is
// unbounded in some variable.
struct QuotientDim {
    bool finite = false;
    long dim = -1;
};

QuotientDim quotient_dimension(const Ideal& ideal, const GroebnerOptions& opts = {});

// Generator of the elimination ideal I ∩ Q[x_keep], with cofactors over the
// original generators: generator == sum_j cofactors[j] * gens[j]. Returns
// nullopt when the elimination ideal is zero.
struct EliminationResult {
    MultiPoly generator; // univariate in keep_var, monic
    std::vector<MultiPoly> cofactors;
};

std::optional<EliminationResult> eliminate_to_univariate(const std::vector<MultiPoly>& gens,
                                                         int keep_var,
                                                         const GroebnerOptions& opts = {});

} // namespace bbres
