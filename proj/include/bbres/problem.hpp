#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "chern.hpp"
#include "foliation.hpp"
#include "residue.hpp"
#include "singular.hpp"

namespace bbres {

inline constexpr const char* kToolVersion = "0.1.0";

// Lower-case hex digest of the 64-bit FNV-1a hash of the bytes.
std::string fnv1a_hex(const std::string& bytes);

struct ProblemOptions {
    double tol = 1e-6;      // quadrature tolerance for the numeric cross-check
    long budget = 100000;   // basis-computation step budget
    bool crosscheck = true; // run the boundary-integral oracle alongside exact values
};

struct ComponentSpec {
    SingularComponent component;
    DiscSlice slice;
    Rational center_parameter;
};

// A problem file: the twisted form on projective space, the Chern monomial,
// and the declared singular components with their transversal discs.
struct Problem {
    int n = 0;
    int k = 1;
    std::vector<std::string> variables;
    FoliationSpec foliation;
    ChernMonomial phi;
    std::vector<ComponentSpec> components;
    ProblemOptions options;
    std::string source; // raw input text, hashed into the report
};

// Validation failures carry the JSON pointer of the offending value.
Problem problem_from_json(const std::string& text);
Problem load_problem(const std::string& path);

using Report = nlohmann::ordered_json;

// Singular-scheme generators per affine chart.
Report run_sing(const Problem& prob);
// Membership of every declared component in the singular scheme.
Report run_verify(const Problem& prob);
// Verification plus the exact residue of each component.
Report run_residues(const Problem& prob);
// Residues plus the global class comparison.
Report run_check(const Problem& prob);
// Boundary-integral oracle for one named component at a chosen radius.
Report run_bm(const Problem& prob, const std::string& component_name, double radius);

Report run_cenkl_decompose(const std::string& psi_text);
Report run_cenkl_lift(const std::string& phi_text);

// 0 when the report carries no failure, 2 otherwise.
int report_exit_code(const Report& report);

} // namespace bbres
