#include "bbres/problem.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "bbres/cenkl.hpp"
#include "bbres/errors.hpp"
#include "bbres/martinelli.hpp"
#include "bbres/parser.hpp"

namespace bbres {

using json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return std::string(buf);
}

namespace {

[[noreturn]] void fail_at(const std::string& ptr, const std::string& msg) {
    throw InputError(ptr + ": " + msg);
}

const json& field(const json& obj, const std::string& ptr, const std::string& key) {
    if (!obj.is_object()) fail_at(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail_at(ptr + "/" + key, "missing required field");
    return *it;
}

std::string get_string(const json& v, const std::string& ptr) {
    if (!v.is_string()) fail_at(ptr, "expected a string");
    return v.get<std::string>();
}

int get_int(const json& v, const std::string& ptr) {
    if (!v.is_number_integer()) fail_at(ptr, "expected an integer");
    return v.get<int>();
}

Rational get_rational(const json& v, const std::string& ptr) {
    if (!v.is_string()) fail_at(ptr, "expected a rational written as a string, e.g. \"2/3\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
        fail_at(ptr, e.what());
    }
}

MultiPoly get_poly(const json& v, const std::string& ptr, const std::vector<std::string>& vars) {
    std::string text = get_string(v, ptr);
    try {
        return parse_poly(text, vars);
    } catch (const Error& e) {
        fail_at(ptr, e.what());
    }
}

ComponentSpec parse_component(const json& c, const std::string& ptr, const Problem& prob) {
    ComponentSpec spec;
    spec.component.name = get_string(field(c, ptr, "name"), ptr + "/name");
    if (spec.component.name.empty()) fail_at(ptr + "/name", "must not be empty");

    spec.component.param_var = "s";
    if (c.contains("parameter"))
        spec.component.param_var = get_string(c.at("parameter"), ptr + "/parameter");
    for (const auto& v : prob.variables)
        if (v == spec.component.param_var)
            fail_at(ptr + "/parameter", "collides with the coordinate variable '" + v + "'");

    const json& par = field(c, ptr, "parametrization");
    if (!par.is_array() || static_cast<int>(par.size()) != prob.n + 1)
        fail_at(ptr + "/parametrization",
                "expected an array of " + std::to_string(prob.n + 1) + " polynomials in the parameter");
    for (size_t i = 0; i < par.size(); ++i)
        spec.component.parametrization.push_back(
            get_poly(par[i], ptr + "/parametrization/" + std::to_string(i), {spec.component.param_var}));

    spec.component.degree = get_int(field(c, ptr, "degree"), ptr + "/degree");
    if (spec.component.degree < 1) fail_at(ptr + "/degree", "must be a positive integer");

    const json& disc = field(c, ptr, "disc");
    std::string dptr = ptr + "/disc";
    std::string chart_var = get_string(field(disc, dptr, "chart"), dptr + "/chart");
    auto known = [&](const std::string& name) {
        for (const auto& v : prob.variables)
            if (v == name) return true;
        return false;
    };
    if (!known(chart_var)) fail_at(dptr + "/chart", "unknown variable '" + chart_var + "'");
    spec.slice.chart = make_chart(prob.variables, chart_var);

    std::set<std::string> used = {chart_var};
    const json& fixed = field(disc, dptr, "fixed");
    if (!fixed.is_object()) fail_at(dptr + "/fixed", "expected an object of variable: rational pairs");
    for (const auto& [name, value] : fixed.items()) {
        if (!known(name)) fail_at(dptr + "/fixed/" + name, "unknown variable '" + name + "'");
        if (!used.insert(name).second)
            fail_at(dptr + "/fixed/" + name, "variable already used by the disc");
        spec.slice.fixed.emplace_back(name, get_rational(value, dptr + "/fixed/" + name));
    }

    const json& free = field(disc, dptr, "free");
    if (!free.is_array() || static_cast<int>(free.size()) != prob.k + 1)
        fail_at(dptr + "/free", "expected an array of " + std::to_string(prob.k + 1) + " variables");
    for (size_t i = 0; i < free.size(); ++i) {
        std::string name = get_string(free[i], dptr + "/free/" + std::to_string(i));
        if (!known(name)) fail_at(dptr + "/free/" + std::to_string(i), "unknown variable '" + name + "'");
        if (!used.insert(name).second)
            fail_at(dptr + "/free/" + std::to_string(i), "variable already used by the disc");
        spec.slice.free_vars.push_back(name);
    }
    if (static_cast<int>(used.size()) != prob.n + 1)
        fail_at(dptr, "chart, fixed, and free variables must partition the coordinates");

    spec.center_parameter =
        get_rational(field(disc, dptr, "center_parameter"), dptr + "/center_parameter");
    return spec;
}

}  // namespace

Problem problem_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("/: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail_at("/", "expected a JSON object");

    Problem prob;
    prob.source = text;

    const json& vars = field(doc, "", "variables");
    if (!vars.is_array() || vars.size() < 3)
        fail_at("/variables", "expected an array of at least three coordinate names");
    std::set<std::string> seen;
    for (size_t i = 0; i < vars.size(); ++i) {
        std::string name = get_string(vars[i], "/variables/" + std::to_string(i));
        if (name.empty() || !seen.insert(name).second)
            fail_at("/variables/" + std::to_string(i), "coordinate names must be distinct and nonempty");
        prob.variables.push_back(name);
    }
    prob.n = static_cast<int>(prob.variables.size()) - 1;
    if (doc.contains("ambient") && get_int(doc.at("ambient"), "/ambient") != prob.n)
        fail_at("/ambient", "does not match the number of coordinates minus one");

    prob.k = get_int(field(doc, "", "codim"), "/codim");
    if (prob.k < 1 || prob.k >= prob.n) fail_at("/codim", "requires 1 <= codim < ambient");

    const json& form = field(doc, "", "form");
    if (!form.is_array() || static_cast<int>(form.size()) != prob.n + 1)
        fail_at("/form", "expected an array of " + std::to_string(prob.n + 1) + " coefficient polynomials");
    std::vector<MultiPoly> coeffs;
    for (size_t i = 0; i < form.size(); ++i)
        coeffs.push_back(get_poly(form[i], "/form/" + std::to_string(i), prob.variables));
    try {
        prob.foliation = make_foliation(prob.n, prob.k, prob.variables, coeffs);
    } catch (const Error& e) {
        fail_at("/form", e.what());
    }

    const json& phi = field(doc, "", "phi");
    if (!phi.is_array() || phi.empty()) fail_at("/phi", "expected a nonempty array of exponents");
    for (size_t i = 0; i < phi.size(); ++i) {
        int e = get_int(phi[i], "/phi/" + std::to_string(i));
        if (e < 0) fail_at("/phi/" + std::to_string(i), "exponents must be nonnegative");
        prob.phi.alpha.push_back(e);
    }
    if (prob.phi.weight() != prob.k + 1)
        fail_at("/phi", "the monomial weight must equal codim + 1");

    const json& comps = field(doc, "", "components");
    if (!comps.is_array()) fail_at("/components", "expected an array");
    std::set<std::string> names;
    for (size_t i = 0; i < comps.size(); ++i) {
        std::string ptr = "/components/" + std::to_string(i);
        ComponentSpec spec = parse_component(comps[i], ptr, prob);
        if (!names.insert(spec.component.name).second)
            fail_at(ptr + "/name", "duplicate component name '" + spec.component.name + "'");
        prob.components.push_back(std::move(spec));
    }

    if (doc.contains("options")) {
        const json& opt = doc.at("options");
        if (!opt.is_object()) fail_at("/options", "expected an object");
        if (opt.contains("tol")) {
            if (!opt.at("tol").is_number()) fail_at("/options/tol", "expected a number");
            prob.options.tol = opt.at("tol").get<double>();
            if (!(prob.options.tol > 0)) fail_at("/options/tol", "must be positive");
        }
        if (opt.contains("budget")) {
            prob.options.budget = get_int(opt.at("budget"), "/options/budget");
            if (prob.options.budget <= 0) fail_at("/options/budget", "must be positive");
        }
        if (opt.contains("crosscheck")) {
            if (!opt.at("crosscheck").is_boolean()) fail_at("/options/crosscheck", "expected a boolean");
            prob.options.crosscheck = opt.at("crosscheck").get<bool>();
        }
    }
    return prob;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return problem_from_json(buf.str());
}

namespace {

json report_header(const std::string& source, const char* subcommand) {
    json r;
    r["version"] = kToolVersion;
    r["input_hash"] = "fnv1a64:" + fnv1a_hex(source);
    r["subcommand"] = subcommand;
    return r;
}

json problem_header(const Problem& prob, const char* subcommand) {
    json r = report_header(prob.source, subcommand);
    r["ambient"] = prob.n;
    r["codim"] = prob.k;
    r["twist"] = prob.foliation.twist;
    r["options"] = {{"tol", prob.options.tol},
                    {"budget", prob.options.budget},
                    {"crosscheck", prob.options.crosscheck}};
    return r;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

json verify_entry(const ComponentSpec& spec, const FoliationSpec& F, bool* pass) {
    json e;
    e["name"] = spec.component.name;
    e["degree"] = spec.component.degree;
    VerifyReport v = verify_component(spec.component, F.form);
    e["verification"] = v.pass ? "PASS" : "FAIL";
    if (!v.pass) {
        e["generator_index"] = v.generator_index;
        e["witness"] = v.witness.str();
        *pass = false;
    }
    return e;
}

json crosscheck_entry(const ResidueResult& r, const Problem& prob, bool* pass) {
    json c;
    double exact = r.value.to_double();
    for (double radius : {0.25, 0.125, 0.0625}) {
        try {
            QuadratureResult q =
                bb_martinelli(r.transversal, r.center, prob.phi, radius, prob.options.tol);
            c["radius"] = radius;
            c["value"] = q.value;
            c["error_bound"] = q.error_estimate;
            c["evaluations"] = q.evaluations;
            bool ok = std::abs(q.value - exact) <= std::max(1e-4, q.error_estimate);
            c["agrees"] = ok;
            if (!ok) *pass = false;
            return c;
        } catch (const InputError&) {
            // another singular point too close at this radius; shrink and retry
            continue;
        } catch (const ConvergenceError& e) {
            c["status"] = std::string("did not converge: ") + e.what();
            return c;
        }
    }
    c["status"] = "skipped: no radius separates the center from the other singular points";
    return c;
}

// Residue entries shared by `residues` and `check`.
json residue_components(const Problem& prob, bool* pass, std::vector<GlobalItem>* items,
                        std::vector<ResidueResult>* results) {
    std::vector<SingularComponent> all;
    for (const auto& spec : prob.components) all.push_back(spec.component);
    GroebnerOptions gopts;
    gopts.budget = prob.options.budget;
    json comps = json::array();
    for (const auto& spec : prob.components) {
        json e = verify_entry(spec, prob.foliation, pass);
        if (e["verification"] == "FAIL") {
            comps.push_back(e);
            continue;
        }
        ResidueResult r = residue_for_component(prob.foliation, spec.component, prob.phi,
                                                spec.slice, spec.center_parameter, all, gopts);
        std::vector<Rational> at_t0;
        for (const auto& p : spec.component.parametrization)
            at_t0.push_back(p.evaluate({spec.center_parameter}));
        e["point"] = rational_strings(at_t0);
        e["center"] = rational_strings(r.center.coords);
        e["method"] = r.method;
        if (!r.m.empty()) e["m"] = r.m;
        e["residue"] = r.value.str();
        if (prob.options.crosscheck) e["crosscheck"] = crosscheck_entry(r, prob, pass);
        if (items) items->push_back({spec.component.name, spec.component.degree, r.value});
        if (results) results->push_back(r);
        comps.push_back(e);
    }
    return comps;
}

}  // namespace

Report run_sing(const Problem& prob) {
    json r = problem_header(prob, "sing");
    json charts = json::array();
    for (int id = 0; id <= prob.n; ++id) {
        Chart chart = make_chart(prob.variables, id);
        SingularIdealResult si = singular_ideal(dehomogenize(prob.foliation, chart));
        json e;
        e["chart"] = prob.variables[id];
        json gens = json::array();
        for (const auto& g : si.ideal.gens) gens.push_back(g.str());
        e["generators"] = gens;
        e["empty_locus"] = si.empty_locus;
        charts.push_back(e);
    }
    r["charts"] = charts;
    r["pass"] = true;
    return r;
}

Report run_verify(const Problem& prob) {
    json r = problem_header(prob, "verify");
    bool pass = true;
    json comps = json::array();
    for (const auto& spec : prob.components) comps.push_back(verify_entry(spec, prob.foliation, &pass));
    r["components"] = comps;
    r["pass"] = pass;
    return r;
}

Report run_residues(const Problem& prob) {
    json r = problem_header(prob, "residues");
    r["phi"] = prob.phi.str();
    bool pass = true;
    r["components"] = residue_components(prob, &pass, nullptr, nullptr);
    r["pass"] = pass;
    return r;
}

Report run_check(const Problem& prob) {
    json r = problem_header(prob, "check");
    r["phi"] = prob.phi.str();
    bool pass = true;
    std::vector<GlobalItem> items;
    r["components"] = residue_components(prob, &pass, &items, nullptr);
    json g;
    if (items.size() == prob.components.size()) {
        GlobalCheckReport rep =
            global_check(prob.n, prob.k, prob.foliation.twist, prob.phi, items);
        g["lhs"] = rep.lhs.str();
        g["rhs"] = rep.rhs.str();
        g["discrepancy"] = rep.discrepancy.str();
        g["pass"] = rep.pass;
        if (!rep.pass) pass = false;
    } else {
        g["status"] = "skipped: unverified components";
        g["pass"] = false;
        pass = false;
    }
    r["global"] = g;
    r["pass"] = pass;
    return r;
}

Report run_bm(const Problem& prob, const std::string& component_name, double radius) {
    const ComponentSpec* spec = nullptr;
    for (const auto& s : prob.components)
        if (s.component.name == component_name) spec = &s;
    if (!spec) throw InputError("unknown component '" + component_name + "'");
    json r = problem_header(prob, "bm");
    r["component"] = component_name;
    r["phi"] = prob.phi.str();
    std::vector<SingularComponent> all;
    for (const auto& s : prob.components) all.push_back(s.component);
    GroebnerOptions gopts;
    gopts.budget = prob.options.budget;
    ResidueResult exact = residue_for_component(prob.foliation, spec->component, prob.phi,
                                                spec->slice, spec->center_parameter, all, gopts);
    QuadratureResult q =
        bb_martinelli(exact.transversal, exact.center, prob.phi, radius, prob.options.tol);
    r["method"] = exact.method;
    r["exact"] = exact.value.str();
    r["radius"] = q.radius;
    r["value"] = q.value;
    r["error_bound"] = q.error_estimate;
    r["evaluations"] = q.evaluations;
    bool agrees = std::abs(q.value - exact.value.to_double()) <= std::max(1e-4, q.error_estimate);
    r["agrees"] = agrees;
    r["pass"] = agrees;
    return r;
}

Report run_cenkl_decompose(const std::string& psi_text) {
    json r = report_header(psi_text, "cenkl-decompose");
    SymPoly psi = parse_sym(psi_text, SymAlphabet::Rho);
    CenklDecomposition dec = decompose(psi);
    r["psi"] = psi.str();
    r["ell"] = dec.ell;
    r["phi"] = dec.phi.str();
    r["phi0"] = dec.phi0.str();
    for (const auto& [j, part] : dec.phij) r["phi" + std::to_string(j)] = part.str();
    r["pass"] = true;
    return r;
}

Report run_cenkl_lift(const std::string& phi_text) {
    json r = report_header(phi_text, "cenkl-lift");
    SymPoly phi = parse_sym(phi_text, SymAlphabet::Sigma);
    SymPoly psi = lift(phi);
    r["phi"] = phi.str();
    r["psi"] = psi.str();
    bool roundtrip;
    if (psi.is_zero()) {
        roundtrip = phi.is_zero();
    } else {
        r["weight"] = psi.weight();
        roundtrip = decompose(psi).phi.str() == phi.str();
    }
    r["roundtrip"] = roundtrip ? "PASS" : "FAIL";
    r["pass"] = roundtrip;
    return r;
}

int report_exit_code(const Report& report) {
    if (report.contains("pass") && report.at("pass").is_boolean() && !report.at("pass").get<bool>())
        return 2;
    return 0;
}

}  // namespace bbres
