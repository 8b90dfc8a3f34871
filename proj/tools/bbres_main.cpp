#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "bbres/errors.hpp"
#include "bbres/problem.hpp"

namespace {

struct CommonFlags {
    std::string out_path;
    double tol = -1.0;
    long budget = -1;
    bool no_crosscheck = false;
};

void add_output_flag(CLI::App* cmd, CommonFlags* flags) {
    cmd->add_option("--out", flags->out_path, "write the report to this path instead of stdout");
}

void add_problem_flags(CLI::App* cmd, CommonFlags* flags, std::string* path) {
    cmd->add_option("problem", *path, "problem file (JSON)")->required();
    add_output_flag(cmd, flags);
    cmd->add_option("--tol", flags->tol, "quadrature tolerance override");
    cmd->add_option("--budget", flags->budget, "basis-computation step budget override");
    cmd->add_flag("--no-crosscheck", flags->no_crosscheck, "skip the numeric cross-check");
}

bbres::Problem load_with_overrides(const std::string& path, const CommonFlags& flags) {
    bbres::Problem prob = bbres::load_problem(path);
    if (flags.tol > 0) prob.options.tol = flags.tol;
    if (flags.budget > 0) prob.options.budget = flags.budget;
    if (flags.no_crosscheck) prob.options.crosscheck = false;
    return prob;
}

int emit(const bbres::Report& report, const CommonFlags& flags) {
    std::string text = report.dump(2) + "\n";
    if (flags.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(flags.out_path, std::ios::binary);
        if (!out) throw bbres::InputError("cannot open output file: " + flags.out_path);
        out << text;
    }
    return bbres::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Baum-Bott residues of singular foliations on projective space"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string problem_path;
    std::string component;
    double radius = 0.25;
    std::string psi_text;
    std::string phi_text;

    CLI::App* sing = app.add_subcommand("sing", "singular-scheme generators per affine chart");
    add_problem_flags(sing, &flags, &problem_path);
    CLI::App* verify = app.add_subcommand("verify", "check the declared components against the singular scheme");
    add_problem_flags(verify, &flags, &problem_path);
    CLI::App* residues = app.add_subcommand("residues", "exact residue of every component");
    add_problem_flags(residues, &flags, &problem_path);
    CLI::App* check = app.add_subcommand("check", "residues plus the global class comparison");
    add_problem_flags(check, &flags, &problem_path);

    CLI::App* bm = app.add_subcommand("bm", "boundary-integral oracle for one component");
    add_problem_flags(bm, &flags, &problem_path);
    bm->add_option("--component", component, "component name")->required();
    bm->add_option("--radius", radius, "sphere radius");

    CLI::App* cdec = app.add_subcommand("cenkl-decompose", "split a rho-polynomial along powers of the extra variable");
    cdec->add_option("--psi", psi_text, "polynomial in r1, r2, ...")->required();
    add_output_flag(cdec, &flags);
    CLI::App* clift = app.add_subcommand("cenkl-lift", "lift a sigma-polynomial to the rho alphabet");
    clift->add_option("--phi", phi_text, "polynomial in s1, s2, ...")->required();
    add_output_flag(clift, &flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        bbres::Report report;
        if (app.got_subcommand(sing)) {
            report = bbres::run_sing(load_with_overrides(problem_path, flags));
        } else if (app.got_subcommand(verify)) {
            report = bbres::run_verify(load_with_overrides(problem_path, flags));
        } else if (app.got_subcommand(residues)) {
            report = bbres::run_residues(load_with_overrides(problem_path, flags));
        } else if (app.got_subcommand(check)) {
            report = bbres::run_check(load_with_overrides(problem_path, flags));
        } else if (app.got_subcommand(bm)) {
            report = bbres::run_bm(load_with_overrides(problem_path, flags), component, radius);
        } else if (app.got_subcommand(cdec)) {
            report = bbres::run_cenkl_decompose(psi_text);
        } else {
            report = bbres::run_cenkl_lift(phi_text);
        }
        return emit(report, flags);
    } catch (const bbres::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bbres::Error& e) {
        // parse, input, budget, and convergence problems are input-side failures
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
