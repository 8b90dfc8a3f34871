#include "bbres/foliation.hpp"
#include "bbres/errors.hpp"

#include <algorithm>

namespace bbres {

int Chart::affine_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

Chart make_chart(const std::vector<std::string>& hvars, int chart_id) {
    if (hvars.size() < 3) throw InputError("projective space needs at least three homogeneous coordinates");
    if (chart_id < 0 || chart_id >= static_cast<int>(hvars.size()))
        throw InputError("chart coordinate out of range");
    Chart c;
    c.n = static_cast<int>(hvars.size()) - 1;
    c.chart_id = chart_id;
    c.hvars = hvars;
    for (int i = 0; i <= c.n; ++i)
        if (i != chart_id) c.vars.push_back(hvars[i]);
    return c;
}

Chart make_chart(const std::vector<std::string>& hvars, const std::string& chart_var) {
    for (std::size_t i = 0; i < hvars.size(); ++i)
        if (hvars[i] == chart_var) return make_chart(hvars, static_cast<int>(i));
    throw InputError("unknown chart coordinate '" + chart_var + "'");
}

std::vector<std::complex<double>> point_approx(const AffinePoint& p) {
    if (!p.exact) return p.approx;
    std::vector<std::complex<double>> out;
    out.reserve(p.coords.size());
    for (const auto& c : p.coords) out.emplace_back(c.to_double(), 0.0);
    return out;
}

FoliationSpec make_foliation(int n, int k, const std::vector<std::string>& hvars,
                             const std::vector<MultiPoly>& form) {
    if (n < 2) throw InputError("ambient dimension must be at least 2");
    if (k < 1 || k >= n) throw InputError("codimension must satisfy 1 <= k < n");
    if (static_cast<int>(hvars.size()) != n + 1)
        throw InputError("expected " + std::to_string(n + 1) + " homogeneous coordinates");
    if (static_cast<int>(form.size()) != n + 1)
        throw InputError("expected " + std::to_string(n + 1) + " form coefficients");

    int common = -1;
    for (const auto& p : form) {
        if (p.vars() != hvars) throw InputError("form coefficient uses a different variable list");
        int d = -1;
        if (!p.is_homogeneous(&d)) throw InputError("form coefficient is not homogeneous");
        if (p.is_zero()) continue;
        if (common < 0)
            common = d;
        else if (d != common)
            throw InputError("form coefficients have unequal degrees");
    }
    if (common < 0) throw InputError("form is identically zero");

    FoliationSpec F;
    F.n = n;
    F.k = k;
    F.hvars = hvars;
    F.form = form;
    F.twist = common + 1;
    return F;
}

MultiPoly euler_contraction(const FoliationSpec& F) {
    MultiPoly acc = MultiPoly::constant(F.hvars, Rational(0));
    for (int i = 0; i <= F.n; ++i)
        acc += MultiPoly::variable(F.hvars, i) * F.form[i];
    return acc;
}

std::vector<MultiPoly> dehomogenize(const FoliationSpec& F, const Chart& chart) {
    if (chart.hvars != F.hvars) throw InputError("chart does not belong to this projective space");
    if (!euler_contraction(F).is_zero())
        throw InputError("Euler contraction is nonzero: the input is not a projective form");
    std::vector<MultiPoly> out;
    for (int i = 0; i <= F.n; ++i) {
        if (i == chart.chart_id) continue;
        out.push_back(F.form[i].substitute(chart.chart_id, Rational(1)).without_var(chart.chart_id));
    }
    return out;
}

namespace {

// Homogenize an affine polynomial to total degree e by padding with the chart
// coordinate.
MultiPoly homogenize_to(const MultiPoly& p, const Chart& chart, int e) {
    const int n = chart.n;
    MultiPoly out = MultiPoly::constant(chart.hvars, Rational(0));
    for (const auto& [exps, c] : p.terms()) {
        int d = exp_total_degree(exps);
        if (d > e) throw InputError("degree exceeds the homogenization target");
        Exponents he(n + 1, 0);
        int j = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == chart.chart_id) continue;
            he[i] = exps[j++];
        }
        he[chart.chart_id] = e - d;
        out.add_term(he, c);
    }
    return out;
}

} // namespace

std::vector<MultiPoly> rehomogenize(const std::vector<MultiPoly>& affine_form,
                                    const Chart& chart) {
    if (static_cast<int>(affine_form.size()) != chart.n)
        throw InputError("expected one coefficient per affine variable");
    int dmax = 0;
    for (const auto& p : affine_form) dmax = std::max(dmax, p.total_degree());
    const MultiPoly xc = MultiPoly::variable(chart.hvars, chart.chart_id);

    for (int e = dmax; e <= dmax + chart.n + 2; ++e) {
        std::vector<MultiPoly> h(chart.n + 1, MultiPoly::constant(chart.hvars, Rational(0)));
        int j = 0;
        MultiPoly s = MultiPoly::constant(chart.hvars, Rational(0));
        for (int i = 0; i <= chart.n; ++i) {
            if (i == chart.chart_id) continue;
            h[i] = homogenize_to(affine_form[j++], chart, e);
            s += MultiPoly::variable(chart.hvars, i) * h[i];
        }
        try {
            h[chart.chart_id] = -divide_exact(s, xc);
        } catch (const MathError&) {
            continue; // Euler completion impossible at this degree; try the next
        }
        // strip any common chart-coordinate factor
        for (;;) {
            bool all = true;
            std::vector<MultiPoly> reduced;
            for (const auto& p : h) {
                if (p.is_zero()) {
                    reduced.push_back(p);
                    continue;
                }
                try {
                    reduced.push_back(divide_exact(p, xc));
                } catch (const MathError&) {
                    all = false;
                    break;
                }
            }
            if (!all) break;
            h = std::move(reduced);
        }
        return h;
    }
    throw InputError("affine form does not extend to a projective form");
}

std::vector<MultiPoly> restrict_to_disc(const std::vector<MultiPoly>& affine_form,
                                        const DiscSlice& slice) {
    const Chart& chart = slice.chart;
    if (static_cast<int>(affine_form.size()) != chart.n)
        throw InputError("expected one coefficient per affine variable");
    if (slice.fixed.size() + slice.free_vars.size() != static_cast<std::size_t>(chart.n))
        throw InputError("disc assignments do not partition the chart variables");

    std::vector<bool> seen(chart.n, false);
    std::vector<int> fixed_idx;
    for (const auto& [name, value] : slice.fixed) {
        int i = chart.affine_index(name);
        if (i < 0) throw InputError("fixed variable '" + name + "' is not a chart variable");
        if (seen[i]) throw InputError("variable '" + name + "' assigned twice");
        seen[i] = true;
        fixed_idx.push_back(i);
    }
    std::vector<int> free_idx;
    for (const auto& name : slice.free_vars) {
        int i = chart.affine_index(name);
        if (i < 0) throw InputError("free variable '" + name + "' is not a chart variable");
        if (seen[i]) throw InputError("variable '" + name + "' assigned twice");
        seen[i] = true;
        free_idx.push_back(i);
    }

    std::vector<MultiPoly> out;
    std::vector<int> drop = fixed_idx;
    std::sort(drop.begin(), drop.end(), std::greater<int>());
    for (int fi : free_idx) {
        MultiPoly p = affine_form[fi];
        for (const auto& [name, value] : slice.fixed) p = p.substitute(chart.affine_index(name), value);
        for (int di : drop) p = p.without_var(di);
        out.push_back(std::move(p));
    }
    // surviving variables sit in chart order; rotate them into slice order
    std::vector<int> chart_order = free_idx;
    std::sort(chart_order.begin(), chart_order.end());
    std::vector<int> perm(free_idx.size());
    for (std::size_t j = 0; j < free_idx.size(); ++j) {
        auto it = std::find(chart_order.begin(), chart_order.end(), free_idx[j]);
        perm[j] = static_cast<int>(it - chart_order.begin());
    }
    for (auto& p : out) p = p.permute_vars(perm);

    bool all_zero = true;
    for (const auto& p : out)
        if (!p.is_zero()) all_zero = false;
    if (all_zero)
        throw InputError("restricted form vanishes identically: the disc is not transversal to the foliation");
    return out;
}

VectorFieldGerm dual_vector_field_2d(const std::vector<MultiPoly>& form2) {
    if (form2.size() != 2) throw InputError("dual field needs exactly two coefficients");
    if (form2[0].vars() != form2[1].vars())
        throw InputError("form coefficients use different variable lists");
    if (form2[0].is_zero() && form2[1].is_zero())
        throw InputError("zero form has no dual field");
    VectorFieldGerm X;
    X.vars = form2[0].vars();
    X.components.push_back(form2[1]);
    X.components.push_back(-form2[0]);
    return X;
}

NormalDegree det_normal_degree(const FoliationSpec& F) {
    int common = -1;
    for (const auto& p : F.form) {
        if (p.is_zero()) continue;
        int d = -1;
        if (!p.is_homogeneous(&d)) throw InputError("form coefficient is not homogeneous");
        if (common < 0)
            common = d;
        else if (d != common)
            throw InputError("form coefficients have unequal degrees");
    }
    if (common < 0) throw InputError("form is identically zero");
    NormalDegree out{common + 1, CohomologyClass::hyperplane_power(F.n, 1, Rational(common + 1))};
    return out;
}

} // namespace bbres
