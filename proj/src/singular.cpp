#include "bbres/singular.hpp"
#include "bbres/errors.hpp"
#include "bbres/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

namespace bbres {

namespace {

using Cplx = std::complex<double>;

void require_parametrization(const SingularComponent& Z, std::size_t expected) {
    if (Z.parametrization.size() != expected)
        throw InputError("component '" + Z.name + "' needs " + std::to_string(expected) +
                         " parametrization entries");
    const std::vector<std::string> pv = {Z.param_var};
    for (const auto& p : Z.parametrization)
        if (p.vars() != pv)
            throw InputError("component '" + Z.name +
                             "' parametrization must be univariate in '" + Z.param_var + "'");
}

VerifyReport verify_against(const SingularComponent& Z, const std::vector<MultiPoly>& gens,
                            const std::vector<MultiPoly>& images) {
    VerifyReport rep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        MultiPoly pulled = gens[i].compose(images);
        if (!pulled.is_zero()) {
            rep.pass = false;
            rep.generator_index = static_cast<int>(i);
            rep.witness = pulled;
            return rep;
        }
    }
    return rep;
}

// A(x,y), B(x,y) share no zero curve; polish a candidate common zero.
struct NewtonPlane {
    const MultiPoly& A;
    const MultiPoly& B;
    MultiPoly Ax, Ay, Bx, By;

    NewtonPlane(const MultiPoly& a, const MultiPoly& b)
        : A(a), B(b), Ax(a.derivative(0)), Ay(a.derivative(1)), Bx(b.derivative(0)),
          By(b.derivative(1)) {}

    struct Result {
        bool converged = false;
        bool nondegenerate = false;
        Cplx x, y;
    };

    Result polish(Cplx x, Cplx y, double scale) const {
        Result r;
        for (int it = 0; it < 80; ++it) {
            std::vector<Cplx> p = {x, y};
            Cplx f = A.evaluate(p), g = B.evaluate(p);
            Cplx j11 = Ax.evaluate(p), j12 = Ay.evaluate(p);
            Cplx j21 = Bx.evaluate(p), j22 = By.evaluate(p);
            Cplx det = j11 * j22 - j12 * j21;
            double size = 1.0 + std::abs(x) + std::abs(y);
            if (std::abs(det) < 1e-10 * scale) {
                // stalled on a (numerically) critical point
                r.x = x;
                r.y = y;
                r.converged = std::abs(f) < 1e-9 * scale && std::abs(g) < 1e-9 * scale;
                r.nondegenerate = false;
                return r;
            }
            Cplx dx = (f * j22 - g * j12) / det;
            Cplx dy = (g * j11 - f * j21) / det;
            x -= dx;
            y -= dy;
            if (std::abs(dx) + std::abs(dy) < 1e-14 * size) {
                std::vector<Cplx> q = {x, y};
                r.x = x;
                r.y = y;
                r.converged = std::abs(A.evaluate(q)) < 1e-10 * scale &&
                              std::abs(B.evaluate(q)) < 1e-10 * scale;
                r.nondegenerate = true;
                return r;
            }
        }
        r.x = x;
        r.y = y;
        return r;
    }
};

double coeff_scale(const MultiPoly& p) {
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) s = std::max(s, std::abs(c.to_double()));
    return s;
}

// Complex coefficients of p(x0, y) as a polynomial in y.
std::vector<Cplx> slice_in_y(const MultiPoly& p, Cplx x0) {
    int d = p.degree_in(1);
    std::vector<Cplx> c(std::max(d + 1, 1), Cplx(0.0, 0.0));
    for (int j = 0; j <= d; ++j) c[j] = coeff_in(p, 1, j).evaluate(std::vector<Cplx>{x0, 0.0});
    return c;
}

bool near_zero_poly(const std::vector<Cplx>& c, double scale) {
    for (const auto& a : c)
        if (std::abs(a) > 1e-10 * (1.0 + scale)) return false;
    return true;
}

} // namespace

SingularIdealResult singular_ideal(const std::vector<MultiPoly>& affine_form) {
    if (affine_form.empty()) throw InputError("empty form");
    SingularIdealResult out;
    out.ideal.order = TermOrder::Grevlex;
    const auto& vars = affine_form.front().vars();
    for (const auto& p : affine_form) {
        if (p.vars() != vars) throw InputError("form coefficients use different variable lists");
        if (p.is_zero()) continue;
        if (p.total_degree() == 0) {
            out.empty_locus = true;
            out.ideal.gens = {MultiPoly::constant(vars, Rational(1))};
            return out;
        }
        MultiPoly q = p;
        if (leading_term(q, TermOrder::Grevlex).coeff.sign() < 0) q *= Rational(-1);
        out.ideal.gens.push_back(std::move(q));
    }
    if (out.ideal.gens.empty()) throw InputError("the form is identically zero");
    return out;
}

VerifyReport verify_component(const SingularComponent& Z, const std::vector<MultiPoly>& gens) {
    if (gens.empty()) throw InputError("no generators to verify");
    require_parametrization(Z, gens.front().vars().size());
    for (const auto& g : gens)
        if (g.vars() != gens.front().vars())
            throw InputError("generators use different variable lists");
    return verify_against(Z, gens, Z.parametrization);
}

VerifyReport verify_component(const SingularComponent& Z, const Chart& chart,
                              const std::vector<MultiPoly>& gens) {
    require_parametrization(Z, chart.hvars.size());
    if (gens.empty()) throw InputError("no generators to verify");
    for (const auto& g : gens)
        if (g.vars() != chart.vars)
            throw InputError("chart generators must use the chart variables");
    const MultiPoly& pc = Z.parametrization[chart.chart_id];
    if (pc.is_zero() || pc.total_degree() != 0)
        throw InputError("component '" + Z.name + "' leaves the chart: coordinate '" +
                         chart.hvars[chart.chart_id] + "' is not a nonzero constant along it");
    Rational c = pc.constant_value();
    std::vector<MultiPoly> images;
    for (int i = 0; i <= chart.n; ++i) {
        if (i == chart.chart_id) continue;
        images.push_back(Z.parametrization[i] * (Rational(1) / c));
    }
    return verify_against(Z, gens, images);
}

AffinePoint component_point(const SingularComponent& Z, const Chart& chart, const Rational& t0) {
    require_parametrization(Z, chart.hvars.size());
    std::vector<Rational> vals;
    for (const auto& p : Z.parametrization) vals.push_back(p.evaluate(std::vector<Rational>{t0}));
    Rational c = vals[chart.chart_id];
    if (c.is_zero())
        throw InputError("component '" + Z.name + "' leaves the chart at parameter " + t0.str());
    AffinePoint out;
    for (int i = 0; i <= chart.n; ++i) {
        if (i == chart.chart_id) continue;
        out.coords.push_back(vals[i] / c);
    }
    return out;
}

int multiplicity_at(const VectorFieldGerm& X, const std::vector<Rational>& p,
                    const GroebnerOptions& opts) {
    if (X.components.size() != 2 || p.size() != 2)
        throw InputError("multiplicity requires a planar field and a planar point");
    const auto& vars = X.vars;
    std::vector<MultiPoly> shift = {
        MultiPoly::variable(vars, 0) + MultiPoly::constant(vars, p[0]),
        MultiPoly::variable(vars, 1) + MultiPoly::constant(vars, p[1])};
    MultiPoly A = X.components[0].compose(shift);
    MultiPoly B = X.components[1].compose(shift);
    if (!A.coefficient(Exponents{0, 0}).is_zero() || !B.coefficient(Exponents{0, 0}).is_zero())
        throw InputError("the point is not a zero of the vector field");

    PolyMatrix J = jacobian(X.components);
    if (!J.det().evaluate(p).is_zero()) return 1;

    long prev = -1;
    for (int N = 2; N <= 40; ++N) {
        Ideal I;
        I.order = TermOrder::Grevlex;
        I.gens = {A, B};
        for (int a = 0; a <= N; ++a) {
            Exponents e = {a, N - a};
            I.gens.push_back(MultiPoly::monomial(vars, e, Rational(1)));
        }
        QuotientDim qd = quotient_dimension(I, opts);
        if (!qd.finite) throw MathError("local quotient unexpectedly infinite");
        if (qd.dim == prev) return static_cast<int>(qd.dim);
        prev = qd.dim;
    }
    throw BudgetExceeded("local multiplicity did not stabilize");
}

std::vector<SingularPoint2D> isolated_points_2d(const VectorFieldGerm& X,
                                                const GroebnerOptions& opts) {
    if (X.components.size() != 2 || X.vars.size() != 2)
        throw InputError("the point solver expects a planar vector field");
    const MultiPoly& A = X.components[0];
    const MultiPoly& B = X.components[1];
    if (A.is_zero() && B.is_zero()) throw InputError("zero vector field");
    if (A.is_zero() || B.is_zero()) {
        const MultiPoly& f = A.is_zero() ? B : A;
        if (f.total_degree() == 0) return {};
        throw InputError("the singular locus is not isolated: one component vanishes identically");
    }

    auto line_check = [&](int var) -> std::optional<std::vector<SingularPoint2D>> {
        // neither component involves `var`: zeros are unions of lines
        if (A.degree_in(var) > 0 || B.degree_in(var) > 0) return std::nullopt;
        int other = 1 - var;
        UniPoly a = uni_from_multi(A, other), b = uni_from_multi(B, other);
        UniPoly g = uni_gcd(a, b);
        if (uni_degree(g) > 0)
            throw InputError("the singular locus is not isolated: a line of zeros");
        return std::vector<SingularPoint2D>{};
    };
    if (auto r = line_check(1)) return *r;
    if (auto r = line_check(0)) return *r;

    MultiPoly Rx = resultant(A, B, 1);
    MultiPoly Ry = resultant(A, B, 0);
    if (Rx.is_zero() || Ry.is_zero())
        throw InputError("the singular locus is not isolated: the components share a factor");

    const double scale = std::max({coeff_scale(A), coeff_scale(B), 1.0});
    NewtonPlane newton(A, B);
    std::vector<SingularPoint2D> exact, clusters;

    auto push_cluster = [&](NewtonPlane::Result r, const UniPoly& tag, int tag_var) {
        if (!r.converged)
            return false;
        if (!r.nondegenerate)
            throw MathError("degenerate irrational singular point: exact certification unavailable");
        for (const auto& c : clusters) {
            auto ap = c.point.approx;
            if (std::abs(ap[0] - r.x) + std::abs(ap[1] - r.y) < 1e-8) return true;
        }
        SingularPoint2D pt;
        pt.point.exact = false;
        pt.point.approx = {r.x, r.y};
        pt.multiplicity = 1;
        pt.nondegenerate = true;
        pt.minpoly = tag;
        pt.minpoly_var = tag_var;
        clusters.push_back(std::move(pt));
        return true;
    };

    auto rx = rational_roots(uni_from_multi(Rx, 0));

    for (const auto& root : rx.roots) {
        const Rational& x0 = root.value;
        UniPoly ay = uni_from_multi(A.substitute(0, x0).without_var(0), 0);
        UniPoly by = uni_from_multi(B.substitute(0, x0).without_var(0), 0);
        UniPoly g = uni_gcd(ay, by);
        if (uni_degree(g) <= 0) continue; // leading coefficients met, no zero above x0
        auto gy = rational_roots(g);
        for (const auto& yroot : gy.roots) {
            SingularPoint2D pt;
            pt.point.coords = {x0, yroot.value};
            pt.nondegenerate =
                !jacobian(X.components).det().evaluate(pt.point.coords).is_zero();
            pt.multiplicity =
                pt.nondegenerate ? 1 : multiplicity_at(X, pt.point.coords, opts);
            exact.push_back(std::move(pt));
        }
        if (uni_degree(gy.residual) > 0) {
            for (const auto& ystar : numeric_roots(gy.residual)) {
                auto r = newton.polish(Cplx(x0.to_double(), 0.0), ystar, scale);
                if (!push_cluster(r, gy.residual, 1))
                    throw MathError("failed to certify an irrational zero cluster");
            }
        }
    }

    if (uni_degree(rx.residual) > 0) {
        for (const auto& xstar : numeric_roots(rx.residual)) {
            auto ca = slice_in_y(A, xstar);
            auto cb = slice_in_y(B, xstar);
            std::vector<Cplx> ys;
            if (!near_zero_poly(ca, scale))
                for (const auto& y : numeric_roots_c(ca)) ys.push_back(y);
            if (!near_zero_poly(cb, scale))
                for (const auto& y : numeric_roots_c(cb)) ys.push_back(y);
            bool any_candidate = false, found = false;
            for (const auto& ystar : ys) {
                std::vector<Cplx> q = {xstar, ystar};
                if (std::abs(A.evaluate(q)) > 1e-5 * scale ||
                    std::abs(B.evaluate(q)) > 1e-5 * scale)
                    continue; // a zero of one component only
                any_candidate = true;
                auto r = newton.polish(xstar, ystar, scale);
                found = push_cluster(r, rx.residual, 0) || found;
            }
            // with no candidate at all the resultant root came from vanishing
            // leading coefficients, not from a zero of the field
            if (any_candidate && !found)
                throw MathError("failed to certify an irrational zero cluster");
        }
    }

    std::sort(exact.begin(), exact.end(), [](const SingularPoint2D& a, const SingularPoint2D& b) {
        if (a.point.coords[0] != b.point.coords[0]) return a.point.coords[0] < b.point.coords[0];
        return a.point.coords[1] < b.point.coords[1];
    });
    std::sort(clusters.begin(), clusters.end(),
              [](const SingularPoint2D& a, const SingularPoint2D& b) {
                  const auto &p = a.point.approx, &q = b.point.approx;
                  if (p[0].real() != q[0].real()) return p[0].real() < q[0].real();
                  if (p[0].imag() != q[0].imag()) return p[0].imag() < q[0].imag();
                  if (p[1].real() != q[1].real()) return p[1].real() < q[1].real();
                  return p[1].imag() < q[1].imag();
              });
    exact.insert(exact.end(), clusters.begin(), clusters.end());
    return exact;
}

namespace {

int rational_rank(std::vector<std::vector<Rational>> M) {
    int rank = 0;
    const int rows = static_cast<int>(M.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(M[0].size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!M[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[rank], M[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (M[r][c].is_zero()) continue;
            Rational f = M[r][c] / M[rank][c];
            for (int j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

UniPoly to_uni(const MultiPoly& p) { return uni_from_multi(p, 0); }

} // namespace

GenericityReport check_genericity(const SingularComponent& Z, const DiscSlice& slice,
                                  const Rational& t0,
                                  const std::vector<SingularComponent>& all) {
    const Chart& chart = slice.chart;
    require_parametrization(Z, chart.hvars.size());
    GenericityReport rep;

    std::vector<Rational> hc; // homogeneous center
    for (const auto& p : Z.parametrization) hc.push_back(p.evaluate(std::vector<Rational>{t0}));
    bool all_zero = true;
    for (const auto& v : hc)
        if (!v.is_zero()) all_zero = false;
    if (all_zero)
        throw InputError("parametrization of '" + Z.name + "' vanishes at parameter " + t0.str());
    if (hc[chart.chart_id].is_zero())
        throw InputError("component '" + Z.name + "' leaves the chart at parameter " + t0.str());

    // tangent of the affine parametrization, via the quotient-rule numerators
    std::vector<Rational> tangent;
    {
        const MultiPoly& pc = Z.parametrization[chart.chart_id];
        MultiPoly dpc = pc.derivative(0);
        for (int i = 0; i <= chart.n; ++i) {
            if (i == chart.chart_id) continue;
            const MultiPoly& pi = Z.parametrization[i];
            MultiPoly num = pi.derivative(0) * pc - pi * dpc;
            tangent.push_back(num.evaluate(std::vector<Rational>{t0}));
        }
    }
    rep.immersive = false;
    for (const auto& v : tangent)
        if (!v.is_zero()) rep.immersive = true;

    rep.disjoint = true;
    for (const auto& W : all) {
        if (W.name == Z.name) continue;
        require_parametrization(W, chart.hvars.size());
        UniPoly G; // gcd of the proportionality minors
        bool any_nonzero_minor = false;
        int dW = 0;
        for (const auto& q : W.parametrization)
            dW = std::max(dW, std::max(q.total_degree(), 0));
        bool infinity_match = true;
        const int n1 = chart.n + 1;
        for (int i = 0; i < n1; ++i) {
            for (int j = i + 1; j < n1; ++j) {
                MultiPoly m = W.parametrization[i] * hc[j] - W.parametrization[j] * hc[i];
                if (!m.is_zero()) {
                    any_nonzero_minor = true;
                    G = uni_gcd(G, to_uni(m));
                }
                Rational li = W.parametrization[i].coefficient(Exponents{dW});
                Rational lj = W.parametrization[j].coefficient(Exponents{dW});
                if (!(li * hc[j] - lj * hc[i]).is_zero()) infinity_match = false;
            }
        }
        if (!any_nonzero_minor || infinity_match) {
            rep.disjoint = false;
            continue;
        }
        if (uni_degree(G) > 0) {
            // discard parameters where W's parametrization vanishes outright
            UniPoly H;
            for (const auto& q : W.parametrization)
                if (!q.is_zero()) H = uni_gcd(H, to_uni(q));
            for (;;) {
                UniPoly c = uni_gcd(G, H);
                if (uni_degree(c) <= 0) break;
                G = uni_divrem(G, c).first;
            }
            if (uni_degree(G) > 0) rep.disjoint = false;
        }
    }

    {
        std::vector<std::vector<Rational>> rows;
        for (const auto& f : slice.free_vars) {
            int idx = chart.affine_index(f);
            if (idx < 0) throw InputError("free variable '" + f + "' is not a chart variable");
            std::vector<Rational> row(chart.n, Rational(0));
            row[idx] = Rational(1);
            rows.push_back(std::move(row));
        }
        rows.push_back(tangent);
        rep.transversal = rational_rank(std::move(rows)) == chart.n;
    }

    if (!rep.immersive) rep.failures.push_back("immersive");
    if (!rep.disjoint) rep.failures.push_back("disjoint");
    if (!rep.transversal) rep.failures.push_back("transversal");
    rep.pass = rep.failures.empty();
    return rep;
}

} // namespace bbres
