#include "bbres/residue.hpp"
#include "bbres/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bbres {

namespace {

using Cplx = std::complex<double>;

// all size-k index subsets of {0..m-1}
void subsets(int m, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < m; ++i) {
        cur.push_back(i);
        subsets(m, k, i + 1, cur, out);
        cur.pop_back();
    }
}

Cplx det_c(std::vector<std::vector<Cplx>> M) {
    const int n = static_cast<int>(M.size());
    Cplx det(1.0, 0.0);
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(M[r][c]) > std::abs(M[pivot][c])) pivot = r;
        if (std::abs(M[pivot][c]) == 0.0) return Cplx(0.0, 0.0);
        if (pivot != c) {
            std::swap(M[pivot], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (int r = c + 1; r < n; ++r) {
            Cplx f = M[r][c] / M[c][c];
            for (int j = c; j < n; ++j) M[r][j] -= f * M[c][j];
        }
    }
    return det;
}

void require_weight(const ChernMonomial& phi, int size) {
    if (phi.weight() != size)
        throw InputError("Chern monomial weight " + std::to_string(phi.weight()) +
                         " does not match the matrix size " + std::to_string(size));
}

// drop every term with an exponent at or past the box bound
MultiPoly truncate_box(const MultiPoly& p, const std::vector<int>& m) {
    MultiPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (std::size_t v = 0; v < m.size(); ++v)
            if (e[v] >= m[v]) keep = false;
        if (keep) out.add_term(e, c);
    }
    return out;
}

// inverse power series of v (v(0) != 0) inside the truncation box
MultiPoly series_inverse(const MultiPoly& v, const std::vector<int>& m) {
    Rational v0 = v.coefficient(Exponents(m.size(), 0));
    if (v0.is_zero()) throw MathError("series inverse needs a unit constant term");
    MultiPoly w = MultiPoly::constant(v.vars(), Rational(1) / v0);
    MultiPoly two = MultiPoly::constant(v.vars(), Rational(2));
    int need = 0;
    for (int b : m) need += b;
    for (int correct = 1; correct < need; correct *= 2)
        w = truncate_box(w * (two - truncate_box(v * w, m)), m);
    if (!(truncate_box(v * w, m) == MultiPoly::constant(v.vars(), Rational(1))))
        throw MathError("series inversion failed to converge in the box");
    return w;
}

std::vector<MultiPoly> translate_field(const VectorFieldGerm& X, const std::vector<Rational>& p) {
    if (X.components.size() != X.vars.size() || p.size() != X.vars.size())
        throw InputError("field arity and point size must match the variable count");
    std::vector<MultiPoly> shift;
    for (std::size_t i = 0; i < X.vars.size(); ++i)
        shift.push_back(MultiPoly::variable(X.vars, static_cast<int>(i)) +
                        MultiPoly::constant(X.vars, p[i]));
    std::vector<MultiPoly> out;
    for (const auto& f : X.components) {
        MultiPoly t = f.compose(shift);
        if (!t.coefficient(Exponents(X.vars.size(), 0)).is_zero())
            throw InputError("the point is not a zero of the vector field");
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

MultiPoly chern_eval(const ChernMonomial& phi, const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("Chern evaluation needs a square matrix");
    const int n = M.rows();
    require_weight(phi, n);
    MultiPoly out = MultiPoly::constant(M.at(0, 0).vars(), Rational(1));
    for (std::size_t i = 0; i < phi.alpha.size(); ++i) {
        if (phi.alpha[i] == 0) continue;
        std::vector<std::vector<int>> idx;
        std::vector<int> cur;
        subsets(n, static_cast<int>(i) + 1, 0, cur, idx);
        MultiPoly ci(M.at(0, 0).vars());
        for (const auto& S : idx) {
            std::vector<std::vector<MultiPoly>> sub;
            for (int r : S) {
                std::vector<MultiPoly> row;
                for (int c : S) row.push_back(M.at(r, c));
                sub.push_back(std::move(row));
            }
            ci += PolyMatrix(sub).det();
        }
        out *= ci.pow(phi.alpha[i]);
    }
    return out;
}

std::complex<double> chern_eval(const ChernMonomial& phi,
                                const std::vector<std::vector<Cplx>>& M) {
    const int n = static_cast<int>(M.size());
    require_weight(phi, n);
    Cplx out(1.0, 0.0);
    for (std::size_t i = 0; i < phi.alpha.size(); ++i) {
        if (phi.alpha[i] == 0) continue;
        std::vector<std::vector<int>> idx;
        std::vector<int> cur;
        subsets(n, static_cast<int>(i) + 1, 0, cur, idx);
        Cplx ci(0.0, 0.0);
        for (const auto& S : idx) {
            std::vector<std::vector<Cplx>> sub;
            for (int r : S) {
                std::vector<Cplx> row;
                for (int c : S) row.push_back(M[r][c]);
                sub.push_back(std::move(row));
            }
            ci += det_c(std::move(sub));
        }
        for (int e = 0; e < phi.alpha[i]; ++e) out *= ci;
    }
    return out;
}

Rational grothendieck_nondegenerate(const VectorFieldGerm& X, const std::vector<Rational>& p,
                                    const ChernMonomial& phi) {
    translate_field(X, p); // validates that p is a zero
    PolyMatrix J = jacobian(X.components);
    Rational det = J.det().evaluate(p);
    if (det.is_zero())
        throw InputError("degenerate zero: the Jacobian determinant vanishes at the point");
    return chern_eval(phi, J).evaluate(p) / det;
}

Rational grothendieck_monomial(const MultiPoly& h, const std::vector<int>& m) {
    if (h.vars().size() != m.size())
        throw InputError("monomial exponent count must match the variable count");
    Exponents e;
    for (int b : m) {
        if (b < 1) throw InputError("monomial exponents must be at least 1");
        e.push_back(b - 1);
    }
    return h.coefficient(e);
}

TransformationDetail grothendieck_transformation(const VectorFieldGerm& X,
                                                 const std::vector<Rational>& p,
                                                 const ChernMonomial& phi,
                                                 const GroebnerOptions& opts) {
    if (X.vars.size() != 2) throw InputError("the transformation law is implemented on a 2-disc");
    std::vector<MultiPoly> F = translate_field(X, p);

    QuotientDim qd = quotient_dimension(Ideal{F, TermOrder::Grevlex}, opts);
    if (!qd.finite)
        throw InputError("the zero is not isolated: infinite local quotient");

    std::vector<int> m(2, 0);
    std::vector<MultiPoly> units;
    std::vector<std::vector<MultiPoly>> q(2);
    for (int v = 0; v < 2; ++v) {
        auto elim = eliminate_to_univariate(F, v, opts);
        if (!elim)
            throw InputError("the zero is not isolated: empty elimination ideal");
        UniPoly g = uni_from_multi(elim->generator, v);
        int val = 0;
        while (val < static_cast<int>(g.size()) && g[val].is_zero()) ++val;
        if (val == 0)
            throw MathError("elimination generator does not vanish at the zero");
        if (val > qd.dim + 1)
            throw InputError("elimination valuation exceeds the local budget: zero not isolated");
        m[v] = val;
        UniPoly u(g.begin() + val, g.end());
        units.push_back(uni_to_multi(u, X.vars, v));
        q[v] = elim->cofactors;
    }

    MultiPoly detq = q[0][0] * q[1][1] - q[0][1] * q[1][0];
    MultiPoly V = units[0] * units[1];
    MultiPoly W = series_inverse(truncate_box(V, m), m);
    MultiPoly num = truncate_box(chern_eval(phi, jacobian(F)), m);
    MultiPoly core = truncate_box(truncate_box(num * truncate_box(detq, m), m) * W, m);

    TransformationDetail out;
    out.m = m;
    out.value = grothendieck_monomial(core, m);
    return out;
}

Rational rationalize(double x, double tol) {
    if (!(tol > 0)) throw InputError("rationalization tolerance must be positive");
    if (!std::isfinite(x)) throw MathError("cannot rationalize a non-finite value");
    double a = x;
    long h1 = 1, h0 = 0, k1 = 0, k0 = 1;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(a);
        if (fl > 9e17 || fl < -9e17) break;
        long ai = static_cast<long>(fl);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 != 0 && std::abs(x - static_cast<double>(h2) / static_cast<double>(k2)) <= tol)
            return Rational(mpz_class(h2), mpz_class(k2));
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        double frac = a - fl;
        if (frac < 1e-15) break;
        a = 1.0 / frac;
    }
    throw MathError("no rational value within the requested tolerance");
}

Rational residue_conjugate_sum(const VectorFieldGerm& X,
                               const std::vector<SingularPoint2D>& cluster,
                               const ChernMonomial& phi, double tol) {
    if (cluster.empty()) throw InputError("empty cluster");
    PolyMatrix J = jacobian(X.components);
    Cplx sum(0.0, 0.0);
    for (const auto& pt : cluster) {
        if (!pt.nondegenerate)
            throw InputError("conjugate summation requires nondegenerate cluster points");
        std::vector<Cplx> z = point_approx(pt.point);
        std::vector<std::vector<Cplx>> Jz;
        for (int r = 0; r < J.rows(); ++r) {
            std::vector<Cplx> row;
            for (int c = 0; c < J.cols(); ++c) row.push_back(J.at(r, c).evaluate(z));
            Jz.push_back(std::move(row));
        }
        Cplx det = det_c(Jz);
        if (std::abs(det) < 1e-12)
            throw MathError("cluster point has a numerically singular Jacobian");
        sum += chern_eval(phi, Jz) / det;
    }
    if (std::abs(sum.imag()) > tol)
        throw MathError("conjugate sum has a non-real part beyond tolerance");
    return rationalize(sum.real(), tol);
}

ResidueResult residue_for_component(const FoliationSpec& F, const SingularComponent& Z,
                                    const ChernMonomial& phi, const DiscSlice& slice,
                                    const Rational& t0,
                                    const std::vector<SingularComponent>& all,
                                    const GroebnerOptions& opts) {
    auto gen = check_genericity(Z, slice, t0, all);
    if (!gen.pass) {
        std::string what = "disc fails genericity for component '" + Z.name + "':";
        for (const auto& f : gen.failures) what += " " + f;
        throw InputError(what);
    }

    AffinePoint chart_point = component_point(Z, slice.chart, t0);
    std::vector<Rational> center;
    for (const auto& f : slice.free_vars)
        center.push_back(chart_point.coords[slice.chart.affine_index(f)]);
    for (const auto& [name, value] : slice.fixed)
        if (chart_point.coords[slice.chart.affine_index(name)] != value)
            throw InputError("the disc does not pass through the component point: '" + name +
                             "' differs");
    if (!slice.center.empty() && slice.center != center)
        throw InputError("declared disc center does not match the component point");

    auto affine = dehomogenize(F, slice.chart);
    auto restricted = restrict_to_disc(affine, slice);
    VectorFieldGerm X = dual_vector_field_2d(restricted);

    for (const auto& f : X.components)
        if (!f.evaluate(center).is_zero())
            throw InputError("the component point is not a zero of the restricted field");

    ResidueResult out;
    out.center.coords = center;
    out.transversal = X;

    Rational det = jacobian(X.components).det().evaluate(center);
    if (!det.is_zero()) {
        out.method = "nondegenerate";
        out.value = grothendieck_nondegenerate(X, center, phi);
    } else {
        out.method = "transformation";
        auto detail = grothendieck_transformation(X, center, phi, opts);
        out.value = detail.value;
        out.m = detail.m;
    }
    return out;
}

} // namespace bbres
