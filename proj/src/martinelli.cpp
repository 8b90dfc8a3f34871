#include "bbres/martinelli.hpp"
#include "bbres/errors.hpp"
#include "bbres/singular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bbres {

namespace {

using Cplx = std::complex<double>;

// terms flattened to double coefficients, with power tables per evaluation
struct CompiledPoly {
    struct Term {
        int e0, e1;
        double c;
    };
    std::vector<Term> terms;
    int max0 = 0, max1 = 0;

    explicit CompiledPoly(const MultiPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            terms.push_back({e[0], e[1], c.to_double()});
            max0 = std::max(max0, e[0]);
            max1 = std::max(max1, e[1]);
        }
    }

    Cplx eval(const std::vector<Cplx>& p0, const std::vector<Cplx>& p1) const {
        Cplx acc(0.0, 0.0);
        for (const auto& t : terms) acc += t.c * p0[t.e0] * p1[t.e1];
        return acc;
    }
};

struct Integrand {
    CompiledPoly f0, f1;     // field components
    CompiledPoly d00, d01;   // their partial derivatives
    CompiledPoly d10, d11;
    std::vector<int> alpha;  // c1 and c2 exponents
    Cplx c0, c1;             // center
    int maxdeg0, maxdeg1;

    Integrand(const VectorFieldGerm& X, const ChernMonomial& phi, const std::vector<Cplx>& center)
        : f0(X.components[0]), f1(X.components[1]), d00(X.components[0].derivative(0)),
          d01(X.components[0].derivative(1)), d10(X.components[1].derivative(0)),
          d11(X.components[1].derivative(1)), alpha(phi.alpha), c0(center[0]), c1(center[1]) {
        alpha.resize(2, 0);
        maxdeg0 = std::max({f0.max0, f1.max0, 1});
        maxdeg1 = std::max({f0.max1, f1.max1, 1});
    }

    // the full Bochner-Martinelli integrand at the sphere point given by
    // z0 = r cos(theta) e^{i a}, z1 = r sin(theta) e^{i b}
    Cplx operator()(double r, double ct, double st, Cplx ea, Cplx eb) const {
        Cplx z0 = r * ct * ea, z1 = r * st * eb;
        std::vector<Cplx> p0(maxdeg0 + 1), p1(maxdeg1 + 1);
        p0[0] = 1.0;
        p1[0] = 1.0;
        Cplx u0 = c0 + z0, u1 = c1 + z1;
        for (int i = 1; i <= maxdeg0; ++i) p0[i] = p0[i - 1] * u0;
        for (int i = 1; i <= maxdeg1; ++i) p1[i] = p1[i - 1] * u1;

        Cplx X0 = f0.eval(p0, p1), X1 = f1.eval(p0, p1);
        double rho = std::norm(X0) + std::norm(X1);
        Cplx s0 = std::conj(X0), s1 = std::conj(X1);

        Cplx j00 = d00.eval(p0, p1), j01 = d01.eval(p0, p1);
        Cplx j10 = d10.eval(p0, p1), j11 = d11.eval(p0, p1);

        Cplx n0 = s1 * std::conj(j00) - s0 * std::conj(j10);
        Cplx n1 = s1 * std::conj(j01) - s0 * std::conj(j11);

        Cplx phi_val(1.0, 0.0);
        if (alpha[0] > 0) {
            Cplx cc1 = j00 + j11;
            for (int e = 0; e < alpha[0]; ++e) phi_val *= cc1;
        }
        if (alpha[1] > 0) {
            Cplx cc2 = j00 * j11 - j01 * j10;
            for (int e = 0; e < alpha[1]; ++e) phi_val *= cc2;
        }

        return phi_val * (n0 * z1 - n1 * z0) * (2.0 * r * r * st * ct) / (rho * rho);
    }
};

double simpson_weight(int i, int n) {
    if (i == 0 || i == n) return 1.0;
    return (i % 2 == 1) ? 4.0 : 2.0;
}

// one full product-Simpson pass with n intervals per axis
Cplx simpson_level(const Integrand& f, double r, int n) {
    const double pi = std::numbers::pi;
    const double htheta = (pi / 2.0) / n, hangle = (2.0 * pi) / n;

    std::vector<double> ct(n + 1), st(n + 1), wt(n + 1);
    std::vector<Cplx> ea(n + 1), eb(n + 1);
    std::vector<double> wa(n + 1);
    for (int i = 0; i <= n; ++i) {
        double theta = htheta * i;
        ct[i] = std::cos(theta);
        st[i] = std::sin(theta);
        wt[i] = simpson_weight(i, n);
        double angle = hangle * i;
        ea[i] = Cplx(std::cos(angle), std::sin(angle));
        wa[i] = simpson_weight(i, n);
    }
    eb = ea;

    Cplx total(0.0, 0.0);
    for (int i = 0; i <= n; ++i) {
        Cplx slice(0.0, 0.0);
        for (int j = 0; j <= n; ++j) {
            Cplx row(0.0, 0.0);
            for (int k = 0; k <= n; ++k) row += wa[k] * f(r, ct[i], st[i], ea[j], eb[k]);
            slice += wa[j] * row;
        }
        total += wt[i] * slice;
    }
    return total * (htheta / 3.0) * (hangle / 3.0) * (hangle / 3.0);
}

void require_planar(const VectorFieldGerm& X) {
    if (X.vars.size() != 2 || X.components.size() != 2)
        throw InputError("the quadrature expects a planar vector field");
}

double scale_of(const VectorFieldGerm& X) {
    double s = 1.0;
    for (const auto& f : X.components)
        for (const auto& [e, c] : f.terms()) s = std::max(s, std::abs(c.to_double()));
    return s;
}

void check_clearance(const VectorFieldGerm& X, const std::vector<Cplx>& center, double radius,
                     const Integrand& f) {
    bool solved = false;
    std::vector<SingularPoint2D> pts;
    try {
        pts = isolated_points_2d(X);
        solved = true;
    } catch (const InputError&) {
        solved = false;
    } catch (const MathError&) {
        solved = false;
    }

    if (solved) {
        bool center_found = false;
        for (const auto& pt : pts) {
            auto a = point_approx(pt.point);
            double d = std::abs(a[0] - center[0]) + std::abs(a[1] - center[1]);
            if (d < 1e-7 * (1.0 + std::abs(center[0]) + std::abs(center[1]))) {
                center_found = true;
                continue;
            }
            if (d < 1.1 * radius)
                throw InputError("another zero of the field lies within the integration sphere");
        }
        if (!center_found)
            throw InputError("the center is not among the isolated zeros of the field");
        return;
    }

    // the zero locus could not be resolved symbolically; sample the sphere and
    // insist the field stays well away from zero on it
    const double pi = std::numbers::pi;
    double rho_min = 0.0, rho_max = 0.0;
    bool first = true;
    for (int i = 0; i <= 16; ++i) {
        double theta = (pi / 2.0) * i / 16.0;
        for (int j = 0; j < 16; ++j) {
            double a = 2.0 * pi * j / 16.0;
            for (int k = 0; k < 16; ++k) {
                double b = 2.0 * pi * k / 16.0;
                Cplx z0 = radius * std::cos(theta) * Cplx(std::cos(a), std::sin(a));
                Cplx z1 = radius * std::sin(theta) * Cplx(std::cos(b), std::sin(b));
                std::vector<Cplx> u = {center[0] + z0, center[1] + z1};
                double rho = std::norm(X.components[0].evaluate(u)) +
                             std::norm(X.components[1].evaluate(u));
                if (first || rho < rho_min) rho_min = rho;
                if (first || rho > rho_max) rho_max = rho;
                first = false;
            }
        }
    }
    (void)f;
    if (!(rho_min >= 1e-8 * std::max(1.0, rho_max)))
        throw InputError("the field nearly vanishes on the integration sphere");
}

} // namespace

QuadratureResult bb_martinelli(const VectorFieldGerm& X, const AffinePoint& center,
                               const ChernMonomial& phi, double radius, double tol,
                               long budget) {
    require_planar(X);
    if (!(radius > 0.0)) throw InputError("the integration radius must be positive");
    if (!(tol > 0.0)) throw InputError("the quadrature tolerance must be positive");
    if (phi.weight() != 2)
        throw InputError("the planar quadrature needs a weight-two Chern monomial");

    if (center.exact) {
        if (center.coords.size() != 2) throw InputError("center must have two coordinates");
        for (const auto& f : X.components)
            if (!f.evaluate(center.coords).is_zero())
                throw InputError("the center is not a zero of the vector field");
    }
    std::vector<Cplx> c = point_approx(center);
    if (c.size() != 2) throw InputError("center must have two coordinates");
    if (!center.exact) {
        double s = scale_of(X);
        std::vector<Cplx> u = {c[0], c[1]};
        if (std::abs(X.components[0].evaluate(u)) > 1e-8 * s ||
            std::abs(X.components[1].evaluate(u)) > 1e-8 * s)
            throw InputError("the center is not a zero of the vector field");
    }

    Integrand f(X, phi, c);
    check_clearance(X, c, radius, f);

    const double pi = std::numbers::pi;
    QuadratureResult out;
    out.radius = radius;

    auto finish = [&](Cplx refined, double err) {
        if (std::abs(refined.imag()) > tol * std::max(1.0, std::abs(refined.real())))
            throw MathError("the integral kept a non-real part beyond tolerance");
        out.value = refined.real();
        out.error_estimate = err;
        return out;
    };

    Cplx raw_prev(0.0, 0.0), rich_prev(0.0, 0.0);
    bool have_raw = false, have_rich = false;
    for (int n = 8; n <= 128; n *= 2) {
        long cost = static_cast<long>(n + 1) * (n + 1) * (n + 1);
        if (out.evaluations + cost > budget)
            throw ConvergenceError("quadrature evaluation budget exhausted before convergence");
        Cplx lambda = simpson_level(f, radius, n) / (4.0 * pi * pi);
        out.evaluations += cost;
        if (have_raw) {
            double err_raw = std::abs(lambda - raw_prev);
            Cplx rich = lambda + (lambda - raw_prev) / 15.0;
            if (err_raw <= tol * std::max(1.0, std::abs(lambda))) return finish(rich, err_raw);
            if (have_rich) {
                // fourth-order error is eliminated; compare the extrapolants
                double err_rich = std::abs(rich - rich_prev);
                if (err_rich <= tol * std::max(1.0, std::abs(rich)))
                    return finish(rich, err_rich);
            }
            rich_prev = rich;
            have_rich = true;
        }
        raw_prev = lambda;
        have_raw = true;
    }
    throw ConvergenceError("quadrature did not converge within the refinement limit");
}

StabilityReport radius_stability(const VectorFieldGerm& X, const AffinePoint& center,
                                 const ChernMonomial& phi, const std::vector<double>& radii,
                                 double tol, long budget) {
    if (radii.size() < 2) throw InputError("radius stability needs at least two radii");
    StabilityReport rep;
    for (double r : radii) rep.runs.push_back(bb_martinelli(X, center, phi, r, tol, budget));
    for (std::size_t i = 0; i < rep.runs.size(); ++i)
        for (std::size_t j = i + 1; j < rep.runs.size(); ++j)
            rep.max_deviation =
                std::max(rep.max_deviation, std::abs(rep.runs[i].value - rep.runs[j].value));
    rep.pass = rep.max_deviation < 3.0 * tol;
    return rep;
}

} // namespace bbres
