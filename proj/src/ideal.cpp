#include "bbres/ideal.hpp"
#include "bbres/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace bbres {

bool exp_less(const Exponents& a, const Exponents& b, TermOrder order) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent arity mismatch");
    if (order == TermOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    int da = exp_total_degree(a);
    int db = exp_total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Term leading_term(const MultiPoly& p, TermOrder order) {
    if (p.is_zero()) throw MathError("leading term of the zero polynomial");
    const Exponents* be = nullptr;
    const Rational* bc = nullptr;
    for (const auto& [e, c] : p.terms()) {
        if (be == nullptr || exp_less(*be, e, order)) {
            be = &e;
            bc = &c;
        }
    }
    return Term{*be, *bc};
}

namespace {

// A polynomial together with an optional expression of it over the input
// generators: p == sum_j rep[j] * input[j]. rep may be empty (untracked).
struct Tracked {
    MultiPoly p;
    std::vector<MultiPoly> rep;
};

void subtract_multiple(Tracked& f, const Exponents& shift, const Rational& coeff,
                       const Tracked& g, const std::vector<std::string>& vars) {
    MultiPoly m = MultiPoly::monomial(vars, shift, coeff);
    f.p -= m * g.p;
    for (std::size_t j = 0; j < f.rep.size() && j < g.rep.size(); ++j)
        if (!g.rep[j].is_zero()) f.rep[j] -= m * g.rep[j];
}

// Full division of f by the basis elements listed in `active`. The returned
// remainder has no term divisible by any active leading monomial. When `cof`
// is non-null (sized like `basis`) it accumulates the division cofactors:
// f_in.p == sum cof[i] * basis[i].p + result.p.
Tracked reduce_full(Tracked f, const std::vector<Tracked>& basis,
                    const std::vector<std::size_t>& active,
                    const std::vector<Exponents>& lms, TermOrder order,
                    const std::vector<std::string>& vars,
                    std::vector<MultiPoly>* cof = nullptr) {
    MultiPoly rem = MultiPoly::constant(vars, Rational(0));
    while (!f.p.is_zero()) {
        Term t = leading_term(f.p, order);
        bool reduced = false;
        for (std::size_t bi : active) {
            if (!exp_divides(lms[bi], t.exps)) continue;
            Exponents shift = exp_sub(t.exps, lms[bi]);
            Rational lc = leading_term(basis[bi].p, order).coeff;
            Rational q = t.coeff / lc;
            subtract_multiple(f, shift, q, basis[bi], vars);
            if (cof != nullptr) (*cof)[bi].add_term(shift, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(t.exps, t.coeff);
            f.p.add_term(t.exps, -t.coeff);
        }
    }
    f.p = std::move(rem);
    return f;
}

void make_monic(Tracked& t, TermOrder order) {
    if (t.p.is_zero()) return;
    Rational lc = leading_term(t.p, order).coeff;
    if (lc.is_one()) return;
    Rational inv = Rational(1) / lc;
    t.p *= inv;
    for (auto& r : t.rep) r *= inv;
}

} // namespace

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& opts) {
    GroebnerBasis out;
    out.order = ideal.order;
    if (ideal.gens.empty()) return out;
    const std::vector<std::string>& vars = ideal.gens[0].vars();
    for (const auto& g : ideal.gens)
        if (g.vars() != vars) throw std::invalid_argument("generators use different variable lists");
    out.vars = vars;
    const std::size_t n_in = ideal.gens.size();
    const TermOrder ord = ideal.order;

    std::vector<Tracked> basis;
    std::vector<Exponents> lms;
    for (std::size_t j = 0; j < n_in; ++j) {
        if (ideal.gens[j].is_zero()) continue;
        Tracked t;
        t.p = ideal.gens[j];
        t.rep.assign(n_in, MultiPoly::constant(vars, Rational(0)));
        t.rep[j] = MultiPoly::constant(vars, Rational(1));
        make_monic(t, ord);
        lms.push_back(leading_term(t.p, ord).exps);
        basis.push_back(std::move(t));
    }
    if (basis.empty()) return out;

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t t = 1; t < basis.size(); ++t)
        for (std::size_t i = 0; i < t; ++i) pending.insert({i, t});

    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < basis.size(); ++i) all.push_back(i);

    long used = 0;
    while (!pending.empty()) {
        auto it_best = pending.begin();
        Exponents best_lcm = exp_lcm(lms[it_best->first], lms[it_best->second]);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponents l = exp_lcm(lms[it->first], lms[it->second]);
            if (exp_less(l, best_lcm, ord)) {
                best_lcm = l;
                it_best = it;
            }
        }
        auto [i, j] = *it_best;
        pending.erase(it_best);

        if (best_lcm == exp_add(lms[i], lms[j])) continue; // disjoint leading monomials

        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j || !exp_divides(lms[k], best_lcm)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (pending.count({p1.first, p1.second}) == 0 &&
                pending.count({p2.first, p2.second}) == 0)
                chained = true;
        }
        if (chained) continue;

        if (++used > opts.budget) throw BudgetExceeded("Groebner S-pair budget exceeded");

        Tracked s;
        s.p = MultiPoly::constant(vars, Rational(0));
        s.rep.assign(n_in, MultiPoly::constant(vars, Rational(0)));
        subtract_multiple(s, exp_sub(best_lcm, lms[i]), Rational(-1), basis[i], vars);
        subtract_multiple(s, exp_sub(best_lcm, lms[j]), Rational(1), basis[j], vars);

        Tracked r = reduce_full(std::move(s), basis, all, lms, ord, vars);
        if (!r.p.is_zero()) {
            make_monic(r, ord);
            lms.push_back(leading_term(r.p, ord).exps);
            basis.push_back(std::move(r));
            std::size_t t = basis.size() - 1;
            all.push_back(t);
            for (std::size_t a = 0; a < t; ++a) pending.insert({a, t});
        }
    }
    out.spair_reductions = used;

    // minimal basis: keep elements whose leading monomial no kept element divides
    std::vector<std::size_t> by_lm(basis.size());
    std::iota(by_lm.begin(), by_lm.end(), std::size_t{0});
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
        if (lms[a] != lms[b]) return exp_less(lms[a], lms[b], ord);
        return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t oi : by_lm) {
        bool dominated = false;
        for (std::size_t ki : kept)
            if (exp_divides(lms[ki], lms[oi])) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(oi);
    }

    std::vector<Tracked> fin;
    std::vector<Exponents> fin_lms;
    for (std::size_t ki : kept) {
        fin.push_back(std::move(basis[ki]));
        fin_lms.push_back(lms[ki]);
    }
    // tail reduction: leading monomials are pairwise non-dividing, so each
    // element keeps its leading term and one pass fully reduces the set
    for (std::size_t a = 0; a < fin.size(); ++a) {
        std::vector<std::size_t> others;
        for (std::size_t b = 0; b < fin.size(); ++b)
            if (b != a) others.push_back(b);
        Tracked moved = std::move(fin[a]);
        fin[a] = reduce_full(std::move(moved), fin, others, fin_lms, ord, vars);
        make_monic(fin[a], ord);
    }

    for (auto& t : fin) {
        out.polys.push_back(std::move(t.p));
        out.reps.push_back(std::move(t.rep));
    }
    return out;
}

NormalFormResult normal_form(const MultiPoly& f, const GroebnerBasis& G) {
    NormalFormResult out;
    out.cofactors.assign(G.polys.size(),
                         MultiPoly::constant(f.vars(), Rational(0)));
    if (G.polys.empty()) {
        out.remainder = f;
        return out;
    }
    if (f.vars() != G.vars)
        throw std::invalid_argument("polynomial and basis use different variable lists");

    std::vector<Tracked> basis;
    std::vector<Exponents> lms;
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < G.polys.size(); ++i) {
        basis.push_back(Tracked{G.polys[i], {}});
        lms.push_back(leading_term(G.polys[i], G.order).exps);
        all.push_back(i);
    }
    Tracked t{f, {}};
    Tracked r = reduce_full(std::move(t), basis, all, lms, G.order, G.vars, &out.cofactors);
    out.remainder = std::move(r.p);
    return out;
}

bool ideal_contains(const GroebnerBasis& G, const MultiPoly& f) {
    return normal_form(f, G).remainder.is_zero();
}

QuotientDim quotient_dimension(const Ideal& ideal, const GroebnerOptions& opts) {
    GroebnerBasis G = groebner(ideal, opts);
    QuotientDim out;
    if (G.polys.empty()) return out; // zero ideal: infinite quotient
    const std::size_t nv = G.vars.size();

    std::vector<Exponents> lms;
    for (const auto& p : G.polys) {
        Exponents e = leading_term(p, G.order).exps;
        if (exp_total_degree(e) == 0) {
            out.finite = true;
            out.dim = 0;
            return out;
        }
        lms.push_back(std::move(e));
    }

    std::vector<long> bound(nv, -1);
    for (const auto& e : lms) {
        int nz = -1;
        bool pure = true;
        for (std::size_t v = 0; v < nv; ++v) {
            if (e[v] == 0) continue;
            if (nz >= 0) {
                pure = false;
                break;
            }
            nz = static_cast<int>(v);
        }
        if (pure && nz >= 0)
            if (bound[nz] < 0 || e[nz] < bound[nz]) bound[nz] = e[nz];
    }
    long total = 1;
    for (std::size_t v = 0; v < nv; ++v) {
        if (bound[v] < 0) return out; // no pure power: staircase unbounded
        total *= bound[v];
        if (total > 10'000'000L)
            throw BudgetExceeded("staircase enumeration too large");
    }

    Exponents e(nv, 0);
    long count = 0;
    for (;;) {
        bool standard = true;
        for (const auto& lm : lms)
            if (exp_divides(lm, e)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        std::size_t v = 0;
        while (v < nv) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == nv) break;
    }
    out.finite = true;
    out.dim = count;
    return out;
}

std::optional<EliminationResult> eliminate_to_univariate(const std::vector<MultiPoly>& gens,
                                                         int keep_var,
                                                         const GroebnerOptions& opts) {
    if (gens.empty()) return std::nullopt;
    const std::vector<std::string>& vars = gens[0].vars();
    const int n = static_cast<int>(vars.size());
    if (keep_var < 0 || keep_var >= n) throw std::invalid_argument("keep_var out of range");

    // run a lex basis with keep_var ranked last, so basis elements lying in
    // Q[keep_var] generate the elimination ideal
    std::vector<int> perm;
    for (int v = 0; v < n; ++v)
        if (v != keep_var) perm.push_back(v);
    perm.push_back(keep_var);
    std::vector<int> inv(n);
    for (int j = 0; j < n; ++j) inv[perm[j]] = j;

    Ideal I;
    I.order = TermOrder::Lex;
    for (const auto& g : gens) I.gens.push_back(g.permute_vars(perm));
    GroebnerBasis G = groebner(I, opts);

    const int last = n - 1;
    std::optional<std::size_t> best;
    int best_deg = -1;
    for (std::size_t i = 0; i < G.polys.size(); ++i) {
        bool in_keep = true;
        for (const auto& [e, c] : G.polys[i].terms()) {
            for (int v = 0; v < last && in_keep; ++v)
                if (e[v] != 0) in_keep = false;
            if (!in_keep) break;
        }
        if (!in_keep) continue;
        int d = G.polys[i].degree_in(last);
        if (!best.has_value() || d < best_deg) {
            best = i;
            best_deg = d;
        }
    }
    if (!best.has_value()) return std::nullopt;

    EliminationResult R;
    R.generator = G.polys[*best].permute_vars(inv);
    for (const auto& c : G.reps[*best]) R.cofactors.push_back(c.permute_vars(inv));
    return R;
}

} // namespace bbres
