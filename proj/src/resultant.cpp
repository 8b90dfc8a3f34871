#include "bbres/resultant.hpp"

namespace bbres {

MultiPoly coeff_in(const MultiPoly& f, int var, int k) {
    const int nv = static_cast<int>(f.vars().size());
    if (var < 0 || var >= nv) throw std::invalid_argument("variable index out of range");
    MultiPoly out = MultiPoly::constant(f.vars(), Rational(0));
    for (const auto& [e, c] : f.terms()) {
        if (e[var] != k) continue;
        Exponents r = e;
        r[var] = 0;
        out.add_term(r, c);
    }
    return out;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    const MultiPoly zero = MultiPoly::constant(f.vars(), Rational(0));
    if (f.is_zero() || g.is_zero()) return zero;
    const int m = f.degree_in(var);
    const int n = g.degree_in(var);
    const int size = m + n;
    if (size == 0) return MultiPoly::constant(f.vars(), Rational(1));

    PolyMatrix S(size, size, f.vars());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S.at(i, i + j) = coeff_in(f, var, m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S.at(n + i, i + j) = coeff_in(g, var, n - j);
    return S.det();
}

} // namespace bbres
