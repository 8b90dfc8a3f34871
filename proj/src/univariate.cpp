#include "bbres/univariate.hpp"
#include "bbres/errors.hpp"

#include <algorithm>
#include <set>

namespace bbres {

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

bool uni_is_zero(const UniPoly& p) { return p.empty(); }

UniPoly uni_from_multi(const MultiPoly& p, int var) {
    const int nv = static_cast<int>(p.vars().size());
    if (var < 0 || var >= nv) throw std::invalid_argument("variable index out of range");
    UniPoly out;
    for (const auto& [e, c] : p.terms()) {
        for (int v = 0; v < nv; ++v)
            if (v != var && e[v] != 0)
                throw std::invalid_argument("polynomial is not univariate in the requested variable");
        const int d = e[var];
        if (static_cast<int>(out.size()) <= d) out.resize(d + 1, Rational(0));
        out[d] = c;
    }
    uni_trim(out);
    return out;
}

MultiPoly uni_to_multi(const UniPoly& u, std::vector<std::string> vars, int var) {
    MultiPoly out = MultiPoly::constant(vars, Rational(0));
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        e[var] = static_cast<int>(i);
        out.add_term(e, u[i]);
    }
    return out;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    uni_trim(out);
    return out;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    uni_trim(out);
    return out;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    uni_trim(out);
    return out;
}

UniPoly uni_scale(const UniPoly& a, const Rational& c) {
    if (c.is_zero()) return {};
    UniPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

UniPoly uni_monic(const UniPoly& a) {
    if (a.empty()) return {};
    return uni_scale(a, Rational(1) / a.back());
}

UniPoly uni_derivative(const UniPoly& a) {
    if (a.size() <= 1) return {};
    UniPoly out(a.size() - 1, Rational(0));
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
    uni_trim(out);
    return out;
}

std::pair<UniPoly, UniPoly> uni_divrem(const UniPoly& a, const UniPoly& b) {
    if (b.empty()) throw MathError("univariate division by zero");
    if (a.size() < b.size()) return {{}, a};
    UniPoly rem = a;
    UniPoly quot(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (rem[i].is_zero()) continue;
        Rational q = rem[i] / lead;
        quot[i - b.size() + 1] = q;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i - b.size() + 1 + j] -= q * b[j];
        if (i == b.size() - 1) break;
    }
    uni_trim(quot);
    uni_trim(rem);
    return {quot, rem};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.empty()) {
        UniPoly r = uni_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(a);
}

Rational uni_eval(const UniPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::complex<double> uni_eval(const UniPoly& p, const std::complex<double>& x) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].to_double();
    return acc;
}

namespace {

std::vector<mpz_class> prime_factors(mpz_class n) {
    std::vector<mpz_class> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    long steps = 0;
    while (mpz_even_p(n.get_mpz_t())) {
        out.push_back(2);
        n /= 2;
    }
    mpz_class d = 3;
    while (d * d <= n) {
        if (++steps > 2000000) break;
        if (n % d == 0) {
            out.push_back(d);
            n /= d;
        } else {
            d += 2;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw BudgetExceeded("root candidate factorization too large");
        out.push_back(n);
    }
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> primes = prime_factors(n);
    std::vector<mpz_class> out{1};
    std::size_t i = 0;
    while (i < primes.size()) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t mult = j - i;
        std::vector<mpz_class> next;
        for (const auto& d : out) {
            mpz_class pw = 1;
            for (std::size_t k = 0; k <= mult; ++k) {
                next.push_back(d * pw);
                pw *= primes[i];
            }
        }
        if (next.size() > 200000) throw BudgetExceeded("too many root candidates");
        out = std::move(next);
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

RationalRootsResult rational_roots(const UniPoly& p) {
    if (p.empty()) throw MathError("rational roots of the zero polynomial");
    RationalRootsResult out;
    UniPoly cur = p;

    std::size_t val = 0;
    while (val < cur.size() && cur[val].is_zero()) ++val;
    if (val > 0) {
        out.roots.push_back({Rational(0), static_cast<int>(val)});
        cur.erase(cur.begin(), cur.begin() + static_cast<long>(val));
    }
    if (cur.size() <= 1) {
        out.residual = {Rational(1)};
        return out;
    }

    // integer scaling so the rational root bound applies
    mpz_class den_lcm = 1;
    for (const auto& c : cur)
        if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class a0 = (cur.front() * Rational(den_lcm)).numerator();
    mpz_class an = (cur.back() * Rational(den_lcm)).numerator();

    std::set<Rational> candidates;
    for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an)) {
            Rational r(num, den);
            candidates.insert(r);
            candidates.insert(-r);
        }

    const UniPoly monic_one{Rational(1)};
    for (const auto& r : candidates) {
        if (cur.size() <= 1) break;
        if (!uni_eval(cur, r).is_zero()) continue;
        int mult = 0;
        const UniPoly lin{-r, Rational(1)};
        for (;;) {
            auto [q, rem] = uni_divrem(cur, lin);
            if (!rem.empty()) break;
            cur = std::move(q);
            ++mult;
            if (cur.size() <= 1) break;
        }
        out.roots.push_back({r, mult});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    out.residual = cur.size() <= 1 ? monic_one : uni_monic(cur);
    return out;
}

std::vector<std::complex<double>> numeric_roots(const UniPoly& p) {
    if (p.empty()) throw MathError("numeric roots of the zero polynomial");
    const int n = uni_degree(p);
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = p[i].to_double() / p.back().to_double();
    return numeric_roots_c(c);
}

std::vector<std::complex<double>> numeric_roots_c(std::vector<std::complex<double>> c) {
    double scale = 0.0;
    for (const auto& a : c) scale = std::max(scale, std::abs(a));
    if (scale == 0.0) throw MathError("numeric roots of the zero polynomial");
    while (c.size() > 1 && std::abs(c.back()) < 1e-13 * scale) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return {};
    for (auto& a : c) a /= c.back();

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc(0.0, 0.0);
        for (int i = n; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };

    // Durand-Kerner with the usual deterministic seed ring
    std::vector<std::complex<double>> z(n);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> pw = seed;
    for (int k = 0; k < n; ++k) {
        z[k] = pw;
        pw *= seed;
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (std::abs(denom) < 1e-300) {
                z[k] += std::complex<double>(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            std::complex<double> delta = eval(z[k]) / denom;
            z[k] -= delta;
            worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[k])));
        }
        if (worst < 1e-14) break;
    }
    std::sort(z.begin(), z.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

} // namespace bbres
