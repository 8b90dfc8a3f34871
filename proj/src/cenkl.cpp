#include "bbres/cenkl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "bbres/errors.hpp"
#include "bbres/ideal.hpp"
#include "bbres/parser.hpp"

namespace bbres {

namespace {

char alphabet_letter(SymAlphabet a) { return a == SymAlphabet::Sigma ? 's' : 'r'; }

std::vector<std::string> alphabet_vars(SymAlphabet a, int generators) {
    if (generators < 1) throw InputError("a symmetric polynomial needs at least one generator");
    std::vector<std::string> vars;
    vars.reserve(generators);
    for (int i = 1; i <= generators; ++i)
        vars.push_back(std::string(1, alphabet_letter(a)) + std::to_string(i));
    return vars;
}

// Drop trailing generators the polynomial never uses, keeping at least one.
SymPoly trimmed(SymAlphabet a, const MultiPoly& p) {
    int used = 1;
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
            if (e[i] > 0) used = std::max(used, i + 1);
    MultiPoly out(alphabet_vars(a, used));
    for (const auto& [e, c] : p.terms())
        out.add_term(Exponents(e.begin(), e.begin() + used), c);
    return SymPoly{a, out};
}

int term_weight(const Exponents& e) {
    int w = 0;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) w += (i + 1) * e[i];
    return w;
}

// Exponent vectors of the given weight over generators 1..count.
void weight_basis(int count, int remaining, int gen, Exponents& cur, std::vector<Exponents>& out) {
    if (gen > count) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e * gen <= remaining; ++e) {
        cur[gen - 1] = e;
        weight_basis(count, remaining - e * gen, gen + 1, cur, out);
    }
    cur[gen - 1] = 0;
}

// The y^1 coefficient of a rho-monomial after the substitution.
MultiPoly y_slope(const Exponents& e, const std::vector<std::string>& svars) {
    MultiPoly mono = MultiPoly::monomial(alphabet_vars(SymAlphabet::Rho, static_cast<int>(e.size())),
                                         e, Rational(1));
    MultiPoly full = rho_to_sigma(SymPoly{SymAlphabet::Rho, mono});
    int y = static_cast<int>(e.size());
    MultiPoly out(svars);
    for (const auto& [te, c] : full.terms())
        if (te[y] == 1) out.add_term(Exponents(te.begin(), te.end() - 1), c);
    return out;
}

// Exact Gaussian solve of A c = t; nullopt when inconsistent. Free columns
// are pinned to zero.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> A,
                                                std::vector<Rational> t) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    std::vector<int> pivot_row_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && A[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(A[pr], A[r]);
        std::swap(t[pr], t[r]);
        Rational inv = A[r][c].inverse();
        for (size_t cc = c; cc < cols; ++cc) A[r][cc] *= inv;
        t[r] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || A[rr][c].is_zero()) continue;
            Rational f = A[rr][c];
            for (size_t cc = c; cc < cols; ++cc) A[rr][cc] -= f * A[r][cc];
            t[rr] -= f * t[r];
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (size_t rr = r; rr < rows; ++rr)
        if (!t[rr].is_zero()) return std::nullopt;
    std::vector<Rational> sol(cols, Rational(0));
    for (size_t c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] >= 0) sol[c] = t[pivot_row_of_col[c]];
    return sol;
}

}  // namespace

int SymPoly::weight() const {
    if (poly.is_zero()) return -1;
    int w = -1;
    for (const auto& [e, c] : poly.terms()) {
        int tw = term_weight(e);
        if (w == -1) w = tw;
        else if (w != tw) throw InputError("the polynomial is not weighted-homogeneous");
    }
    return w;
}

SymPoly sym_zero(SymAlphabet alphabet, int generators) {
    return SymPoly{alphabet, MultiPoly(alphabet_vars(alphabet, generators))};
}

SymPoly sym_generator(SymAlphabet alphabet, int index, int generators) {
    if (index < 1 || index > generators) throw InputError("generator index out of range");
    return SymPoly{alphabet, MultiPoly::variable(alphabet_vars(alphabet, generators), index - 1)};
}

SymPoly parse_sym(std::string_view text, SymAlphabet alphabet) {
    char want = alphabet_letter(alphabet);
    int ell = 1;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != want) continue;
        if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_'))
            continue;
        size_t j = i + 1;
        int idx = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            idx = idx * 10 + (text[j] - '0');
            ++j;
        }
        if (j > i + 1) ell = std::max(ell, idx);
    }
    return SymPoly{alphabet, parse_poly(text, alphabet_vars(alphabet, ell))};
}

MultiPoly rho_to_sigma(const SymPoly& psi) {
    if (psi.alphabet != SymAlphabet::Rho)
        throw InputError("expected a polynomial in the r alphabet");
    int count = psi.generators();
    std::vector<std::string> vars = alphabet_vars(SymAlphabet::Sigma, count);
    vars.push_back("y");
    int y = count;
    std::vector<MultiPoly> images;
    images.reserve(count);
    for (int j = 1; j <= count; ++j) {
        Exponents top(vars.size(), 0);
        top[j - 1] = 1;
        Exponents low(vars.size(), 0);
        low[y] = 1;
        if (j >= 2) low[j - 2] = 1;
        MultiPoly f = MultiPoly::monomial(vars, top, Rational(1));
        f += MultiPoly::monomial(vars, low, Rational(1));
        images.push_back(f);
    }
    return psi.poly.compose(images);
}

CenklDecomposition decompose(const SymPoly& psi) {
    if (psi.alphabet != SymAlphabet::Rho)
        throw InputError("expected a polynomial in the r alphabet");
    if (psi.is_zero()) throw InputError("cannot decompose the zero polynomial");
    int w = psi.weight();
    if (w < 1) throw InputError("the weight must be at least one");
    int count = psi.generators();
    int y = count;
    MultiPoly full = rho_to_sigma(psi);
    std::vector<std::string> svars = alphabet_vars(SymAlphabet::Sigma, count);
    std::map<int, MultiPoly> buckets;
    for (const auto& [e, c] : full.terms()) {
        auto [it, fresh] = buckets.try_emplace(e[y], MultiPoly(svars));
        it->second.add_term(Exponents(e.begin(), e.end() - 1), c);
    }
    CenklDecomposition dec;
    dec.ell = w - 1;
    dec.phi = buckets.count(1) ? trimmed(SymAlphabet::Sigma, buckets.at(1)) : sym_zero(SymAlphabet::Sigma, 1);
    dec.phi0 = buckets.count(0) ? trimmed(SymAlphabet::Sigma, buckets.at(0)) : sym_zero(SymAlphabet::Sigma, 1);
    for (const auto& [j, p] : buckets) {
        if (j < 2 || p.is_zero()) continue;
        dec.phij.emplace(j, trimmed(SymAlphabet::Sigma, p));
    }
    return dec;
}

SymPoly lift(const SymPoly& phi) {
    if (phi.alphabet != SymAlphabet::Sigma)
        throw InputError("expected a polynomial in the s alphabet");
    if (phi.is_zero()) return sym_zero(SymAlphabet::Rho, 1);
    int w = phi.weight();
    int count = w + 1;  // a weight-(w+1) monomial can reach r_{w+1}
    std::vector<std::string> svars = alphabet_vars(SymAlphabet::Sigma, count);
    std::vector<std::string> rvars = alphabet_vars(SymAlphabet::Rho, count);

    struct Candidate {
        Exponents e;
        MultiPoly image;
        Exponents lead;
    };
    std::vector<Exponents> basis;
    Exponents cur(count, 0);
    weight_basis(count, w + 1, 1, cur, basis);
    std::vector<Candidate> cands;
    cands.reserve(basis.size());
    for (const auto& e : basis) {
        MultiPoly img = y_slope(e, svars);
        cands.push_back({e, img, leading_term(img, TermOrder::Lex).exps});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        int da = exp_total_degree(a.e), db = exp_total_degree(b.e);
        if (da != db) return da < db;
        return a.e < b.e;
    });

    MultiPoly target = trimmed(SymAlphabet::Sigma, phi.poly).poly.with_vars(svars);

    // Greedy elimination of the leading monomial; the remainder's lead drops
    // strictly, so this ends.
    MultiPoly rem = target;
    MultiPoly psi(rvars);
    bool stuck = false;
    while (!rem.is_zero()) {
        Term lt = leading_term(rem, TermOrder::Lex);
        const Candidate* pick = nullptr;
        for (const auto& c : cands) {
            if (c.lead == lt.exps) {
                pick = &c;
                break;
            }
        }
        if (!pick) {
            stuck = true;
            break;
        }
        Rational q = lt.coeff / pick->image.coefficient(pick->lead);
        psi += MultiPoly::monomial(rvars, pick->e, q);
        rem -= pick->image * q;
    }
    if (!stuck) return trimmed(SymAlphabet::Rho, psi);

    // A lone monomial cannot cancel the remainder's lead; fall back to the
    // smallest candidate subset whose span contains the target.
    if (cands.size() > 20) throw BudgetExceeded("the lift fallback basis is too large");
    std::map<Exponents, size_t> row_of;
    for (const auto& c : cands)
        for (const auto& [e, coeff] : c.image.terms()) row_of.try_emplace(e, row_of.size());
    for (const auto& [e, coeff] : target.terms()) row_of.try_emplace(e, row_of.size());
    std::vector<Rational> t(row_of.size(), Rational(0));
    for (const auto& [e, coeff] : target.terms()) t[row_of.at(e)] = coeff;

    std::vector<size_t> idx;
    auto try_subset = [&](const std::vector<size_t>& subset) -> std::optional<SymPoly> {
        std::vector<std::vector<Rational>> A(row_of.size(), std::vector<Rational>(subset.size(), Rational(0)));
        for (size_t col = 0; col < subset.size(); ++col)
            for (const auto& [e, coeff] : cands[subset[col]].image.terms())
                A[row_of.at(e)][col] = coeff;
        auto sol = solve_exact(A, t);
        if (!sol) return std::nullopt;
        MultiPoly out(rvars);
        for (size_t col = 0; col < subset.size(); ++col)
            if (!(*sol)[col].is_zero())
                out += MultiPoly::monomial(rvars, cands[subset[col]].e, (*sol)[col]);
        return trimmed(SymAlphabet::Rho, out);
    };
    for (size_t size = 1; size <= cands.size(); ++size) {
        std::vector<size_t> subset(size);
        for (size_t i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            if (auto out = try_subset(subset)) return *out;
            int pos = static_cast<int>(size) - 1;
            while (pos >= 0 && subset[pos] == cands.size() - size + pos) --pos;
            if (pos < 0) break;
            ++subset[pos];
            for (size_t i = pos + 1; i < size; ++i) subset[i] = subset[i - 1] + 1;
        }
    }
    throw MathError("no lift exists within the weight basis");
}

std::pair<int, int> bundle_dimension_shift(int dim_sing, int dim_leaf) {
    if (dim_sing < 0 || dim_leaf < 0) throw InputError("dimensions must be nonnegative");
    if (dim_sing >= dim_leaf)
        throw InputError("the singular set must sit below the leaf dimension");
    return {dim_sing + 1, dim_leaf};
}

BundleClass::BundleClass(int n, int m) : n_(n), m_(m), plain_(n + 1), fiber_(n + 1) {}

void BundleClass::require_same(const BundleClass& o) const {
    if (n_ != o.n_ || m_ != o.m_) throw InputError("classes live in different bundle rings");
}

bool BundleClass::is_zero() const {
    for (const auto& c : plain_)
        if (!c.is_zero()) return false;
    for (const auto& c : fiber_)
        if (!c.is_zero()) return false;
    return true;
}

int BundleClass::homogeneous_degree() const {
    int deg = -1;
    auto feed = [&](int d) {
        if (deg == -1) deg = d;
        else if (deg != d) deg = -2;
    };
    for (int i = 0; i <= n_; ++i) {
        if (!plain_[i].is_zero()) feed(i);
        if (!fiber_[i].is_zero()) feed(i + 1);
    }
    return deg == -2 ? -2 : (deg == -1 ? -1 : deg);
}

BundleClass BundleClass::operator+(const BundleClass& o) const {
    require_same(o);
    BundleClass out = *this;
    for (int i = 0; i <= n_; ++i) {
        out.plain_[i] += o.plain_[i];
        out.fiber_[i] += o.fiber_[i];
    }
    return out;
}

BundleClass BundleClass::operator-(const BundleClass& o) const {
    require_same(o);
    BundleClass out = *this;
    for (int i = 0; i <= n_; ++i) {
        out.plain_[i] -= o.plain_[i];
        out.fiber_[i] -= o.fiber_[i];
    }
    return out;
}

BundleClass BundleClass::operator*(const BundleClass& o) const {
    require_same(o);
    BundleClass out(n_, m_);
    Rational mr(m_);
    Rational m2 = mr * mr;
    for (int i = 0; i <= n_; ++i) {
        for (int j = 0; j <= n_; ++j) {
            if (!plain_[i].is_zero() && !o.plain_[j].is_zero() && i + j <= n_)
                out.plain_[i + j] += plain_[i] * o.plain_[j];
            if (!plain_[i].is_zero() && !o.fiber_[j].is_zero() && i + j <= n_)
                out.fiber_[i + j] += plain_[i] * o.fiber_[j];
            if (!fiber_[i].is_zero() && !o.plain_[j].is_zero() && i + j <= n_)
                out.fiber_[i + j] += fiber_[i] * o.plain_[j];
            if (!fiber_[i].is_zero() && !o.fiber_[j].is_zero()) {
                // xi^2 = 2m*h*xi - m^2*h^2
                Rational c = fiber_[i] * o.fiber_[j];
                if (i + j + 1 <= n_) out.fiber_[i + j + 1] += Rational(2) * mr * c;
                if (i + j + 2 <= n_) out.plain_[i + j + 2] -= m2 * c;
            }
        }
    }
    return out;
}

BundleClass BundleClass::pow(int e) const {
    if (e < 0) throw InputError("negative powers are not defined here");
    BundleClass out(n_, m_);
    out.plain_[0] = Rational(1);
    BundleClass base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::string BundleClass::str() const {
    struct Part {
        Rational coeff;
        int hpow;
        int xipow;
    };
    std::vector<Part> parts;
    for (int d = 0; d <= n_ + 1; ++d) {
        if (d <= n_ && !plain_[d].is_zero()) parts.push_back({plain_[d], d, 0});
        if (d >= 1 && !fiber_[d - 1].is_zero()) parts.push_back({fiber_[d - 1], d - 1, 1});
    }
    if (parts.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        const Part& p = parts[i];
        bool negative = p.coeff.sign() < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = negative ? -p.coeff : p.coeff;
        std::string gens;
        if (p.hpow == 1) gens = "h";
        else if (p.hpow > 1) gens = "h^" + std::to_string(p.hpow);
        if (p.xipow == 1) {
            if (!gens.empty()) gens += "*";
            gens += "xi";
        }
        if (gens.empty()) out += mag.str();
        else if (mag == Rational(1)) out += gens;
        else out += mag.str() + gens;
    }
    return out;
}

BundleRing::BundleRing(int n, int m) : n_(n), m_(m) {
    if (n < 1) throw InputError("the base dimension must be at least one");
    if (m < 1) throw InputError("the twist must be positive");
}

BundleClass BundleRing::zero() const { return BundleClass(n_, m_); }

BundleClass BundleRing::one() const { return scalar(Rational(1)); }

BundleClass BundleRing::scalar(const Rational& c) const {
    BundleClass out(n_, m_);
    out.plain_[0] = c;
    return out;
}

BundleClass BundleRing::h() const { return h_power(1); }

BundleClass BundleRing::h_power(int k) const {
    if (k < 0) throw InputError("negative powers are not defined here");
    BundleClass out(n_, m_);
    if (k <= n_) out.plain_[k] = Rational(1);
    return out;
}

BundleClass BundleRing::xi() const {
    BundleClass out(n_, m_);
    out.fiber_[0] = Rational(1);
    return out;
}

BundleClass BundleRing::tau() const {
    BundleClass out(n_, m_);
    out.fiber_[0] = Rational(2);
    if (n_ >= 1) out.plain_[1] = Rational(-2 * m_);
    return out;
}

namespace {

// Evaluate a sigma polynomial on a rank-one bundle: s1 -> m*h, higher
// generators vanish.
BundleClass eval_rank_one(const SymPoly& f, const BundleRing& ring) {
    if (f.alphabet != SymAlphabet::Sigma)
        throw InputError("expected decomposition data in the s alphabet");
    BundleClass out = ring.zero();
    for (const auto& [e, c] : f.poly.terms()) {
        bool higher = false;
        for (int i = 1; i < static_cast<int>(e.size()); ++i)
            if (e[i] > 0) higher = true;
        if (higher) continue;
        int p = e.empty() ? 0 : e[0];
        Rational scale = c * Rational::pow(Rational(ring.m()), p);
        out = out + ring.scalar(scale) * ring.h_power(p);
    }
    return out;
}

}  // namespace

BundleClass rhs_theorem5(const Rational& lambda, int z_degree, int n, int k, int m,
                         const CenklDecomposition& dec) {
    if (k != 1) throw InputError("the bundle evaluation needs rank-one normal data (codimension one)");
    if (n < 2) throw InputError("the ambient dimension must be at least two");
    if (z_degree <= 0) throw InputError("the component degree must be positive");
    if (m < 1) throw InputError("the twist must be positive");
    if (dec.ell != k + 1)
        throw InputError("the decomposition weight does not match the residue weight");
    BundleRing ring(n, m);
    BundleClass t = ring.tau();
    BundleClass out = ring.scalar(lambda * Rational(z_degree)) * ring.h_power(k + 1) * t;
    out = out + eval_rank_one(dec.phi0, ring);
    for (const auto& [j, f] : dec.phij) out = out + eval_rank_one(f, ring) * t.pow(j);
    return out;
}

}  // namespace bbres
