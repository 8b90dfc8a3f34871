#include "bbres/multipoly.hpp"

#include "bbres/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bbres {

int exp_total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw MathError("exponent subtraction went negative");
    }
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

namespace {
void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("operation on polynomials over different variable lists");
}
} // namespace

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Rational c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
    MultiPoly p(std::move(vars));
    if (index < 0 || index >= p.nvars()) throw std::invalid_argument("variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents e, Rational c) {
    MultiPoly p(std::move(vars));
    if (static_cast<int>(e.size()) != p.nvars()) throw std::invalid_argument("exponent arity mismatch");
    p.add_term(e, c);
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw MathError("constant_value of a non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_total_degree(e));
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous(int* degree) const {
    if (terms_.empty()) {
        if (degree) *degree = -1;
        return true;
    }
    int d = exp_total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_total_degree(e) != d) return false;
    if (degree) *degree = d;
    return true;
}

bool MultiPoly::is_univariate(int* var) const {
    int used = -1;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > 0) {
                if (used == -1) used = i;
                else if (used != i) return false;
            }
    if (var) *var = used == -1 ? 0 : used;
    return true;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly acc = MultiPoly::constant(vars_, Rational(1));
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        int k = d[var];
        d[var] = 0;
        r.add_term(d, c * Rational::pow(value, k));
    }
    return r;
}

MultiPoly MultiPoly::without_var(int var) const {
    if (degree_in(var) > 0) throw MathError("dropping a variable still in use");
    std::vector<std::string> nv;
    for (int i = 0; i < nvars(); ++i)
        if (i != var) nv.push_back(vars_[i]);
    MultiPoly r(nv);
    for (const auto& [e, c] : terms_) {
        Exponents d;
        for (int i = 0; i < nvars(); ++i)
            if (i != var) d.push_back(e[i]);
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars())
        throw std::invalid_argument("compose: one image per variable required");
    if (images.empty()) throw std::invalid_argument("compose: empty image list");
    const auto& tv = images[0].vars();
    for (const auto& im : images)
        if (im.vars() != tv) throw std::invalid_argument("compose: images over different variable lists");

    // Cache successive powers of each image.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power = [&](int i, int k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(tv, Rational(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };

    MultiPoly r(tv);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(tv, c);
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > 0) term *= power(i, e[i]);
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::rename_vars(std::vector<std::string> names) const {
    if (static_cast<int>(names.size()) != nvars())
        throw std::invalid_argument("rename_vars: arity mismatch");
    MultiPoly r(std::move(names));
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c);
    return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& superset) const {
    std::vector<int> where(nvars(), -1);
    for (int i = 0; i < nvars(); ++i) {
        for (std::size_t j = 0; j < superset.size(); ++j)
            if (superset[j] == vars_[i]) {
                where[i] = static_cast<int>(j);
                break;
            }
        if (where[i] < 0)
            throw std::invalid_argument("with_vars: variable '" + vars_[i] + "' missing from superset");
    }
    MultiPoly r(superset);
    for (const auto& [e, c] : terms_) {
        Exponents d(superset.size(), 0);
        for (int i = 0; i < nvars(); ++i) d[where[i]] = e[i];
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars())
        throw std::invalid_argument("permute_vars: arity mismatch");
    std::vector<std::string> nv(nvars());
    for (int j = 0; j < nvars(); ++j) nv[j] = vars_[perm[j]];
    MultiPoly r(nv);
    for (const auto& [e, c] : terms_) {
        Exponents d(nvars());
        for (int j = 0; j < nvars(); ++j) d[j] = e[perm[j]];
        r.add_term(d, c);
    }
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw std::invalid_argument("evaluate: point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > 0) t *= Rational::pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

std::complex<double> MultiPoly::evaluate(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw std::invalid_argument("evaluate: point arity mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t(c.to_double(), 0.0);
        for (int i = 0; i < nvars(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    // Render by descending total degree, then descending exponent vector.
    std::vector<const std::pair<const Exponents, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        int da = exp_total_degree(a->first), db = exp_total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool any_var = exp_total_degree(e) > 0;
        bool coeff_shown = !a.is_one() || !any_var;
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
    require_same_vars(f, g);
    if (g.is_zero()) throw MathError("exact division by zero polynomial");
    // Divide leading terms under the canonical map order (last key is maximal).
    MultiPoly q(f.vars());
    MultiPoly r = f;
    const auto& gt = *g.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rt = *r.terms().rbegin();
        if (!exp_divides(gt.first, rt.first)) throw MathError("non-exact polynomial division");
        Exponents e = exp_sub(rt.first, gt.first);
        Rational c = rt.second / gt.second;
        MultiPoly t = MultiPoly::monomial(f.vars(), e, c);
        q += t;
        r -= t * g;
    }
    return q;
}

PolyMatrix::PolyMatrix(int rows, int cols, const std::vector<std::string>& vars)
    : m_(rows, std::vector<MultiPoly>(cols, MultiPoly(vars))) {}

PolyMatrix::PolyMatrix(std::vector<std::vector<MultiPoly>> rows) : m_(std::move(rows)) {
    for (const auto& row : m_)
        if (row.size() != m_[0].size()) throw std::invalid_argument("ragged matrix");
}

MultiPoly PolyMatrix::trace() const {
    if (rows() != cols()) throw std::invalid_argument("trace of non-square matrix");
    if (rows() == 0) throw std::invalid_argument("trace of empty matrix");
    MultiPoly t(m_[0][0].vars());
    for (int i = 0; i < rows(); ++i) t += m_[i][i];
    return t;
}

MultiPoly PolyMatrix::det() const {
    if (rows() != cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (rows() == 0) throw std::invalid_argument("determinant of empty matrix");
    const auto& vars = m_[0][0].vars();
    int n = rows();
    std::vector<std::vector<MultiPoly>> a = m_;
    MultiPoly prev = MultiPoly::constant(vars, Rational(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == -1) return MultiPoly(vars); // singular column
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = MultiPoly(vars);
        }
        prev = a[k][k];
    }
    MultiPoly d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

PolyMatrix jacobian(const std::vector<MultiPoly>& components) {
    if (components.empty()) throw std::invalid_argument("jacobian of empty system");
    const auto& vars = components[0].vars();
    for (const auto& c : components)
        if (c.vars() != vars) throw std::invalid_argument("jacobian: mixed variable lists");
    std::vector<std::vector<MultiPoly>> rows;
    for (const auto& c : components) {
        std::vector<MultiPoly> row;
        for (int j = 0; j < static_cast<int>(vars.size()); ++j) row.push_back(c.derivative(j));
        rows.push_back(std::move(row));
    }
    return PolyMatrix(std::move(rows));
}

} // namespace bbres
