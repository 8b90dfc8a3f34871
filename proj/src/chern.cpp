#include "bbres/chern.hpp"
#include "bbres/errors.hpp"

#include <sstream>

namespace bbres {

int ChernMonomial::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) w += static_cast<int>(i + 1) * alpha[i];
    return w;
}

bool ChernMonomial::uses_beyond_c1() const {
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i] != 0) return true;
    return false;
}

ChernMonomial ChernMonomial::parse(const std::string& text) {
    ChernMonomial out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    };
    skip();
    if (i == n) throw InputError("empty Chern monomial");
    if (text.compare(i, n - i, "1") == 0) return out; // the weight-zero monomial
    while (i < n) {
        if (text[i] != 'c') throw InputError("expected 'c<index>' in Chern monomial: '" + text + "'");
        ++i;
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw InputError("missing Chern class index in '" + text + "'");
        int idx = std::stoi(text.substr(start, i - start));
        if (idx < 1) throw InputError("Chern class index must be positive");
        int exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw InputError("missing exponent in '" + text + "'");
            exp = std::stoi(text.substr(start, i - start));
        }
        if (static_cast<int>(out.alpha.size()) < idx) out.alpha.resize(idx, 0);
        out.alpha[idx - 1] += exp;
        skip();
    }
    return out;
}

std::string ChernMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (!first) os << "*";
        os << "c" << (i + 1);
        if (alpha[i] > 1) os << "^" << alpha[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

CohomologyClass::CohomologyClass(int n) : n_(n), c_(n + 1, Rational(0)) {
    if (n < 0) throw InputError("ambient dimension must be non-negative");
}

CohomologyClass CohomologyClass::hyperplane_power(int n, int degree, const Rational& coeff) {
    CohomologyClass out(n);
    if (degree < 0) throw InputError("negative cohomological degree");
    if (degree <= n) out.c_[degree] = coeff;
    return out;
}

const Rational& CohomologyClass::coeff(int degree) const {
    if (degree < 0 || degree > n_) throw InputError("cohomological degree out of range");
    return c_[degree];
}

void CohomologyClass::set_coeff(int degree, const Rational& c) {
    if (degree < 0 || degree > n_) throw InputError("cohomological degree out of range");
    c_[degree] = c;
}

bool CohomologyClass::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void require_same_ambient(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.ambient() != b.ambient()) throw InputError("cohomology classes from different ambient spaces");
}

} // namespace

CohomologyClass CohomologyClass::operator+(const CohomologyClass& o) const {
    require_same_ambient(*this, o);
    CohomologyClass out(n_);
    for (int d = 0; d <= n_; ++d) out.c_[d] = c_[d] + o.c_[d];
    return out;
}

CohomologyClass CohomologyClass::operator-(const CohomologyClass& o) const {
    require_same_ambient(*this, o);
    CohomologyClass out(n_);
    for (int d = 0; d <= n_; ++d) out.c_[d] = c_[d] - o.c_[d];
    return out;
}

CohomologyClass CohomologyClass::operator-() const {
    CohomologyClass out(n_);
    for (int d = 0; d <= n_; ++d) out.c_[d] = -c_[d];
    return out;
}

CohomologyClass CohomologyClass::operator*(const CohomologyClass& o) const {
    require_same_ambient(*this, o);
    CohomologyClass out(n_);
    for (int a = 0; a <= n_; ++a) {
        if (c_[a].is_zero()) continue;
        for (int b = 0; a + b <= n_; ++b) out.c_[a + b] += c_[a] * o.c_[b];
    }
    return out;
}

CohomologyClass CohomologyClass::operator*(const Rational& c) const {
    CohomologyClass out(n_);
    for (int d = 0; d <= n_; ++d) out.c_[d] = c_[d] * c;
    return out;
}

std::string CohomologyClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= n_; ++d) {
        if (c_[d].is_zero()) continue;
        Rational a = c_[d];
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (d == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str();
            os << "h";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CohomologyClass component_class(int degree, int n, int k) {
    if (degree <= 0) throw InputError("component degree must be positive");
    if (k + 1 > n) throw InputError("component codimension exceeds ambient dimension");
    return CohomologyClass::hyperplane_power(n, k + 1, Rational(degree));
}

GlobalCheckReport global_check(int n, int k, int m, const ChernMonomial& phi,
                               const std::vector<GlobalItem>& items) {
    if (phi.weight() != k + 1)
        throw InputError("Chern monomial weight " + std::to_string(phi.weight()) +
                         " does not match codimension + 1 = " + std::to_string(k + 1));
    if (phi.uses_beyond_c1())
        throw InputError("global check needs Chern classes of the normal sheaf beyond c1, "
                         "which are unavailable for rank-one data");

    GlobalCheckReport rep{CohomologyClass(n), CohomologyClass(n), CohomologyClass(n), false};
    // phi = c1^{k+1} on c1(N_F) = m h
    const int a1 = phi.alpha.empty() ? 0 : phi.alpha[0];
    rep.lhs = CohomologyClass::hyperplane_power(n, a1, Rational::pow(Rational(m), a1));

    rep.rhs = CohomologyClass(n);
    for (const auto& item : items)
        rep.rhs = rep.rhs + component_class(item.degree, n, k) * item.lambda;

    rep.discrepancy = rep.rhs - rep.lhs;
    rep.pass = rep.discrepancy.is_zero();
    return rep;
}

} // namespace bbres
