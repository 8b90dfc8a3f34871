#include "bbres/rational.hpp"

#include "bbres/errors.hpp"

#include <cctype>
#include <ostream>

namespace bbres {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw MathError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    std::size_t i = 0, n = text.size();
    auto read_int = [&]() -> mpz_class {
        std::string digits;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') digits.push_back('-'); // mpz rejects a leading '+'
            ++i;
        }
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
        if (i == start) fail();
        return mpz_class(digits);
    };
    mpz_class num = read_int();
    mpz_class den = 1;
    if (i < n && text[i] == '/') {
        ++i;
        den = read_int();
        if (sgn(den) == 0) fail();
    }
    if (i != n) fail();
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(const Rational& base, int e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace bbres
