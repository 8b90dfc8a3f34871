#include "bbres/parser.hpp"

#include "bbres/errors.hpp"

#include <cctype>

namespace bbres {

namespace {

struct Parser {
    std::string_view text;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    explicit Parser(std::string_view t, const std::vector<std::string>& v) : text(t), vars(v) {}

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool is_ident_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    // Longest declared variable name starting at pos, or -1.
    int match_variable() {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const std::string& name = vars[i];
            if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
                best = static_cast<int>(i);
                best_len = name.size();
            }
        }
        return best;
    }

    mpz_class parse_uint(const char* what) {
        skip_space();
        std::size_t start = pos;
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits.push_back(text[pos++]);
        if (digits.empty()) fail(std::string("expected ") + what, start);
        return mpz_class(digits);
    }

    MultiPoly parse_atom() {
        skip_space();
        if (pos >= text.size()) fail("unexpected end of expression", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            MultiPoly inner = parse_expr();
            skip_space();
            if (!consume(')')) fail("expected ')'", pos);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(vars, Rational(parse_uint("integer")));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int v = match_variable();
            if (v < 0) {
                std::size_t start = pos, end = pos;
                while (end < text.size() && is_ident_char(text[end])) ++end;
                fail("unknown variable '" + std::string(text.substr(start, end - start)) + "'", start);
            }
            pos += vars[v].size();
            return MultiPoly::variable(vars, v);
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        while (true) {
            skip_space();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_space();
                if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
                    fail("exponent must be a non-negative integer", pos);
                mpz_class e = parse_uint("exponent");
                if (!e.fits_sint_p()) fail("exponent too large", pos);
                base = base.pow(static_cast<int>(e.get_si()));
            } else {
                return base;
            }
        }
    }

    MultiPoly parse_signed_power() {
        skip_space();
        int sign = 1;
        while (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            if (text[pos] == '-') sign = -sign;
            ++pos;
            skip_space();
        }
        MultiPoly p = parse_power();
        return sign < 0 ? -p : p;
    }

    // A term is a product chain: explicit '*', '/', or juxtaposition.
    // Juxtaposed factors must start with a variable or '(' so that adjacent
    // integer literals are rejected rather than silently multiplied.
    MultiPoly parse_term() {
        MultiPoly acc = parse_signed_power();
        while (true) {
            skip_space();
            if (pos >= text.size()) return acc;
            char c = text[pos];
            if (c == '*') {
                ++pos;
                acc *= parse_signed_power();
            } else if (c == '/') {
                std::size_t at = pos;
                ++pos;
                MultiPoly divisor = parse_power();
                if (!divisor.is_constant()) fail("division by a non-constant expression", at);
                Rational d = divisor.constant_value();
                if (d.is_zero()) fail("division by zero", at);
                acc *= d.inverse();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
                acc *= parse_power();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_expr() {
        MultiPoly acc = parse_term();
        while (true) {
            skip_space();
            if (pos >= text.size()) return acc;
            char c = text[pos];
            if (c == '+') {
                ++pos;
                acc += parse_term();
            } else if (c == '-') {
                ++pos;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly run() {
        if (at_end()) fail("empty expression", 0);
        MultiPoly p = parse_expr();
        skip_space();
        if (pos != text.size()) fail("trailing input", pos);
        return p;
    }
};

} // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

} // namespace bbres
