#pragma once

// Rational functions in z over the integers, kept in lowest terms: polynomial
// gcd (including integer content) cancelled, lowest nonzero coefficient of the
// denominator positive. Display emits a deterministic factored form built from
// (1 - z^p) pieces; parse() reads that grammar back so round-tripping can be
// checked coefficient-for-coefficient.

#include <cctype>
#include <string>
#include <vector>

#include "tcz/error.hpp"
#include "tcz/poly.hpp"

namespace tcz {

struct RationalFunction {
    IntPoly num, den;

    RationalFunction() : num(IntPoly::constant(0)), den(IntPoly::constant(1)) {}
    RationalFunction(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
        normalize();
    }
    static RationalFunction one() {
        return RationalFunction(IntPoly::constant(1), IntPoly::constant(1));
    }

    void normalize() {
        if (den.is_zero()) throw std::logic_error("RationalFunction: zero denominator");
        if (num.is_zero()) {
            den = IntPoly::constant(1);
            return;
        }
        IntPoly g = poly_gcd(num, den);
        num = divide_exact(num, g);
        den = divide_exact(den, g);
        for (const auto& c : den.c) {
            if (c == 0) continue;
            if (c < 0) {
                num = -num;
                den = -den;
            }
            break;
        }
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.num, a.den * b.den);
    }
    RationalFunction reciprocal() const {
        if (num.is_zero()) throw std::logic_error("reciprocal of zero");
        return RationalFunction(den, num);
    }

    std::string display() const;
    static RationalFunction parse(const std::string& text);
};

namespace display_detail {

inline std::string int_str(const Int& v) { return v.str(); }

inline std::string poly_str(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        Int c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string zpart;
        if (i == 1) zpart = "z";
        else if (i > 1) zpart = "z^" + std::to_string(i);
        if (i == 0) out += int_str(a);
        else if (a == 1) out += zpart;
        else out += int_str(a) + "*" + zpart;
    }
    return out;
}

struct Factored {
    Int scalar = 1;
    std::vector<std::pair<int, int>> powers;  // (p, multiplicity) for 1 - z^p
    IntPoly rest = IntPoly::constant(1);
};

// Pull out integer content (signed so the remainder's lowest coefficient is
// positive), then greedily strip (1 - z^p) factors, largest p first.
inline Factored factorize(const IntPoly& p) {
    Factored f;
    if (p.is_zero()) {
        f.scalar = 0;
        f.rest = IntPoly{};
        return f;
    }
    Int s = poly_content(p);
    for (const auto& c : p.c) {
        if (c == 0) continue;
        if (c < 0) s = -s;
        break;
    }
    f.scalar = s;
    IntPoly r = p;
    for (auto& c : r.c) c = exact_div(c, s);
    for (int d = r.degree(); d >= 1; --d) {
        IntPoly fac = IntPoly::one_minus_zpow(d);
        int mult = 0;
        while (true) {
            auto q = try_divide(r, fac);
            if (!q) break;
            r = *q;
            ++mult;
        }
        if (mult > 0) f.powers.emplace_back(d, mult);
    }
    std::sort(f.powers.begin(), f.powers.end());
    f.rest = r;
    return f;
}

inline std::string side_str(const IntPoly& p, bool bare_ok) {
    Factored f = factorize(p);
    if (f.scalar == 0) return "0";
    std::vector<std::string> toks;
    bool rest_is_one = (f.rest.degree() == 0 && f.rest.coeff(0) == 1);
    if (f.scalar != 1 || (f.powers.empty() && rest_is_one)) toks.push_back(int_str(f.scalar));
    for (auto [d, e] : f.powers) {
        std::string t = (d == 1) ? "(1 - z)" : "(1 - z^" + std::to_string(d) + ")";
        if (e > 1) t += "^" + std::to_string(e);
        toks.push_back(t);
    }
    if (!rest_is_one) {
        if (bare_ok && toks.empty()) return poly_str(f.rest);
        toks.push_back("(" + poly_str(f.rest) + ")");
    }
    std::string out;
    for (size_t i = 0; i < toks.size(); ++i) {
        if (i) out += " * ";
        out += toks[i];
    }
    return out;
}

}  // namespace display_detail

inline std::string RationalFunction::display() const {
    const bool den_is_one = (den.degree() == 0 && den.coeff(0) == 1);
    if (den_is_one) return display_detail::side_str(num, true);
    return display_detail::side_str(num, false) + " / " + display_detail::side_str(den, false);
}

namespace parse_detail {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return i < s.size() ? s[i++] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw ParseError("expected integer at position " + std::to_string(start));
        return Int(s.substr(start, i - start));
    }
};

IntPoly parse_expr(Lexer& lx);

inline IntPoly parse_primary(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        lx.get();
        IntPoly e = parse_expr(lx);
        if (!lx.eat(')')) throw ParseError("expected ')'");
        return e;
    }
    if (c == 'z') {
        lx.get();
        return poly_from_ints({0, 1});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        return IntPoly::constant(lx.integer());
    }
    throw ParseError(std::string("unexpected character '") + c + "' in rational display");
}

inline IntPoly parse_factor(Lexer& lx) {
    IntPoly base = parse_primary(lx);
    if (lx.eat('^')) {
        Int e = lx.integer();
        if (e < 0 || e > 4096) throw ParseError("unsupported exponent");
        IntPoly r = IntPoly::constant(1);
        for (Int k = 0; k < e; ++k) r = r * base;
        return r;
    }
    return base;
}

inline IntPoly parse_term(Lexer& lx) {
    IntPoly acc = parse_factor(lx);
    while (lx.eat('*')) acc = acc * parse_factor(lx);
    return acc;
}

inline IntPoly parse_expr(Lexer& lx) {
    bool neg = lx.eat('-');
    IntPoly acc = parse_term(lx);
    if (neg) acc = -acc;
    while (true) {
        char c = lx.peek();
        if (c == '+') {
            lx.get();
            acc = acc + parse_term(lx);
        } else if (c == '-') {
            lx.get();
            acc = acc - parse_term(lx);
        } else {
            break;
        }
    }
    return acc;
}

}  // namespace parse_detail

inline RationalFunction RationalFunction::parse(const std::string& text) {
    parse_detail::Lexer lx(text);
    IntPoly num = parse_detail::parse_expr(lx);
    IntPoly den = IntPoly::constant(1);
    if (lx.eat('/')) den = parse_detail::parse_expr(lx);
    if (lx.peek() != '\0') throw ParseError("trailing characters in rational display");
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace tcz
