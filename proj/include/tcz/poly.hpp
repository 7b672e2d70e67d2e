#pragma once

// Dense univariate polynomials over an exact coefficient ring, ascending
// coefficient order, trailing zeros trimmed. The default ring is cpp_int;
// Poly<CheckedI64> is a fast path for determinant elimination that throws
// OverflowSignal on 64-bit overflow so callers can retry with big integers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tcz/numeric.hpp"

namespace tcz {

struct OverflowSignal {};

struct CheckedI64 {
    std::int64_t v = 0;
    CheckedI64() = default;
    CheckedI64(int x) : v(x) {}
    CheckedI64(std::int64_t x) : v(x) {}
    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
        CheckedI64 r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
        CheckedI64 r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
        return r;
    }
    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
        CheckedI64 r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a) {
        if (a.v == INT64_MIN) throw OverflowSignal{};
        return CheckedI64{-a.v};
    }
    friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
    friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
};

// exact scalar division; throws std::logic_error when not divisible
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::logic_error("exact_div: division by zero");
    Int q = a / b;
    if (q * b != a) throw std::logic_error("exact_div: not divisible");
    return q;
}

inline CheckedI64 exact_div(CheckedI64 a, CheckedI64 b) {
    if (b.v == 0) throw std::logic_error("exact_div: division by zero");
    if (a.v % b.v != 0) throw std::logic_error("exact_div: not divisible");
    return CheckedI64{a.v / b.v};
}

template <class T>
struct Poly {
    std::vector<T> c;  // c[i] is the z^i coefficient

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(T v) {
        Poly p;
        if (!(v == T(0))) p.c.push_back(v);
        return p;
    }
    // 1 - z^p
    static Poly one_minus_zpow(int p) {
        Poly r;
        r.c.assign(static_cast<size_t>(p) + 1, T(0));
        r.c[0] = T(1);
        r.c[static_cast<size_t>(p)] = T(-1);
        return r;
    }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return T(0);
        return c[static_cast<size_t>(i)];
    }
    T lc() const {
        if (c.empty()) throw std::logic_error("lc of zero polynomial");
        return c.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, T(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == T(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j) {
                if (b.c[j] == T(0)) continue;
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
            }
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const T& s) {
        Poly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // z^degree * p(1/z)
    Poly reversed() const {
        Poly r = *this;
        std::reverse(r.c.begin(), r.c.end());
        r.trim();
        return r;
    }

    // p(s*z) for s = +-1
    Poly scale_arg_sign(int s) const {
        Poly r = *this;
        if (s == -1)
            for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        else if (s != 1)
            throw std::invalid_argument("scale_arg_sign: s must be +-1");
        return r;
    }

    Poly shifted(int k) const {  // multiply by z^k
        if (is_zero()) return Poly{};
        Poly r;
        r.c.assign(c.size() + static_cast<size_t>(k), T(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + static_cast<size_t>(k)] = c[i];
        return r;
    }
};

using IntPoly = Poly<Int>;

// Long division assuming an exact quotient exists in R[z]; throws
// std::logic_error otherwise (callers pre-establish divisibility).
template <class T>
Poly<T> divide_exact(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::logic_error("divide_exact: division by zero polynomial");
    if (a.is_zero()) return Poly<T>{};
    if (a.degree() < b.degree()) throw std::logic_error("divide_exact: not divisible (degree)");
    std::vector<T> rem = a.c;
    int db = b.degree();
    std::vector<T> q(static_cast<size_t>(a.degree() - db) + 1, T(0));
    for (int i = a.degree() - db; i >= 0; --i) {
        T top = rem[static_cast<size_t>(i + db)];
        if (top == T(0)) continue;
        T qi = exact_div(top, b.lc());
        q[static_cast<size_t>(i)] = qi;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - qi * b.c[static_cast<size_t>(j)];
    }
    for (const auto& x : rem)
        if (!(x == T(0))) throw std::logic_error("divide_exact: nonzero remainder");
    Poly<T> res(std::move(q));
    return res;
}

template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    return divide_exact(a, b);
}

// Division attempt over Z[z]; nullopt when b does not divide a in Z[z].
template <class T>
std::optional<Poly<T>> try_divide(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly<T>{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<T> rem = a.c;
    int db = b.degree();
    std::vector<T> q(static_cast<size_t>(a.degree() - db) + 1, T(0));
    for (int i = a.degree() - db; i >= 0; --i) {
        T top = rem[static_cast<size_t>(i + db)];
        if (top == T(0)) continue;
        try {
            q[static_cast<size_t>(i)] = exact_div(top, b.lc());
        } catch (const std::logic_error&) {
            return std::nullopt;
        }
        T qi = q[static_cast<size_t>(i)];
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - qi * b.c[static_cast<size_t>(j)];
    }
    for (const auto& x : rem)
        if (!(x == T(0))) return std::nullopt;
    return Poly<T>(std::move(q));
}

inline Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const auto& x : p.c) g = int_gcd(g, x);
    return g;  // 0 for the zero polynomial
}

inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = poly_content(p);
    if (p.lc() < 0) g = -g;  // normalize sign of leading coefficient
    IntPoly r = p;
    for (auto& x : r.c) x = exact_div(x, g);
    return r;
}

// gcd over Z[z] via primitive pseudo-remainder sequence. Result divides both
// arguments in Z[z]; leading coefficient positive.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b) * poly_content(b);
    if (b.is_zero()) return primitive_part(a) * poly_content(a);
    Int cont = int_gcd(poly_content(a), poly_content(b));
    IntPoly r0 = primitive_part(a), r1 = primitive_part(b);
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        // pseudo-remainder of r0 by r1
        int d = r0.degree() - r1.degree();
        Int f = int_pow(r1.lc(), static_cast<unsigned>(d) + 1);
        IntPoly rem = r0 * f;
        int db = r1.degree();
        for (int i = rem.degree() - db; i >= 0; --i) {
            Int top = rem.coeff(i + db);
            if (top == 0) continue;
            Int qi = exact_div(top, r1.lc());
            for (int j = 0; j <= db; ++j)
                rem.c[static_cast<size_t>(i + j)] -= qi * r1.c[static_cast<size_t>(j)];
        }
        rem.trim();
        r0 = r1;
        r1 = rem.is_zero() ? rem : primitive_part(rem);
    }
    return primitive_part(r0) * cont;
}

inline IntPoly poly_from_ints(std::initializer_list<long long> v) {
    std::vector<Int> c;
    for (long long x : v) c.emplace_back(x);
    return IntPoly(std::move(c));
}

}  // namespace tcz
