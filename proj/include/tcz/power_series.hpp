#pragma once

// Truncated power series with exact rational coefficients, fixed order N
// (coefficients 0..N). exp/log are the standard derivative recurrences and
// are exact inverses of each other at matching truncation order.

#include <vector>

#include "tcz/numeric.hpp"
#include "tcz/poly.hpp"

namespace tcz {

struct PowerSeries {
    int order = 0;          // highest retained power of z
    std::vector<Rat> c;     // size order + 1

    PowerSeries() : c(1, Rat(0)) {}
    explicit PowerSeries(int n) : order(n), c(static_cast<size_t>(n) + 1, Rat(0)) {
        if (n < 0) throw std::invalid_argument("PowerSeries: negative order");
    }
    static PowerSeries from_poly(const IntPoly& p, int n) {
        PowerSeries s(n);
        for (int i = 0; i <= n && i <= p.degree(); ++i) s.c[static_cast<size_t>(i)] = Rat(p.coeff(i));
        return s;
    }

    Rat coeff(int i) const {
        if (i < 0 || i > order) return Rat(0);
        return c[static_cast<size_t>(i)];
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.order == b.order && a.c == b.c;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        check_orders(a, b);
        PowerSeries r(a.order);
        for (int i = 0; i <= a.order; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        check_orders(a, b);
        PowerSeries r(a.order);
        for (int i = 0; i <= a.order; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        check_orders(a, b);
        PowerSeries r(a.order);
        for (int i = 0; i <= a.order; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; i + j <= a.order; ++j) {
                if (b.c[j] == 0) continue;
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }

    // multiplicative inverse; constant term must be nonzero
    PowerSeries inverse() const {
        if (c[0] == 0) throw std::invalid_argument("PowerSeries::inverse: zero constant term");
        PowerSeries r(order);
        Rat inv0 = Rat(1) / c[0];
        r.c[0] = inv0;
        for (int n = 1; n <= order; ++n) {
            Rat acc(0);
            for (int k = 1; k <= n; ++k) acc += c[k] * r.c[n - k];
            r.c[n] = -inv0 * acc;
        }
        return r;
    }

    // exp of a series with zero constant term
    PowerSeries exp() const {
        if (c[0] != 0) throw std::invalid_argument("PowerSeries::exp: nonzero constant term");
        PowerSeries g(order);
        g.c[0] = 1;
        for (int n = 1; n <= order; ++n) {
            Rat acc(0);
            for (int k = 1; k <= n; ++k) acc += Rat(k) * c[k] * g.c[n - k];
            g.c[n] = acc / Rat(n);
        }
        return g;
    }

    // log of a series with constant term one
    PowerSeries log() const {
        if (c[0] != 1) throw std::invalid_argument("PowerSeries::log: constant term must be 1");
        PowerSeries f(order);
        for (int n = 1; n <= order; ++n) {
            Rat acc(0);
            for (int k = 1; k < n; ++k) acc += Rat(k) * f.c[k] * c[n - k];
            f.c[n] = c[n] - acc / Rat(n);
        }
        return f;
    }

private:
    static void check_orders(const PowerSeries& a, const PowerSeries& b) {
        if (a.order != b.order) throw std::invalid_argument("PowerSeries: order mismatch");
    }
};

}  // namespace tcz
