#pragma once

// Exact arithmetic in Z[zeta_e]. Elements are length-e coefficient vectors
// over the powers zeta^0 .. zeta^(e-1); products are cyclic convolutions.
// Equality and integer extraction go through reduction mod the e-th
// cyclotomic polynomial.

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "tcz/numeric.hpp"
#include "tcz/poly.hpp"

namespace tcz {

struct Cyclo {
    std::vector<Int> c;  // length e

    int e() const { return static_cast<int>(c.size()); }
};

inline IntPoly cyclotomic_polynomial(int n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<Int> xn(static_cast<std::size_t>(n) + 1, Int(0));
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    IntPoly num(std::move(xn));
    for (std::int64_t d : divisors(n))
        if (d < n) num = divide_exact(num, cyclotomic_polynomial(static_cast<int>(d)));
    return num;
}

class CyclotomicContext {
public:
    explicit CyclotomicContext(int e) : e_(e), phi_(cyclotomic_polynomial(e)) {
        if (e <= 0) throw std::invalid_argument("order must be positive");
    }

    int e() const { return e_; }
    const IntPoly& modulus() const { return phi_; }

    Cyclo zero() const { return Cyclo{std::vector<Int>(static_cast<std::size_t>(e_), Int(0))}; }
    Cyclo integer(const Int& n) const {
        Cyclo z = zero();
        z.c[0] = n;
        return z;
    }
    Cyclo root_power(std::int64_t m) const {
        Cyclo z = zero();
        z.c[static_cast<std::size_t>(((m % e_) + e_) % e_)] = 1;
        return z;
    }

    Cyclo add(const Cyclo& a, const Cyclo& b) const {
        Cyclo r = a;
        for (int i = 0; i < e_; ++i) r.c[static_cast<std::size_t>(i)] += b.c[static_cast<std::size_t>(i)];
        return r;
    }
    Cyclo sub(const Cyclo& a, const Cyclo& b) const {
        Cyclo r = a;
        for (int i = 0; i < e_; ++i) r.c[static_cast<std::size_t>(i)] -= b.c[static_cast<std::size_t>(i)];
        return r;
    }
    Cyclo mul(const Cyclo& a, const Cyclo& b) const {
        Cyclo r = zero();
        for (int i = 0; i < e_; ++i) {
            if (a.c[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < e_; ++j) {
                if (b.c[static_cast<std::size_t>(j)] == 0) continue;
                r.c[static_cast<std::size_t>((i + j) % e_)] +=
                    a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }
    Cyclo conj(const Cyclo& a) const {
        Cyclo r = zero();
        for (int i = 0; i < e_; ++i)
            r.c[static_cast<std::size_t>((e_ - i) % e_)] = a.c[static_cast<std::size_t>(i)];
        return r;
    }
    Cyclo scale(const Cyclo& a, const Int& s) const {
        Cyclo r = a;
        for (auto& v : r.c) v *= s;
        return r;
    }

    // remainder mod the cyclotomic polynomial; canonical form of the coset
    IntPoly reduce(const Cyclo& a) const {
        IntPoly r(std::vector<Int>(a.c));
        // long division by a monic modulus stays in Z
        while (r.degree() >= phi_.degree()) {
            Int lead = r.lc();
            int shift = r.degree() - phi_.degree();
            IntPoly sub_term = phi_.shifted(shift) * lead;
            r = r - sub_term;
            if (r.degree() >= phi_.degree() + shift) throw std::logic_error("reduction failed to lower degree");
        }
        return r;
    }

    bool is_zero(const Cyclo& a) const { return reduce(a).degree() < 0; }
    bool equal(const Cyclo& a, const Cyclo& b) const { return is_zero(sub(a, b)); }

    std::optional<Int> as_integer(const Cyclo& a) const {
        IntPoly r = reduce(a);
        if (r.degree() > 0) return std::nullopt;
        return r.coeff(0);
    }

    std::complex<double> to_complex(const Cyclo& a) const {
        std::complex<double> s{0.0, 0.0};
        const double tau = 6.283185307179586476925287;
        for (int m = 0; m < e_; ++m) {
            if (a.c[static_cast<std::size_t>(m)] == 0) continue;
            double w = tau * static_cast<double>(m) / static_cast<double>(e_);
            s += a.c[static_cast<std::size_t>(m)].convert_to<double>() *
                 std::complex<double>(std::cos(w), std::sin(w));
        }
        return s;
    }

private:
    int e_;
    IntPoly phi_;
};

}  // namespace tcz
