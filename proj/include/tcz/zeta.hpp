#pragma once

// Dynamical zeta machinery for finite self-maps: orbit decomposition of the
// functional graph, det(I - zB) computed two independent ways (fraction-free
// elimination and the cycle product), Euler products, the z -> 1/z functional
// equation, Gauss congruences and the exp-sum series bridge.

#include <optional>
#include <vector>

#include "tcz/det.hpp"
#include "tcz/error.hpp"
#include "tcz/numeric.hpp"
#include "tcz/poly.hpp"
#include "tcz/power_series.hpp"
#include "tcz/rational_fn.hpp"

namespace tcz {

using SelfMap = std::vector<int>;  // sigma[i] in [0, n)

inline void check_selfmap(const SelfMap& s) {
    const int n = static_cast<int>(s.size());
    for (int v : s)
        if (v < 0 || v >= n) throw std::invalid_argument("self-map value out of range");
}

inline SelfMap compose_selfmap(const SelfMap& f, const SelfMap& g) {
    // (f after g)[i] = f[g[i]]
    SelfMap r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[static_cast<size_t>(g[i])];
    return r;
}

inline SelfMap power_selfmap(const SelfMap& f, int n) {
    SelfMap r(f.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
    for (int k = 0; k < n; ++k) r = compose_selfmap(f, r);
    return r;
}

struct Orbit {
    int length = 0;
    std::vector<int> members;  // cycle members starting from the minimal one
};

struct OrbitDecomposition {
    int domain_size = 0;
    std::vector<Orbit> orbits;  // ordered by minimal member
    int transient_count = 0;
    int a = 0;  // number of primitive orbits
    int b = 0;  // number of periodic points
};

inline OrbitDecomposition orbit_decomposition(const SelfMap& sigma) {
    check_selfmap(sigma);
    const int n = static_cast<int>(sigma.size());
    std::vector<int> indeg(n, 0);
    for (int v : sigma) ++indeg[static_cast<size_t>(v)];
    // peel non-periodic nodes (each node has out-degree one, so what remains
    // after repeatedly removing in-degree-zero nodes is exactly the cycles)
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<size_t>(i)] == 0) stack.push_back(i);
    std::vector<char> periodic(static_cast<size_t>(n), 1);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        periodic[static_cast<size_t>(u)] = 0;
        int v = sigma[static_cast<size_t>(u)];
        if (--indeg[static_cast<size_t>(v)] == 0) stack.push_back(v);
    }
    OrbitDecomposition od;
    od.domain_size = n;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (!periodic[static_cast<size_t>(i)] || seen[static_cast<size_t>(i)]) continue;
        Orbit orb;
        int x = i;
        do {
            seen[static_cast<size_t>(x)] = 1;
            orb.members.push_back(x);
            x = sigma[static_cast<size_t>(x)];
        } while (x != i);
        orb.length = static_cast<int>(orb.members.size());
        od.b += orb.length;
        od.orbits.push_back(std::move(orb));
    }
    od.a = static_cast<int>(od.orbits.size());
    od.transient_count = n - od.b;
    return od;
}

// number of fixed points of sigma^n, read off the cycle structure
inline Int fixed_count(const OrbitDecomposition& od, int n) {
    Int c = 0;
    for (const auto& orb : od.orbits)
        if (n % orb.length == 0) c += orb.length;
    return c;
}

namespace det_detail {

template <class T>
Poly<T> det_one_minus_zB_elim(const SelfMap& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<std::vector<Poly<T>>> m(static_cast<size_t>(n),
                                        std::vector<Poly<T>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        std::vector<T> diag(1, T(1));
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Poly<T>(std::move(diag));
        auto& cell = m[static_cast<size_t>(i)][static_cast<size_t>(sigma[static_cast<size_t>(i)])];
        std::vector<T> coeffs = cell.c;
        coeffs.resize(2, T(0));
        coeffs[1] = coeffs[1] - T(1);
        cell = Poly<T>(std::move(coeffs));
    }
    return det_bareiss(std::move(m));
}

}  // namespace det_detail

// det(I - zB) with B[c][c'] = 1 iff sigma(c) = c'. Computed by fraction-free
// elimination and independently as prod over cycles of (1 - z^len); the two
// must agree exactly.
inline IntPoly det_one_minus_zB(const SelfMap& sigma) {
    check_selfmap(sigma);
    IntPoly elim;
    try {
        Poly<CheckedI64> fast = det_detail::det_one_minus_zB_elim<CheckedI64>(sigma);
        std::vector<Int> coeffs;
        coeffs.reserve(fast.c.size());
        for (auto v : fast.c) coeffs.emplace_back(v.v);
        elim = IntPoly(std::move(coeffs));
    } catch (const OverflowSignal&) {
        elim = det_detail::det_one_minus_zB_elim<Int>(sigma);
    }
    OrbitDecomposition od = orbit_decomposition(sigma);
    IntPoly cyc = IntPoly::constant(1);
    for (const auto& orb : od.orbits) cyc = cyc * IntPoly::one_minus_zpow(orb.length);
    if (elim != cyc)
        throw VerificationFailed("det(I - zB): elimination and cycle product disagree");
    return elim;
}

inline RationalFunction zeta_rational(const SelfMap& sigma) {
    return RationalFunction(IntPoly::constant(1), det_one_minus_zB(sigma));
}

inline RationalFunction euler_product(const OrbitDecomposition& od) {
    IntPoly den = IntPoly::constant(1);
    for (const auto& orb : od.orbits) den = den * IntPoly::one_minus_zpow(orb.length);
    return RationalFunction(IntPoly::constant(1), den);
}

// exp(sum_n counts[n-1]/n z^n) truncated at order N
inline PowerSeries zeta_series(const std::vector<Int>& counts, int order) {
    if (static_cast<int>(counts.size()) < order)
        throw std::invalid_argument("zeta_series: not enough counts for requested order");
    PowerSeries f(order);
    for (int n = 1; n <= order; ++n)
        f.c[static_cast<size_t>(n)] = Rat(counts[static_cast<size_t>(n - 1)]) / Rat(n);
    return f.exp();
}

inline PowerSeries series_of(const RationalFunction& r, int order) {
    if (r.den.coeff(0) == 0)
        throw std::invalid_argument("series_of: rational function has a pole at z = 0");
    PowerSeries num = PowerSeries::from_poly(r.num, order);
    PowerSeries den = PowerSeries::from_poly(r.den, order);
    return num * den.inverse();
}

inline bool series_matches_rational(const PowerSeries& s, const RationalFunction& r) {
    if (r.den.coeff(0) == 0) return false;
    return series_of(r, s.order) == s;
}

// Verifies r(1/z) = (-1)^a z^b r(z) for an Euler-product form r, with a and b
// taken from the orbit decomposition. For bijective sigma additionally checks
// det(sigma_C) = prod (-1)^(len-1) = (-1)^(|X| + a).
inline bool functional_equation_check(const RationalFunction& r, const OrbitDecomposition& od) {
    if (!(r.num.degree() == 0 && r.num.coeff(0) == 1))
        throw NotEulerForm("numerator is not 1");
    {
        IntPoly rem = r.den;
        if (rem.is_zero() || rem.coeff(0) != 1) throw NotEulerForm("denominator constant term is not 1");
        for (int d = rem.degree(); d >= 1; --d) {
            while (true) {
                auto q = try_divide(rem, IntPoly::one_minus_zpow(d));
                if (!q) break;
                rem = *q;
            }
        }
        if (!(rem.degree() == 0 && rem.coeff(0) == 1))
            throw NotEulerForm("denominator does not split into (1 - z^p) factors");
    }
    const int dn = r.num.degree();
    const int dd = r.den.degree();
    IntPoly lhs = (r.num.reversed() * r.den).shifted(dd - dn);
    IntPoly rhs = (r.num * r.den.reversed()).shifted(od.b);
    if (od.a % 2 == 1) rhs = -rhs;
    bool ok = (lhs == rhs);
    if (od.transient_count == 0 && od.domain_size > 0) {
        // bijective case: determinant of the permutation matrix on C(X)
        const int n = od.domain_size;
        SelfMap sigma(static_cast<size_t>(n));
        for (const auto& orb : od.orbits)
            for (int idx = 0; idx < orb.length; ++idx)
                sigma[static_cast<size_t>(orb.members[static_cast<size_t>(idx)])] =
                    orb.members[static_cast<size_t>((idx + 1) % orb.length)];
        std::vector<std::vector<Int>> mat(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) mat[static_cast<size_t>(i)][static_cast<size_t>(sigma[static_cast<size_t>(i)])] = 1;
        Int detB = det_bareiss(std::move(mat));
        Int prod_sign = 1;
        for (const auto& orb : od.orbits)
            if (orb.length % 2 == 0) prod_sign = -prod_sign;
        Int parity = ((od.domain_size + od.a) % 2 == 0) ? 1 : -1;
        ok = ok && (detB == prod_sign) && (detB == parity);
    }
    return ok;
}

// residues of sum_{d | n} mu(d) c_{n/d} mod n; all zero iff the Gauss
// congruences hold through the given range
inline std::vector<Int> gauss_congruence_report(const std::vector<Int>& counts) {
    std::vector<Int> residues;
    const int N = static_cast<int>(counts.size());
    for (int n = 1; n <= N; ++n) {
        Int s = 0;
        for (auto d : divisors(n))
            s += Int(mobius(d)) * counts[static_cast<size_t>(n / d - 1)];
        Int r = s % n;
        if (r < 0) r += n;
        residues.push_back(r);
    }
    return residues;
}

// variant tolerating INFINITE entries: residue reported only for n whose
// divisor sums involve finite counts only
inline std::vector<std::optional<Int>> gauss_congruence_report_partial(
    const std::vector<std::optional<Int>>& counts) {
    std::vector<std::optional<Int>> residues;
    const int N = static_cast<int>(counts.size());
    for (int n = 1; n <= N; ++n) {
        Int s = 0;
        bool usable = true;
        for (auto d : divisors(n)) {
            const auto& cv = counts[static_cast<size_t>(n / d - 1)];
            if (!cv) {
                usable = false;
                break;
            }
            s += Int(mobius(d)) * *cv;
        }
        if (!usable) {
            residues.push_back(std::nullopt);
            continue;
        }
        Int r = s % n;
        if (r < 0) r += n;
        residues.push_back(r);
    }
    return residues;
}

}  // namespace tcz
