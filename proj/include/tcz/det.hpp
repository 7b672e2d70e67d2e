#pragma once

// Fraction-free (Bareiss) determinant over an exact ring: every division in
// the elimination is exact in the ring, so results are exact for integer and
// polynomial matrices alike. Column pivoting only (first nonzero row), with
// sign tracking.

#include <vector>

#include "tcz/poly.hpp"

namespace tcz {

template <class R>
struct RingOps;

template <>
struct RingOps<Int> {
    static Int one() { return Int(1); }
    static bool is_zero(const Int& x) { return x == 0; }
};

template <class T>
struct RingOps<Poly<T>> {
    static Poly<T> one() { return Poly<T>::constant(T(1)); }
    static bool is_zero(const Poly<T>& x) { return x.is_zero(); }
};

template <class R>
R det_bareiss(std::vector<std::vector<R>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return RingOps<R>::one();
    int sign = 1;
    R prev = RingOps<R>::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (RingOps<R>::is_zero(m[k][k])) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (!RingOps<R>::is_zero(m[i][k])) { r = i; break; }
            if (r < 0) return R{};  // singular
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            const bool zik = RingOps<R>::is_zero(m[i][k]);
            for (int j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k];
                if (!zik && !RingOps<R>::is_zero(m[k][j])) t = t - m[i][k] * m[k][j];
                m[i][j] = exact_div(t, prev);
            }
            m[i][k] = R{};
        }
        prev = m[k][k];
    }
    R d = m[n - 1][n - 1];
    return sign == 1 ? d : -d;
}

}  // namespace tcz
