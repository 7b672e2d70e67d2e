#pragma once

// Exact integer / rational scalar layer. Everything downstream that counts,
// sums or expands series goes through these types; doubles only appear in the
// explicitly numeric spots (eigenvalue signs, intertwiners).

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tcz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(Int a, Int b) {
    return boost::multiprecision::lcm(a, b);
}

inline std::int64_t ll_gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { std::int64_t t = a % b; a = b; b = t; }
    return a;
}

inline std::int64_t ll_lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / ll_gcd(a, b) * b;
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// floor(sqrt(n)) for n >= 0
inline std::int64_t ll_isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("ll_isqrt: negative");
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_prime_ll(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Moebius function by trial factorization.
inline int mobius(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
    int k = 0;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;  // square factor
            ++k;
        }
    }
    if (n > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

}  // namespace tcz
