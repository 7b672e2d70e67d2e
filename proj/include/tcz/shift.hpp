#pragma once

// The shift on an infinite direct sum of copies of a finite group F: elements
// are finitely supported integer-indexed tuples, phi moves entry i to i+1.
// Twisted conjugation by g sends a_i to g_i a_i (g_{i-n})^{-1} under phi^n,
// and the descending product over each residue class mod n survives every
// such move exactly; it separates classes, so R(phi^n) = |F|^n. On the dual
// side only constant towers are shift-periodic, giving class-count and
// abelianization-count growth instead, which is why the count comparisons
// fail for nonabelian F.

#include <map>
#include <random>
#include <vector>

#include "tcz/conjugacy.hpp"
#include "tcz/error.hpp"
#include "tcz/group.hpp"
#include "tcz/numeric.hpp"
#include "tcz/rational_fn.hpp"
#include "tcz/zeta.hpp"

namespace tcz {

struct ShiftElement {
    std::map<int, int> coords;  // index -> non-identity element of the base

    void set(int i, int v) {
        if (v == 0)
            coords.erase(i);
        else
            coords[i] = v;
    }
    int get(int i) const {
        auto it = coords.find(i);
        return it == coords.end() ? 0 : it->second;
    }
    friend bool operator==(const ShiftElement& a, const ShiftElement& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const ShiftElement& a, const ShiftElement& b) { return !(a == b); }
};

// phi^n: entry at i moves to i + n
inline ShiftElement shift_apply(const ShiftElement& a, int n = 1) {
    ShiftElement out;
    for (const auto& [i, v] : a.coords) out.coords.emplace(i + n, v);
    return out;
}

// g a phi^n(g)^{-1}, coordinatewise g_i a_i (g_{i-n})^{-1}
inline ShiftElement twisted_move(const GroupPtr& F, const ShiftElement& a, const ShiftElement& g,
                                 int n = 1) {
    if (n <= 0) throw std::invalid_argument("twisted_move: n must be positive");
    std::map<int, char> touched;
    for (const auto& [i, v] : a.coords) touched[i] = 1;
    for (const auto& [i, v] : g.coords) {
        touched[i] = 1;
        touched[i + n] = 1;
    }
    ShiftElement out;
    for (const auto& [i, unused] : touched) {
        int b = F->mult(g.get(i), F->mult(a.get(i), F->inv(g.get(i - n))));
        out.set(i, b);
    }
    return out;
}

// descending product over each residue class mod n; entry r of the result
// collects the indices congruent to r
inline std::vector<int> shift_invariant(const GroupPtr& F, const ShiftElement& a, int n = 1) {
    if (n <= 0) throw std::invalid_argument("shift_invariant: n must be positive");
    std::vector<int> prod(static_cast<std::size_t>(n), 0);
    // map iteration is ascending; fold from the right to get descending order
    for (auto it = a.coords.rbegin(); it != a.coords.rend(); ++it) {
        int r = ((it->first % n) + n) % n;
        prod[static_cast<std::size_t>(r)] = F->mult(prod[static_cast<std::size_t>(r)], it->second);
    }
    return prod;
}

// canonical representative: the residue-r product sits alone at position r
inline ShiftElement shift_normal_form(const GroupPtr& F, const ShiftElement& a, int n = 1) {
    auto inv = shift_invariant(F, a, n);
    ShiftElement out;
    for (int r = 0; r < n; ++r) out.set(r, inv[static_cast<std::size_t>(r)]);
    return out;
}

// a g with twisted_move(a, g, n) equal to the normal form, built per residue
// class: forcing b_i = e above r gives g_{i-n} = g_i a_i going down, below r
// it gives g_i = g_{i-n} a_i^{-1} going up; what is left at r is the full
// descending class product
inline ShiftElement shift_reduction_witness(const GroupPtr& F, const ShiftElement& a, int n = 1) {
    if (n <= 0) throw std::invalid_argument("shift_reduction_witness: n must be positive");
    ShiftElement g;
    for (int r = 0; r < n; ++r) {
        int top = r, bottom = r;
        for (const auto& [i, v] : a.coords) {
            if (((i % n) + n) % n != r) continue;
            top = std::max(top, i);
            bottom = std::min(bottom, i);
        }
        int carry = 0;
        for (int i = top; i > r; i -= n) {
            carry = F->mult(carry, a.get(i));
            g.set(i - n, carry);
        }
        carry = 0;
        for (int i = bottom; i < r; i += n) {
            carry = F->mult(carry, F->inv(a.get(i)));
            g.set(i, carry);
        }
    }
    return g;
}

struct ShiftSystem {
    GroupPtr base;
    Int size;            // |F|
    Int classes;         // conjugacy classes, the dual count
    Int linear;          // abelianization order, the finite-dimensional dual count
    bool tbft;           // |F| == classes
    bool tbft_f;         // |F| == linear
};

inline ShiftSystem shift_system(GroupPtr F) {
    if (F->order() <= 1)
        throw std::invalid_argument("shift base must be a nontrivial finite group");
    ShiftSystem s;
    s.base = F;
    s.size = F->order();
    s.classes = conjugacy_classes(F).count;
    s.linear = abelianization_order(*F);
    s.tbft = (s.size == s.classes);
    s.tbft_f = (s.size == s.linear);
    return s;
}

inline Int shift_reidemeister(const ShiftSystem& s, int n) {
    return int_pow(s.size, static_cast<unsigned>(n));
}
inline Int shift_rt(const ShiftSystem& s, int n) {
    return int_pow(s.classes, static_cast<unsigned>(n));
}
inline Int shift_rt_f(const ShiftSystem& s, int n) {
    return int_pow(s.linear, static_cast<unsigned>(n));
}

namespace shift_detail {

inline RationalFunction geometric_zeta(const Int& q, int verify_order) {
    std::vector<Int> den_coeffs{Int(1), Int(-q)};
    RationalFunction z(IntPoly::constant(1), IntPoly(std::move(den_coeffs)));
    std::vector<Int> counts;
    Int c = 1;
    for (int k = 1; k <= verify_order; ++k) {
        c *= q;
        counts.push_back(c);
    }
    if (!series_matches_rational(zeta_series(counts, verify_order), z))
        throw VerificationFailed("geometric zeta does not match its count series");
    return z;
}

}  // namespace shift_detail

struct ShiftReport {
    ShiftSystem system;
    std::vector<Int> r_counts, rt_counts, rt_f_counts;  // n = 1..n_max
    RationalFunction r_zeta, rt_zeta, rt_f_zeta;
};

inline ShiftReport shift_report(GroupPtr F, int n_max = 8) {
    ShiftReport rep;
    rep.system = shift_system(std::move(F));
    for (int n = 1; n <= n_max; ++n) {
        rep.r_counts.push_back(shift_reidemeister(rep.system, n));
        rep.rt_counts.push_back(shift_rt(rep.system, n));
        rep.rt_f_counts.push_back(shift_rt_f(rep.system, n));
    }
    const int order = std::max(8, n_max);
    rep.r_zeta = shift_detail::geometric_zeta(rep.system.size, order);
    rep.rt_zeta = shift_detail::geometric_zeta(rep.system.classes, order);
    rep.rt_f_zeta = shift_detail::geometric_zeta(rep.system.linear, order);
    return rep;
}

// random walk certificate: batches of twisted moves must preserve the
// invariant at every step, and the constructed witness must land exactly on
// the normal form
struct ShiftCertificate {
    int moves_checked = 0;
    int reductions_checked = 0;
    bool ok = false;
};

inline ShiftCertificate shift_certificate(const GroupPtr& F, int n, int moves,
                                          std::uint32_t seed, int window = 8) {
    if (n <= 0) throw std::invalid_argument("shift_certificate: n must be positive");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pos(-window, window);
    std::uniform_int_distribution<int> val(0, F->order() - 1);
    std::uniform_int_distribution<int> width(0, 2 * window);

    ShiftCertificate cert;
    ShiftElement a;
    for (int i = -window; i <= window; ++i) a.set(i, val(rng));
    auto inv = shift_invariant(F, a, n);
    for (int step = 0; step < moves; ++step) {
        ShiftElement g;
        int entries = width(rng);
        for (int k = 0; k < entries; ++k) g.set(pos(rng), val(rng));
        a = twisted_move(F, a, g, n);
        if (shift_invariant(F, a, n) != inv)
            throw VerificationFailed("twisted move changed the invariant");
        ++cert.moves_checked;
        if (step % 25 == 0) {
            ShiftElement w = shift_reduction_witness(F, a, n);
            if (twisted_move(F, a, w, n) != shift_normal_form(F, a, n))
                throw VerificationFailed("reduction witness missed the normal form");
            ++cert.reductions_checked;
        }
    }
    cert.ok = true;
    return cert;
}

}  // namespace tcz
