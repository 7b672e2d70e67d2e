#pragma once

// Endomorphisms of Z^k given by integer matrices. The n-th twisted class
// count is |det(I - M^n)| when nonzero and infinite otherwise; the counts
// assemble into det(I - z L^j M) alternating over exterior powers, twisted by
// the eigenvalue signs sigma = (-1)^p and the exponent (-1)^r. Everything
// that feeds the final rational function is exact integer arithmetic; the
// floating spectrum only chooses signs and is cross-checked exactly.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tcz/cyclotomic.hpp"
#include "tcz/det.hpp"
#include "tcz/error.hpp"
#include "tcz/numeric.hpp"
#include "tcz/poly.hpp"
#include "tcz/rational_fn.hpp"
#include "tcz/zeta.hpp"

namespace tcz {

struct IntMatrix {
    int n = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    static IntMatrix identity(int size) {
        IntMatrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        IntMatrix m(static_cast<int>(rows.size()));
        for (int r = 0; r < m.n; ++r) {
            if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.n)
                throw std::invalid_argument("IntMatrix: ragged rows");
            for (int c = 0; c < m.n; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
        return m;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.n == y.n && x.a == y.a;
    }
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("mat_mul: size mismatch");
    IntMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

inline IntMatrix mat_sub(const IntMatrix& x, const IntMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("mat_sub: size mismatch");
    IntMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

inline IntMatrix mat_pow(const IntMatrix& m, int e) {
    if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
    IntMatrix r = IntMatrix::identity(m.n);
    IntMatrix base = m;
    while (e > 0) {
        if (e & 1) r = mat_mul(r, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return r;
}

inline Int mat_det(const IntMatrix& m) {
    std::vector<std::vector<Int>> cells(static_cast<std::size_t>(m.n),
                                        std::vector<Int>(static_cast<std::size_t>(m.n)));
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    return det_bareiss(std::move(cells));
}

namespace lattice_detail {

inline std::vector<std::vector<int>> subsets_of_size(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == j) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace lattice_detail

// action on the j-th exterior power: minors indexed by j-subsets
inline IntMatrix exterior_power(const IntMatrix& m, int j) {
    if (j < 0 || j > m.n) throw std::invalid_argument("exterior_power: bad degree");
    auto subsets = lattice_detail::subsets_of_size(m.n, j);
    IntMatrix r(static_cast<int>(subsets.size()));
    for (int row = 0; row < r.n; ++row)
        for (int col = 0; col < r.n; ++col) {
            IntMatrix minor(j);
            for (int i = 0; i < j; ++i)
                for (int k = 0; k < j; ++k)
                    minor.at(i, k) = m.at(subsets[static_cast<std::size_t>(row)][static_cast<std::size_t>(i)],
                                          subsets[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)]);
            r.at(row, col) = (j == 0) ? Int(1) : mat_det(minor);
        }
    return r;
}

// det(I - zM), exact
inline IntPoly char_factor(const IntMatrix& m) {
    std::vector<std::vector<IntPoly>> cells(static_cast<std::size_t>(m.n),
                                            std::vector<IntPoly>(static_cast<std::size_t>(m.n)));
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) {
            std::vector<Int> coeffs{Int(r == c ? 1 : 0), -m.at(r, c)};
            cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = IntPoly(std::move(coeffs));
        }
    if (m.n == 0) return IntPoly::constant(1);
    return det_bareiss(std::move(cells));
}

// smallest d such that a primitive d-th root of unity is an eigenvalue
inline std::optional<int> root_of_unity_order(const IntMatrix& m) {
    IntPoly q = char_factor(m);
    // an eigenvalue of modulus 1 gives a reciprocal root of q of the same
    // order; degrees of candidate cyclotomic factors are bounded by n
    for (int d = 1; d <= 2 * m.n * m.n + 2; ++d) {
        IntPoly phi = cyclotomic_polynomial(d);
        if (phi.degree() > q.degree()) continue;
        if (try_divide(q, phi)) return d;
    }
    return std::nullopt;
}

// |det(I - M^n)|, or nothing when the determinant vanishes
inline std::optional<Int> lattice_count(const IntMatrix& m, int n) {
    Int d = mat_det(mat_sub(IntMatrix::identity(m.n), mat_pow(m, n)));
    if (d == 0) return std::nullopt;
    return d < 0 ? Int(-d) : d;
}

inline std::vector<std::optional<Int>> lattice_counts(const IntMatrix& m, int n_max) {
    std::vector<std::optional<Int>> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(lattice_count(m, n));
    return out;
}

struct Spectrum {
    int p = 0;      // real eigenvalues below -1
    int r = 0;      // real eigenvalues of modulus above 1
    int sigma = 1;  // (-1)^p
};

// classifies the eigenvalues with a guard band, then checks the resulting
// signs against exact determinants; a disagreement or an eigenvalue too close
// to the unit circle is refused rather than guessed
inline Spectrum classify_spectrum(const IntMatrix& m, double band = 1e-9) {
    Eigen::MatrixXd a(m.n, m.n);
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) a(r, c) = m.at(r, c).convert_to<double>();
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) throw VerificationFailed("eigenvalue computation failed");
    Spectrum s;
    for (int i = 0; i < m.n; ++i) {
        std::complex<double> lam = es.eigenvalues()(i);
        double scale = std::max(1.0, std::abs(lam));
        if (std::abs(lam.imag()) > band * scale) continue;  // complex pair
        double x = lam.real();
        if (std::abs(std::abs(x) - 1.0) <= band)
            throw VerificationFailed("real eigenvalue too close to the unit circle to classify");
        if (x < -1.0) ++s.p;
        if (std::abs(x) > 1.0) ++s.r;
    }
    s.sigma = (s.p % 2 == 0) ? 1 : -1;

    Int dm = mat_det(mat_sub(IntMatrix::identity(m.n), m));          // det(I - M)
    Int dplus = 0;
    {
        IntMatrix sum = IntMatrix::identity(m.n);
        for (int r = 0; r < m.n; ++r)
            for (int c = 0; c < m.n; ++c) sum.at(r, c) += m.at(r, c);
        dplus = mat_det(sum);                                        // det(I + M)
    }
    if (dm != 0) {
        bool want_neg = ((s.r - s.p) % 2) != 0;
        if ((dm < 0) != want_neg)
            throw VerificationFailed("sign of det(I - M) contradicts the eigenvalue count");
    }
    if (dplus != 0) {
        bool want_neg = (s.p % 2) != 0;
        if ((dplus < 0) != want_neg)
            throw VerificationFailed("sign of det(I + M) contradicts the eigenvalue count");
    }
    return s;
}

// z -> -z
inline IntPoly flip_odd_coefficients(const IntPoly& p) {
    IntPoly r = p;
    for (int i = 1; i <= r.degree(); i += 2) r.c[static_cast<std::size_t>(i)] = -r.c[static_cast<std::size_t>(i)];
    return r;
}

struct LatticeZeta {
    RationalFunction zeta;       // of the counts |det(I - M^n)|
    RationalFunction lefschetz;  // alternating product before the sign twist
    Spectrum spectrum;
    std::vector<Int> counts;     // used for the series verification
};

inline LatticeZeta lattice_zeta(const IntMatrix& m, int verify_order = 12) {
    if (auto d = root_of_unity_order(m))
        throw InfiniteReidemeister("iterate " + std::to_string(*d) +
                                   " has infinitely many classes");
    LatticeZeta out;
    out.spectrum = classify_spectrum(m);

    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    for (int j = 0; j <= m.n; ++j) {
        IntPoly f = char_factor(exterior_power(m, j));
        if (j % 2 == 1)
            num = num * f;  // exponent (-1)^{j+1} = +1
        else
            den = den * f;
    }
    out.lefschetz = RationalFunction(num, den);

    IntPoly tn = out.lefschetz.num, td = out.lefschetz.den;
    if (out.spectrum.sigma == -1) {
        tn = flip_odd_coefficients(tn);
        td = flip_odd_coefficients(td);
    }
    RationalFunction twisted(tn, td);
    out.zeta = (out.spectrum.r % 2 == 1) ? twisted.reciprocal() : twisted;

    for (int n = 1; n <= verify_order; ++n) {
        auto c = lattice_count(m, n);
        if (!c) throw InfiniteReidemeister("iterate " + std::to_string(n) +
                                           " has infinitely many classes");
        out.counts.push_back(*c);
    }
    if (!series_matches_rational(zeta_series(out.counts, verify_order), out.zeta))
        throw VerificationFailed("rational form disagrees with the count series");
    return out;
}

// ---------------------------------------------------------------------------
// Smith normal form and finite quotients

// divisor chain d_1 | d_2 | ... | d_n, zeros last for singular input
inline std::vector<Int> smith_normal_form(IntMatrix m) {
    const int n = m.n;
    std::vector<Int> d;
    auto abs_int = [](const Int& v) { return v < 0 ? Int(-v) : v; };
    for (int t = 0; t < n; ++t) {
        while (true) {
            int pr = -1, pc = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (m.at(i, j) != 0 &&
                        (pr < 0 || abs_int(m.at(i, j)) < abs_int(m.at(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) {
                for (int k = t; k < n; ++k) d.push_back(0);
                return d;
            }
            for (int j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(pr, j));
            for (int i = 0; i < n; ++i) std::swap(m.at(i, t), m.at(i, pc));

            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                for (int j = t; j < n; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) clean = false;  // remainder became new, smaller entry
            }
            for (int j = t + 1; j < n; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                for (int i = t; i < n; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide everything below and to the right
            int br = -1, bc = -1;
            for (int i = t + 1; i < n && br < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        br = i;
                        bc = j;
                        break;
                    }
            if (br >= 0) {
                for (int j = 0; j < n; ++j) m.at(t, j) += m.at(br, j);
                continue;
            }
            break;
        }
        d.push_back(abs_int(m.at(t, t)));
    }
    return d;
}

// self-map x -> Mx on (Z/c)^k, elements in mixed-radix order (last coordinate
// fastest); refuses quotients too big to enumerate
inline SelfMap lattice_mod_map(const IntMatrix& m, const Int& modulus,
                               std::size_t cap = 1000000) {
    if (modulus <= 0) throw std::invalid_argument("lattice_mod_map: modulus must be positive");
    Int total = 1;
    for (int i = 0; i < m.n; ++i) {
        total *= modulus;
        if (total > Int(cap)) throw std::invalid_argument("lattice_mod_map: quotient too large");
    }
    const long long c = modulus.convert_to<long long>();
    const long long size = total.convert_to<long long>();
    IntMatrix mm = m;
    for (auto& v : mm.a) {
        v %= c;
        if (v < 0) v += c;
    }
    SelfMap sigma(static_cast<std::size_t>(size));
    std::vector<long long> x(static_cast<std::size_t>(m.n)), y(static_cast<std::size_t>(m.n));
    for (long long idx = 0; idx < size; ++idx) {
        long long rem = idx;
        for (int i = m.n - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = rem % c;
            rem /= c;
        }
        for (int i = 0; i < m.n; ++i) {
            long long acc = 0;
            for (int j = 0; j < m.n; ++j)
                acc = (acc + mm.at(i, j).convert_to<long long>() * x[static_cast<std::size_t>(j)]) % c;
            y[static_cast<std::size_t>(i)] = acc;
        }
        long long out = 0;
        for (int i = 0; i < m.n; ++i) out = out * c + y[static_cast<std::size_t>(i)];
        sigma[static_cast<std::size_t>(idx)] = static_cast<int>(out);
    }
    return sigma;
}

// twisted class count of x -> Mx on (Z/c)^k: the cokernel order of I - M^n,
// which is the product of gcd(c, d_j) over the divisor chain
inline Int quotient_count(const IntMatrix& m, const Int& modulus, int n) {
    auto divisors_chain = smith_normal_form(mat_sub(IntMatrix::identity(m.n), mat_pow(m, n)));
    Int r = 1;
    for (const auto& dj : divisors_chain) r *= (dj == 0) ? modulus : int_gcd(dj, modulus);
    return r;
}

struct ProfiniteStage {
    Int modulus;              // product of the first i counts
    std::vector<Int> counts;  // on the quotient, n = 1..horizon
    int agree_upto = 0;       // longest common prefix with the lattice counts
};

struct ProfiniteReport {
    std::vector<std::optional<Int>> lattice;  // n = 1..horizon
    std::vector<ProfiniteStage> stages;       // depth entries
};

// finite quotients (Z/c_i)^k with c_i = prod_{n<=i} |det(I - M^n)|; the i-th
// stage must reproduce the first i lattice counts exactly, and typically
// drifts off afterwards
inline ProfiniteReport profinite_approximation(const IntMatrix& m, int depth, int horizon) {
    ProfiniteReport rep;
    rep.lattice = lattice_counts(m, horizon);
    Int c = 1;
    for (int i = 1; i <= depth; ++i) {
        const auto& ci = rep.lattice[static_cast<std::size_t>(i - 1)];
        if (!ci)
            throw InfiniteReidemeister("iterate " + std::to_string(i) +
                                       " has infinitely many classes");
        c *= *ci;
        ProfiniteStage stage;
        stage.modulus = c;
        for (int n = 1; n <= horizon; ++n) stage.counts.push_back(quotient_count(m, c, n));
        while (stage.agree_upto < horizon) {
            const auto& truth = rep.lattice[static_cast<std::size_t>(stage.agree_upto)];
            if (!truth || stage.counts[static_cast<std::size_t>(stage.agree_upto)] != *truth) break;
            ++stage.agree_upto;
        }
        if (stage.agree_upto < std::min(i, horizon))
            throw VerificationFailed("quotient at depth " + std::to_string(i) +
                                     " fails to reproduce the first counts");
        rep.stages.push_back(std::move(stage));
    }
    return rep;
}

}  // namespace tcz
