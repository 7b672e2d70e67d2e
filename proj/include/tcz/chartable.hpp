#pragma once

// Exact character tables of finite groups, computed mod a split prime and
// lifted to Z[zeta_e] through root-of-unity multiplicities, plus everything
// built on top of them: composition duals, fixed-character counts, and the
// character-level zeta function of an endomorphism.
//
// The table is canonical: classes are ordered by minimal element, characters
// by degree and then by their multiplicity rows (largest first, which puts
// the trivial character at index 0), and the working root of unity is pinned
// to the smallest primitive root of the chosen prime.

#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tcz/conjugacy.hpp"
#include "tcz/cyclotomic.hpp"
#include "tcz/error.hpp"
#include "tcz/group.hpp"
#include "tcz/numeric.hpp"
#include "tcz/rational_fn.hpp"
#include "tcz/twisted.hpp"
#include "tcz/zeta.hpp"

namespace tcz {

namespace dixon_detail {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    b %= p;
    if (b < 0) b += p;
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::logic_error("division by zero mod p");
    return mod_pow(a, p - 2, p);
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> f;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

inline std::int64_t smallest_primitive_root(std::int64_t p) {
    auto fac = prime_factors(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::int64_t q : fac)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw NoSuitablePrime("no primitive root found, modulus is not prime");
}

// reduced row echelon form in place, returns pivot columns
inline std::vector<int> rref(Mat& m, std::int64_t p) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] % p != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(r)]);
        std::int64_t inv = mod_inv(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], p);
        for (int j = 0; j < cols; ++j)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % p * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::int64_t f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] % p;
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) {
                std::int64_t v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                 f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % p;
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ((v % p) + p) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(static_cast<std::size_t>(r));
    return pivots;
}

// basis rows of the right nullspace of m, in canonical echelon form
inline Mat nullspace(Mat m, std::int64_t p) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    auto pivots = rref(m, p);
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    Mat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::int64_t coef = m[r][static_cast<std::size_t>(free)] % p;
            v[static_cast<std::size_t>(pivots[r])] = ((p - coef) % p + p) % p;
        }
        basis.push_back(std::move(v));
    }
    rref(basis, p);
    return basis;
}

}  // namespace dixon_detail

struct CharacterTable {
    GroupPtr G;
    ConjugacyPartition classes;
    int k = 0;
    std::int64_t exponent = 1;
    std::int64_t prime = 0;
    std::vector<int> degrees;
    // mult[t][i][m] = multiplicity of the m-th power of the exponent root of
    // unity among the eigenvalues of the t-th representation at class i
    std::vector<std::vector<std::vector<std::int64_t>>> mult;
    std::vector<int> inverse_class;
    CyclotomicContext ctx{1};

    Cyclo value(int t, int i) const {
        Cyclo v = ctx.zero();
        for (int m = 0; m < ctx.e(); ++m)
            v.c[static_cast<std::size_t>(m)] =
                mult[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
        return v;
    }
    std::complex<double> value_complex(int t, int i) const { return ctx.to_complex(value(t, i)); }
};

inline CharacterTable character_table(GroupPtr G) {
    using namespace dixon_detail;

    CharacterTable T;
    T.classes = conjugacy_classes(G);
    T.G = G;
    T.k = T.classes.count;
    T.exponent = G->exponent();
    const int k = T.k;
    const std::int64_t e = T.exponent;
    const std::int64_t n = G->order();

    T.inverse_class.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        T.inverse_class[static_cast<std::size_t>(i)] =
            T.classes.class_of[static_cast<std::size_t>(G->inv(T.classes.reps[static_cast<std::size_t>(i)]))];

    // split prime: 1 mod e and large enough that degrees lift uniquely
    std::int64_t p = 0;
    {
        long double bound = 2.0L * std::sqrt(static_cast<long double>(n));
        for (std::int64_t m = 1; m <= 2000000; ++m) {
            std::int64_t cand = e * m + 1;
            if (static_cast<long double>(cand) > bound && is_prime_ll(cand)) {
                p = cand;
                break;
            }
        }
        if (p == 0) throw NoSuitablePrime("no usable prime found for exponent " + std::to_string(e));
    }
    T.prime = p;

    // class membership lists
    std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
    for (int g = 0; g < n; ++g)
        members[static_cast<std::size_t>(T.classes.class_of[static_cast<std::size_t>(g)])].push_back(g);

    // class algebra matrices: N_i[j][l] counts x in C_i with x^-1 r_l in C_j
    std::vector<Mat> N(static_cast<std::size_t>(k),
                       Mat(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 0)));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            int rl = T.classes.reps[static_cast<std::size_t>(l)];
            for (int x : members[static_cast<std::size_t>(i)]) {
                int j = T.classes.class_of[static_cast<std::size_t>(G->mult(G->inv(x), rl))];
                ++N[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
            }
        }

    // split the class-function space into common eigenlines
    struct Subspace {
        Mat basis;
        std::vector<int> pivots;
    };
    std::vector<Subspace> spaces;
    {
        Mat id(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 0));
        for (int i = 0; i < k; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        std::vector<int> piv(static_cast<std::size_t>(k));
        std::iota(piv.begin(), piv.end(), 0);
        spaces.push_back({std::move(id), std::move(piv)});
    }
    for (int i = 1; i < k; ++i) {
        bool done = true;
        for (const auto& s : spaces)
            if (s.basis.size() > 1) done = false;
        if (done) break;

        std::vector<Subspace> next;
        for (auto& S : spaces) {
            const int d = static_cast<int>(S.basis.size());
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // restriction of N_i to the subspace, in basis coordinates
            Mat M(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), 0));
            for (int c = 0; c < d; ++c) {
                Vec u(static_cast<std::size_t>(k), 0);
                for (int r = 0; r < k; ++r) {
                    std::int64_t acc = 0;
                    for (int j = 0; j < k; ++j)
                        acc = (acc + N[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]
                                      [static_cast<std::size_t>(j)] %
                                          p *
                                          S.basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]) %
                              p;
                    u[static_cast<std::size_t>(r)] = acc;
                }
                Vec coord(static_cast<std::size_t>(d));
                for (int r = 0; r < d; ++r)
                    coord[static_cast<std::size_t>(r)] = u[static_cast<std::size_t>(S.pivots[static_cast<std::size_t>(r)])];
                // the subspace must be invariant
                for (int j = 0; j < k; ++j) {
                    std::int64_t rec = 0;
                    for (int r = 0; r < d; ++r)
                        rec = (rec + coord[static_cast<std::size_t>(r)] *
                                         S.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) %
                              p;
                    if (rec != u[static_cast<std::size_t>(j)] % p)
                        throw VerificationFailed("class algebra subspace is not invariant");
                }
                for (int r = 0; r < d; ++r) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = coord[static_cast<std::size_t>(r)];
            }
            int found = 0;
            for (std::int64_t lam = 0; lam < p && found < d; ++lam) {
                Mat shifted = M;
                for (int r = 0; r < d; ++r)
                    shifted[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] =
                        ((shifted[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] - lam) % p + p) % p;
                Mat null = nullspace(std::move(shifted), p);
                if (null.empty()) continue;
                found += static_cast<int>(null.size());
                Subspace sub;
                for (const auto& coord : null) {
                    Vec v(static_cast<std::size_t>(k), 0);
                    for (int r = 0; r < d; ++r)
                        for (int j = 0; j < k; ++j)
                            v[static_cast<std::size_t>(j)] =
                                (v[static_cast<std::size_t>(j)] +
                                 coord[static_cast<std::size_t>(r)] *
                                     S.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) %
                                p;
                    sub.basis.push_back(std::move(v));
                }
                sub.pivots = rref(sub.basis, p);
                next.push_back(std::move(sub));
            }
            if (found != d) throw VerificationFailed("eigenspace split lost dimensions");
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != k)
        throw VerificationFailed("expected one eigenline per class");

    // normalized eigenvectors: w[0] = 1, entries are h_i chi(r_i) / deg mod p
    std::vector<Vec> w(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        if (spaces[static_cast<std::size_t>(t)].basis.size() != 1)
            throw VerificationFailed("eigenspace not one-dimensional");
        Vec v = spaces[static_cast<std::size_t>(t)].basis[0];
        if (v[0] % p == 0) throw VerificationFailed("eigenvector vanishes at the identity class");
        std::int64_t inv = mod_inv(v[0], p);
        for (auto& x : v) x = x % p * inv % p;
        w[static_cast<std::size_t>(t)] = std::move(v);
    }

    // degrees from the orthogonality sum
    std::vector<std::int64_t> hinv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) hinv[static_cast<std::size_t>(i)] = mod_inv(T.classes.sizes[static_cast<std::size_t>(i)], p);
    std::int64_t sqrt_n = ll_isqrt(n);
    T.degrees.resize(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        std::int64_t s = 0;
        for (int i = 0; i < k; ++i) {
            int istar = T.inverse_class[static_cast<std::size_t>(i)];
            s = (s + w[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] *
                         w[static_cast<std::size_t>(t)][static_cast<std::size_t>(istar)] % p *
                         hinv[static_cast<std::size_t>(i)]) %
                p;
        }
        std::int64_t d2 = n % p * mod_inv(s, p) % p;
        int deg = 0;
        for (std::int64_t d = 1; d <= sqrt_n; ++d)
            if (d * d % p == d2) {
                deg = static_cast<int>(d);
                break;
            }
        if (deg == 0) throw VerificationFailed("no degree lifts the eigenvalue data");
        T.degrees[static_cast<std::size_t>(t)] = deg;
    }

    // character values mod p, then multiplicities of each root power
    std::vector<Vec> chi(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k)));
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < k; ++i)
            chi[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
                T.degrees[static_cast<std::size_t>(t)] % p *
                w[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] % p *
                hinv[static_cast<std::size_t>(i)] % p;

    std::vector<std::vector<int>> power_class(static_cast<std::size_t>(k),
                                              std::vector<int>(static_cast<std::size_t>(e)));
    for (int i = 0; i < k; ++i) {
        int cur = 0;
        int r = T.classes.reps[static_cast<std::size_t>(i)];
        for (std::int64_t s = 0; s < e; ++s) {
            power_class[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] =
                T.classes.class_of[static_cast<std::size_t>(cur)];
            cur = G->mult(cur, r);
        }
    }

    std::int64_t root = mod_pow(smallest_primitive_root(p), (p - 1) / e, p);
    std::vector<std::int64_t> root_inv_pow(static_cast<std::size_t>(e));
    {
        std::int64_t ri = mod_inv(root, p);
        std::int64_t cur = 1;
        for (std::int64_t m = 0; m < e; ++m) {
            root_inv_pow[static_cast<std::size_t>(m)] = cur;
            cur = cur * ri % p;
        }
    }
    std::int64_t einv = mod_inv(e % p, p);

    T.mult.assign(static_cast<std::size_t>(k),
                  std::vector<std::vector<std::int64_t>>(
                      static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(e), 0)));
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < k; ++i) {
            std::int64_t total = 0;
            for (std::int64_t m = 0; m < e; ++m) {
                std::int64_t acc = 0;
                for (std::int64_t s = 0; s < e; ++s) {
                    int cls = power_class[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
                    acc = (acc + chi[static_cast<std::size_t>(t)][static_cast<std::size_t>(cls)] *
                                     root_inv_pow[static_cast<std::size_t>(s * m % e)]) %
                          p;
                }
                std::int64_t mu = acc * einv % p;
                if (mu > T.degrees[static_cast<std::size_t>(t)])
                    throw VerificationFailed("root multiplicity exceeds the degree");
                T.mult[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = mu;
                total += mu;
            }
            if (total != T.degrees[static_cast<std::size_t>(t)])
                throw VerificationFailed("root multiplicities do not sum to the degree");
        }

    // canonical order: by degree, then multiplicity rows descending
    {
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (T.degrees[static_cast<std::size_t>(a)] != T.degrees[static_cast<std::size_t>(b)])
                return T.degrees[static_cast<std::size_t>(a)] < T.degrees[static_cast<std::size_t>(b)];
            return T.mult[static_cast<std::size_t>(a)] > T.mult[static_cast<std::size_t>(b)];
        });
        std::vector<int> deg2;
        std::vector<std::vector<std::vector<std::int64_t>>> mult2;
        for (int t : idx) {
            deg2.push_back(T.degrees[static_cast<std::size_t>(t)]);
            mult2.push_back(std::move(T.mult[static_cast<std::size_t>(t)]));
        }
        T.degrees = std::move(deg2);
        T.mult = std::move(mult2);
    }

    T.ctx = CyclotomicContext(static_cast<int>(e));

    // exact validation of the finished table
    for (int t = 0; t < k; ++t) {
        if (T.mult[static_cast<std::size_t>(t)][0][0] != T.degrees[static_cast<std::size_t>(t)])
            throw VerificationFailed("identity column does not carry the degree");
        for (std::int64_t m = 1; m < e; ++m)
            if (T.mult[static_cast<std::size_t>(t)][0][static_cast<std::size_t>(m)] != 0)
                throw VerificationFailed("identity column has a nontrivial root");
        for (int i = 0; i < k; ++i) {
            int istar = T.inverse_class[static_cast<std::size_t>(i)];
            for (std::int64_t m = 0; m < e; ++m)
                if (T.mult[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] !=
                    T.mult[static_cast<std::size_t>(t)][static_cast<std::size_t>(istar)]
                          [static_cast<std::size_t>((e - m) % e)])
                    throw VerificationFailed("inverse classes are not conjugate");
        }
    }
    {
        std::int64_t d2sum = 0;
        for (int d : T.degrees) d2sum += static_cast<std::int64_t>(d) * d;
        if (d2sum != n) throw VerificationFailed("degree squares do not sum to the group order");
    }
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            Cyclo s = T.ctx.zero();
            for (int i = 0; i < k; ++i) {
                Cyclo term = T.ctx.mul(T.value(a, i), T.ctx.conj(T.value(b, i)));
                s = T.ctx.add(s, T.ctx.scale(term, Int(T.classes.sizes[static_cast<std::size_t>(i)])));
            }
            auto v = T.ctx.as_integer(s);
            if (!v || *v != (a == b ? Int(n) : Int(0)))
                throw VerificationFailed("character rows are not orthogonal");
        }

    return T;
}

// ---------------------------------------------------------------------------
// composition with an endomorphism

struct DualMap {
    SelfMap class_sigma;
    // t -> index of the character g -> chi_t(phi(g)) when that class function
    // is again irreducible, else -1
    std::vector<int> image;
};

inline DualMap dual_map(const CharacterTable& T, const Endomorphism& phi) {
    if (phi.G.get() != T.G.get())
        throw BaseMismatch("endomorphism and character table live on different groups");
    const int k = T.k;
    const Int n = T.G->order();

    DualMap dm;
    dm.class_sigma.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
        dm.class_sigma[static_cast<std::size_t>(c)] =
            T.classes.class_of[static_cast<std::size_t>(phi(T.classes.reps[static_cast<std::size_t>(c)]))];
    for (int g = 0; g < T.G->order(); ++g)
        if (T.classes.class_of[static_cast<std::size_t>(phi(g))] !=
            dm.class_sigma[static_cast<std::size_t>(T.classes.class_of[static_cast<std::size_t>(g)])])
            throw InconsistentClassMap("class map of the endomorphism is inconsistent");

    dm.image.assign(static_cast<std::size_t>(k), -1);
    for (int t = 0; t < k; ++t) {
        Cyclo norm = T.ctx.zero();
        for (int i = 0; i < k; ++i) {
            Cyclo v = T.value(t, dm.class_sigma[static_cast<std::size_t>(i)]);
            norm = T.ctx.add(norm, T.ctx.scale(T.ctx.mul(v, T.ctx.conj(v)),
                                               Int(T.classes.sizes[static_cast<std::size_t>(i)])));
        }
        auto nv = T.ctx.as_integer(norm);
        if (!nv) throw VerificationFailed("character norm is not an integer");
        if (*nv == n) {
            int found = -1;
            for (int u = 0; u < k && found < 0; ++u) {
                bool eq = true;
                for (int i = 0; i < k && eq; ++i)
                    eq = T.ctx.equal(T.value(u, i), T.value(t, dm.class_sigma[static_cast<std::size_t>(i)]));
                if (eq) found = u;
            }
            if (found < 0)
                throw VerificationFailed("irreducible composition missing from the table");
            dm.image[static_cast<std::size_t>(t)] = found;
        }
    }
    return dm;
}

// number of irreducible characters fixed under composition
inline Int rt_count(const CharacterTable& T, const Endomorphism& phi) {
    auto dm = dual_map(T, phi);
    Int c = 0;
    for (int t = 0; t < T.k; ++t)
        if (dm.image[static_cast<std::size_t>(t)] == t) ++c;
    return c;
}

// largest set of characters whose forward orbit under composition stays
// irreducible; the restriction is then a genuine self-map
struct DualSystem {
    std::vector<int> members;  // ascending character indices
    SelfMap restricted;        // on positions within members
};

inline DualSystem stable_dual_system(const CharacterTable& T, const Endomorphism& phi) {
    auto dm = dual_map(T, phi);
    const int k = T.k;
    std::vector<char> in(static_cast<std::size_t>(k), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < k; ++t) {
            if (!in[static_cast<std::size_t>(t)]) continue;
            int img = dm.image[static_cast<std::size_t>(t)];
            if (img < 0 || !in[static_cast<std::size_t>(img)]) {
                in[static_cast<std::size_t>(t)] = 0;
                changed = true;
            }
        }
    }
    DualSystem sys;
    std::vector<int> pos(static_cast<std::size_t>(k), -1);
    for (int t = 0; t < k; ++t)
        if (in[static_cast<std::size_t>(t)]) {
            pos[static_cast<std::size_t>(t)] = static_cast<int>(sys.members.size());
            sys.members.push_back(t);
        }
    for (int t : sys.members)
        sys.restricted.push_back(pos[static_cast<std::size_t>(dm.image[static_cast<std::size_t>(t)])]);
    return sys;
}

// ---------------------------------------------------------------------------
// the three counts that must agree on finite groups

struct TbftReport {
    std::vector<Int> class_counts;  // twisted class counts of the iterates
    std::vector<Int> trace_counts;  // fixed conjugacy classes of the iterates
    std::vector<Int> char_counts;   // fixed irreducible characters
    bool all_equal = false;
};

inline TbftReport tbft_check(const CharacterTable& T, const Endomorphism& phi, int n_max) {
    TbftReport rep;
    auto od = orbit_decomposition(dual_map(T, phi).class_sigma);
    for (int n = 1; n <= n_max; ++n) {
        Endomorphism pn = endo_power(phi, n);
        rep.class_counts.push_back(reidemeister_number(pn));
        rep.trace_counts.push_back(fixed_count(od, n));
        rep.char_counts.push_back(rt_count(T, pn));
    }
    rep.all_equal = rep.class_counts == rep.trace_counts && rep.class_counts == rep.char_counts;
    return rep;
}

// ---------------------------------------------------------------------------
// zeta function of the fixed-character counts

struct RtZetaResult {
    RationalFunction zeta;
    DualSystem system;
    OrbitDecomposition orbits;
    std::vector<Int> counts;  // fixed characters of phi^n, n = 1..order
};

inline RtZetaResult rt_zeta(const CharacterTable& T, const Endomorphism& phi, int verify_order = 12) {
    RtZetaResult res;
    res.system = stable_dual_system(T, phi);
    res.orbits = orbit_decomposition(res.system.restricted);
    res.zeta = zeta_rational(res.system.restricted);

    for (int n = 1; n <= verify_order; ++n) res.counts.push_back(fixed_count(res.orbits, n));
    // the counts must match a direct fixed-character computation
    for (int n = 1; n <= std::min(verify_order, 6); ++n)
        if (res.counts[static_cast<std::size_t>(n - 1)] != rt_count(T, endo_power(phi, n)))
            throw VerificationFailed("character orbit counts disagree with direct computation");
    if (!series_matches_rational(zeta_series(res.counts, verify_order), res.zeta))
        throw VerificationFailed("zeta series does not match its closed form");
    if (!functional_equation_check(res.zeta, res.orbits))
        throw VerificationFailed("zeta functional equation failed");
    return res;
}

}  // namespace tcz
