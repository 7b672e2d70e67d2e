#pragma once

// Matrix representations and intertwiners. For an endomorphism phi and a
// representation rho with rho after phi equivalent to rho, the intertwiner S
// solves rho(phi(g)) S = S rho(g); the function g -> tr(S rho(g)) is then
// constant on twisted classes, and over all phi-fixed irreducible characters
// those functions span the twisted class functions.
//
// Representation files follow the endomorphism layout, one row-major matrix
// per generator; entries are reals or (re,im) pairs:
//   character: 2
//   dim: 2
//   gen a: 1 0 0 -1
//   gen b: -0.5 -0.866 0.866 -0.5
// 'character' is the row of the canonical character table the matrices claim
// to realize, which load_representation verifies against the traces.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcz/chartable.hpp"
#include "tcz/error.hpp"
#include "tcz/group.hpp"
#include "tcz/group_io.hpp"
#include "tcz/twisted.hpp"

namespace tcz {

struct Representation {
    GroupPtr G;
    int character_index = -1;
    int dim = 0;
    std::vector<Eigen::MatrixXcd> images;  // one per element

    const Eigen::MatrixXcd& at(int g) const { return images[static_cast<std::size_t>(g)]; }
};

namespace rep_detail {

inline std::complex<double> parse_entry(const std::string& tok, int lineno) {
    try {
        if (!tok.empty() && tok.front() == '(') {
            if (tok.back() != ')') throw std::invalid_argument("");
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("");
            std::size_t pos = 0;
            std::string re_s = tok.substr(1, comma - 1);
            std::string im_s = tok.substr(comma + 1, tok.size() - comma - 2);
            double re = std::stod(re_s, &pos);
            if (pos != re_s.size()) throw std::invalid_argument("");
            double im = std::stod(im_s, &pos);
            if (pos != im_s.size()) throw std::invalid_argument("");
            return {re, im};
        }
        std::size_t pos = 0;
        double re = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return {re, 0.0};
    } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": bad matrix entry '" + tok + "'");
    }
}

}  // namespace rep_detail

// parses matrices and extends them along the group's word structure; checks
// the homomorphism property but not yet the claimed character
inline Representation parse_representation(GroupPtr G, const std::string& text,
                                           double tol = 1e-9) {
    auto lines = io_detail::meaningful_lines(text);
    std::optional<int> character, dim;
    const auto& names = G->generator_names();
    std::vector<std::optional<Eigen::MatrixXcd>> gen_mats(names.size());

    for (const auto& ln : lines) {
        if (ln.head.size() == 1 && ln.head[0] == "character") {
            if (character || ln.rest.size() != 1)
                throw ParseError("line " + std::to_string(ln.number) + ": bad character line");
            character = io_detail::parse_int(ln.rest[0], ln.number);
        } else if (ln.head.size() == 1 && ln.head[0] == "dim") {
            if (dim || ln.rest.size() != 1)
                throw ParseError("line " + std::to_string(ln.number) + ": bad dim line");
            dim = io_detail::parse_int(ln.rest[0], ln.number);
            if (*dim <= 0) throw ParseError("line " + std::to_string(ln.number) + ": dim must be positive");
        } else if (ln.head.size() == 2 && ln.head[0] == "gen") {
            if (!dim) throw ParseError("line " + std::to_string(ln.number) + ": dim must come before matrices");
            int gi = G->generator_index(ln.head[1]);
            if (gi < 0)
                throw ParseError("line " + std::to_string(ln.number) + ": unknown generator '" + ln.head[1] + "'");
            if (gen_mats[static_cast<std::size_t>(gi)])
                throw ParseError("line " + std::to_string(ln.number) + ": duplicate matrix for '" + ln.head[1] + "'");
            if (static_cast<int>(ln.rest.size()) != *dim * *dim)
                throw ParseError("line " + std::to_string(ln.number) + ": expected " +
                                 std::to_string(*dim * *dim) + " entries");
            Eigen::MatrixXcd m(*dim, *dim);
            for (int r = 0; r < *dim; ++r)
                for (int c = 0; c < *dim; ++c)
                    m(r, c) = rep_detail::parse_entry(ln.rest[static_cast<std::size_t>(r * *dim + c)], ln.number);
            gen_mats[static_cast<std::size_t>(gi)] = std::move(m);
        } else {
            throw ParseError("line " + std::to_string(ln.number) + ": unexpected key");
        }
    }
    if (!character) throw ParseError("missing 'character:' line");
    if (!dim) throw ParseError("missing 'dim:' line");
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!gen_mats[i]) throw ParseError("no matrix given for generator '" + names[i] + "'");

    Representation rho;
    rho.G = G;
    rho.character_index = *character;
    rho.dim = *dim;
    rho.images.assign(static_cast<std::size_t>(G->order()), Eigen::MatrixXcd());
    rho.images[0] = Eigen::MatrixXcd::Identity(*dim, *dim);
    for (int g : G->bfs_order()) {
        if (g == 0) continue;
        rho.images[static_cast<std::size_t>(g)] =
            rho.images[static_cast<std::size_t>(G->bfs_parent(g))] *
            *gen_mats[static_cast<std::size_t>(G->bfs_letter(g))];
    }
    for (int x : G->generators())
        for (int y = 0; y < G->order(); ++y) {
            double err = (rho.at(x) * rho.at(y) - rho.at(G->mult(x, y))).cwiseAbs().maxCoeff();
            if (err > tol)
                throw VerificationFailed("matrices do not respect the multiplication at " +
                                         G->word_string(x) + " * " + G->word_string(y));
        }
    return rho;
}

// the degree-1 case needs no data file: the character values are the matrices
inline Representation linear_representation(const CharacterTable& T, int t) {
    if (T.degrees[static_cast<std::size_t>(t)] != 1)
        throw std::invalid_argument("character is not one-dimensional");
    Representation rho;
    rho.G = T.G;
    rho.character_index = t;
    rho.dim = 1;
    rho.images.assign(static_cast<std::size_t>(T.G->order()), Eigen::MatrixXcd(1, 1));
    for (int g = 0; g < T.G->order(); ++g)
        rho.images[static_cast<std::size_t>(g)](0, 0) =
            T.value_complex(t, T.classes.class_of[static_cast<std::size_t>(g)]);
    return rho;
}

inline void validate_representation(const Representation& rho, const CharacterTable& T,
                                    double tol = 1e-9) {
    if (rho.G.get() != T.G.get())
        throw BaseMismatch("representation and character table live on different groups");
    int t = rho.character_index;
    if (t < 0 || t >= T.k) throw VerificationFailed("character index out of range");
    if (T.degrees[static_cast<std::size_t>(t)] != rho.dim)
        throw VerificationFailed("matrix size disagrees with the character degree");
    for (int g = 0; g < T.G->order(); ++g) {
        std::complex<double> tr = rho.at(g).trace();
        std::complex<double> want =
            T.value_complex(t, T.classes.class_of[static_cast<std::size_t>(g)]);
        if (std::abs(tr - want) > tol)
            throw VerificationFailed("trace at " + T.G->word_string(g) +
                                     " does not match character " + std::to_string(t));
    }
}

inline Representation load_representation(GroupPtr G, const CharacterTable& T,
                                          const std::string& path, double tol = 1e-9) {
    Representation rho = parse_representation(std::move(G), io_detail::read_file(path), tol);
    validate_representation(rho, T, tol);
    return rho;
}

// ---------------------------------------------------------------------------
// intertwiners

// basis of { S : rho(phi(x)) S = S rho(x) for generators x }, via the SVD
// null space of the stacked Sylvester-style system
inline std::vector<Eigen::MatrixXcd> intertwiner_space(const Representation& rho,
                                                       const Endomorphism& phi,
                                                       double tol = 1e-9) {
    if (rho.G.get() != phi.G.get())
        throw BaseMismatch("representation and endomorphism live on different groups");
    const int d = rho.dim;
    const int d2 = d * d;
    const auto& gens = rho.G->generators();
    Eigen::MatrixXcd A(static_cast<int>(gens.size()) * d2, d2);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const Eigen::MatrixXcd& L = rho.at(phi(gens[gi]));   // acts on the left
        const Eigen::MatrixXcd R = rho.at(gens[gi]).transpose();  // right action, transposed
        // vec(L S - S R^T) = (I (x) L - R (x) I) vec(S), columns stacked
        Eigen::MatrixXcd block = Eigen::kroneckerProduct(id, L) - Eigen::kroneckerProduct(R, id);
        A.block(static_cast<int>(gi) * d2, 0, d2, d2) = block;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& sing = svd.singularValues();
    double scale = sing.size() ? sing(0) : 0.0;
    double cutoff = std::max(scale, 1.0) * tol;
    std::vector<Eigen::MatrixXcd> basis;
    for (int c = 0; c < d2; ++c) {
        if (c < sing.size() && sing(c) > cutoff) continue;
        Eigen::VectorXcd v = svd.matrixV().col(c);
        Eigen::MatrixXcd S(d, d);
        for (int col = 0; col < d; ++col) S.col(col) = v.segment(col * d, d);
        basis.push_back(std::move(S));
    }
    return basis;
}

inline double intertwiner_residual(const Representation& rho, const Endomorphism& phi,
                                   const Eigen::MatrixXcd& S) {
    double worst = 0.0;
    for (int g = 0; g < rho.G->order(); ++g)
        worst = std::max(worst, (rho.at(phi(g)) * S - S * rho.at(g)).cwiseAbs().maxCoeff());
    return worst;
}

// the unique-up-to-scale intertwiner, normalized so its first significant
// entry is 1; throws if the space is empty or bigger than a line
inline Eigen::MatrixXcd simple_intertwiner(const Representation& rho, const Endomorphism& phi,
                                           double tol = 1e-9) {
    auto basis = intertwiner_space(rho, phi, tol);
    if (basis.empty())
        throw NoIntertwiner("no nonzero intertwiner for character " +
                            std::to_string(rho.character_index));
    if (basis.size() > 1)
        throw NonSimpleIntertwiner("intertwiner space has dimension " +
                                   std::to_string(basis.size()));
    Eigen::MatrixXcd S = basis.front();
    double biggest = S.cwiseAbs().maxCoeff();
    for (int r = 0; r < S.rows(); ++r)
        for (int c = 0; c < S.cols(); ++c)
            if (std::abs(S(r, c)) > 0.5 * biggest) {
                S /= S(r, c);
                return S;
            }
    throw NoIntertwiner("intertwiner is numerically zero");
}

// tr(S rho(.)), which descends to twisted classes
inline std::vector<std::complex<double>> twisted_class_function(const Representation& rho,
                                                                const Eigen::MatrixXcd& S) {
    std::vector<std::complex<double>> f(static_cast<std::size_t>(rho.G->order()));
    for (int g = 0; g < rho.G->order(); ++g) f[static_cast<std::size_t>(g)] = (S * rho.at(g)).trace();
    return f;
}

// ---------------------------------------------------------------------------
// basis check: the fixed characters induce a full basis of twisted class
// functions

struct TwistedBasisReport {
    int r = 0;                        // number of twisted classes
    std::vector<int> fixed_characters;
    std::vector<double> residuals;    // intertwiner residual per fixed character
    double max_class_deviation = 0.0; // how far the functions are from class-constant
    int rank = 0;
    double smallest_kept_singular = 0.0;
    bool complete = false;            // rank == r
};

inline TwistedBasisReport twisted_basis_check(const CharacterTable& T, const Endomorphism& phi,
                                              const std::map<int, Representation>& reps,
                                              double tol = 1e-9) {
    if (phi.G.get() != T.G.get())
        throw BaseMismatch("endomorphism and character table live on different groups");
    auto dm = dual_map(T, phi);
    auto twisted = twisted_classes(phi);

    TwistedBasisReport report;
    report.r = twisted.count;
    for (int t = 0; t < T.k; ++t)
        if (dm.image[static_cast<std::size_t>(t)] == t) report.fixed_characters.push_back(t);

    std::vector<std::vector<std::complex<double>>> funcs;
    for (int t : report.fixed_characters) {
        Representation rho;
        if (T.degrees[static_cast<std::size_t>(t)] == 1) {
            rho = linear_representation(T, t);
        } else {
            auto it = reps.find(t);
            if (it == reps.end())
                throw MissingRepresentationData("no matrices supplied for character " +
                                                std::to_string(t) + " of degree " +
                                                std::to_string(T.degrees[static_cast<std::size_t>(t)]));
            rho = it->second;
            validate_representation(rho, T, tol);
        }
        Eigen::MatrixXcd S = simple_intertwiner(rho, phi, tol);
        report.residuals.push_back(intertwiner_residual(rho, phi, S));
        funcs.push_back(twisted_class_function(rho, S));
    }

    // the functions must be constant on each twisted class
    for (const auto& f : funcs)
        for (int g = 0; g < T.G->order(); ++g) {
            int c = twisted.class_of[static_cast<std::size_t>(g)];
            double dev = std::abs(f[static_cast<std::size_t>(g)] -
                                  f[static_cast<std::size_t>(twisted.reps[static_cast<std::size_t>(c)])]);
            report.max_class_deviation = std::max(report.max_class_deviation, dev);
        }
    if (report.max_class_deviation > tol)
        throw VerificationFailed("intertwined trace is not constant on twisted classes");

    Eigen::MatrixXcd M(static_cast<int>(funcs.size()), report.r);
    for (std::size_t i = 0; i < funcs.size(); ++i)
        for (int c = 0; c < report.r; ++c)
            M(static_cast<int>(i), c) =
                funcs[i][static_cast<std::size_t>(twisted.reps[static_cast<std::size_t>(c)])];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& sing = svd.singularValues();
    double top = sing.size() ? sing(0) : 0.0;
    for (int i = 0; i < sing.size(); ++i)
        if (sing(i) > std::max(top, 1.0) * tol) {
            report.rank = i + 1;
            report.smallest_kept_singular = sing(i);
        }
    report.complete = (report.rank == report.r);
    return report;
}

}  // namespace tcz
