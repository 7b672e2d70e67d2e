#pragma once

// Twisted conjugacy: g ~ x g phi(x)^-1. Classes are computed by union-find
// over the moves g -> x g phi(x)^-1 with x running over generators; since
// those moves compose, closing under generators closes under the whole group.

#include <string>
#include <vector>

#include "tcz/error.hpp"
#include "tcz/group.hpp"
#include "tcz/numeric.hpp"

namespace tcz {

namespace twisted_detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace twisted_detail

struct TwistedPartition {
    GroupPtr G;
    std::vector<int> class_of;  // element -> class id
    std::vector<int> reps;      // class id -> minimal element
    std::vector<int> sizes;
    int count = 0;
};

inline TwistedPartition twisted_classes(const Endomorphism& phi) {
    const GroupPtr& G = phi.G;
    const int n = G->order();
    twisted_detail::UnionFind uf(n);
    for (int x : G->generators()) {
        int fxi = G->inv(phi(x));
        for (int g = 0; g < n; ++g) uf.unite(g, G->mult(G->mult(x, g), fxi));
    }
    TwistedPartition p;
    p.G = G;
    p.class_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        int r = uf.find(g);
        if (id_of_root[static_cast<std::size_t>(r)] < 0) {
            id_of_root[static_cast<std::size_t>(r)] = p.count++;
            p.reps.push_back(g);
            p.sizes.push_back(0);
        }
        int id = id_of_root[static_cast<std::size_t>(r)];
        p.class_of[static_cast<std::size_t>(g)] = id;
        ++p.sizes[static_cast<std::size_t>(id)];
    }
    return p;
}

inline Int reidemeister_number(const Endomorphism& phi) {
    return Int(twisted_classes(phi).count);
}

// class counts for phi^1 .. phi^n_max
inline std::vector<Int> reidemeister_numbers(const Endomorphism& phi, int n_max) {
    std::vector<Int> out;
    Endomorphism p = identity_endomorphism(phi.G);
    for (int n = 1; n <= n_max; ++n) {
        for (auto& v : p.image) v = phi.image[static_cast<std::size_t>(v)];
        out.push_back(Int(twisted_classes(p).count));
    }
    return out;
}

// ---------------------------------------------------------------------------
// pushing twisted classes through a quotient

struct QuotientPushforward {
    GroupPtr quotient;
    Endomorphism induced;
    std::vector<int> coset_of;  // source element -> quotient element
    TwistedPartition source_classes;
    TwistedPartition quotient_classes;
    // class id in the source -> class id in the quotient
    std::vector<int> class_image;
    bool onto = false;  // every source class covers its whole quotient class,
                        // and every quotient class is covered
};

// N is given as a set of element indices. Throws NotASubgroup / NotNormal /
// NotInvariant when the data does not support a quotient, then reports how
// twisted classes of (G, phi) land in the quotient.
inline QuotientPushforward quotient_pushforward(const Endomorphism& phi, std::vector<int> N) {
    const GroupPtr& G = phi.G;
    const int n = G->order();

    std::vector<char> in_N(static_cast<std::size_t>(n), 0);
    for (int e : N) {
        if (e < 0 || e >= n) throw std::invalid_argument("subgroup element out of range");
        in_N[static_cast<std::size_t>(e)] = 1;
    }
    if (!in_N[0]) throw NotASubgroup("subset does not contain the identity");
    for (int a : N) {
        if (!in_N[static_cast<std::size_t>(G->inv(a))])
            throw NotASubgroup("subset not closed under inverse at " + G->word_string(a));
        for (int b : N)
            if (!in_N[static_cast<std::size_t>(G->mult(a, b))])
                throw NotASubgroup("subset not closed under product at " + G->word_string(a) + " * " +
                                   G->word_string(b));
    }
    for (int x : G->generators())
        for (int a : N)
            if (!in_N[static_cast<std::size_t>(G->mult(G->mult(x, a), G->inv(x)))])
                throw NotNormal("conjugating " + G->word_string(a) + " by " + G->word_string(x) +
                                " leaves the subgroup");
    for (int a : N)
        if (!in_N[static_cast<std::size_t>(phi(a))])
            throw NotInvariant("image of " + G->word_string(a) + " leaves the subgroup");

    QuotientPushforward out;
    out.coset_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> coset_rep;
    for (int g = 0; g < n; ++g) {
        if (out.coset_of[static_cast<std::size_t>(g)] >= 0) continue;
        int id = static_cast<int>(coset_rep.size());
        coset_rep.push_back(g);
        for (int a : N) out.coset_of[static_cast<std::size_t>(G->mult(g, a))] = id;
    }
    const int q = static_cast<int>(coset_rep.size());

    std::vector<int> table(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i) * static_cast<std::size_t>(q) + static_cast<std::size_t>(j)] =
                out.coset_of[static_cast<std::size_t>(G->mult(coset_rep[static_cast<std::size_t>(i)],
                                                              coset_rep[static_cast<std::size_t>(j)]))];

    std::vector<std::pair<std::string, int>> qgens;
    for (std::size_t j = 0; j < G->generators().size(); ++j) {
        int img = out.coset_of[static_cast<std::size_t>(G->generators()[j])];
        bool dup = false;
        for (const auto& [nm, v] : qgens)
            if (v == img) dup = true;
        if (img != 0 && !dup) qgens.emplace_back(G->generator_names()[j], img);
    }
    out.quotient = FiniteGroup::from_table(q, std::move(table), std::move(qgens));

    std::vector<int> qimage(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
        qimage[static_cast<std::size_t>(i)] =
            out.coset_of[static_cast<std::size_t>(phi(coset_rep[static_cast<std::size_t>(i)]))];
    out.induced = endomorphism_from_image_table(out.quotient, std::move(qimage));

    out.source_classes = twisted_classes(phi);
    out.quotient_classes = twisted_classes(out.induced);

    out.class_image.assign(static_cast<std::size_t>(out.source_classes.count), -1);
    out.onto = true;
    std::vector<std::vector<char>> covered(
        static_cast<std::size_t>(out.source_classes.count),
        std::vector<char>(static_cast<std::size_t>(q), 0));
    for (int g = 0; g < n; ++g) {
        int sc = out.source_classes.class_of[static_cast<std::size_t>(g)];
        int qe = out.coset_of[static_cast<std::size_t>(g)];
        int qc = out.quotient_classes.class_of[static_cast<std::size_t>(qe)];
        if (out.class_image[static_cast<std::size_t>(sc)] < 0)
            out.class_image[static_cast<std::size_t>(sc)] = qc;
        else if (out.class_image[static_cast<std::size_t>(sc)] != qc)
            out.onto = false;  // projection straddles two quotient classes
        covered[static_cast<std::size_t>(sc)][static_cast<std::size_t>(qe)] = 1;
    }
    for (int sc = 0; sc < out.source_classes.count && out.onto; ++sc) {
        int qc = out.class_image[static_cast<std::size_t>(sc)];
        for (int qe = 0; qe < q; ++qe)
            if (out.quotient_classes.class_of[static_cast<std::size_t>(qe)] == qc &&
                !covered[static_cast<std::size_t>(sc)][static_cast<std::size_t>(qe)])
                out.onto = false;  // projection misses part of the target class
    }
    std::vector<char> hit(static_cast<std::size_t>(out.quotient_classes.count), 0);
    for (int v : out.class_image)
        if (v >= 0) hit[static_cast<std::size_t>(v)] = 1;
    for (char h : hit)
        if (!h) out.onto = false;
    return out;
}

}  // namespace tcz
