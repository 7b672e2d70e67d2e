#pragma once

// Conjugacy classes and the class-level self-map induced by an endomorphism.

#include <vector>

#include "tcz/error.hpp"
#include "tcz/group.hpp"
#include "tcz/zeta.hpp"

namespace tcz {

struct ConjugacyPartition {
    GroupPtr G;
    std::vector<int> class_of;  // element -> class id
    std::vector<int> reps;      // class id -> minimal element of the class
    std::vector<int> sizes;
    int count = 0;
};

// Class ids are assigned in order of each class's minimal element, so the
// identity's class is always id 0. Orbits are closed by conjugating with
// generators only; conjugation by arbitrary elements follows.
inline ConjugacyPartition conjugacy_classes(GroupPtr G) {
    ConjugacyPartition p;
    const int n = G->order();
    p.class_of.assign(static_cast<std::size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        if (p.class_of[static_cast<std::size_t>(g)] >= 0) continue;
        int id = p.count++;
        p.reps.push_back(g);
        std::vector<int> stack{g};
        p.class_of[static_cast<std::size_t>(g)] = id;
        int size = 0;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            ++size;
            for (int x : G->generators()) {
                int c = G->mult(G->mult(x, cur), G->inv(x));
                if (p.class_of[static_cast<std::size_t>(c)] < 0) {
                    p.class_of[static_cast<std::size_t>(c)] = id;
                    stack.push_back(c);
                }
            }
        }
        p.sizes.push_back(size);
    }
    p.G = std::move(G);
    return p;
}

struct ClassMap {
    ConjugacyPartition classes;
    SelfMap sigma;  // class id -> class id, c -> class of phi(rep of c)
};

// The induced map is well defined for any endomorphism; the full scan is a
// consistency check of the data structures, not of the mathematics.
inline ClassMap class_map(const Endomorphism& phi) {
    ClassMap cm;
    cm.classes = conjugacy_classes(phi.G);
    cm.sigma.resize(static_cast<std::size_t>(cm.classes.count));
    for (int c = 0; c < cm.classes.count; ++c)
        cm.sigma[static_cast<std::size_t>(c)] =
            cm.classes.class_of[static_cast<std::size_t>(phi(cm.classes.reps[static_cast<std::size_t>(c)]))];
    for (int g = 0; g < phi.G->order(); ++g) {
        int lhs = cm.classes.class_of[static_cast<std::size_t>(phi(g))];
        int rhs = cm.sigma[static_cast<std::size_t>(cm.classes.class_of[static_cast<std::size_t>(g)])];
        if (lhs != rhs)
            throw InconsistentClassMap("induced class map disagrees at element " + phi.G->word_string(g));
    }
    return cm;
}

}  // namespace tcz
