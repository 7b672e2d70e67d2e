#pragma once

// Finite groups with dense element indices. Permutation-kind groups are
// enumerated by breadth-first closure over the generators, trying generators
// in declaration order, so element index order is shortlex word order and the
// identity is element 0. Table-kind groups come with explicit indices (0 must
// be the identity); BFS over their generators still assigns canonical words.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcz/error.hpp"
#include "tcz/numeric.hpp"

namespace tcz {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// juxtaposed generator letters; bool marks an inverted letter (a')
using Word = std::vector<std::pair<int, bool>>;

namespace group_detail {

struct PermHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    // (a * b)(p) = a(b(p))
    std::vector<int> r(a.size());
    for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[static_cast<std::size_t>(b[p])];
    return r;
}

}  // namespace group_detail

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    enum class Kind { permutation, table };

    static constexpr std::size_t default_cap = 1000000;

    static GroupPtr from_permutations(int degree,
                                      const std::vector<std::pair<std::string, std::vector<int>>>& gens,
                                      std::size_t cap = default_cap);
    static GroupPtr from_table(int order, std::vector<int> table,
                               std::vector<std::pair<std::string, int>> gens = {},
                               std::size_t cap = default_cap);

    Kind kind() const { return kind_; }
    int order() const { return order_; }
    int degree() const { return degree_; }

    int mult(int g, int h) const {
        if (!mult_table_.empty())
            return mult_table_[static_cast<std::size_t>(g) * static_cast<std::size_t>(order_) +
                               static_cast<std::size_t>(h)];
        thread_local std::vector<int> scratch;
        const auto& pg = perms_[static_cast<std::size_t>(g)];
        const auto& ph = perms_[static_cast<std::size_t>(h)];
        scratch.resize(pg.size());
        for (std::size_t p = 0; p < pg.size(); ++p)
            scratch[p] = pg[static_cast<std::size_t>(ph[p])];
        auto it = index_.find(scratch);
        if (it == index_.end()) throw std::logic_error("product escaped the enumerated closure");
        return it->second;
    }
    int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
    int element_order(int g) const { return elem_order_[static_cast<std::size_t>(g)]; }
    std::int64_t exponent() const { return exponent_; }

    const std::vector<int>& generators() const { return gens_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < gen_names_.size(); ++i)
            if (gen_names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    // element indices in BFS discovery order (== 0..n-1 for permutation kind)
    const std::vector<int>& bfs_order() const { return bfs_order_; }
    int bfs_parent(int g) const { return bfs_parent_[static_cast<std::size_t>(g)]; }
    int bfs_letter(int g) const { return bfs_letter_[static_cast<std::size_t>(g)]; }

    std::vector<int> word_of(int g) const {
        std::vector<int> w;
        while (g != 0) {
            w.push_back(bfs_letter(g));
            g = bfs_parent(g);
        }
        std::reverse(w.begin(), w.end());
        return w;
    }
    std::string word_string(int g) const {
        if (g == 0) return "e";
        std::string out;
        for (int letter : word_of(g)) {
            if (!out.empty()) out += ' ';
            out += gen_names_[static_cast<std::size_t>(letter)];
        }
        return out;
    }

    int evaluate_word(const Word& w) const {
        int acc = 0;
        for (auto [letter, inverted] : w) {
            if (letter < 0 || letter >= static_cast<int>(gens_.size()))
                throw std::invalid_argument("word letter out of range");
            int e = gens_[static_cast<std::size_t>(letter)];
            acc = mult(acc, inverted ? inv(e) : e);
        }
        return acc;
    }

    const std::vector<int>& permutation_of(int g) const {
        if (kind_ != Kind::permutation) throw std::logic_error("not a permutation group");
        return perms_[static_cast<std::size_t>(g)];
    }
    int index_of_permutation(const std::vector<int>& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return -1;
        return it->second;
    }

private:
    FiniteGroup() = default;

    void assign_words_by_bfs(std::size_t cap);
    void finish_orders();

    Kind kind_ = Kind::table;
    int order_ = 0;
    int degree_ = 0;
    std::vector<int> mult_table_;  // dense cache, built when the order is modest
    std::vector<std::vector<int>> perms_;
    std::unordered_map<std::vector<int>, int, group_detail::PermHash> index_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::vector<std::string> gen_names_;
    std::vector<int> bfs_order_, bfs_parent_, bfs_letter_;
    std::vector<int> elem_order_;
    std::int64_t exponent_ = 1;

    static constexpr int mult_table_limit = 1024;
};

inline GroupPtr FiniteGroup::from_permutations(
    int degree, const std::vector<std::pair<std::string, std::vector<int>>>& gens,
    std::size_t cap) {
    if (degree <= 0) throw std::invalid_argument("degree must be positive");
    if (gens.empty()) throw std::invalid_argument("at least one generator required");
    for (const auto& [name, img] : gens) {
        if (static_cast<int>(img.size()) != degree)
            throw std::invalid_argument("generator '" + name + "' has wrong length");
        std::vector<char> seen(static_cast<std::size_t>(degree), 0);
        for (int v : img) {
            if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("generator '" + name + "' is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = Kind::permutation;
    g->degree_ = degree;

    std::vector<int> id(static_cast<std::size_t>(degree));
    for (int p = 0; p < degree; ++p) id[static_cast<std::size_t>(p)] = p;
    g->perms_.push_back(id);
    g->index_.emplace(id, 0);

    std::vector<std::vector<int>> gen_perms;
    gen_perms.reserve(gens.size());
    for (const auto& [name, img] : gens) gen_perms.push_back(img);

    g->bfs_parent_.push_back(-1);
    g->bfs_letter_.push_back(-1);
    g->bfs_order_.push_back(0);
    for (std::size_t head = 0; head < g->perms_.size(); ++head) {
        for (std::size_t j = 0; j < gen_perms.size(); ++j) {
            std::vector<int> prod = group_detail::compose(g->perms_[head], gen_perms[j]);
            if (g->index_.count(prod)) continue;
            if (g->perms_.size() >= cap)
                throw ClosureOverflow("group enumeration exceeded cap of " + std::to_string(cap));
            int idx = static_cast<int>(g->perms_.size());
            g->index_.emplace(prod, idx);
            g->perms_.push_back(std::move(prod));
            g->bfs_parent_.push_back(static_cast<int>(head));
            g->bfs_letter_.push_back(static_cast<int>(j));
            g->bfs_order_.push_back(idx);
        }
    }
    g->order_ = static_cast<int>(g->perms_.size());

    for (const auto& [name, img] : gens) {
        g->gen_names_.push_back(name);
        g->gens_.push_back(g->index_.at(img));
    }

    g->inv_.resize(static_cast<std::size_t>(g->order_));
    for (int e = 0; e < g->order_; ++e) {
        std::vector<int> ip(static_cast<std::size_t>(degree));
        const auto& pe = g->perms_[static_cast<std::size_t>(e)];
        for (int p = 0; p < degree; ++p) ip[static_cast<std::size_t>(pe[static_cast<std::size_t>(p)])] = p;
        g->inv_[static_cast<std::size_t>(e)] = g->index_.at(ip);
    }

    if (g->order_ <= mult_table_limit) {
        g->mult_table_.resize(static_cast<std::size_t>(g->order_) * static_cast<std::size_t>(g->order_));
        for (int x = 0; x < g->order_; ++x)
            for (int y = 0; y < g->order_; ++y) {
                auto prod = group_detail::compose(g->perms_[static_cast<std::size_t>(x)],
                                                  g->perms_[static_cast<std::size_t>(y)]);
                g->mult_table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(g->order_) +
                               static_cast<std::size_t>(y)] = g->index_.at(prod);
            }
    }

    g->finish_orders();
    return g;
}

inline GroupPtr FiniteGroup::from_table(int order, std::vector<int> table,
                                        std::vector<std::pair<std::string, int>> gens,
                                        std::size_t cap) {
    if (order <= 0) throw std::invalid_argument("order must be positive");
    if (static_cast<std::size_t>(order) > cap)
        throw ClosureOverflow("table order exceeds cap");
    if (table.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
        throw std::invalid_argument("table size mismatch");
    for (int v : table)
        if (v < 0 || v >= order) throw std::invalid_argument("table entry out of range");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = Kind::table;
    g->order_ = order;
    g->mult_table_ = std::move(table);

    auto tmul = [&](int x, int y) {
        return g->mult_table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(order) +
                              static_cast<std::size_t>(y)];
    };

    for (int h = 0; h < order; ++h)
        if (tmul(0, h) != h || tmul(h, 0) != h)
            throw NotAGroup("index 0 is not a two-sided identity");

    g->inv_.assign(static_cast<std::size_t>(order), -1);
    for (int x = 0; x < order; ++x) {
        for (int h = 0; h < order; ++h) {
            if (tmul(x, h) == 0) {
                if (tmul(h, x) != 0)
                    throw NotAGroup("element " + std::to_string(x) + " has only a one-sided inverse");
                g->inv_[static_cast<std::size_t>(x)] = h;
                break;
            }
        }
        if (g->inv_[static_cast<std::size_t>(x)] < 0)
            throw NotAGroup("element " + std::to_string(x) + " has no inverse");
    }

    if (order <= 256) {
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y)
                for (int z = 0; z < order; ++z)
                    if (tmul(tmul(x, y), z) != tmul(x, tmul(y, z)))
                        throw NotAGroup("associativity fails at (" + std::to_string(x) + ", " +
                                        std::to_string(y) + ", " + std::to_string(z) + ")");
    } else {
        std::mt19937 rng(982451653u);
        std::uniform_int_distribution<int> pick(0, order - 1);
        for (int t = 0; t < 10000; ++t) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            if (tmul(tmul(x, y), z) != tmul(x, tmul(y, z)))
                throw NotAGroup("associativity fails at sampled (" + std::to_string(x) + ", " +
                                std::to_string(y) + ", " + std::to_string(z) + ")");
        }
    }

    if (gens.empty()) {
        for (int x = 1; x < order; ++x) gens.emplace_back("g" + std::to_string(x), x);
        if (order == 1) gens.emplace_back("e", 0);
    }
    for (const auto& [name, idx] : gens) {
        if (idx < 0 || idx >= order)
            throw std::invalid_argument("generator '" + name + "' index out of range");
        g->gen_names_.push_back(name);
        g->gens_.push_back(idx);
    }

    g->assign_words_by_bfs(cap);
    g->finish_orders();
    return g;
}

inline void FiniteGroup::assign_words_by_bfs(std::size_t cap) {
    (void)cap;
    bfs_parent_.assign(static_cast<std::size_t>(order_), -2);
    bfs_letter_.assign(static_cast<std::size_t>(order_), -1);
    bfs_order_.clear();
    bfs_parent_[0] = -1;
    bfs_order_.push_back(0);
    for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
        int cur = bfs_order_[head];
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            int nxt = mult(cur, gens_[j]);
            if (bfs_parent_[static_cast<std::size_t>(nxt)] != -2) continue;
            bfs_parent_[static_cast<std::size_t>(nxt)] = cur;
            bfs_letter_[static_cast<std::size_t>(nxt)] = static_cast<int>(j);
            bfs_order_.push_back(nxt);
        }
    }
    if (static_cast<int>(bfs_order_.size()) != order_)
        throw NotAGroup("declared generators do not generate the whole group");
}

inline void FiniteGroup::finish_orders() {
    elem_order_.resize(static_cast<std::size_t>(order_));
    exponent_ = 1;
    for (int g = 0; g < order_; ++g) {
        int o = 1;
        int x = g;
        while (x != 0) {
            x = mult(x, g);
            ++o;
            if (o > order_) throw NotAGroup("element order exceeds group order");
        }
        elem_order_[static_cast<std::size_t>(g)] = o;
        exponent_ = ll_lcm(exponent_, o);
    }
}

// ---------------------------------------------------------------------------
// endomorphisms

struct Endomorphism {
    GroupPtr G;
    std::vector<int> image;  // element -> element
    bool automorphism = false;

    int operator()(int g) const { return image[static_cast<std::size_t>(g)]; }
};

// Full image table given; validates f(0) = 0 and f(x y) = f(x) f(y) for
// generator x and every y, which extends to all products.
inline Endomorphism endomorphism_from_image_table(GroupPtr G, std::vector<int> image) {
    const int n = G->order();
    if (static_cast<int>(image.size()) != n)
        throw std::invalid_argument("image table size mismatch");
    for (int v : image)
        if (v < 0 || v >= n) throw std::invalid_argument("image entry out of range");
    if (image[0] != 0) throw NotAHomomorphism("identity is not fixed");
    for (int x : G->generators())
        for (int y = 0; y < n; ++y) {
            int lhs = image[static_cast<std::size_t>(G->mult(x, y))];
            int rhs = G->mult(image[static_cast<std::size_t>(x)], image[static_cast<std::size_t>(y)]);
            if (lhs != rhs)
                throw NotAHomomorphism("f(x y) != f(x) f(y) at x = " + G->word_string(x) +
                                       ", y = " + G->word_string(y));
        }
    Endomorphism e;
    e.G = std::move(G);
    e.image = std::move(image);
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    bool bij = true;
    for (int v : e.image) {
        if (hit[static_cast<std::size_t>(v)]) {
            bij = false;
            break;
        }
        hit[static_cast<std::size_t>(v)] = 1;
    }
    e.automorphism = bij;
    return e;
}

// Generator images as element indices; the rest of the table is filled in
// along BFS words and then validated.
inline Endomorphism build_endomorphism(GroupPtr G, const std::vector<int>& gen_images) {
    if (gen_images.size() != G->generators().size())
        throw std::invalid_argument("need one image per generator");
    const int n = G->order();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    image[0] = 0;
    for (int g : G->bfs_order()) {
        if (g == 0) continue;
        int par = G->bfs_parent(g);
        int letter = G->bfs_letter(g);
        image[static_cast<std::size_t>(g)] =
            G->mult(image[static_cast<std::size_t>(par)], gen_images[static_cast<std::size_t>(letter)]);
    }
    return endomorphism_from_image_table(std::move(G), std::move(image));
}

inline Endomorphism build_endomorphism_words(GroupPtr G, const std::vector<Word>& gen_words) {
    std::vector<int> gen_images;
    gen_images.reserve(gen_words.size());
    for (const auto& w : gen_words) gen_images.push_back(G->evaluate_word(w));
    return build_endomorphism(std::move(G), gen_images);
}

inline Endomorphism identity_endomorphism(GroupPtr G) {
    std::vector<int> image(static_cast<std::size_t>(G->order()));
    for (int i = 0; i < G->order(); ++i) image[static_cast<std::size_t>(i)] = i;
    Endomorphism e;
    e.G = std::move(G);
    e.image = std::move(image);
    e.automorphism = true;
    return e;
}

inline Endomorphism endo_power(const Endomorphism& phi, int n) {
    if (n < 0) throw std::invalid_argument("endo_power: negative exponent");
    Endomorphism e = identity_endomorphism(phi.G);
    for (int k = 0; k < n; ++k) {
        for (auto& v : e.image) v = phi.image[static_cast<std::size_t>(v)];
    }
    std::vector<char> hit(e.image.size(), 0);
    e.automorphism = true;
    for (int v : e.image) {
        if (hit[static_cast<std::size_t>(v)]) {
            e.automorphism = false;
            break;
        }
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return e;
}

// ---------------------------------------------------------------------------
// direct products

struct DirectProduct {
    GroupPtr group;
    Endomorphism endo;
    std::vector<int> pair_index;  // (g, h) -> index, flattened g * |H| + h

    int at(int g, int h, int order_h) const {
        return pair_index[static_cast<std::size_t>(g) * static_cast<std::size_t>(order_h) +
                          static_cast<std::size_t>(h)];
    }
};

namespace group_detail {

inline std::vector<std::string> uniquify_names(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
    std::vector<std::string> out;
    auto taken = [&out](const std::string& s) {
        for (const auto& t : out)
            if (t == s) return true;
        return false;
    };
    for (const auto& s : a) {
        std::string cand = s + "1";
        while (taken(cand)) cand += "_";
        out.push_back(cand);
    }
    for (const auto& s : b) {
        std::string cand = s + "2";
        while (taken(cand)) cand += "_";
        out.push_back(cand);
    }
    return out;
}

}  // namespace group_detail

inline DirectProduct direct_product(const Endomorphism& phi, const Endomorphism& psi) {
    const GroupPtr& G = phi.G;
    const GroupPtr& H = psi.G;
    const int ng = G->order(), nh = H->order();
    auto names = group_detail::uniquify_names(G->generator_names(), H->generator_names());

    DirectProduct dp;
    if (G->kind() == FiniteGroup::Kind::permutation && H->kind() == FiniteGroup::Kind::permutation) {
        const int dg = G->degree(), dh = H->degree();
        std::vector<std::pair<std::string, std::vector<int>>> gens;
        std::size_t ni = 0;
        for (int j = 0; j < static_cast<int>(G->generators().size()); ++j, ++ni) {
            std::vector<int> p(static_cast<std::size_t>(dg + dh));
            const auto& pg = G->permutation_of(G->generators()[static_cast<std::size_t>(j)]);
            for (int q = 0; q < dg; ++q) p[static_cast<std::size_t>(q)] = pg[static_cast<std::size_t>(q)];
            for (int q = 0; q < dh; ++q) p[static_cast<std::size_t>(dg + q)] = dg + q;
            gens.emplace_back(names[ni], std::move(p));
        }
        for (int j = 0; j < static_cast<int>(H->generators().size()); ++j, ++ni) {
            std::vector<int> p(static_cast<std::size_t>(dg + dh));
            for (int q = 0; q < dg; ++q) p[static_cast<std::size_t>(q)] = q;
            const auto& ph = H->permutation_of(H->generators()[static_cast<std::size_t>(j)]);
            for (int q = 0; q < dh; ++q) p[static_cast<std::size_t>(dg + q)] = dg + ph[static_cast<std::size_t>(q)];
            gens.emplace_back(names[ni], std::move(p));
        }
        dp.group = FiniteGroup::from_permutations(dg + dh, gens);
        if (dp.group->order() != ng * nh)
            throw std::logic_error("direct product closure has unexpected order");
        dp.pair_index.resize(static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh));
        std::vector<int> joint(static_cast<std::size_t>(dg + dh));
        for (int g = 0; g < ng; ++g) {
            const auto& pg = G->permutation_of(g);
            for (int q = 0; q < dg; ++q) joint[static_cast<std::size_t>(q)] = pg[static_cast<std::size_t>(q)];
            for (int h = 0; h < nh; ++h) {
                const auto& ph = H->permutation_of(h);
                for (int q = 0; q < dh; ++q)
                    joint[static_cast<std::size_t>(dg + q)] = dg + ph[static_cast<std::size_t>(q)];
                int idx = dp.group->index_of_permutation(joint);
                if (idx < 0) throw std::logic_error("pair missing from product closure");
                dp.pair_index[static_cast<std::size_t>(g) * static_cast<std::size_t>(nh) +
                              static_cast<std::size_t>(h)] = idx;
            }
        }
    } else {
        const int n = ng * nh;
        std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        auto pid = [nh](int g, int h) { return g * nh + h; };
        for (int g1 = 0; g1 < ng; ++g1)
            for (int h1 = 0; h1 < nh; ++h1)
                for (int g2 = 0; g2 < ng; ++g2)
                    for (int h2 = 0; h2 < nh; ++h2)
                        table[static_cast<std::size_t>(pid(g1, h1)) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(pid(g2, h2))] =
                            pid(G->mult(g1, g2), H->mult(h1, h2));
        std::vector<std::pair<std::string, int>> gens;
        std::size_t ni = 0;
        for (int e : G->generators()) gens.emplace_back(names[ni++], pid(e, 0));
        for (int e : H->generators()) gens.emplace_back(names[ni++], pid(0, e));
        dp.group = FiniteGroup::from_table(n, std::move(table), std::move(gens));
        dp.pair_index.resize(static_cast<std::size_t>(n));
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < nh; ++h)
                dp.pair_index[static_cast<std::size_t>(pid(g, h))] = pid(g, h);
    }

    std::vector<int> image(static_cast<std::size_t>(ng * nh));
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < nh; ++h)
            image[static_cast<std::size_t>(dp.at(g, h, nh))] =
                dp.at(phi(g), psi(h), nh);
    dp.endo = endomorphism_from_image_table(dp.group, std::move(image));
    return dp;
}

// ---------------------------------------------------------------------------
// abelianization

// subgroup generated by the given elements (right-multiplication closure)
inline std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> seed) {
    std::vector<char> member(static_cast<std::size_t>(G.order()), 0);
    std::vector<int> elems;
    member[0] = 1;
    elems.push_back(0);
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (int s : seed) {
            int nxt = G.mult(elems[head], s);
            if (!member[static_cast<std::size_t>(nxt)]) {
                member[static_cast<std::size_t>(nxt)] = 1;
                elems.push_back(nxt);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

// |G / [G,G]|, with [G,G] the normal closure of generator-pair commutators
inline std::int64_t abelianization_order(const FiniteGroup& G) {
    std::vector<int> seed;
    for (int x : G.generators())
        for (int y : G.generators()) {
            int c = G.mult(G.mult(x, y), G.mult(G.inv(x), G.inv(y)));
            seed.push_back(c);
        }
    while (true) {
        std::vector<int> sub = subgroup_closure(G, seed);
        bool grew = false;
        for (int m : sub) {
            for (int x : G.generators()) {
                int c = G.mult(G.mult(x, m), G.inv(x));
                if (!std::binary_search(sub.begin(), sub.end(), c)) {
                    seed.push_back(c);
                    grew = true;
                }
            }
            if (grew) break;
        }
        if (!grew) return G.order() / static_cast<std::int64_t>(sub.size());
    }
}

}  // namespace tcz
