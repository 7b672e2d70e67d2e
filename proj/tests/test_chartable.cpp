#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <string>
#include <vector>

#include "tcz/chartable.hpp"
#include "tcz/cyclotomic.hpp"
#include "tcz/group_io.hpp"
#include "tcz/twisted.hpp"

using tcz::CharacterTable;
using tcz::Endomorphism;
using tcz::GroupPtr;
using tcz::Int;

namespace {

std::string data(const std::string& name) { return std::string(TCZ_DATA_DIR "/") + name; }

CharacterTable table_of(const std::string& grp) {
    return tcz::character_table(tcz::load_group(data(grp)));
}

// every value in the table is a plain integer matching the expected matrix
void require_integer_table(const CharacterTable& t, const std::vector<std::vector<long long>>& expect) {
    REQUIRE(t.k == static_cast<int>(expect.size()));
    for (int i = 0; i < t.k; ++i) {
        REQUIRE(static_cast<int>(expect[static_cast<std::size_t>(i)].size()) == t.k);
        for (int j = 0; j < t.k; ++j) {
            auto v = t.ctx.as_integer(t.value(i, j));
            INFO("row " << i << " class " << j);
            REQUIRE(v.has_value());
            REQUIRE(*v == expect[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
}

void require_orthogonality(const CharacterTable& t) {
    const Int n = t.G->order();
    for (int a = 0; a < t.k; ++a)
        for (int b = 0; b < t.k; ++b) {
            tcz::Cyclo s = t.ctx.zero();
            for (int i = 0; i < t.k; ++i) {
                tcz::Cyclo term = t.ctx.mul(t.value(a, i), t.ctx.conj(t.value(b, i)));
                s = t.ctx.add(s, t.ctx.scale(term, Int(t.classes.sizes[static_cast<std::size_t>(i)])));
            }
            auto v = t.ctx.as_integer(s);
            REQUIRE(v.has_value());
            REQUIRE(*v == (a == b ? n : Int(0)));
        }
    for (int i = 0; i < t.k; ++i)
        for (int j = 0; j < t.k; ++j) {
            tcz::Cyclo s = t.ctx.zero();
            for (int a = 0; a < t.k; ++a)
                s = t.ctx.add(s, t.ctx.mul(t.value(a, i), t.ctx.conj(t.value(a, j))));
            auto v = t.ctx.as_integer(s);
            REQUIRE(v.has_value());
            REQUIRE(*v == (i == j ? n / t.classes.sizes[static_cast<std::size_t>(i)] : Int(0)));
        }
}

Endomorphism load_endo(const std::string& grp, const std::string& endo) {
    GroupPtr G = tcz::load_group(data(grp));
    return tcz::load_endomorphism(G, data(endo));
}

}  // namespace

TEST_CASE("cyclotomic polynomials and reduction") {
    using tcz::poly_from_ints;
    REQUIRE(tcz::cyclotomic_polynomial(1) == poly_from_ints({-1, 1}));
    REQUIRE(tcz::cyclotomic_polynomial(2) == poly_from_ints({1, 1}));
    REQUIRE(tcz::cyclotomic_polynomial(3) == poly_from_ints({1, 1, 1}));
    REQUIRE(tcz::cyclotomic_polynomial(4) == poly_from_ints({1, 0, 1}));
    REQUIRE(tcz::cyclotomic_polynomial(6) == poly_from_ints({1, -1, 1}));
    REQUIRE(tcz::cyclotomic_polynomial(12) == poly_from_ints({1, 0, -1, 0, 1}));

    tcz::CyclotomicContext c6(6);
    REQUIRE(c6.as_integer(c6.root_power(3)) == Int(-1));
    REQUIRE(c6.as_integer(c6.root_power(0)) == Int(1));
    REQUIRE_FALSE(c6.as_integer(c6.root_power(1)).has_value());
    tcz::Cyclo all = c6.zero();
    for (int m = 0; m < 6; ++m) all = c6.add(all, c6.root_power(m));
    REQUIRE(c6.as_integer(all) == Int(0));  // the six roots sum to zero

    tcz::CyclotomicContext c4(4);
    REQUIRE(c4.as_integer(c4.root_power(2)) == Int(-1));
    REQUIRE(c4.equal(c4.mul(c4.root_power(1), c4.root_power(3)), c4.integer(1)));
    REQUIRE(c4.equal(c4.conj(c4.root_power(1)), c4.root_power(3)));
}

TEST_CASE("character table of z4") {
    CharacterTable t = table_of("z4.grp");
    REQUIRE(t.k == 4);
    REQUIRE(t.exponent == 4);
    REQUIRE(t.prime == 5);
    REQUIRE(t.degrees == std::vector<int>{1, 1, 1, 1});
    // after sorting, row j is x -> zeta4^(j x)
    for (int j = 0; j < 4; ++j)
        for (int x = 0; x < 4; ++x)
            REQUIRE(t.ctx.equal(t.value(j, x), t.ctx.root_power(j * x)));
    require_orthogonality(t);
}

TEST_CASE("character table of z6 is the cyclic dual") {
    CharacterTable t = table_of("z6.grp");
    REQUIRE(t.k == 6);
    for (int j = 0; j < 6; ++j)
        for (int x = 0; x < 6; ++x)
            REQUIRE(t.ctx.equal(t.value(j, x), t.ctx.root_power(j * x)));
    require_orthogonality(t);
}

TEST_CASE("character table of s3") {
    CharacterTable t = table_of("s3.grp");
    REQUIRE(t.degrees == std::vector<int>{1, 1, 2});
    // classes: identity, transpositions, 3-cycles
    REQUIRE(t.classes.sizes == std::vector<int>{1, 3, 2});
    require_integer_table(t, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}});
    require_orthogonality(t);
}

TEST_CASE("character table of d4") {
    CharacterTable t = table_of("d4.grp");
    REQUIRE(t.degrees == std::vector<int>{1, 1, 1, 1, 2});
    // classes: e, {r, r^3}, {s, r^2 s}, {r^2}, {r s, r^3 s}
    REQUIRE(t.classes.sizes == std::vector<int>{1, 2, 2, 1, 2});
    require_integer_table(t, {{1, 1, 1, 1, 1},
                              {1, 1, -1, 1, -1},
                              {1, -1, 1, 1, -1},
                              {1, -1, -1, 1, 1},
                              {2, 0, 0, -2, 0}});
    require_orthogonality(t);
}

TEST_CASE("character table of q8") {
    CharacterTable t = table_of("q8.grp");
    REQUIRE(t.degrees == std::vector<int>{1, 1, 1, 1, 2});
    // classes: 1, {i, -i}, {j, -j}, {k, -k}, {-1}
    REQUIRE(t.classes.sizes == std::vector<int>{1, 2, 2, 2, 1});
    require_integer_table(t, {{1, 1, 1, 1, 1},
                              {1, 1, -1, -1, 1},
                              {1, -1, 1, -1, 1},
                              {1, -1, -1, 1, 1},
                              {2, 0, 0, 0, -2}});
    require_orthogonality(t);
}

TEST_CASE("character table of s4") {
    CharacterTable t = table_of("s4.grp");
    REQUIRE(t.degrees == std::vector<int>{1, 1, 2, 3, 3});
    // classes: e, transpositions, 4-cycles, 3-cycles, double transpositions
    REQUIRE(t.classes.sizes == std::vector<int>{1, 6, 6, 8, 3});
    require_integer_table(t, {{1, 1, 1, 1, 1},
                              {1, -1, -1, 1, 1},
                              {2, 0, 0, -1, 2},
                              {3, 1, -1, 0, -1},
                              {3, -1, 1, 0, -1}});
    require_orthogonality(t);
}

TEST_CASE("character table of a4") {
    CharacterTable t = table_of("a4.grp");
    REQUIRE(t.degrees == std::vector<int>{1, 1, 1, 3});
    REQUIRE(t.classes.sizes == std::vector<int>{1, 4, 3, 4});
    require_orthogonality(t);

    // the two nontrivial linear characters take cube root values on 3-cycles
    auto omega = std::complex<double>(-0.5, std::sqrt(3.0) / 2.0);
    auto v11 = t.value_complex(1, 1);
    REQUIRE(std::abs(v11 - omega) < 1e-9);
    REQUIRE(std::abs(t.value_complex(2, 1) - std::conj(omega)) < 1e-9);
    REQUIRE(t.ctx.equal(t.value(2, 1), t.ctx.conj(t.value(1, 1))));
    REQUIRE(t.ctx.as_integer(t.value(1, 2)) == Int(1));  // trivial on the 2-2 cycles

    // the 3-dimensional row is rational
    REQUIRE(t.ctx.as_integer(t.value(3, 0)) == Int(3));
    REQUIRE(t.ctx.as_integer(t.value(3, 1)) == Int(0));
    REQUIRE(t.ctx.as_integer(t.value(3, 2)) == Int(-1));
    REQUIRE(t.ctx.as_integer(t.value(3, 3)) == Int(0));
}

TEST_CASE("degree squares sum to the group order") {
    for (const char* f : {"s3.grp", "z2.grp", "z4.grp", "z6.grp", "d4.grp", "q8.grp",
                          "a4.grp", "s4.grp", "trivial.grp"}) {
        INFO(f);
        CharacterTable t = table_of(f);
        long long sum = 0;
        for (int d : t.degrees) sum += static_cast<long long>(d) * d;
        REQUIRE(sum == t.G->order());
        // identity column carries the degrees
        for (int i = 0; i < t.k; ++i)
            REQUIRE(t.ctx.as_integer(t.value(i, 0)) == Int(t.degrees[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("values are symmetric under inversion of the class") {
    for (const char* f : {"s3.grp", "z6.grp", "d4.grp", "q8.grp", "a4.grp", "s4.grp"}) {
        INFO(f);
        CharacterTable t = table_of(f);
        for (int a = 0; a < t.k; ++a)
            for (int i = 0; i < t.k; ++i)
                REQUIRE(t.ctx.equal(t.value(a, t.inverse_class[static_cast<std::size_t>(i)]),
                                    t.ctx.conj(t.value(a, i))));
    }
}

TEST_CASE("composition with endomorphisms permutes or collapses characters") {
    {
        GroupPtr G = tcz::load_group(data("z6.grp"));
        CharacterTable t = tcz::character_table(G);
        auto dm = tcz::dual_map(t, tcz::load_endomorphism(G, data("z6_neg.endo")));
        REQUIRE(dm.image == std::vector<int>{0, 5, 4, 3, 2, 1});

        auto dm2 = tcz::dual_map(t, tcz::load_endomorphism(G, data("z6_dbl.endo")));
        REQUIRE(dm2.image == std::vector<int>{0, 2, 4, 0, 2, 4});
    }
    {
        GroupPtr G = tcz::load_group(data("s3.grp"));
        CharacterTable t = tcz::character_table(G);
        auto dm = tcz::dual_map(t, tcz::load_endomorphism(G, data("s3_trivial.endo")));
        // the 2-dimensional character collapses to twice the trivial one
        REQUIRE(dm.image == std::vector<int>{0, 0, -1});

        auto inner = tcz::load_endomorphism(G, data("s3_inner.endo"));
        REQUIRE(tcz::dual_map(t, inner).image == std::vector<int>{0, 1, 2});
    }
    {
        GroupPtr G = tcz::load_group(data("q8.grp"));
        CharacterTable t = tcz::character_table(G);
        // composition pulls characters back: the kernel of chi cycles i <- k <- j
        REQUIRE(tcz::dual_map(t, tcz::load_endomorphism(G, data("q8_rot.endo"))).image ==
                std::vector<int>{0, 3, 1, 2, 4});
    }
    {
        GroupPtr G = tcz::load_group(data("d4.grp"));
        CharacterTable t = tcz::character_table(G);
        REQUIRE(tcz::dual_map(t, tcz::load_endomorphism(G, data("d4_out.endo"))).image ==
                std::vector<int>{0, 1, 3, 2, 4});
    }
    {
        GroupPtr G = tcz::load_group(data("a4.grp"));
        CharacterTable t = tcz::character_table(G);
        REQUIRE(tcz::dual_map(t, tcz::load_endomorphism(G, data("a4_auto.endo"))).image ==
                std::vector<int>{0, 2, 1, 3});
    }

    // tables refuse endomorphisms of a different group instance
    CharacterTable t = table_of("s3.grp");
    auto other = load_endo("s3.grp", "s3_inner.endo");
    REQUIRE_THROWS_AS(tcz::dual_map(t, other), tcz::BaseMismatch);
}

TEST_CASE("fixed characters count the twisted classes") {
    struct Case {
        const char* grp;
        const char* endo;
    };
    for (const Case& c : {Case{"z6.grp", "z6_neg.endo"},
                          Case{"z6.grp", "z6_dbl.endo"},
                          Case{"s3.grp", "s3_inner.endo"},
                          Case{"s3.grp", "s3_conj_a.endo"},
                          Case{"s3.grp", "s3_trivial.endo"},
                          Case{"d4.grp", "d4_out.endo"},
                          Case{"q8.grp", "q8_rot.endo"},
                          Case{"a4.grp", "a4_auto.endo"}}) {
        INFO(c.grp << " " << c.endo);
        GroupPtr G = tcz::load_group(data(c.grp));
        CharacterTable t = tcz::character_table(G);
        auto phi = tcz::load_endomorphism(G, data(c.endo));
        auto report = tcz::tbft_check(t, phi, 8);
        REQUIRE(report.all_equal);
        REQUIRE(report.class_counts == report.char_counts);
        REQUIRE(report.class_counts == report.trace_counts);
        REQUIRE(report.class_counts.front() == tcz::reidemeister_number(phi));
    }
}

TEST_CASE("stable part of the composition map") {
    {
        GroupPtr G = tcz::load_group(data("s3.grp"));
        CharacterTable t = tcz::character_table(G);
        auto sys = tcz::stable_dual_system(t, tcz::load_endomorphism(G, data("s3_trivial.endo")));
        // the sign character survives: composing with a trivial map yields the
        // trivial character, which is again irreducible
        REQUIRE(sys.members == std::vector<int>{0, 1});
        REQUIRE(sys.restricted == tcz::SelfMap{0, 0});
    }
    {
        GroupPtr G = tcz::load_group(data("z6.grp"));
        CharacterTable t = tcz::character_table(G);
        auto sys = tcz::stable_dual_system(t, tcz::load_endomorphism(G, data("z6_dbl.endo")));
        REQUIRE(sys.members == std::vector<int>{0, 1, 2, 3, 4, 5});
        REQUIRE(sys.restricted == tcz::SelfMap{0, 2, 4, 0, 2, 4});
    }
    {
        GroupPtr G = tcz::load_group(data("q8.grp"));
        CharacterTable t = tcz::character_table(G);
        auto sys = tcz::stable_dual_system(t, tcz::load_endomorphism(G, data("q8_rot.endo")));
        REQUIRE(sys.members == std::vector<int>{0, 1, 2, 3, 4});
        REQUIRE(sys.restricted == tcz::SelfMap{0, 3, 1, 2, 4});
    }
}

TEST_CASE("character-level zeta functions") {
    struct Case {
        const char* grp;
        const char* endo;
        const char* display;
        std::vector<long long> counts;
    };
    for (const Case& c : {Case{"z6.grp", "z6_neg.endo", "1 / (1 - z)^2 * (1 - z^2)^2", {2, 6, 2, 6}},
                          Case{"z6.grp", "z6_dbl.endo", "1 / (1 - z) * (1 - z^2)", {1, 3, 1, 3}},
                          Case{"s3.grp", "s3_trivial.endo", "1 / (1 - z)", {1, 1, 1, 1}},
                          Case{"s3.grp", "s3_inner.endo", "1 / (1 - z)^3", {3, 3, 3, 3}},
                          Case{"d4.grp", "d4_out.endo", "1 / (1 - z)^3 * (1 - z^2)", {3, 5, 3, 5}},
                          Case{"q8.grp", "q8_rot.endo", "1 / (1 - z)^2 * (1 - z^3)", {2, 2, 5, 2}},
                          Case{"a4.grp", "a4_auto.endo", "1 / (1 - z)^2 * (1 - z^2)", {2, 4, 2, 4}}}) {
        INFO(c.grp << " " << c.endo);
        GroupPtr G = tcz::load_group(data(c.grp));
        CharacterTable t = tcz::character_table(G);
        auto phi = tcz::load_endomorphism(G, data(c.endo));
        auto res = tcz::rt_zeta(t, phi);
        REQUIRE(res.zeta.display() == c.display);
        for (std::size_t i = 0; i < c.counts.size(); ++i)
            REQUIRE(res.counts[i] == Int(c.counts[static_cast<std::size_t>(i)]));
    }
}
