#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <map>

#include "tcz/chartable.hpp"
#include "tcz/intertwiner.hpp"

using namespace tcz;

namespace {

std::string data(const std::string& name) { return std::string(TCZ_DATA_DIR) + "/" + name; }

const double root3 = std::sqrt(3.0);

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("representation files parse and match their claimed characters") {
    auto G = load_group(data("s3.grp"));
    auto T = character_table(G);
    auto rho = load_representation(G, T, data("s3_std.rep"));
    REQUIRE(rho.character_index == 2);
    REQUIRE(rho.dim == 2);
    REQUIRE(close(rho.at(0).trace(), 2.0));
    // element 1 is the reflection a, element 2 the rotation b
    REQUIRE(close(rho.at(1).trace(), 0.0));
    REQUIRE(close(rho.at(2).trace(), -1.0));
    REQUIRE_NOTHROW(validate_representation(rho, T));

    auto D = load_group(data("d4.grp"));
    auto TD = character_table(D);
    REQUIRE_NOTHROW(load_representation(D, TD, data("d4_std.rep")));
    auto Q = load_group(data("q8.grp"));
    auto TQ = character_table(Q);
    auto rq = load_representation(Q, TQ, data("q8_std.rep"));
    // i and j anticommute and square to the same central element
    REQUIRE((rq.at(1) * rq.at(2) + rq.at(2) * rq.at(1)).cwiseAbs().maxCoeff() < 1e-12);
    auto A = load_group(data("a4.grp"));
    auto TA = character_table(A);
    auto ra = load_representation(A, TA, data("a4_std.rep"));
    REQUIRE(ra.dim == 3);
}

TEST_CASE("malformed representation files are rejected") {
    auto G = load_group(data("s3.grp"));
    auto T = character_table(G);

    REQUIRE_THROWS_AS(parse_representation(G, "dim: 2\ngen a: 1 0 0 1\ngen b: 1 0 0 1\n"),
                      ParseError);  // no character line
    REQUIRE_THROWS_AS(parse_representation(G, "character: 2\ngen a: 1 0 0 1\n"),
                      ParseError);  // dim must come first
    REQUIRE_THROWS_AS(
        parse_representation(G, "character: 2\ndim: 2\ngen a: 1 0 0 -1\ngen c: 1 0 0 1\n"),
        ParseError);  // unknown generator
    REQUIRE_THROWS_AS(parse_representation(G, "character: 2\ndim: 2\ngen a: 1 0 0\ngen b: 1 0 0 1\n"),
                      ParseError);  // wrong entry count
    REQUIRE_THROWS_AS(
        parse_representation(G, "character: 2\ndim: 2\ngen a: 1 0 0 x\ngen b: 1 0 0 1\n"),
        ParseError);  // junk entry
    REQUIRE_THROWS_AS(
        parse_representation(G, "character: 2\ndim: 2\ngen a: 1 0 0 (1,\ngen b: 1 0 0 1\n"),
        ParseError);  // broken complex literal
    REQUIRE_THROWS_AS(parse_representation(G, "character: 2\ndim: 2\ngen a: 1 0 0 -1\n"),
                      ParseError);  // generator b missing

    // matrices that satisfy no relation of the group
    REQUIRE_THROWS_AS(
        parse_representation(G, "character: 2\ndim: 2\ngen a: 1 1 0 1\ngen b: 1 0 1 1\n"),
        VerificationFailed);

    // valid matrices under a wrong label: claimed character has degree 1
    std::string text = io_detail::read_file(data("s3_std.rep"));
    auto pos = text.find("character: 2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 12, "character: 0");
    auto mislabeled = parse_representation(G, text);
    REQUIRE_THROWS_AS(validate_representation(mislabeled, T), VerificationFailed);

    auto bad_index = parse_representation(G, [&] {
        std::string t = io_detail::read_file(data("s3_std.rep"));
        t.replace(t.find("character: 2"), 12, "character: 7");
        return t;
    }());
    REQUIRE_THROWS_AS(validate_representation(bad_index, T), VerificationFailed);
}

TEST_CASE("conjugation endomorphisms intertwine through the conjugating matrix") {
    auto G = load_group(data("s3.grp"));
    auto T = character_table(G);
    auto rho = load_representation(G, T, data("s3_std.rep"));

    auto conj_a = load_endomorphism(G, data("s3_conj_a.endo"));
    auto S = simple_intertwiner(rho, conj_a);
    // S is rho(a) up to scale; normalization makes the top left entry 1
    REQUIRE(close(S(0, 0), 1.0, 1e-12));
    REQUIRE(close(S(0, 1), 0.0, 1e-12));
    REQUIRE(close(S(1, 0), 0.0, 1e-12));
    REQUIRE(close(S(1, 1), -1.0, 1e-12));
    REQUIRE(intertwiner_residual(rho, conj_a, S) < 1e-12);

    auto inner = load_endomorphism(G, data("s3_inner.endo"));
    auto Sb = simple_intertwiner(rho, inner);
    // conjugation by b gives S proportional to rho(b); scaled by its corner
    REQUIRE(close(Sb(0, 0), 1.0, 1e-9));
    REQUIRE(close(Sb(0, 1), root3, 1e-9));
    REQUIRE(close(Sb(1, 0), -root3, 1e-9));
    REQUIRE(close(Sb(1, 1), 1.0, 1e-9));
    REQUIRE(intertwiner_residual(rho, inner, Sb) < 1e-9);

    // the trace function of S is constant on twisted classes
    auto f = twisted_class_function(rho, S);
    auto tw = twisted_classes(conj_a);
    for (int g = 0; g < G->order(); ++g) {
        int rep = tw.reps[static_cast<std::size_t>(tw.class_of[static_cast<std::size_t>(g)])];
        REQUIRE(close(f[static_cast<std::size_t>(g)], f[static_cast<std::size_t>(rep)], 1e-12));
    }
    // values on the three twisted classes: identity class 0, class of a, class of ab
    REQUIRE(close(f[0], 0.0, 1e-12));
    REQUIRE(close(f[1], 2.0, 1e-12));
    REQUIRE(close(f[3], -1.0, 1e-12));
}

TEST_CASE("collapsing endomorphisms admit no intertwiner on a faithful irreducible") {
    auto G = load_group(data("s3.grp"));
    auto T = character_table(G);
    auto rho = load_representation(G, T, data("s3_std.rep"));
    auto trivial = load_endomorphism(G, data("s3_trivial.endo"));
    REQUIRE(intertwiner_space(rho, trivial).empty());
    REQUIRE_THROWS_AS(simple_intertwiner(rho, trivial), NoIntertwiner);
}

TEST_CASE("a reducible representation has too many intertwiners") {
    auto G = load_group(data("z2.grp"));
    Representation doubled;
    doubled.G = G;
    doubled.character_index = 0;
    doubled.dim = 2;
    doubled.images.assign(2, Eigen::MatrixXcd::Identity(2, 2));
    auto id = identity_endomorphism(G);
    REQUIRE(intertwiner_space(doubled, id).size() == 4);
    REQUIRE_THROWS_AS(simple_intertwiner(doubled, id), NonSimpleIntertwiner);
}

TEST_CASE("mismatched groups are rejected") {
    auto G = load_group(data("s3.grp"));
    auto H = load_group(data("s3.grp"));
    auto T = character_table(G);
    auto rho = load_representation(G, T, data("s3_std.rep"));
    auto phi = load_endomorphism(H, data("s3_conj_a.endo"));
    REQUIRE_THROWS_AS(intertwiner_space(rho, phi), BaseMismatch);
    auto TH = character_table(H);
    REQUIRE_THROWS_AS(validate_representation(rho, TH), BaseMismatch);
}

TEST_CASE("fixed characters induce a basis of twisted class functions") {
    struct Case {
        const char* grp;
        const char* endo;
        const char* rep;  // nullptr when all fixed characters are linear
        int expect_r;
    };
    const Case cases[] = {
        {"s3.grp", "s3_conj_a.endo", "s3_std.rep", 3},
        {"s3.grp", "s3_inner.endo", "s3_std.rep", 3},
        {"s3.grp", "s3_trivial.endo", nullptr, 1},
        {"d4.grp", "d4_out.endo", "d4_std.rep", 3},
        {"q8.grp", "q8_rot.endo", "q8_std.rep", 2},
        {"a4.grp", "a4_auto.endo", "a4_std.rep", 2},
        {"z6.grp", "z6_neg.endo", nullptr, 2},
        {"z6.grp", "z6_dbl.endo", nullptr, 1},
    };
    for (const auto& c : cases) {
        INFO(c.grp << " with " << c.endo);
        auto G = load_group(data(c.grp));
        auto T = character_table(G);
        auto phi = load_endomorphism(G, data(c.endo));
        std::map<int, Representation> reps;
        if (c.rep) {
            auto rho = load_representation(G, T, data(c.rep));
            reps.emplace(rho.character_index, rho);
        }
        auto report = twisted_basis_check(T, phi, reps);
        REQUIRE(report.r == c.expect_r);
        REQUIRE(static_cast<int>(report.fixed_characters.size()) == c.expect_r);
        REQUIRE(report.rank == c.expect_r);
        REQUIRE(report.complete);
        REQUIRE(report.max_class_deviation < 1e-9);
        for (double r : report.residuals) REQUIRE(r < 1e-9);
    }
}

TEST_CASE("the basis check demands matrices for higher-degree characters") {
    auto G = load_group(data("a4.grp"));
    auto T = character_table(G);
    auto phi = load_endomorphism(G, data("a4_auto.endo"));
    REQUIRE_THROWS_AS(twisted_basis_check(T, phi, {}), MissingRepresentationData);
}
