#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tcz/cli.hpp"
#include "tcz/rational_fn.hpp"

using namespace tcz;
using Json = nlohmann::ordered_json;

namespace {

std::string data(const std::string& name) { return std::string(TCZ_DATA_DIR) + "/" + name; }

struct RunResult {
    int code = -1;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = tcz::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool has_line(const std::string& text, const std::string& line) {
    return text.find(line + "\n") != std::string::npos &&
           (text.rfind(line + "\n", 0) == 0 ||
            text.find("\n" + line + "\n") != std::string::npos);
}

}  // namespace

TEST_CASE("zeta on the inner automorphism pair prints the cube closed form") {
    auto r = run_cli({"zeta", data("s3.grp"), data("s3_inner.endo")});
    REQUIRE(r.code == 0);
    REQUIRE(r.err.empty());
    REQUIRE(has_line(r.out, "counts: 3 3 3 3 3 3 3 3 3 3 3 3"));
    REQUIRE(has_line(r.out, "zeta: 1 / (1 - z)^3"));
    REQUIRE(has_line(r.out, "residues: 0 0 0 0 0 0 0 0 0 0 0 0"));
}

TEST_CASE("zeta check flags succeed across the bundled pairs") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"z6.grp", "z6_neg.endo"},   {"s3.grp", "s3_inner.endo"},
        {"s3.grp", "s3_conj_a.endo"}, {"s3.grp", "s3_trivial.endo"},
        {"d4.grp", "d4_out.endo"},   {"q8.grp", "q8_rot.endo"},
        {"a4.grp", "a4_auto.endo"},  {"z6.grp", "z6_dbl.endo"}};
    for (const auto& [g, e] : pairs) {
        INFO(g << " " << e);
        auto r = run_cli({"zeta", data(g), data(e), "--check-congruences", "--check-fe"});
        REQUIRE(r.code == 0);
        REQUIRE(has_line(r.out, "congruences: ok"));
        REQUIRE(has_line(r.out, "functional equation: ok"));
    }
}

TEST_CASE("shift emits the labeled zetas and the failure flags") {
    auto r = run_cli({"shift", "--base", data("s3.grp")});
    REQUIRE(r.code == 0);
    REQUIRE(has_line(r.out, "R: 1 / (1 - 6*z)"));
    REQUIRE(has_line(r.out, "RT: 1 / (1 - 3*z)"));
    REQUIRE(has_line(r.out, "RTf: 1 / (1 - 2*z)"));
    REQUIRE(has_line(r.out, "R counts: 6 36 216 1296 7776 46656 279936 1679616"));
    REQUIRE(has_line(r.out, "R residues: 0 0 0 0 0 0 0 0"));
    REQUIRE(has_line(r.out, "certificate: moves=200 reductions=8 ok=true"));
    REQUIRE(has_line(r.out, "TBFT fails: true"));
    REQUIRE(has_line(r.out, "TBFTf fails: true"));

    auto abelian = run_cli({"shift", "--base", data("z4.grp")});
    REQUIRE(abelian.code == 0);
    REQUIRE(has_line(abelian.out, "R: 1 / (1 - 4*z)"));
    REQUIRE(has_line(abelian.out, "RT: 1 / (1 - 4*z)"));
    REQUIRE(has_line(abelian.out, "RTf: 1 / (1 - 4*z)"));
    REQUIRE(has_line(abelian.out, "TBFT fails: false"));
    REQUIRE(has_line(abelian.out, "TBFTf fails: false"));
}

TEST_CASE("abelian prints counts, closed forms, and quotient stages") {
    auto doubling = run_cli({"abelian", "--matrix", "2"});
    REQUIRE(doubling.code == 0);
    REQUIRE(has_line(doubling.out, "counts: 1 3 7 15 31 63 127 255 511 1023 2047 4095"));
    REQUIRE(has_line(doubling.out, "zeta: (1 - z) / (1 - 2*z)"));
    REQUIRE(has_line(doubling.out, "lefschetz: (1 - 2*z) / (1 - z)"));

    auto fib = run_cli({"abelian", "--matrix", "2 1; 1 1"});
    REQUIRE(fib.code == 0);
    REQUIRE(has_line(fib.out, "size: 2"));
    REQUIRE(has_line(fib.out, "counts: 1 5 16 45 121 320 841 2205 5776 15125 39601 103680"));
    REQUIRE(has_line(fib.out, "zeta: (1 - z)^2 / (1 - 3*z + z^2)"));

    auto prof = run_cli({"abelian", "--matrix", "2", "--profinite", "3"});
    REQUIRE(prof.code == 0);
    REQUIRE(has_line(prof.out, "profinite depth: 3"));
    REQUIRE(has_line(prof.out, "stage 1: modulus 1 agree 1 counts 1 1 1 1 1 1 1 1 1 1 1 1"));
    REQUIRE(has_line(prof.out, "stage 3: modulus 21 agree 3 counts 1 3 7 3 1 21 1 3 7 3 1 21"));
}

TEST_CASE("abelian exits with code 2 once an iterate has infinitely many classes") {
    auto r = run_cli({"abelian", "--matrix", "-1"});
    REQUIRE(r.code == 2);
    REQUIRE(has_line(r.out, "counts: 2 inf 2 inf 2 inf 2 inf 2 inf 2 inf"));
    REQUIRE(r.err.find("InfiniteReidemeister") != std::string::npos);
    REQUIRE(r.err.find("iterate 2") != std::string::npos);
    REQUIRE(r.out.find("zeta:") == std::string::npos);

    auto rot = run_cli({"abelian", "--matrix", "0 -1; 1 0"});
    REQUIRE(rot.code == 2);
    REQUIRE(has_line(rot.out, "counts: 2 4 2 inf 2 4 2 inf 2 4 2 inf"));
    REQUIRE(rot.err.find("iterate 4") != std::string::npos);
}

TEST_CASE("tbft prints three equal rows and a verdict") {
    auto r = run_cli({"tbft", data("q8.grp"), data("q8_rot.endo"), "--max-n", "6"});
    REQUIRE(r.code == 0);
    REQUIRE(has_line(r.out, "R counts: 2 2 5 2 2 5"));
    REQUIRE(has_line(r.out, "trace counts: 2 2 5 2 2 5"));
    REQUIRE(has_line(r.out, "character counts: 2 2 5 2 2 5"));
    REQUIRE(has_line(r.out, "agree: true"));
}

TEST_CASE("chartable prints exact integer and cyclotomic values") {
    auto s3 = run_cli({"chartable", data("s3.grp")});
    REQUIRE(s3.code == 0);
    REQUIRE(has_line(s3.out, "class sizes: 1 3 2"));
    REQUIRE(has_line(s3.out, "degrees: 1 1 2"));
    REQUIRE(has_line(s3.out, "chi 0: 1 1 1"));
    REQUIRE(has_line(s3.out, "chi 2: 2 0 -1"));

    // the nontrivial linear characters of a4 take primitive cube root values,
    // written in w, a primitive 6th root of unity
    auto a4 = run_cli({"chartable", data("a4.grp")});
    REQUIRE(a4.code == 0);
    REQUIRE(has_line(a4.out, "exponent: 6"));
    REQUIRE(a4.out.find("-1 + w") != std::string::npos);
    REQUIRE(has_line(a4.out, "chi 3: 3 0 -1 0"));
}

TEST_CASE("classes and reid list the orbit structure") {
    auto d4 = run_cli({"classes", data("d4.grp")});
    REQUIRE(d4.code == 0);
    REQUIRE(has_line(d4.out, "order: 8"));
    REQUIRE(has_line(d4.out, "classes: 5"));
    REQUIRE(has_line(d4.out, "class 0: size 1 order 1 rep e"));

    auto reid = run_cli({"reid", data("s3.grp"), data("s3_conj_a.endo"), "--max-n", "4"});
    REQUIRE(reid.code == 0);
    REQUIRE(has_line(reid.out, "twisted classes: 3"));
    REQUIRE(has_line(reid.out, "R counts: 3 3 3 3"));
    // the three twisted classes partition all six elements
    REQUIRE(has_line(reid.out, "class 0: size 3 rep e"));
    REQUIRE(has_line(reid.out, "class 1: size 1 rep a"));
    REQUIRE(has_line(reid.out, "class 2: size 2 rep a b"));
}

TEST_CASE("rt-zeta reports the stable dual system") {
    auto r = run_cli({"rt-zeta", data("z6.grp"), data("z6_neg.endo")});
    REQUIRE(r.code == 0);
    REQUIRE(has_line(r.out, "stable characters: 0 1 2 3 4 5"));
    REQUIRE(has_line(r.out, "counts: 2 6 2 6 2 6 2 6 2 6 2 6"));
    REQUIRE(has_line(r.out, "zeta: 1 / (1 - z)^2 * (1 - z^2)^2"));
    REQUIRE(has_line(r.out, "primitive orbits: 4"));
    REQUIRE(has_line(r.out, "periodic points: 6"));

    // a trivial endomorphism collapses everything onto the trivial character
    auto trivial = run_cli({"rt-zeta", data("s3.grp"), data("s3_trivial.endo")});
    REQUIRE(trivial.code == 0);
    REQUIRE(has_line(trivial.out, "stable characters: 0 1"));
    REQUIRE(has_line(trivial.out, "zeta: 1 / (1 - z)"));
}

TEST_CASE("json reports carry the schema tag and exact values") {
    auto r = run_cli({"--json", "zeta", data("s3.grp"), data("s3_inner.endo")});
    REQUIRE(r.code == 0);
    auto doc = Json::parse(r.out);
    REQUIRE(doc["schema"] == 1);
    REQUIRE(doc["command"] == "zeta");
    REQUIRE(doc["status"] == "ok");
    REQUIRE(doc["results"]["counts"].size() == 12);
    for (const auto& c : doc["results"]["counts"]) REQUIRE(c == 3);
    REQUIRE(doc["results"]["zeta"]["display"] == "1 / (1 - z)^3");

    // the display string re-parses to the stored normalized coefficients
    auto parsed = RationalFunction::parse(doc["results"]["zeta"]["display"].get<std::string>());
    const auto& num = doc["results"]["zeta"]["num"];
    const auto& den = doc["results"]["zeta"]["den"];
    REQUIRE(static_cast<int>(num.size()) == parsed.num.degree() + 1);
    REQUIRE(static_cast<int>(den.size()) == parsed.den.degree() + 1);
    for (int i = 0; i <= parsed.num.degree(); ++i)
        REQUIRE(Int(num[static_cast<std::size_t>(i)].get<std::int64_t>()) == parsed.num.coeff(i));
    for (int i = 0; i <= parsed.den.degree(); ++i)
        REQUIRE(Int(den[static_cast<std::size_t>(i)].get<std::int64_t>()) == parsed.den.coeff(i));

    // the flag may follow the subcommand as well
    auto trailing = run_cli({"zeta", data("s3.grp"), data("s3_inner.endo"), "--json"});
    REQUIRE(trailing.code == 0);
    REQUIRE(trailing.out == r.out);
}

TEST_CASE("json error reports keep the partial results and the error code") {
    auto r = run_cli({"--json", "abelian", "--matrix", "-1"});
    REQUIRE(r.code == 2);
    auto doc = Json::parse(r.out);
    REQUIRE(doc["schema"] == 1);
    REQUIRE(doc["status"] == "error");
    REQUIRE(doc["error"]["code"] == "InfiniteReidemeister");
    REQUIRE(doc["error"]["message"].get<std::string>().find("iterate 2") != std::string::npos);
    REQUIRE(doc["results"]["counts"][0] == 2);
    REQUIRE(doc["results"]["counts"][1].is_null());
}

TEST_CASE("json shift report mirrors every text field") {
    auto r = run_cli({"--json", "shift", "--base", data("q8.grp")});
    REQUIRE(r.code == 0);
    auto doc = Json::parse(r.out);
    REQUIRE(doc["results"]["order"] == 8);
    REQUIRE(doc["results"]["classes"] == 5);
    REQUIRE(doc["results"]["abelianization"] == 4);
    REQUIRE(doc["results"]["r_counts"][1] == 64);
    REQUIRE(doc["results"]["r_zeta"]["display"] == "1 / (1 - 8*z)");
    REQUIRE(doc["results"]["tbft_fails"] == true);
    REQUIRE(doc["results"]["tbft_f_fails"] == true);
    REQUIRE(doc["results"]["certificate"]["ok"] == true);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::vector<std::string>> cases = {
        {"zeta", data("d4.grp"), data("d4_out.endo")},
        {"--json", "chartable", data("a4.grp")},
        {"shift", "--base", data("s3.grp"), "--seed", "42"},
        {"--json", "abelian", "--matrix", "2 1; 1 1", "--profinite", "2"}};
    for (const auto& args : cases) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        REQUIRE(first.code == second.code);
        REQUIRE(first.out == second.out);
        REQUIRE(first.err == second.err);
    }
}

TEST_CASE("usage problems exit with code 1 and print the schema") {
    auto none = run_cli({});
    REQUIRE(none.code == 1);
    REQUIRE(none.err.find("Subcommands:") != std::string::npos);

    auto missing = run_cli({"zeta"});
    REQUIRE(missing.code == 1);
    REQUIRE(missing.err.find("Usage: tczeta zeta") != std::string::npos);

    auto unknown = run_cli({"frobnicate"});
    REQUIRE(unknown.code == 1);

    auto badopt = run_cli({"zeta", data("s3.grp"), data("s3_inner.endo"), "--bogus"});
    REQUIRE(badopt.code == 1);

    auto help = run_cli({"--help"});
    REQUIRE(help.code == 0);
    REQUIRE(help.out.find("Subcommands:") != std::string::npos);
}

TEST_CASE("bad inputs exit with code 1 and a parse error") {
    auto missing_file = run_cli({"classes", data("nope.grp")});
    REQUIRE(missing_file.code == 1);
    REQUIRE(missing_file.err.find("ParseError") != std::string::npos);

    auto bad_entry = run_cli({"abelian", "--matrix", "2 x; 1 1"});
    REQUIRE(bad_entry.code == 1);
    REQUIRE(bad_entry.err.find("bad matrix entry") != std::string::npos);

    auto ragged = run_cli({"abelian", "--matrix", "1 2 3; 4 5 6"});
    REQUIRE(ragged.code == 1);
    REQUIRE(ragged.err.find("square") != std::string::npos);

    auto negative = run_cli({"reid", data("s3.grp"), data("s3_inner.endo"), "--max-n", "-2"});
    REQUIRE(negative.code == 1);
}

TEST_CASE("the installed binary behaves like the in-process entry point") {
    auto capture = [](const std::string& cmdline) {
        std::string output;
        FILE* pipe = popen((cmdline + " 2>/dev/null").c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
        int status = pclose(pipe);
        int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
        return std::pair<int, std::string>(code, output);
    };

    auto [ok_code, ok_out] =
        capture(std::string(TCZ_CLI_PATH) + " zeta " + data("s3.grp") + " " + data("s3_inner.endo"));
    REQUIRE(ok_code == 0);
    REQUIRE(ok_out.find("1 / (1 - z)^3") != std::string::npos);
    auto expected = run_cli({"zeta", data("s3.grp"), data("s3_inner.endo")});
    REQUIRE(ok_out == expected.out);

    auto [bad_code, bad_out] = capture(std::string(TCZ_CLI_PATH) + " abelian --matrix ' -1'");
    REQUIRE(bad_code == 2);
    REQUIRE(bad_out.find("counts: 2 inf") != std::string::npos);
}
