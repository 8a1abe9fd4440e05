#include "cycsig/cli.hpp"
#include "cycsig/gf2mat.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cycsig::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("sigrank") {
    const Run t = run({"sigrank", "-p", "163"});
    CHECK(t.code == 0);
    CHECK(t.out.find("signature rank: 79") != std::string::npos);
    const auto j = run_json({"sigrank", "-p", "163"});
    CHECK(j["rank"] == 79);
    CHECK(j["C_to_Cplus_exp"] == 79);
    CHECK(j["Cplus_to_Csq_exp"] == 2);
    CHECK(run_json({"sigrank", "-p", "2", "-n", "5"})["rank"] == 8);
}

TEST_CASE("sigrank --matrix-out") {
    const auto path = std::filesystem::temp_directory_path() / "cycsig_test_matrix.txt";
    const Run r = run({"sigrank", "-p", "29", "--matrix-out", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    const cycsig::BitMatrix m = cycsig::BitMatrix::read_text(f);
    CHECK(m.rows() == 14);
    CHECK(m.columns() == 14);
    CHECK(cycsig::rank(m) == 11);
    CHECK(m.label(0) == "-1");
    std::filesystem::remove(path);
}

TEST_CASE("periods and augment") {
    const auto p = run_json({"periods", "-p", "163", "-d", "3"});
    CHECK(p["min_poly"]["coefficients"] == "-169,-54,1,1");
    CHECK(p["min_poly"]["text"] == "x^3 + x^2 - 54*x - 169");
    CHECK(p["roots"].size() == 3);
    CHECK(p["coset_to_root"].size() == 3);

    const auto a = run_json({"augment", "-p", "163", "-d", "3", "-u", "a+4", "-u", "a^2-4*a-34"});
    CHECK(a["circular_rank"] == 79);
    CHECK(a["augmented_rank"] == 81);
    CHECK(a["units"].size() == 2);
    CHECK(a["units"][0]["signature"].get<std::string>().size() == 81);
}

TEST_CASE("prop1") {
    const auto j = run_json({"prop1", "-p", "163", "-d", "3", "-u", "a+4", "-u", "a^2-4*a-34", "--bundled-data"});
    CHECK(j["statements"]["b1"]["status"] == "holds");
    CHECK(j["statements"]["1"]["status"] == "fails");
    const auto bare = run_json({"prop1", "-p", "29"});
    CHECK(bare["statements"]["a1"]["status"] == "unknown");
    CHECK(bare["statements"]["6"]["provenance"] == "computed");

    const auto path = std::filesystem::temp_directory_path() / "cycsig_test_parity.csv";
    {
        std::ofstream f(path);
        f << "p,n,h_K,h_minus,h_Kplus,h_strict_Kplus,source\n29,1,odd,odd,odd,odd,bogus\n";
    }
    const Run c = run({"prop1", "-p", "29", "--class-data", path.string()});
    CHECK(c.code == cycsig::cli::kExitContradiction);
    CHECK_FALSE(c.err.empty());
    std::filesystem::remove(path);

    CHECK(run({"prop1", "-p", "29", "-u", "a"}).code == cycsig::cli::kExitInputError);
}

TEST_CASE("oracle-check") {
    const auto j = run_json({"oracle-check", "-p", "163"});
    CHECK(j["mismatches"] == 0);
    CHECK(j["entries"] == 81 * 81);
    CHECK(run({"oracle-check", "-p", "3", "-n", "3"}).code == 0);
}

TEST_CASE("input errors") {
    CHECK(run({"sigrank", "-p", "15"}).code == cycsig::cli::kExitInputError);
    CHECK(run({"sigrank", "-p", "7", "-n", "0"}).code == cycsig::cli::kExitInputError);
    CHECK(run({"sigrank"}).code == cycsig::cli::kExitInputError);
    CHECK(run({}).code == cycsig::cli::kExitInputError);
    CHECK(run({"bogus"}).code == cycsig::cli::kExitInputError);
    CHECK(run({"sigrank", "-p", "7", "--format", "xml"}).code == cycsig::cli::kExitInputError);
    CHECK(run({"periods", "-p", "163", "-d", "5"}).code == cycsig::cli::kExitInputError);
    CHECK(run({"augment", "-p", "163", "-d", "3", "-u", "2a"}).code == cycsig::cli::kExitInputError);
    CHECK(run({"prop1", "-p", "29", "--class-data", "/nonexistent.csv"}).code == cycsig::cli::kExitInputError);
    CHECK(run({"--help"}).code == 0);
}
