#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = orthoieq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> records(const std::string& text) {
    std::vector<Json> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) rows.push_back(Json::parse(line));
    }
    return rows;
}

Json rational(const char* num, const char* den) { return Json{{"num", num}, {"den", den}}; }

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("moments of the Laguerre weight") {
    const auto r = run({"moments", "--preset", "laguerre", "--count", "5", "--mode", "exact"});
    REQUIRE(r.code == 0);
    const auto rows = records(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["source"] == "analytic");
    const Json want = Json::array({rational("1", "1"), rational("1", "1"), rational("2", "1"), rational("6", "1"),
                                   rational("24", "1")});
    CHECK(rows[0]["moments"] == want);
}

TEST_CASE("moments csv") {
    const auto r = run({"moments", "--preset", "chebyshev-u2-add", "--count", "3", "--mode", "exact", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,value\n0,1\n1,1/4\n2,1/8\n");
}

TEST_CASE("poly: Laguerre first degree in exact mode") {
    const auto r = run({"poly", "--preset", "laguerre", "-n", "1", "--mode", "exact"});
    REQUIRE(r.code == 0);
    const auto rows = records(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["coefficients"] == Json::array({rational("2", "1"), rational("-1", "1")}));
    CHECK(rows[0]["G"] == rational("2", "1"));
    CHECK(rows[0]["det_B"] == rational("1", "1"));
    CHECK(rows[0]["verification"]["pass"] == true);
}

TEST_CASE("poly: degree ranges emit one record per degree") {
    const auto r = run({"poly", "--preset", "laguerre", "--gamma", "2", "-n", "0:4", "--mode", "exact"});
    REQUIRE(r.code == 0);
    const auto rows = records(r.out);
    REQUIRE(rows.size() == 5);
    for (std::size_t n = 0; n < rows.size(); ++n) CHECK(rows[n]["degree"] == n);
}

TEST_CASE("poly: contour weight in float mode") {
    const auto r = run({"poly", "--contour", "-n", "2", "--precision", "30"});
    REQUIRE(r.code == 0);
    const auto rows = records(r.out);
    REQUIRE(rows.size() == 1);
    const Json& c = rows[0]["coefficients"];
    REQUIRE(c.size() == 3);
    CHECK(c[0]["re"] == "1");
    CHECK(c[1]["re"] == "0");
    CHECK(c[2]["re"] == "-3");
    CHECK(rows[0]["precision"] == 30);
}

TEST_CASE("poly: pretty output") {
    const auto r = run({"poly", "--preset", "laguerre", "-n", "2", "--mode", "exact", "--format", "pretty"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("P_2(x) = 0.5 x^2 - 3 x + 3") != std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("poly: multiplicative variant with the full pattern") {
    const auto r = run({"poly", "--preset", "jacobi-mult", "--p", "2", "--q", "3/2", "-n", "2", "--variant",
                        "multiplicative", "--mode", "exact"});
    REQUIRE(r.code == 0);
    const auto rows = records(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["coefficients"] ==
          Json::array({rational("3", "1"), rational("-16", "1"), rational("16", "1")}));
}

TEST_CASE("poly: enumeration lists every pattern") {
    const auto r = run({"poly", "--preset", "uniform-symmetric", "-n", "3", "--variant", "multiplicative",
                        "--enumerate", "--mode", "exact"});
    REQUIRE(r.code == 0);
    const auto rows = records(r.out);
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 0; i < 8; ++i) CHECK(rows[i].contains("pattern"));
    CHECK(rows[8]["patterns"] == 8);
    CHECK(rows[8]["distinct_solutions"] == 8);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"poly", "--expr", "exp(-x)*(1+x)", "--interval", "0", "inf", "-n", "0:3",
                                        "--precision", "30"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("precision comes from the flag, then the environment") {
    ::setenv("ORTHOIEQ_PRECISION", "24", 1);
    const auto env = run({"moments", "--preset", "laguerre", "--count", "2"});
    REQUIRE(env.code == 0);
    CHECK(records(env.out)[0]["precision"] == 24);
    const auto flag = run({"moments", "--preset", "laguerre", "--count", "2", "--precision", "40"});
    CHECK(records(flag.out)[0]["precision"] == 40);
    ::setenv("ORTHOIEQ_PRECISION", "bogus", 1);
    CHECK(run({"moments", "--preset", "laguerre", "--count", "2"}).code == orthoieq::cli::kConfigError);
    ::unsetenv("ORTHOIEQ_PRECISION");
    CHECK(records(run({"moments", "--preset", "laguerre", "--count", "2"}).out)[0]["precision"] == 50);
}

TEST_CASE("configuration errors exit with 2") {
    CHECK(run({"moments", "--preset", "laguerre", "--count", "2", "--precision", "10"}).code ==
          orthoieq::cli::kConfigError);
    CHECK(run({"poly", "--preset", "nope", "-n", "1"}).code == orthoieq::cli::kConfigError);
    CHECK(run({"poly", "--expr", "x^^2", "--interval", "0", "1", "-n", "1"}).code == orthoieq::cli::kConfigError);
    CHECK(run({"poly", "--preset", "laguerre", "--gamma", "1/2", "-n", "1"}).code == orthoieq::cli::kConfigError);
    CHECK(run({"poly", "--preset", "laguerre", "-n", "1", "--enumerate"}).code == orthoieq::cli::kConfigError);
    CHECK(run({"frobnicate"}).code == orthoieq::cli::kConfigError);
}

TEST_CASE("numeric errors exit with 3") {
    const auto singular = run({"poly", "--preset", "uniform-symmetric", "-n", "1", "--mode", "exact"});
    CHECK(singular.code == orthoieq::cli::kNumericError);
    CHECK_FALSE(singular.err.empty());
    // A constant weight on a half line diverges.
    CHECK(run({"poly", "--expr", "1", "--interval", "0", "inf", "-n", "1"}).code == orthoieq::cli::kNumericError);
    CHECK(run({"poly", "--preset", "laguerre", "-n", "1", "--variant", "multiplicative", "--mode", "exact"}).code ==
          orthoieq::cli::kNumericError);
}

TEST_CASE("verify round-trips poly output and rejects perturbations") {
    const auto poly = run({"poly", "--preset", "laguerre", "-n", "1:3", "--mode", "exact"});
    REQUIRE(poly.code == 0);
    const auto good = temp_file("orthoieq_cli_good.jsonl", poly.out);
    const auto ok = run({"verify", "--preset", "laguerre", "--mode", "exact", "--poly-file", good.string()});
    CHECK(ok.code == 0);
    const auto rows = records(ok.out);
    REQUIRE(rows.size() == 3);
    for (const Json& row : rows) CHECK(row["verification"]["pass"] == true);

    const auto bad = temp_file("orthoieq_cli_bad.jsonl", "[2, -0.999]\n");
    const auto fail = run({"verify", "--preset", "laguerre", "--poly-file", bad.string()});
    CHECK(fail.code == orthoieq::cli::kVerificationFailure);
    CHECK(records(fail.out)[0]["verification"]["pass"] == false);

    const auto junk = temp_file("orthoieq_cli_junk.jsonl", "{not json\n");
    CHECK(run({"verify", "--preset", "laguerre", "--poly-file", junk.string()}).code == orthoieq::cli::kConfigError);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
    std::filesystem::remove(junk);
}

TEST_CASE("verify csv lists residuals per sample") {
    const auto file = temp_file("orthoieq_cli_csv.jsonl", "[2,-1]\n");
    const auto r = run({"verify", "--preset", "laguerre", "--mode", "exact", "--poly-file", file.string(), "--format",
                        "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "degree,sample,residual,pass");
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        ++lines;
        CHECK(line.rfind("1,", 0) == 0);
        CHECK(line.find(",0,true") != std::string::npos);
    }
    CHECK(lines == 7);
    std::filesystem::remove(file);
}
