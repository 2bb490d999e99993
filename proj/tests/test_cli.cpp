#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pp8/cli.hpp"

using namespace pp8;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("is-pp verdicts and exit codes") {
    auto pp = run({"is-pp", "--r", "4", "--coeffs", "0,0,0,0,0,0,0"});
    CHECK(pp.code == 0);
    CHECK(pp.out == "PP\n");

    auto notpp = run({"is-pp", "--r", "7", "--coeffs", "0,1,0,0,0,0,0"});
    CHECK(notpp.code == 1);
    CHECK(notpp.out == "not PP\n");

    auto bad = run({"is-pp", "--r", "4", "--coeffs", "0,0,x,0,0,0,0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("bad coefficient") != std::string::npos);

    auto short_list = run({"is-pp", "--r", "4", "--coeffs", "0,0,0"});
    CHECK(short_list.code == 2);
}

TEST_CASE("hc output modes") {
    auto sym = run({"hc", "--r", "4", "--k", "3"});
    CHECK(sym.code == 0);
    CHECK(sym.out == "a5^3 + a3*a6^2 + a4^2*a7 + a1*a7^2\n");

    auto mixed = run({"hc", "--r", "4", "--k", "3", "--set", "a7=0", "--set", "a6=1"});
    CHECK(mixed.code == 0);
    CHECK(mixed.out == "a5^3 + a3\n");

    // fully concrete: hc(4,15,(0..0)) = 1, log code 15
    auto conc = run({"hc", "--r", "4", "--k", "15", "--set", "a7=0", "--set", "a6=0", "--set",
                     "a5=0", "--set", "a4=0", "--set", "a3=0", "--set", "a2=0", "--set", "a1=0"});
    CHECK(conc.code == 0);
    CHECK(conc.out == "15\n");

    // one free variable with field constants: a1*a7^2 term survives as e^2*a1
    auto uni = run({"hc", "--r", "4", "--k", "3", "--set", "a7=e", "--set", "a6=e^2", "--set",
                    "a5=0", "--set", "a4=0", "--set", "a3=0", "--set", "a2=0"});
    CHECK(uni.code == 0);
    CHECK(uni.out == "e^2*a1\n");

    // two free variables with a proper field constant: rejected
    auto reject = run({"hc", "--r", "4", "--k", "3", "--set", "a7=e"});
    CHECK(reject.code == 2);
}

TEST_CASE("is-exceptional verdicts") {
    auto ex = run({"is-exceptional", "--r", "4", "--coeffs", "0,0,0,0,0,0,0"});
    CHECK(ex.code == 0);
    CHECK(ex.out == "exceptional\n");
    auto not_ex = run({"is-exceptional", "--r", "4", "--coeffs", "0,0,0,0,1,0,0"});
    CHECK(not_ex.code == 1);
}

TEST_CASE("normalize prints a form and witness") {
    // x^8 + x^7 is already in (1,0) shape
    auto res = run({"normalize", "--r", "4", "--coeffs", "1,0,0,0,0,0,0"});
    CHECK(res.code == 0);
    CHECK(res.out.find("normal form: 15 0 0 0 0 0 0") != std::string::npos);
    CHECK(res.out.find("witness:") != std::string::npos);

    auto nine = run({"normalize", "--r", "4", "--coeffs", "e,0,0,0,0,0,0,0,e^2"});
    CHECK(nine.code == 0);
}

TEST_CASE("classify json round-trips and respects the schema") {
    auto res = run({"classify", "--r", "4", "--format", "json"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["r"] == 4);
    CHECK(j["modulus"] == "0x13");
    CHECK(j["classes"].size() == 113);
    CHECK(j["proof_steps"].empty());
    for (const char* key : {"a7", "a6", "a5", "a4", "a3", "a2", "a1"})
        CHECK(j["classes"][0].contains(key));
    // round trip
    CHECK(nlohmann::json::parse(j.dump()) == j);

    auto filt = run({"classify", "--r", "4", "--format", "json", "--frobenius-reduce"});
    auto jf = nlohmann::json::parse(filt.out);
    CHECK(jf["classes"].size() == 39);
}

TEST_CASE("classify --out writes a timestamped file") {
    std::string path = "pp8_test_out.json";
    auto res = run({"classify", "--r", "4", "--format", "json", "--out", path});
    CHECK(res.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    CHECK(j["classes"].size() == 113);
    CHECK(j.contains("generated_at"));
    std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
    auto res = run({"verify", "--r", "7"});
    CHECK(res.code == 0);
    CHECK(res.out.find("OVERALL: PASS") != std::string::npos);

    auto bad = run({"verify", "--r", "4"});
    CHECK(bad.code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"hc", "--r", "4"}).code == 2);  // missing --k
    CHECK(run({"classify", "--r", "12"}).code == 2);
}

TEST_SUITE_END();
