#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/cli.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using jacring::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("witten subcommand") {
    Result r = invoke({"witten", "--g", "1", "--taus", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/24\n");

    Result k = invoke({"witten", "--g", "1", "--taus", "0", "--kappa", "1"});
    CHECK(k.code == 0);
    CHECK(k.out == "1/24\n");

    Result bad = invoke({"witten", "--g", "1", "--taus", ""});
    CHECK(bad.code == 1);
}

TEST_CASE("stability subcommand emits the delta table") {
    Result r = invoke({"stability", "--g", "4", "--z", "2", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "stability");
    auto& table = j["result"]["table"];
    REQUIRE(table.size() == 3);
    CHECK(table[0]["delta"] == "0");
    CHECK(table[1]["delta"] == "1");
    CHECK(table[2]["delta"] == "1");
    CHECK(table[1]["phi_v"] == "4/3+2/3*eps");
}

TEST_CASE("obstruction subcommand: negative and positive controls") {
    Result neg = invoke({"obstruction", "--g", "4", "--z", "0", "--zprime", "2", "--json"});
    CHECK(neg.code == 0);
    auto j = nlohmann::json::parse(neg.out);
    CHECK(j["result"]["rings_distinguished"] == true);
    CHECK(j["result"]["result"]["unsat"]["certificate"] ==
          nlohmann::json::array({1, 2, 3}));

    Result pos = invoke({"obstruction", "--g", "4", "--z", "0", "--zprime", "6", "--json"});
    CHECK(pos.code == 0);
    auto p = nlohmann::json::parse(pos.out);
    CHECK(p["result"]["result"]["sat"]["t"] == "1");
    CHECK(p["result"]["result"]["sat"]["b"] == "1/4");
}

TEST_CASE("push subcommand with trace") {
    Result r = invoke({"push", "--g", "4", "--z", "0", "--monomial", "T^4"});
    CHECK(r.code == 0);
    CHECK(r.out == "(24)*1\n");

    Result t = invoke({"push", "--g", "4", "--z", "0", "--monomial", "T^3 K^3", "--trace"});
    CHECK(t.code == 0);
    auto j = nlohmann::json::parse(t.out);
    CHECK(j["result"]["terms"].size() == 3);
    CHECK_FALSE(j["trace"].empty());

    Result norule = invoke({"push", "--g", "4", "--z", "0", "--monomial", "T^4 K^2"});
    CHECK(norule.code == 1);
    CHECK(norule.err.find("NoRule") != std::string::npos);

    Result garbage = invoke({"push", "--g", "4", "--z", "0", "--monomial", "Q^2"});
    CHECK(garbage.code == 1);
}

TEST_CASE("pairing subcommand") {
    Result r = invoke({"pairing", "--g", "4", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["rank"] == 3);
    CHECK(j["result"]["matrix"][0][1] == "0");
}

TEST_CASE("fourier subcommand reports goals") {
    Result r = invoke({"fourier", "--g", "1", "--axioms", "half", "--goal", "half.semiorth_d",
                       "--trace"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["result"]["report"].size() == 1);
    CHECK(j["result"]["report"][0]["verdict"] == "Verified");
    CHECK(j["result"]["report"][0]["sample_replays"] == true);

    Result bad = invoke({"fourier", "--g", "1", "--axioms", "bogus"});
    CHECK(bad.code == 1);
}

TEST_CASE("usage errors exit with code 1 and print the grammar") {
    Result r = invoke({"stability"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--g") != std::string::npos);

    Result unknown = invoke({"frobnicate"});
    CHECK(unknown.code == 1);
}

TEST_CASE("byte-identical reruns") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"obstruction", "--g", "5", "--z", "0", "--zprime", "2",
                                   "--json"},
          std::vector<std::string>{"stability", "--g", "6", "--z", "-3", "--json"},
          std::vector<std::string>{"pairing", "--g", "5", "--json"},
          std::vector<std::string>{"fourier", "--g", "1", "--axioms", "full"}}) {
        Result a = invoke(args);
        Result b = invoke(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
