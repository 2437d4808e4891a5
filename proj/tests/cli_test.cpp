#include <sstream>

#include "doctest.h"
#include "ek7/cli.hpp"
#include "json.hpp"

using namespace ek7;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    CliResult r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("dedekind command") {
    CliResult r = run({"dedekind", "3", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "D(3,5) = 1/28\n");
    CHECK(run({"dedekind", "3", "1"}).out == "D(3,1) = -1/28\n");
    CHECK(run({"dedekind", "1", "1"}).out == "D(1,1) = 0\n");

    json j = run_json({"dedekind", "3", "5"});
    CHECK(j["command"] == "dedekind");
    CHECK(j["inputs"]["p"] == 3);
    CHECK(j["inputs"]["q"] == 5);
    CHECK(j["result"]["type"] == "rational");
    CHECK(j["result"]["value"] == "1/28");
    CHECK(j["mode"] == "exact");
}

TEST_CASE("ek command") {
    CliResult r = run({"ek", "3", "1", "1", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "ek(M_{(3,1),(1,3)}) = 1093/1120 (= -27/1120 mod 1)\n");

    json j = run_json({"ek", "3", "1", "1", "3"});
    CHECK(j["result"]["type"] == "qmodz");
    CHECK(j["result"]["value"] == "1093/1120");
    CHECK(j["result"]["symmetric"] == "-27/1120");
    CHECK(j["mode"] == "exact");

    // Identical rational strings in both formats.
    CHECK(r.out.find(j["result"]["value"].get<std::string>()) != std::string::npos);
    CHECK(r.out.find(j["result"]["symmetric"].get<std::string>()) != std::string::npos);

    CHECK(run_json({"ek", "1", "1", "3", "5"})["result"]["value"] == "31/32");
}

TEST_CASE("invalid inputs give usage errors") {
    CHECK(run({"ek", "1", "1", "1", "1"}).code == 1);
    CHECK(run({"dedekind", "4", "3"}).code == 1);
    CHECK(run({"dedekind", "3"}).code == 1);
    CHECK(run({"bundle", "mu", "4", "3"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"dedekind", "3", "5", "--precision", "32"}).code == 1);
}

TEST_CASE("qform and tinv commands") {
    CHECK(run({"qform", "3", "1", "1", "3", "1"}).out == "q_M(1) = 11/20 (= -9/20 mod 1)\n");
    CHECK(run({"tinv", "3", "1", "1", "3", "0"}).out == "t_M(0) = 0\n");
    json t = run_json({"tinv", "3", "1", "1", "3", "1"});
    CHECK(t["result"]["type"] == "qmodz");
    // 12t = q mod Z: t = -3/80 = 77/80 mod 1.
    CHECK(t["result"]["value"] == "77/80");
    CHECK(run({"qform", "3", "1", "3", "5", "1"}).code == 1);  // gcd(p-,p+) = 3
}

TEST_CASE("bundle commands") {
    CHECK(run({"bundle", "mu", "4", "2"}).out == "mu(E_{4,2}) = 1/32\n");
    CHECK(run({"bundle", "q", "4", "2", "1"}).out == "q_{E_{4,2}}(1) = 1/4\n");
    json j = run_json({"bundle", "mu", "165", "5"});
    CHECK(j["result"]["value"] == "17/56");
}

TEST_CASE("classify command") {
    json j = run_json({"classify", "4"});
    CHECK(j["command"] == "classify");
    CHECK(j["result"]["type"] == "report");
    CHECK(j["result"]["exotic_count"] == 18);
    CHECK(j["result"]["oriented_solutions"]["residues"].empty());
    CHECK(j["result"]["reversing_solutions"]["residues"].empty());
    CHECK_FALSE(j["result"]["oriented_possible"].get<bool>());

    json range = run_json({"classify", "1", "--range", "3"});
    CHECK(range.is_array());
    CHECK(range.size() == 3);
    CHECK(range[1]["result"]["exotic_count"] == 27);

    CliResult text = run({"classify", "5"});
    CHECK(text.out.find("a = +/-33, +/-47 (mod 112)") != std::string::npos);
    CHECK(text.out.find("a = +/-11, +/-53 (mod 112)") != std::string::npos);

    CHECK(run({"classify", "3", "--range", "1"}).code == 1);
}

TEST_CASE("reconstructed mode is surfaced") {
    json j = run_json({"dedekind", "5", "3", "--max-exact-p", "3"});
    CHECK(j["mode"] == "reconstructed");
    CHECK(j["result"]["value"] == "-61/700");
}

TEST_CASE("help exits zero") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("verify command") {
    std::ostringstream out, err;
    int code = run_cli({"verify"}, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("PASS") != std::string::npos);
    CHECK(out.str().find("FAIL") == std::string::npos);

    std::ostringstream jout, jerr;
    code = run_cli({"verify", "--json"}, jout, jerr);
    CHECK(code == 0);
    json j = json::parse(jout.str());
    CHECK(j["result"]["failures"] == 0);
    CHECK(j["result"]["total"].get<int>() > 20);
}

TEST_CASE("verify failures exit with status 2") {
    // 64 oracle bits cannot confirm the 1e-30 float/exact agreement, so
    // that check honestly fails and the exit status must say so.
    std::ostringstream out, err;
    int code = run_cli({"verify", "--precision", "64"}, out, err);
    CHECK(code == 2);
    CHECK(out.str().find("FAIL") != std::string::npos);
}
