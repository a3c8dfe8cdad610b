#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "thetamult/cli.hpp"

using namespace thetamult;

namespace {
struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("dmult prints the multiplicity table") {
    auto r = run({"dmult", "--lambda", "[3]", "--mu", "[3]", "--ell", "5"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "theta-mult/1");
    CHECK(j["total"] == 4);
    CHECK(j["per_rank"] == nlohmann::json::array({1, 1, 1, 1}));
    CHECK(j["method"] == "strip");
}

TEST_CASE("dmult degenerate literals") {
    auto r = run({"dmult", "--lambda", "[0]", "--mu", "[3,1]", "--ell", "5"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["lambda"] == "0");
    CHECK(j["total"] == 1);
    auto r2 = run({"dmult", "--lambda", "[]", "--mu", "[3,1]", "--ell", "5"});
    CHECK(nlohmann::json::parse(r2.out)["total"] == 0);
}

TEST_CASE("dmult csv and tex formats") {
    auto r = run({"dmult", "--lambda", "[2,1]", "--mu", "[2,1]", "--ell", "7",
                  "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda,mu,r,d_r,method,ell") == 0);
    CHECK(r.out.find("[2,1],[2,1],total,4,strip,7") != std::string::npos);
    auto t = run({"dmult", "--lambda", "[2,1]", "--mu", "[2,1]", "--ell", "7",
                  "--format", "tex"});
    CHECK(t.code == 0);
    CHECK(t.out.find("\\begin{tabular}") == 0);
}

TEST_CASE("oracle subcommand forces the module route") {
    auto r = run({"oracle", "--lambda", "[2]", "--mu", "[2]", "--ell", "2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["method"] == "module_oracle");
    CHECK(j["per_rank"] == nlohmann::json::array({1, 1, 1}));
    CHECK(j["total"] == 3);

    auto q = run({"oracle", "--lambda", "[2,1]", "--mu", "[2,1]", "--ell", "7",
                  "--field", "rational"});
    CHECK(q.code == 0);
    auto jq = nlohmann::json::parse(q.out);
    CHECK(jq["method"] == "module_oracle_rational");
    CHECK(jq["total"] == 4);
}

TEST_CASE("theta matches the headline consequence") {
    auto r = run({"theta", "--pi", "triv:n=4", "--pip", "triv:m=6", "--d", "2",
                  "--ell", "7"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["multiplicity"] == 3);
    CHECK(j["sk"][0] == nlohmann::json::array({2}));
    CHECK(j["sk"][1] == nlohmann::json::array({3}));
    CHECK(j["trace"].is_array());
}

TEST_CASE("sk subcommand parses multisegment literals") {
    auto r = run({"sk", "--pi", "[-1/2,1/2]", "--pip", "[-1/2,1/2]", "--d", "2",
                  "--ell", "7"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["m"] == 2);
    CHECK(j["sk"][0] == nlohmann::json::array({1}));
}

TEST_CASE("exponents subcommand") {
    auto r = run({"exponents", "--pi", "triv:n=6", "--d", "3", "--ell", "7"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exponents"][0] == 2);
    auto banal = run({"exponents", "--pi", "triv:n=2", "--d", "3", "--ell", "7"});
    auto jb = nlohmann::json::parse(banal.out);
    CHECK(jb["exponents"] == nlohmann::json::array({0, 0, 0}));
}

TEST_CASE("verify exits zero and reports per-triple agreement") {
    auto r = run({"verify", "--max-n", "2", "--ell", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda,mu,r,d_rank,d_char,d_module,agree") == 0);
    CHECK(r.out.find(",no") == std::string::npos);
    CHECK(r.out.find("# mismatches,0") != std::string::npos);
}

TEST_CASE("verify output is byte-deterministic") {
    auto a = run({"verify", "--max-n", "2", "--ell", "5", "--workers", "1"});
    auto b = run({"verify", "--max-n", "2", "--ell", "5", "--workers", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"dmult", "--lambda", "3,1", "--mu", "[1]", "--ell", "5"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"dmult", "--lambda", "[1]"}).code == 2);
    // size limit: module oracle beyond |lambda| <= 5
    CHECK(run({"oracle", "--lambda", "[4,2]", "--mu", "[4,2]", "--ell", "5"}).code == 3);
    // semisimple-range rejection surfaces as exit 3
    CHECK(run({"dmult", "--lambda", "[2,1]", "--mu", "[2,1]", "--ell", "2"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}
