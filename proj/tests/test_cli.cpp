#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mhdlab/cli.hpp"

using namespace mhdlab;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "mhdlab");
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    return {code, o.str(), e.str()};
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("mhdlab_test_" + name)).string();
}

// run the installed binary and capture stdout
std::pair<int, std::string> shell(const std::string& args) {
    const std::string cmd = std::string(MHDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("argument parsers") {
    const auto g = cli::parse_grid("x=-1:1:11");
    CHECK(g.axis == 'x');
    CHECK(g.lo == -1.0);
    CHECK(g.hi == 1.0);
    CHECK(g.n == 11);
    CHECK(cli::parse_fix("z=0.5") == std::pair<char, double>{'z', 0.5});
    CHECK(cli::parse_param("alpha=0.7") == std::pair<std::string, double>{"alpha", 0.7});
    const auto l = cli::parse_loop("center=0,1,2,radius=0.5,normal=0,0,1,n=128");
    CHECK(l.center[2] == 2.0);
    CHECK(l.radius == 0.5);
    CHECK(l.n == 128);
    CHECK_THROWS_AS(cli::parse_grid("w=0:1:3"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("x=0:1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("x=0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_param("alpha"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_param("alpha=abc"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_loop("center=0,0,radius=1"), std::invalid_argument);
}

TEST_CASE("list") {
    auto r = run({"list"});
    CHECK(r.code == cli::ok);
    CHECK(r.out.find("G6/alpha2=0") != std::string::npos);
    r = run({"list", "--format", "json"});
    REQUIRE(r.code == cli::ok);
    const json j = json::parse(r.out);
    CHECK(j["families"].size() == 22);
}

TEST_CASE("sample writes a table and skips off-domain points") {
    auto r = run({"sample", "--family", "G1/gamma=2", "--grid", "t=-1:1:3", "--grid", "x=0:1:2"});
    REQUIRE(r.code == cli::ok);
    std::istringstream in(r.out);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "t,x,y,z,rho,p,v1,v2,v3,B1,B2,B3,absJ,absFm,absOmega");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2);  // only t = 1 lies in the domain
    CHECK(r.err.find("skipped 4") != std::string::npos);
    r = run({"sample", "--family", "G7", "--grid", "t=0:1:2", "--format", "json"});
    REQUIRE(r.code == cli::ok);
    CHECK(json::parse(r.out).size() == 2);
}

TEST_CASE("verify single family") {
    auto r = run({"verify", "--family", "G10/case1", "--samples", "200"});
    CHECK(r.code == cli::ok);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["reports"][0]["max_abs"].get<double>() < 1e-8);
    CHECK(j["ledger"].empty());

    r = run({"verify", "--family", "G9", "--samples", "200"});
    CHECK(r.code == cli::verification_failed);
    j = json::parse(r.out);
    CHECK(j["ledger"].size() == 1);
    {
        // the misprint sits in B, which only momentum and induction see
        const auto term = j["ledger"][0]["suspect_term"].get<std::string>();
        CHECK((term.rfind("momentum", 0) == 0 || term.rfind("induction", 0) == 0));
    }

    r = run({"verify", "--family", "G9", "--variant", "corrected", "--samples", "200"});
    CHECK(r.code == cli::ok);
}

TEST_CASE("verify with parameters and gamma") {
    auto r = run({"verify", "--family", "G1/gamma=generic", "--gamma", "1.4", "--param", "alpha=0.5",
                  "--samples", "100"});
    REQUIRE(r.code == cli::ok);
    const json j = json::parse(r.out);
    CHECK(j["reports"][0]["gamma"].get<double>() == 1.4);
    CHECK(j["reports"][0]["params"]["alpha"].get<double>() == 0.5);
    // gamma is fixed on this branch
    r = run({"verify", "--family", "G1/gamma=2", "--gamma", "1.4"});
    CHECK(r.code == cli::usage_error);
}

TEST_CASE("usage errors") {
    CHECK(run({"verify", "--family", "G42"}).code == cli::usage_error);
    CHECK(run({"verify", "--family", "G7", "--param", "E_o=-1"}).code == cli::usage_error);
    CHECK(run({"verify", "--family", "G7", "--variant", "sideways"}).code == cli::usage_error);
    CHECK(run({"sample", "--family", "G7", "--grid", "q=0:1:2"}).code == cli::usage_error);
    CHECK(run({"bogus"}).code == cli::usage_error);
    CHECK(run({"flow", "--family", "G7", "--combo", "Z9"}).code == cli::usage_error);
    const auto r = run({"verify"});
    CHECK(r.code == cli::usage_error);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("variant combinations") {
    CHECK(cli::variant_combinations("G5").size() == 6);
    CHECK(cli::variant_combinations("G6").size() == 12);
    CHECK(cli::variant_combinations("G4") == std::vector<std::string>{""});
}

TEST_CASE("ledger merge") {
    const std::string path = tmp_path("ledger.json");
    std::filesystem::remove(path);
    cli::update_ledger(path, json::array({{{"family", "G9"}, {"variant", "printed"}, {"measured_max_abs", 1.0}}}));
    cli::update_ledger(path, json::array({{{"family", "G8"}, {"variant", "default"}, {"measured_max_abs", 2.0}},
                                          {{"family", "G9"}, {"variant", "printed"}, {"measured_max_abs", 3.0}}}));
    std::ifstream in(path);
    const json j = json::parse(in);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["family"] == "G8");
    CHECK(j["entries"][1]["measured_max_abs"].get<double>() == 3.0);
    std::filesystem::remove(path);
}

TEST_CASE("flow report") {
    const auto r = run({"flow", "--family", "G1/gamma=2", "--combo", "J3+K3+0.7*H", "--eps", "0.1"});
    REQUIRE(r.code == cli::ok);
    const json j = json::parse(r.out);
    CHECK(j["combo"] == "J3+K3+0.7*H");
    CHECK(j.dump().find("residual") != std::string::npos);
}

TEST_CASE("circulate and fieldline") {
    const std::string out = tmp_path("circ.csv");
    auto r = run({"circulate", "--family", "G7", "--loop", "center=0,0,0,radius=0.5,normal=0,0,1,n=64", "--t0", "0",
                  "--t1", "1", "--steps", "4", "--out", out});
    REQUIRE(r.code == cli::ok);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,gamma,gamma_error,dgamma_dt,dgamma_dt_error,acceleration,tension");
    int rows = 0;
    for (std::string l; std::getline(in, l);) ++rows;
    CHECK(rows == 5);
    std::filesystem::remove(out);
    r = run({"fieldline", "--family", "G7", "--start", "0.1,0.2,0", "--t", "0.5", "--span", "1"});
    REQUIRE(r.code == cli::ok);
    CHECK(r.out.rfind("t,x,y,z\n", 0) == 0);
}

TEST_CASE("binary entry point") {
    auto [code, out] = shell("list --format json");
    CHECK(code == 0);
    CHECK(json::parse(out)["families"].size() == 22);
    std::tie(code, out) = shell("verify --family G9 --samples 50");
    CHECK(code == 2);
    std::tie(code, out) = shell("verify --family nope");
    CHECK(code == 1);
}

}  // TEST_SUITE
