#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rps/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = rps::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("certify emits the canonical certificate JSON") {
    auto r = run({"certify", "--poly", "1,0,1", "--seq", "1,1,1,1", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"case\":2,\"f\":\"1,0,1\",\"kind\":\"padic\",\"n\":4,\"p\":5,\"r_p\":2,"
          "\"s\":[1,1,1,1],\"valuation\":-1}\n");
    CHECK(r.err.empty());
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::vector<std::string>> cases = {
        {"certify", "--poly", "0,1,1", "--seq", "3,1,2", "--json"},
        {"alpha", "--poly", "1,0,1", "--terms", "50", "--json"},
        {"scan", "--poly", "3,-3,1", "--nmax", "4", "--trials", "3", "--seed", "11", "--json"},
        {"kakeya", "--poly", "1,0,1", "--kmax", "5"},
        {"straddle", "--eps", "1/50", "--json"},
    };
    for (const auto& argv : cases) {
        auto a = run(argv);
        auto b = run(argv);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("verify accepts whatever certify emitted") {
    for (const char* poly : {"1,0,1", "0,1,1", "0,0,1", "1,0,0,1", "2,0,3"}) {
        auto cert = run({"certify", "--poly", poly, "--seq", "2,1,3,1", "--json"});
        REQUIRE(cert.code == 0);
        auto path = std::filesystem::temp_directory_path() /
                    ("rps_cli_cert_" + std::to_string(std::rand()) + ".json");
        {
            std::ofstream f(path);
            f << cert.out;
        }
        auto ver = run({"verify", path.string(), "--json"});
        CHECK(ver.code == 0);
        CHECK(ver.out == "{\"reason\":\"ok\",\"valid\":true}\n");
        std::filesystem::remove(path);
    }
}

TEST_CASE("verify flags a tampered certificate and exits nonzero") {
    auto cert = run({"certify", "--poly", "1,0,1", "--seq", "1,1", "--json"});
    std::string tampered = cert.out;
    auto pos = tampered.find("\"valuation\":-1");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 14, "\"valuation\":-9");
    auto path = std::filesystem::temp_directory_path() / "rps_cli_tampered.json";
    {
        std::ofstream f(path);
        f << tampered;
    }
    auto ver = run({"verify", path.string()});
    CHECK(ver.code == 1);
    CHECK(ver.out.find("false") != std::string::npos);
    CHECK(ver.out.find("padic-valuation-mismatch") != std::string::npos);
    std::filesystem::remove(path);

    auto missing = run({"verify", "/nonexistent/cert.json"});
    CHECK(missing.code == 2);
}

TEST_CASE("usage and precondition failures exit 2 with messages on stderr") {
    auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(!unknown.err.empty());

    auto missing_flag = run({"certify", "--poly", "1,0,1"});
    CHECK(missing_flag.code == 2);

    auto linear = run({"certify", "--poly", "1,1", "--seq", "1,1"});
    CHECK(linear.code == 2);
    CHECK(linear.err.find("degree-1") != std::string::npos);
    CHECK(linear.out.empty());

    auto badpoly = run({"eval", "--poly", "1,0,0", "--seq", "1"});
    CHECK(badpoly.code == 2);

    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(!help.out.empty());
}

TEST_CASE("eval prints exact values") {
    auto r = run({"eval", "--poly", "1,0,1", "--seq", "1,1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "value         73/85\n");
    auto j = run({"eval", "--poly", "1,0,1", "--seq", "1,1,1,1", "--json"});
    CHECK(j.out == "{\"f\":\"1,0,1\",\"n\":4,\"s\":[1,1,1,1],\"value\":\"73/85\"}\n");
}

TEST_CASE("alpha subcommand") {
    auto r = run({"alpha", "--poly", "1,0,1", "--terms", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"N\":2,\"hi\":\"6/5\",\"lo\":\"7/10\"}\n");
    auto human = run({"alpha", "--poly", "1,0,1", "--terms", "10"});
    CHECK(human.out.find("1662222227/1693047850") != std::string::npos);
}

TEST_CASE("primes subcommands") {
    auto cover = run({"primes", "cover", "7", "--json"});
    CHECK(cover.code == 0);
    CHECK(cover.out == "{\"p\":13,\"r_p\":5}\n");
    auto erdos = run({"primes", "erdos", "100", "--json"});
    CHECK(erdos.out == "{\"p\":101}\n");
    auto rational_xi = run({"primes", "erdos", "15/2", "--json"});
    CHECK(rational_xi.out == "{\"p\":13}\n");
    auto low = run({"primes", "erdos", "3"});
    CHECK(low.code == 2);
}

TEST_CASE("approx reproduces the golden greedy selection") {
    auto r = run({"approx", "--poly", "1,0,1", "--target", "3/4", "--eps", "1/100", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"indices\":[1,2,5,10],\"value\":\"4913/6565\"}\n");
    auto unreachable =
        run({"approx", "--poly", "1,0,1", "--target", "2", "--eps", "1/10"});
    CHECK(unreachable.code == 2);
}

TEST_CASE("build and straddle succeed end to end") {
    auto b = run({"build", "--poly", "1,0,1", "--target", "1", "--eps", "1/10", "--json"});
    CHECK(b.code == 0);
    CHECK(b.out.find("\"value\":") != std::string::npos);
    auto s = run({"straddle", "--eps", "1/100"});
    CHECK(s.code == 0);
    CHECK(s.out.find("below 1:") != std::string::npos);
    CHECK(s.out.find("above 1:") != std::string::npos);
    auto toobig = run({"straddle", "--eps", "1/2"});
    CHECK(toobig.code == 2);
}

TEST_CASE("eval accepts integer-coefficient polynomials") {
    // the scanner's collision polynomial sums to an exact integer here
    auto r = run({"eval", "--poly", "3,-3,1", "--seq", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "value         2\n");
    // a zero of f inside the range is a precondition failure
    auto zero = run({"eval", "--poly", "-2,1", "--seq", "1,1"});
    CHECK(zero.code == 2);
}

TEST_CASE("kakeya json carries the aggregate verdict") {
    auto r = run({"kakeya", "--poly", "1,0,1", "--kmax", "3", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"all_hold\":true") != std::string::npos);
    auto f = run({"kakeya", "--poly", "0,0,1", "--kmax", "1", "--json"});
    CHECK(f.out.find("\"all_hold\":false") != std::string::npos);
    CHECK(f.out.find("\"verdict\":\"fails\"") != std::string::npos);
}

TEST_CASE("symfun rejects k beyond n for the elementary kind only") {
    auto bad = run({"symfun", "--poly", "1,0,1", "--seq", "1,1", "--k", "3"});
    CHECK(bad.code == 2);
    auto good = run({"symfun", "--poly", "1,0,1", "--seq", "2", "--k", "2", "--complete",
                     "--json"});
    CHECK(good.code == 0);
    CHECK(good.out == "{\"k\":2,\"kind\":\"complete\",\"value\":\"1/16\"}\n");
}

TEST_CASE("lfilter, symfun and scan") {
    CHECK(run({"lfilter", "3/7", "--json"}).out == "{\"verdict\":\"in_l\"}\n");
    CHECK(run({"lfilter", "7/10", "--json"}).out == "{\"verdict\":\"not_in_l\"}\n");

    auto sym = run({"symfun", "--poly", "1,0,1", "--seq", "1,1", "--k", "2", "--json"});
    CHECK(sym.out == "{\"k\":2,\"kind\":\"elementary\",\"value\":\"1/10\"}\n");
    auto symc =
        run({"symfun", "--poly", "1,0,1", "--seq", "1,1", "--k", "2", "--complete", "--json"});
    CHECK(symc.out == "{\"k\":2,\"kind\":\"complete\",\"value\":\"39/100\"}\n");

    auto scan = run({"scan", "--poly", "1,0,1", "--nmax", "5", "--trials", "4", "--seed", "3",
                     "--json"});
    CHECK(scan.code == 0);
    CHECK(scan.out.find("\"hits\":[]") != std::string::npos);
}
