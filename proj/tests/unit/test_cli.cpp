#include "todakdv/cli/commands.hpp"
#include "todakdv/cli/config.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace todakdv::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string work(const std::string& name)
{
    fs::path p = fs::path(TEST_WORK_DIR) / "cli" / name;
    fs::remove_all(p);
    fs::create_directories(p.parent_path());
    return p.string();
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& s, const std::string& needle)
{
    return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify exit codes")
{
    for (int j = 1; j <= 4; ++j)
        CHECK(cli({"verify", "--flow", std::to_string(j)}).code == kOk);
    auto r = cli({"verify", "--flow", "2", "--truncate-R", "1"});
    CHECK(r.code == kVerifyFailed);
    CHECK(contains(r.out, "eps^5 : (-1/24) * f(4)"));
    for (int j = 1; j <= 4; ++j) {
        auto t = cli({"verify", "--flow", std::to_string(j), "--truncate-R", "0"});
        CHECK(t.code == kVerifyFailed);
        auto pos = t.out.find("first nonzero residual at eps^");
        REQUIRE(pos != std::string::npos);
        CHECK(std::stoi(t.out.substr(pos + 30)) <= 4);
    }
    CHECK(cli({"verify", "--flow", "5"}).code == kUsage);
    CHECK(cli({"verify", "--flow", "0"}).code == kUsage);
}

TEST_CASE("expand")
{
    auto r = cli({"expand", "R"});
    CHECK(r.code == kOk);
    CHECK(contains(r.out, "eps^1 : (-1/8) * f^2\n"));
    auto z = cli({"expand", "Z2"});
    CHECK(contains(z.out, "eps^2 : (-1/4) * f(3) + 3 * f * f'\n"));
    auto c = cli({"expand", "C3"});
    CHECK(contains(c.out, "eps^5 : (-5/24) * int(f * f'') + 5/6 * int(f^3)"));
    auto b = cli({"expand", "C3", "--recursion", "aligned"});
    CHECK(contains(b.out, "eps^5 : (-1/8) * int(f * f'') + 7/12 * int(f^3)"));
    CHECK(cli({"expand", "Q7"}).code == kUsage);
}

TEST_CASE("extend")
{
    auto r = cli({"extend", "--order", "0"});
    CHECK(r.code == kOk);
    CHECK(contains(r.out, "eps^1 : (-1/8) * f^2"));
    CHECK(contains(cli({"extend", "--order", "1"}).out, "eps^2 : 1/192 * f(3)"));
    CHECK(cli({"extend", "--order", "9"}).code == kUsage);
}

TEST_CASE("usage errors")
{
    CHECK(cli({}).code == kUsage);
    CHECK(cli({"bogus"}).code == kUsage);
    CHECK(cli({"simulate", "--N", "16"}).code == kUsage);  // missing --out
    CHECK(cli({"simulate", "--N", "16", "--scheme", "euler", "--out", work("bad")}).code == kUsage);
    CHECK(cli({"simulate", "--N", "4", "--out", work("small")}).code == kUsage);
    CHECK(cli({"simulate", "--N", "16", "--dt", "-1", "--out", work("neg")}).code == kUsage);
}

TEST_CASE("simulate, rerun and conserved")
{
    auto dir = work("sim");
    auto r = cli({"simulate", "--N", "16", "--dt", "1e-3", "--t-end", "0.02", "--output-every", "5", "--out", dir});
    REQUIRE(r.code == kOk);
    for (auto f : {"trajectory.csv", "conserved.csv", "config.txt", "comparison.csv"})
        CHECK(fs::exists(fs::path(dir) / f));
    CHECK(slurp(fs::path(dir) / "trajectory.csv").rfind("t,n,a,b\n", 0) == 0);

    auto again = work("rerun");
    REQUIRE(cli({"rerun", (fs::path(dir) / "config.txt").string(), "--out", again}).code == kOk);
    for (auto f : {"trajectory.csv", "conserved.csv", "comparison.csv"})
        CHECK(slurp(fs::path(dir) / f) == slurp(fs::path(again) / f));

    auto cons = work("cons");
    REQUIRE(cli({"conserved", "--input", (fs::path(dir) / "trajectory.csv").string(), "--out", cons}).code == kOk);
    CHECK(fs::exists(fs::path(cons) / "drift.csv"));
    CHECK(cli({"conserved", "--input", (fs::path(dir) / "missing.csv").string(), "--out", cons}).code != kOk);
}

TEST_CASE("constant state has no drift")
{
    auto dir = work("const");
    REQUIRE(cli({"simulate", "--N", "16", "--t-end", "0.1", "--init", "builtin:const:0.5", "--output-every", "10",
                 "--out", dir})
                .code == kOk);
    auto cons = work("const_cons");
    REQUIRE(cli({"conserved", "--input", (fs::path(dir) / "trajectory.csv").string(), "--out", cons}).code == kOk);
    std::ifstream in(fs::path(cons) / "drift.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,drift_d1,drift_d2,drift_d3");
    int rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        while (std::getline(ss, cell, ','))
            CHECK(std::abs(std::stod(cell)) <= 1e-12);
        ++rows;
    }
    CHECK(rows == 11);
}

TEST_CASE("spectrum of the zero potential")
{
    auto r = cli({"spectrum", "--N", "32", "--lambda-max", "40", "--samples", "9"});
    REQUIRE(r.code == kOk);
    std::istringstream in(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || !(std::isdigit(line[0]) || line[0] == '-'))
            continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(ss, cell, ','))
            v.push_back(std::stod(cell));
        REQUIRE(v.size() == 5);
        double lam = v[0];
        double cont = lam >= 0 ? 2 * std::cos(std::sqrt(lam)) : 2 * std::cosh(std::sqrt(-lam));
        CHECK(v[2] == doctest::Approx(cont).epsilon(1e-8));
        CHECK(std::abs(v[1] - cont) <= 0.05 * std::max(1.0, std::abs(cont)));
        ++rows;
    }
    CHECK(rows == 9);

    auto dir = work("spec");
    CHECK(cli({"spectrum", "--N", "16", "--samples", "5", "--out", dir}).code == kOk);
    CHECK(fs::exists(fs::path(dir) / "config.txt"));
}

TEST_CASE("run config round trip")
{
    RunConfig c;
    c.subcommand = "simulate";
    c.set("N", "32");
    c.set("scheme", "rk4");
    c.set("verbose", "true");
    c.set("quiet", "false");
    auto back = RunConfig::parse(c.str());
    CHECK(back.subcommand == "simulate");
    CHECK(back.get("N") == "32");
    CHECK(back.get("scheme") == "rk4");
    CHECK_FALSE(back.get("missing").has_value());
    CHECK(back.entries() == c.entries());
    auto args = c.to_args();
    CHECK(args == std::vector<std::string>{"simulate", "--N", "32", "--scheme", "rk4", "--verbose"});

    auto path = work("cfg") + ".txt";
    c.save(path);
    CHECK(RunConfig::load(path).str() == c.str());
    CHECK_THROWS(RunConfig::load(work("nope") + ".txt"));
}
