#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "doctest.h"
#include "ringkepler/cli.hpp"

using namespace ringkepler;
using namespace ringkepler::cli;
using doctest::Approx;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome run_in_process(std::vector<std::string> args) {
    args.insert(args.begin(), "ringkepler");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = run(int(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

// Runs the installed binary through the shell and returns its exit status.
int run_binary(const std::string& args, const std::string& stdout_path) {
    std::string cmd = std::string("\"") + RINGKEPLER_TOOL + "\" " + args + " > \"" + stdout_path + "\" 2> /dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("config text") {
    auto layer = parse_config_text("# model\ns2 = 1\nc1=0.5   # trailing\n\n  tol-fd = 1e-7\n");
    CHECK(layer.size() == 3);
    CHECK(layer.at("s2") == "1");
    CHECK(layer.at("c1") == "0.5");
    CHECK(layer.at("tol-fd") == "1e-7");
    CHECK_THROWS_AS(parse_config_text("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("s2 = 1\ns2 = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("just words\n"), ConfigError);
    CHECK_THROWS_AS(read_config_file("/nonexistent/ringkepler.cfg"), ConfigError);
}

TEST_CASE("resolution and precedence") {
    SUBCASE("defaults") {
        auto cfg = resolve(Command::verify, {{}});
        CHECK(cfg.params.s.twice() == 0);
        CHECK(cfg.format == Format::json);
        CHECK(cfg.tolerances.fd == 1e-6);
    }
    SUBCASE("higher layers win") {
        Layer flags{{"c1", "0.25"}, {"tol-fd", "1e-4"}};
        Layer file{{"c1", "0.5"}, {"c2", "0.7"}, {"tol", "1e-3"}};
        Layer env{{"tol-fd", "0"}, {"tol-x", "2e-5"}};
        auto cfg = resolve(Command::verify, {flags, file, env});
        CHECK(cfg.params.c1 == 0.25);
        CHECK(cfg.params.c2 == 0.7);
        CHECK(cfg.tolerances.fd == 1e-4);
        CHECK(cfg.tolerances.identity == 1e-3);
        CHECK(cfg.tolerances.x == 1e-3);
    }
    SUBCASE("half-integer charge in both spellings") {
        CHECK(resolve(Command::spectrum, {{{"s2", "1"}}}).params.s.twice() == 1);
        CHECK(resolve(Command::spectrum, {{{"s", "1/2"}}}).params.s.twice() == 1);
        CHECK(resolve(Command::spectrum, {{{"s", "-3/2"}}}).params.s.twice() == -3);
        CHECK_THROWS_AS(resolve(Command::spectrum, {{{"s", "1/2"}, {"s2", "1"}}}), ConfigError);
        CHECK_THROWS_AS(resolve(Command::spectrum, {{{"s", "1/3"}}}), ConfigError);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(resolve(Command::spectrum, {{{"c1", "-1"}}}), ConfigError);
        CHECK_THROWS_AS(resolve(Command::spectrum, {{{"c1", "abc"}}}), ConfigError);
        CHECK_THROWS_AS(resolve(Command::spectrum, {{{"format", "xml"}}}), ConfigError);
        CHECK_THROWS_AS(resolve(Command::verify, {{{"tol-fd", "-1"}}}), ConfigError);
        CHECK_THROWS_AS(resolve(Command::interbasis, {{{"n", "2"}, {"m-parabolic", "0"}, {"m-spherical", "1"}}}),
                        ConfigError);
    }
}

TEST_CASE("number formatting") {
    CHECK(format_real(0.5) == "5.0000000000000000e-01");
    CHECK(format_real(-0.125) == "-1.2500000000000000e-01");
    CHECK(format_real(0.0) == "0.0000000000000000e+00");
    CHECK(format_real(1.0 / 0.0) == "inf");
    CHECK(format_real(std::nan("")) == "nan");
}

TEST_CASE("spectrum command") {
    auto o = run_in_process({"spectrum", "--s2", "0", "--c1", "0", "--c2", "0", "--n-max", "3"});
    REQUIRE(o.code == 0);
    auto ls = lines(o.out);
    REQUIRE(ls.size() == 2 + 14);
    CHECK(ls[0].rfind("# ringkepler.spectrum/1", 0) == 0);
    auto header = split(ls[1]);
    auto col = [&](const std::string& name) {
        return std::size_t(std::find(header.begin(), header.end(), name) - header.begin());
    };
    std::set<std::string> energies;
    for (std::size_t i = 2; i < ls.size(); ++i) energies.insert(split(ls[i])[col("energy")]);
    CHECK(energies == std::set<std::string>{"-5.0000000000000000e-01", "-1.2500000000000000e-01",
                                            "-5.5555555555555552e-02"});
    CHECK(o.out.find('\r') == std::string::npos);

    auto half = run_in_process({"spectrum", "--s2", "1", "--c1", "0.5", "--c2", "0.5", "--n-max", "5/2"});
    REQUIRE(half.code == 0);
    CHECK(half.out.find(",3/2,") != std::string::npos);
    CHECK(half.out.find(",5/2,") != std::string::npos);

    auto bad = run_in_process({"spectrum", "--c1", "-1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("c1") != std::string::npos);
}

TEST_CASE("json documents") {
    auto o = run_in_process({"enumerate", "--s", "1", "--n", "3", "--basis", "both", "--format", "json"});
    REQUIRE(o.code == 0);
    auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["schema"] == "ringkepler.enumerate/1");
    CHECK(doc["columns"].size() == 6);
    CHECK(doc["rows"].size() == 2 * 8);

    auto ib = run_in_process({"interbasis", "--n", "2", "--m", "0", "--format", "json"});
    REQUIRE(ib.code == 0);
    auto j = nlohmann::json::parse(ib.out);
    CHECK(j["schema"] == "ringkepler.interbasis/1");
    REQUIRE(j["rows"].size() == 4);
    for (auto& row : j["rows"]) CHECK(row["abs"].get<double>() == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(j["metadata"]["unitarity_defect"].get<double>() <= 1e-8);
}

TEST_CASE("eval command") {
    SUBCASE("hydrogen 1s along a ray") {
        auto o = run_in_process({"eval", "--n", "1", "--j", "0", "--m", "0", "--r-min", "0.5", "--r-max", "4",
                                 "--points", "8", "--theta", "1.1"});
        REQUIRE(o.code == 0);
        auto ls = lines(o.out);
        REQUIRE(ls.size() == 2 + 8);
        for (std::size_t i = 2; i < ls.size(); ++i) {
            auto c = split(ls[i]);
            double r = std::stod(c[0]);
            CHECK(std::stod(c[3]) == Approx(2 * std::exp(-r) / std::sqrt(4 * std::numbers::pi)).epsilon(1e-14));
        }
    }
    SUBCASE("parabolic and spherical ground states coincide") {
        auto sph = run_in_process({"eval", "--basis", "spherical", "--n", "1", "--j", "0", "--m", "0", "--theta",
                                   "0.7", "--points", "12"});
        auto par = run_in_process({"eval", "--basis", "parabolic", "--n1", "0", "--n2", "0", "--m", "0", "--theta",
                                   "0.7", "--points", "12"});
        REQUIRE(sph.code == 0);
        REQUIRE(par.code == 0);
        auto a = lines(sph.out), b = lines(par.out);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 2; i < a.size(); ++i) {
            double pa = std::stod(split(a[i])[5]), pb = std::stod(split(b[i])[5]);
            CHECK(std::abs(pa - pb) <= 1e-10 * std::max(pa, 1e-300));
        }
    }
    SUBCASE("theta scan through the poles") {
        auto o = run_in_process({"eval", "--grid", "theta", "--s2", "2", "--c1", "0.3", "--n", "2", "--j", "1",
                                 "--m", "0", "--theta-min", "0", "--theta-max", "3.141592653589793", "--points",
                                 "5"});
        REQUIRE(o.code == 0);
        auto ls = lines(o.out);
        REQUIRE(ls.size() == 2 + 5);
        CHECK(split(ls[2]).back() == "1");
        CHECK(split(ls[4]).back() == "0");
        CHECK(split(ls[6]).back() == "1");
    }
    SUBCASE("invalid labels") {
        CHECK(run_in_process({"eval", "--n", "1", "--j", "1", "--m", "0"}).code == 2);
        CHECK(run_in_process({"eval", "--s2", "1", "--n", "2", "--j", "1", "--m", "0"}).code == 2);
    }
}

TEST_CASE("interbasis selection rule") {
    auto o = run_in_process({"interbasis", "--n", "3", "--m-parabolic", "0", "--m-spherical", "1"});
    CHECK(o.code == 2);
    CHECK(o.err.find("selection rule") != std::string::npos);
    auto one = run_in_process({"interbasis", "--s2", "2", "--n", "2", "--m", "1"});
    REQUIRE(one.code == 0);
    auto ls = lines(one.out);
    REQUIRE(ls.size() == 3);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands{
        {"spectrum", "--s2", "1", "--c1", "0.3", "--c2", "0.7", "--n-max", "7/2", "--basis", "both"},
        {"enumerate", "--s2", "2", "--n", "3", "--basis", "both", "--format", "json"},
        {"eval", "--s2", "1", "--c1", "0.3", "--c2", "0.7", "--n", "5/2", "--j", "3/2", "--m", "1/2", "--points", "20"},
        {"interbasis", "--s2", "1", "--c1", "0.3", "--c2", "0.7", "--n", "7/2", "--m", "1/2", "--format", "json"},
    };
    for (auto& cmd : commands) {
        auto a = run_in_process(cmd);
        auto b = run_in_process(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("binary exit codes end to end") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("ringkepler_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string out = (dir / "stdout.txt").string();

    CHECK(run_binary("spectrum --n-max 2", out) == 0);
    CHECK(slurp(out).rfind("# ringkepler.spectrum/1", 0) == 0);
    CHECK(run_binary("spectrum --c1 -1", out) == 2);
    CHECK(run_binary("spectrum --no-such-flag", out) == 2);
    CHECK(run_binary("", out) == 2);
    CHECK(run_binary("--help", out) == 0);
    CHECK(run_binary("interbasis --n 2 --m-parabolic 0 --m-spherical 1", out) == 2);

    const std::string report = (dir / "report.json").string();
    CHECK(run_binary("verify --n-max 2 --output \"" + report + "\"", out) == 0);
    auto good = nlohmann::json::parse(slurp(report));
    CHECK(good["schema"] == "ringkepler.verification_report/1");
    CHECK(good["metadata"]["passed"] == true);

    fs::remove(report);
    CHECK(run_binary("verify --n-max 2 --tol 0 --output \"" + report + "\"", out) == 1);
    REQUIRE(fs::exists(report));
    auto bad = nlohmann::json::parse(slurp(report));
    CHECK(bad["metadata"]["passed"] == false);
    CHECK(bad["metadata"]["failed"].get<int>() > 0);

    const std::string cfg = (dir / "run.cfg").string();
    std::ofstream(cfg) << "# hydrogen\nn-max = 2\ntol-fd = 0\n";
    CHECK(run_binary("verify --config \"" + cfg + "\"", out) == 1);
    CHECK(run_binary("verify --config \"" + cfg + "\" --tol-fd 1e-6", out) == 0);
    std::ofstream(cfg) << "colour = blue\n";
    CHECK(run_binary("spectrum --config \"" + cfg + "\"", out) == 2);

    CHECK(run_binary("verify --n-max 2", out) == 0);
    const std::string first = slurp(out);
    CHECK(run_binary("verify --n-max 2", out) == 0);
    CHECK(slurp(out) == first);

    CHECK(std::system(("RINGKEPLER_TOL_FD=0 \"" + std::string(RINGKEPLER_TOOL) + "\" verify --n-max 2 > /dev/null 2>&1").c_str()) != 0);
    fs::remove_all(dir);
}
