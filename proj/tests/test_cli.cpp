#include <filesystem>
#include <fstream>
#include <sstream>

#include "survradar/cli.hpp"
#include "test_support.hpp"

using namespace survradar;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "survradar_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and version exit cleanly") {
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("simulate") != std::string::npos);
    const auto v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == version_string() + "\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"simulate", "--trials", "0"}).code == 2);
    CHECK(run({"simulate", "--scheme", "Nope"}).code == 2);
    CHECK(run({"simulate", "--set", "no_such_key=1"}).code == 2);
    CHECK(run({"simulate", "--set", "gamma_s"}).code == 2);
    CHECK(run({"simulate", "--format", "xml"}).code == 2);
    CHECK(run({"figure", "--tag", "fig99"}).code == 2);
    CHECK(run({"prob", "--m", "1"}).code == 2);
    CHECK(run({"prob", "--gamma-s", "1", "--gamma-s-db", "0"}).code == 2);
    CHECK(run({"simulate", "--config", "/nonexistent.json"}).code == 2);
    const auto e = run({"simulate", "--set", "n_rf=1"});
    CHECK(e.code == 2);
    CHECK_FALSE(e.err.empty());
}

TEST_CASE("prob prints the analytic values") {
    const auto pm = run({"prob", "--case", "power-min"});
    REQUIRE(pm.code == 0);
    const double expected = success_prob_power_min(ProbabilityInputs{});
    CHECK(pm.out == "case,variant,success_prob,quadrature\npower-min,n/a," + format_number(expected) + ",\n");
    const auto jm = run({"prob", "--case", "jam-max", "--p-j", "10", "--quadrature", "--format", "json"});
    REQUIRE(jm.code == 0);
    const auto j = nlohmann::json::parse(jm.out);
    ProbabilityInputs in;
    in.p_j = 10.0;
    CHECK(j["success_prob"].get<double>() == doctest::Approx(success_prob_jam_max(in)).epsilon(1e-9));
    CHECK(std::abs(j["quadrature"].get<double>() - j["success_prob"].get<double>()) < 1e-6);
    const auto db = run({"prob", "--case", "power-min", "--gamma-s-db", "10"});
    ProbabilityInputs in10;
    in10.gamma_s = 10.0;
    CHECK(db.out.find(format_number(success_prob_power_min(in10))) != std::string::npos);
}

TEST_CASE("simulate honours overrides and writes identical files") {
    const auto dir = scratch_dir();
    const auto a = dir / "a.csv";
    const auto b = dir / "b.csv";
    const std::vector<std::string> base = {"simulate", "--trials", "40", "--seed", "3", "--set", "gamma_s_db=5",
                                           "--scheme", "Optimal", "MRC", "--threads", "2"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--out", a.string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--out", b.string()});
    const auto ra = run(args_a);
    REQUIRE(ra.code == 0);
    CHECK(ra.out.empty());
    REQUIRE(run(args_b).code == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.find("simulate,MRC,") != std::string::npos);
    // Same bytes on stdout without --out.
    CHECK(run(base).out == text);
}

TEST_CASE("configuration files feed the base parameters") {
    const auto dir = scratch_dir();
    const auto cfg_path = dir / "cfg.json";
    {
        std::ofstream f(cfg_path);
        f << R"({"n_antennas": 8, "n_rf": 2, "gamma_s_db": 3})";
    }
    const auto r = run({"simulate", "--trials", "10", "--config", cfg_path.string(), "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["n_antennas"] == 8);
    CHECK(j["config"]["n_rf"] == 2);
    CHECK(j["config"]["gamma_s"].get<double>() == doctest::Approx(db_to_linear(3.0)));
    // --set is applied after the file.
    const auto r2 = run({"simulate", "--trials", "10", "--config", cfg_path.string(), "--set", "n_rf=3",
                         "--format", "json"});
    REQUIRE(r2.code == 0);
    CHECK(nlohmann::json::parse(r2.out)["config"]["n_rf"] == 3);
}

TEST_CASE("figure and beampattern subcommands") {
    const auto f = run({"figure", "--tag", "fig8", "--trials", "20", "--seed", "2"});
    REQUIRE(f.code == 0);
    CHECK(std::count(f.out.begin(), f.out.end(), '\n') == 1 + 5 * 3);
    const auto bp = run({"beampattern", "--set", "n_antennas=32", "--set", "n_rf=3", "--samples", "64",
                         "--format", "json"});
    REQUIRE(bp.code == 0);
    const auto j = nlohmann::json::parse(bp.out);
    CHECK(j["rows"].size() == 64);
    CHECK(j["direction"] == 8);
    const auto fig4 = run({"figure", "--tag", "fig4", "--samples", "256"});
    REQUIRE(fig4.code == 0);
    CHECK(std::count(fig4.out.begin(), fig4.out.end(), '\n') == 257);
    CHECK(run({"beampattern", "--direction", "999"}).code == 2);
}

TEST_CASE("echo mirrors the output file on stdout") {
    const auto path = scratch_dir() / "echo.csv";
    const auto r = run({"prob", "--out", path.string()});
    REQUIRE(r.code == 0);
    const auto e = run({"simulate", "--trials", "5", "--out", path.string(), "--echo"});
    REQUIRE(e.code == 0);
    CHECK(e.out == slurp(path));
}

TEST_CASE("unwritable output is a runtime failure") {
    CHECK(run({"prob", "--out", "/nonexistent_dir/x.csv"}).code == 1);
}

}  // TEST_SUITE
