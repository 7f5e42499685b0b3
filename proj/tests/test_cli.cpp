// Command-level checks: exit codes and artifact stability.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli() {
#ifdef DQW_CLI
    return DQW_CLI;
#else
    return "dqw";
#endif
}

int run(const std::string& args) {
    std::string cmd = "\"" + cli() + "\" " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path tmp_dir() {
    auto p = std::filesystem::temp_directory_path() / "dqw_cli_test";
    std::filesystem::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("") == 1);
    CHECK(run("dispersion --walk marble") == 1);
    CHECK(run("zitter --walk honeycomb --masses 0") == 1);
    CHECK(run("evolve --walk three --init sideways") == 1);
}

TEST_CASE("unwritable output paths exit with code 3") {
    CHECK(run("dispersion --walk three --mass 0 --resolution 8 "
              "--out-dir /proc/definitely/not/writable") == 3);
}

TEST_CASE("gauge-check passes normally and fails when corrupted") {
    CHECK(run("gauge-check --seed 3 --size 8 --steps 6") == 0);
    CHECK(run("gauge-check --seed 3 --size 8 --steps 6 --corrupt") == 2);
}

TEST_CASE("dispersion grids are byte-identical one mass period apart") {
    auto dir = tmp_dir();
    REQUIRE(run("dispersion --walk three --mass 0 --resolution 64 --out-dir \"" +
                dir.string() + "\" --out m0.csv") == 0);
    REQUIRE(run("dispersion --walk three --mass 4pi/3 --resolution 64 --out-dir \"" +
                dir.string() + "\" --out mp.csv") == 0);
    std::string a = slurp((dir / "m0.csv").string());
    std::string b = slurp((dir / "mp.csv").string());
    REQUIRE(!a.empty());
    CHECK(a == b);
}

TEST_CASE("evolve honors a JSON experiment config") {
    auto dir = tmp_dir();
    std::string cfg_path = (dir / "exp.json").string();
    {
        std::ofstream f(cfg_path);
        f << R"({"walk":"three","nx":32,"ny":16,"steps":20,"Ex":0.1,
                 "out_dir":")" << (dir / "out").string() << R"("})";
    }
    CHECK(run("evolve --config \"" + cfg_path + "\"") == 0);
    CHECK(std::filesystem::exists(dir / "out" / "density.csv"));
    CHECK(std::filesystem::exists(dir / "out" / "density.pgm"));
    CHECK(std::filesystem::exists(dir / "out" / "bloch.json"));
    std::string bloch = slurp((dir / "out" / "bloch.json").string());
    CHECK(bloch.find("\"predictions\"") != std::string::npos);
    CHECK(bloch.find("\"detected\"") != std::string::npos);
}
