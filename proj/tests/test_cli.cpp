// Runs the installed command-line binary end to end.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
    int exit_code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(BUSECOARSE_BIN) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli subcommands") {
    auto k = run("kinv --q 1");
    CHECK(k.exit_code == 0);
    CHECK(nlohmann::json::parse(k.out)["result"]["kind"] == "countable_product_of_Z");

    auto g = run("gamma-k --p 2 --k 2 --R 2 --max-n 6");
    CHECK(g.exit_code == 0);
    CHECK(nlohmann::json::parse(g.out)["result"]["counts"] == nlohmann::json::parse("[3,5,7,9,11,13]"));

    auto s = run("busemann-check --space raw-lp:1:2 --include-staircase-geodesics");
    CHECK(s.exit_code == 4);
    CHECK(nlohmann::json::parse(s.out)["verdict"] == "fail");

    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("commands").exit_code == 0);
}

TEST_CASE("cli config files") {
    const auto path = std::filesystem::temp_directory_path() / "busecoarse_cli_test.json";
    {
        std::ofstream f(path);
        f << R"({"space":"halfline","command":"net","window":[0,1,2,3,4,5,6,7,8,9,10],"epsilon":1.5})";
    }
    auto r = run("run " + path.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    std::filesystem::remove(path);

    CHECK(run("run /nonexistent/config.json").exit_code == 2);
    CHECK(run("kinv --q 0 --tolerance -3").exit_code == 2);
}
