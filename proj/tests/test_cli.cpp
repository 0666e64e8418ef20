#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "grasscat/serialize.hpp"

using namespace grasscat;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    std::string cmd = std::string(GRASSCAT_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli ext") {
    auto r = run("ext '135@(3,6)' '246@(3,6)'");
    CHECK(r.code == 0);
    CHECK(r.out.find("exponents [1,1]") != std::string::npos);
    auto j = run("--json ext '135@(3,6)' '246@(3,6)'");
    CHECK(nlohmann::json::parse(j.out).at("exponents") == nlohmann::json::array({1, 1}));
}

TEST_CASE("cli census") {
    auto dir = (std::filesystem::temp_directory_path() / "grasscat-cli-test").string();
    std::filesystem::remove_all(dir);
    auto r = run("census 3 6 --full --out " + dir);
    CHECK(r.code == 0);
    CHECK(r.out.find("rank1: 20, rank2 rigid: 2") != std::string::npos);
    auto again = run("census 3 6 --full --out " + dir);
    CHECK(again.out == r.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("rim 'xyz'").code == 2);
    CHECK(run("ext '135@(3,6)' '1357@(4,8)'").code != 0);
    CHECK(run("--trunc 3 rigid '135|246@(3,6)'").code == 2);
    CHECK(run("ar-seq '147@(3,9)'").code == 1);
}

TEST_CASE("cli output is stable") {
    for (std::string c : {"--json orbit '145@(3,9)'", "--json module '246|135@(3,6)'", "diagram '135|246@(3,6)' --format svg",
                          "--format dot orbit '145@(3,9)'", "--json roots 4 8"}) {
        auto a = run(c), b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("modules survive JSON") {
    auto j = nlohmann::json::parse(run("--json module '246|135@(3,6)'").out);
    auto m = module_from_json(j.at("module"));
    CHECK(m.s == 2);
    CHECK(validate_relations(m).empty());
    CHECK(isomorphic(m, build_profile(parse_profile("246|135", 6), 12)));
    CHECK(to_json(m) == j.at("module"));
}
