#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(CASIMIR_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("casimir_cli_" + std::to_string(::getpid()) + "_" + name)).string();
}

}  // namespace

TEST_CASE("analyze a named group") {
    auto r = run("analyze S3");
    CHECK(r.code == 0);
    CHECK(r.out.find("degrees {1, 1, 2}") != std::string::npos);
    CHECK(r.out.find("status: pass") != std::string::npos);
}

TEST_CASE("json output and replay") {
    auto path = temp_path("s3.json");
    auto r = run("analyze S3 --format json --out " + path);
    CHECK(r.code == 0);
    std::ifstream f(path);
    auto j = nlohmann::json::parse(f);
    CHECK(j["status"] == "pass");
    CHECK(j["wedderburn"]["degrees"] == nlohmann::json::array({1, 1, 2}));
    CHECK(j["checks"]["fd"]["casimir_certificate"]["integral"] == true);
    CHECK(run("replay " + path).code == 0);

    j["wedderburn"]["blocks"][2]["idempotent"][1] = "7";
    auto bad = temp_path("s3_bad.json");
    std::ofstream(bad) << j.dump();
    CHECK(run("replay " + bad).code != 0);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("serial and threaded runs print the same report") {
    auto a = run("analyze Q8 --format json --no-parallel");
    auto b = run("analyze Q8 --format json");
    REQUIRE(a.code == 0);
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    ja.erase("provenance");
    jb.erase("provenance");
    CHECK(ja == jb);
}

TEST_CASE("explicit primes") {
    auto a = run("analyze S3 --format json --prime 17");
    auto b = run("analyze S3 --format json --prime 23");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    CHECK(ja["provenance"]["prime"] == 17);
    ja.erase("provenance");
    jb.erase("provenance");
    CHECK(ja == jb);
    CHECK(run("analyze S3 --prime 7").code == 2);
}

TEST_CASE("exit codes for bad inputs") {
    CHECK(run("analyze " + fixture("kc2.json")).code == 0);
    CHECK(run("analyze " + fixture("corrupted_s3.json")).code == 2);
    CHECK(run("analyze " + fixture("degenerate_lambda.json")).code == 2);
    CHECK(run("analyze " + fixture("kc2_rescaled.json")).code == 1);
    CHECK(run("analyze " + fixture("dual_numbers.json")).code == 1);
    CHECK(run("analyze no_such_group_or_file").code == 2);
}

TEST_CASE("witnesses reach the output") {
    auto r = run("analyze " + fixture("degenerate_lambda.json"));
    CHECK(r.out.find("ideal generated by") != std::string::npos);
    auto c = run("analyze " + fixture("corrupted_s3.json"));
    CHECK(c.out.find("associativity fails") != std::string::npos);
}

TEST_CASE("single checks") {
    auto r = run("analyze S3 --check class-equation --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["checks"].contains("class-equation"));
    CHECK_FALSE(j["checks"].contains("zhu"));
    auto dims = j["checks"]["class-equation"]["induced_dimensions"].get<std::vector<int>>();
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{1, 2, 3});
}

TEST_CASE("build subcommand") {
    auto path = temp_path("d2.json");
    CHECK(run("build --group C2 --as double --out " + path).code == 0);
    std::ifstream f(path);
    auto j = nlohmann::json::parse(f);
    CHECK(j["dim"] == 4);
    CHECK(j.contains("R"));
    CHECK(run("analyze " + path).code == 0);
    std::filesystem::remove(path);

    auto r = run("build --group S3 --as dual");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["dim"] == 6);
}
